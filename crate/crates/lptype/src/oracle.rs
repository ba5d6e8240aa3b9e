//! Brute-force ground truth. These enumerators share nothing with the
//! solvers they validate beyond the scalar type: they run their own
//! elimination and comparison code, naively, because independence matters
//! here and speed does not.

use crate::core::{Element, Error, Result, SolutionValue};
use crate::problems::{LpInstance, MebInstance, SvmInstance};
use crate::scalar::Scalar;
use num_traits::{One, Zero};

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

/// Gaussian elimination, written separately from the solver path.
fn solve_sq(mat: &[Vec<Scalar>], rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = mat.len();
    let mut a: Vec<Vec<Scalar>> = mat.to_vec();
    let mut b: Vec<Scalar> = rhs.to_vec();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        for r in 0..n {
            if r == col {
                continue;
            }
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &a[col][col];
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
            let t = &f * &b[col];
            b[r] -= t;
        }
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(&b[i] / &a[i][i]);
    }
    Some(out)
}

fn lp_better(cand_obj: &Scalar, cand_pt: &[Scalar], best: &Option<(Scalar, Vec<Scalar>)>) -> bool {
    match best {
        None => true,
        Some((bo, bp)) => match cand_obj.cmp(bo) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => cand_pt < &bp[..],
        },
    }
}

/// Vertex enumeration: every d-subset of constraint boundaries, solved
/// exactly, filtered for feasibility, minimized under (objective, lex point).
pub fn brute_lp(inst: &LpInstance) -> Result<SolutionValue> {
    let d = inst.dim;
    let rows: Vec<(&Vec<Scalar>, &Scalar)> = inst
        .constraints
        .iter()
        .map(|e| match e {
            Element::Halfspace { a, b } => (a, b),
            _ => unreachable!("LP constraints are halfspaces"),
        })
        .collect();
    let k = rows.len();
    let mut best: Option<(Scalar, Vec<Scalar>)> = None;
    let mut idx = vec![0usize; d];
    fn rec(
        k: usize,
        d: usize,
        start: usize,
        depth: usize,
        idx: &mut Vec<usize>,
        rows: &[(&Vec<Scalar>, &Scalar)],
        objective: &[Scalar],
        best: &mut Option<(Scalar, Vec<Scalar>)>,
    ) {
        if depth == d {
            let mat: Vec<Vec<Scalar>> = idx.iter().map(|&i| rows[i].0.clone()).collect();
            let rhs: Vec<Scalar> = idx.iter().map(|&i| rows[i].1.clone()).collect();
            if let Some(x) = solve_sq(&mat, &rhs) {
                for (a, b) in rows {
                    if &dot(a, &x) > *b {
                        return;
                    }
                }
                let obj = dot(objective, &x);
                if lp_better(&obj, &x, best) {
                    *best = Some((obj, x));
                }
            }
            return;
        }
        for i in start..k {
            idx[depth] = i;
            rec(k, d, i + 1, depth + 1, idx, rows, objective, best);
        }
    }
    rec(k, d, 0, 0, &mut idx, &rows, &inst.objective, &mut best);
    match best {
        Some((objective, point)) => Ok(SolutionValue::Lp { objective, point }),
        None => Err(Error::Infeasible),
    }
}

/// Support-set enumeration for the minimum enclosing ball: all subsets of
/// size 1..=d+1, circumcenter in the subset's affine hull, min radius among
/// candidates that cover every point.
pub fn brute_meb(inst: &MebInstance) -> Result<SolutionValue> {
    let d = inst.dim;
    let pts: Vec<&Vec<Scalar>> = inst
        .points
        .iter()
        .map(|e| match e {
            Element::Point { p } => p,
            _ => unreachable!("MEB elements are points"),
        })
        .collect();
    if pts.is_empty() {
        return Err(Error::Infeasible);
    }
    let mut best: Option<(Scalar, Vec<Scalar>)> = None;
    let n = pts.len();
    let mut stack: Vec<usize> = Vec::new();
    enumerate(n, (d + 1).min(n), &mut stack, &mut |t: &[usize]| {
        if t.is_empty() {
            return;
        }
        let p0 = pts[t[0]];
        let center: Vec<Scalar> = if t.len() == 1 {
            p0.clone()
        } else {
            let dirs: Vec<Vec<Scalar>> = t[1..]
                .iter()
                .map(|&i| pts[i].iter().zip(p0).map(|(a, b)| a - b).collect())
                .collect();
            let gram: Vec<Vec<Scalar>> =
                dirs.iter().map(|u| dirs.iter().map(|v| dot(u, v)).collect()).collect();
            let rhs: Vec<Scalar> = dirs
                .iter()
                .map(|u| dot(u, u) / Scalar::from_integer(2.into()))
                .collect();
            let Some(mu) = solve_sq(&gram, &rhs) else { return };
            let mut c = p0.clone();
            for (m, dir) in mu.iter().zip(&dirs) {
                for (ci, di) in c.iter_mut().zip(dir) {
                    *ci += m * di;
                }
            }
            c
        };
        let r_sq = {
            let mut acc = Scalar::zero();
            for (ci, pi) in center.iter().zip(p0) {
                let t = ci - pi;
                acc += &t * &t;
            }
            acc
        };
        for p in &pts {
            let mut dist = Scalar::zero();
            for (ci, pi) in center.iter().zip(p.iter()) {
                let t = ci - pi;
                dist += &t * &t;
            }
            if dist > r_sq {
                return;
            }
        }
        let better = match &best {
            None => true,
            Some((br, _)) => r_sq < *br,
        };
        if better {
            best = Some((r_sq, center));
        }
    });
    match best {
        Some((radius_sq, center)) => Ok(SolutionValue::Meb { radius_sq, center }),
        None => Err(Error::Infeasible),
    }
}

/// Support-set enumeration for the hard-margin SVM: least-norm separator of
/// each tight subset, filtered for feasibility, minimum squared norm.
pub fn brute_svm(inst: &SvmInstance) -> Result<SolutionValue> {
    let d = inst.dim;
    let rows: Vec<Vec<Scalar>> = inst
        .samples
        .iter()
        .map(|e| match e {
            Element::LabeledPoint { x, y } => {
                let s = Scalar::from_integer((*y as i64).into());
                x.iter().map(|v| v * &s).collect()
            }
            _ => unreachable!("SVM elements are labeled points"),
        })
        .collect();
    let feasible = |u: &[Scalar]| rows.iter().all(|r| dot(r, u) >= Scalar::one());
    let mut best: Option<(Scalar, Vec<Scalar>)> = None;
    let consider = |u: Vec<Scalar>, best: &mut Option<(Scalar, Vec<Scalar>)>| {
        if !feasible(&u) {
            return;
        }
        let nsq = dot(&u, &u);
        let better = match best {
            None => true,
            Some((bn, _)) => nsq < *bn,
        };
        if better {
            *best = Some((nsq, u));
        }
    };
    consider(vec![Scalar::zero(); d], &mut best);
    let n = rows.len();
    let mut stack: Vec<usize> = Vec::new();
    enumerate(n, d.min(n), &mut stack, &mut |t: &[usize]| {
        if t.is_empty() {
            return;
        }
        let vs: Vec<&Vec<Scalar>> = t.iter().map(|&i| &rows[i]).collect();
        let gram: Vec<Vec<Scalar>> =
            vs.iter().map(|u| vs.iter().map(|v| dot(u, v)).collect()).collect();
        let rhs = vec![Scalar::one(); t.len()];
        let Some(lambda) = solve_sq(&gram, &rhs) else { return };
        let mut u = vec![Scalar::zero(); d];
        for (l, v) in lambda.iter().zip(&vs) {
            for (ui, vi) in u.iter_mut().zip(v.iter()) {
                *ui += l * vi;
            }
        }
        consider(u, &mut best);
    });
    match best {
        Some((norm_sq, u)) => Ok(SolutionValue::Svm { norm_sq, u }),
        None => Err(Error::Infeasible),
    }
}

/// All nonempty subsets of `0..n` of size at most `max`, in lexicographic
/// order.
fn enumerate(n: usize, max: usize, stack: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    fn rec(n: usize, max: usize, start: usize, stack: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if !stack.is_empty() {
            f(stack);
        }
        if stack.len() == max {
            return;
        }
        for i in start..n {
            stack.push(i);
            rec(n, max, i + 1, stack, f);
            stack.pop();
        }
    }
    rec(n, max, 0, stack, f);
}

/// The crossing index of a two-curve instance: the largest `i` (1-based)
/// with `a_i <= b_i`. With `A` increasing and `B` decreasing the predicate
/// holds on a prefix, so this matches the smallest index whose successor
/// flips.
pub fn brute_tci(a: &[Scalar], b: &[Scalar]) -> Result<usize> {
    assert_eq!(a.len(), b.len());
    if a.is_empty() || a[0] > b[0] {
        return Err(Error::NoCrossing);
    }
    let mut ans = 0;
    for i in 0..a.len() {
        if a[i] <= b[i] {
            ans = i + 1;
        }
    }
    Ok(ans)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::ProblemDef;
    use crate::scalar::{s_int, s_ratio, s_zero, s_one};

    fn hs(a: &[i64], b: i64) -> Element {
        Element::Halfspace { a: a.iter().map(|&v| s_int(v)).collect(), b: s_int(b) }
    }

    #[test]
    fn brute_lp_vee() {
        let def = ProblemDef::lp(2, vec![s_zero(), s_one()], s_int(10));
        let mut constraints = vec![hs(&[1, -1], 0), hs(&[-1, -1], 0)];
        constraints.extend(def.box_halfspaces());
        let inst = LpInstance { dim: 2, objective: vec![s_zero(), s_one()], constraints, box_bound: s_int(10) };
        let v = brute_lp(&inst).unwrap();
        assert_eq!(v, SolutionValue::Lp { objective: s_zero(), point: vec![s_zero(), s_zero()] });
    }

    #[test]
    fn brute_lp_box_only_lexmin_corner() {
        // minimize x1 over just the box: ties on x2 resolved to the lexmin
        // corner (-M, -M)
        let def = ProblemDef::lp(2, vec![s_one(), s_zero()], s_int(4));
        let inst = LpInstance {
            dim: 2,
            objective: vec![s_one(), s_zero()],
            constraints: def.box_halfspaces(),
            box_bound: s_int(4),
        };
        let v = brute_lp(&inst).unwrap();
        assert_eq!(v, SolutionValue::Lp { objective: s_int(-4), point: vec![s_int(-4), s_int(-4)] });
    }

    #[test]
    fn brute_lp_infeasible() {
        let def = ProblemDef::lp(1, vec![s_one()], s_int(4));
        let mut constraints = vec![hs(&[1], 0), hs(&[-1], -1)]; // x <= 0 and x >= 1
        constraints.extend(def.box_halfspaces());
        let inst = LpInstance { dim: 1, objective: vec![s_one()], constraints, box_bound: s_int(4) };
        assert_eq!(brute_lp(&inst).unwrap_err(), Error::Infeasible);
    }

    #[test]
    fn brute_meb_diameter() {
        let inst = MebInstance {
            dim: 2,
            points: vec![
                Element::Point { p: vec![s_int(0), s_int(0)] },
                Element::Point { p: vec![s_int(2), s_int(0)] },
            ],
        };
        let v = brute_meb(&inst).unwrap();
        assert_eq!(v, SolutionValue::Meb { radius_sq: s_one(), center: vec![s_one(), s_zero()] });
    }

    #[test]
    fn brute_svm_antipodal() {
        let inst = SvmInstance {
            dim: 2,
            samples: vec![
                Element::LabeledPoint { x: vec![s_int(1), s_int(0)], y: 1 },
                Element::LabeledPoint { x: vec![s_int(-1), s_int(0)], y: -1 },
            ],
        };
        let v = brute_svm(&inst).unwrap();
        assert_eq!(v, SolutionValue::Svm { norm_sq: s_one(), u: vec![s_one(), s_zero()] });
    }

    #[test]
    fn brute_tci_examples() {
        let a = vec![s_int(0), s_int(2)];
        let b = vec![s_int(1), s_ratio(1, 2)];
        assert_eq!(brute_tci(&a, &b).unwrap(), 1);
        let a = vec![s_int(0), s_int(2), s_int(4)];
        let b = vec![s_int(2), s_ratio(3, 2), s_int(1)];
        assert_eq!(brute_tci(&a, &b).unwrap(), 1);
        let bad_a = vec![s_int(5), s_int(6)];
        let bad_b = vec![s_int(0), s_int(-1)];
        assert_eq!(brute_tci(&bad_a, &bad_b).unwrap_err(), Error::NoCrossing);
    }

    #[test]
    fn brute_tci_figure_configuration() {
        // grid-unit reconstruction of the two curves in the illustration:
        // A = (0,1,2,4,6,10,14), B = (14,11,8,6,4,2,0); the answer is 4.
        let a: Vec<Scalar> = [0, 1, 2, 4, 6, 10, 14].iter().map(|&v| s_int(v)).collect();
        let b: Vec<Scalar> = [14, 11, 8, 6, 4, 2, 0].iter().map(|&v| s_int(v)).collect();
        assert_eq!(brute_tci(&a, &b).unwrap(), 4);
    }
}
