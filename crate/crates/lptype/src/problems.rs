//! The three problem instantiations: linear programming, hard-margin linear
//! SVM, and minimum enclosing ball, together with their violation scans.

use crate::core::*;
use crate::scalar::*;
use crate::weights::{ExpHistogram, WeightState};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

/// `min c.x` over halfspaces; the constraint list includes the bounding box.
#[derive(Debug, Clone)]
pub struct LpInstance {
    pub dim: usize,
    pub objective: Vec<Scalar>,
    pub constraints: Vec<Element>,
    pub box_bound: Scalar,
}

/// Hard-margin SVM through the origin (no bias term): `min |u|^2` subject to
/// `y_j <u, x_j> >= 1`.
#[derive(Debug, Clone)]
pub struct SvmInstance {
    pub dim: usize,
    pub samples: Vec<Element>,
}

/// Minimum enclosing ball.
#[derive(Debug, Clone)]
pub struct MebInstance {
    pub dim: usize,
    pub points: Vec<Element>,
}

#[derive(Debug, Clone)]
pub enum ProblemInstance {
    Lp(LpInstance),
    Svm(SvmInstance),
    Meb(MebInstance),
}

impl ProblemInstance {
    pub fn def(&self) -> ProblemDef {
        match self {
            ProblemInstance::Lp(i) => ProblemDef::lp(i.dim, i.objective.clone(), i.box_bound.clone()),
            ProblemInstance::Svm(i) => ProblemDef::svm(i.dim),
            ProblemInstance::Meb(i) => ProblemDef::meb(i.dim),
        }
    }

    pub fn elements(&self) -> &[Element] {
        match self {
            ProblemInstance::Lp(i) => &i.constraints,
            ProblemInstance::Svm(i) => &i.samples,
            ProblemInstance::Meb(i) => &i.points,
        }
    }

    pub fn len(&self) -> usize {
        self.elements().len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements().is_empty()
    }

    pub fn dim(&self) -> usize {
        match self {
            ProblemInstance::Lp(i) => i.dim,
            ProblemInstance::Svm(i) => i.dim,
            ProblemInstance::Meb(i) => i.dim,
        }
    }

    pub fn kind(&self) -> ProblemKind {
        match self {
            ProblemInstance::Lp(_) => ProblemKind::Lp,
            ProblemInstance::Svm(_) => ProblemKind::Svm,
            ProblemInstance::Meb(_) => ProblemKind::Meb,
        }
    }
}

/// Fixed seed making the rng-free entry points pure functions.
const DIRECT_SOLVE_SEED: u64 = 0x50_4f_44_53;

/// Exact optimum of the full instance (any kind).
pub fn solve_direct(inst: &ProblemInstance) -> Result<SolutionValue> {
    let mut rng = ChaCha20Rng::seed_from_u64(DIRECT_SOLVE_SEED);
    let (value, _) = solve_small(inst.elements(), &inst.def(), &mut rng)?;
    Ok(value)
}

pub fn svm_solve(inst: &SvmInstance) -> Result<SolutionValue> {
    solve_direct(&ProblemInstance::Svm(inst.clone()))
}

pub fn meb_solve(inst: &MebInstance) -> Result<SolutionValue> {
    solve_direct(&ProblemInstance::Meb(inst.clone()))
}

/// The lexicographically smallest LP optimum computed by d sequential
/// re-solves: first the objective value, then coordinate by coordinate,
/// fixing each minimum before moving to the next. This is the
/// cross-validation path; the direct solver reaches the same point by
/// comparing (objective, point) pairs.
pub fn lp_solve_lexmin_sequential(inst: &LpInstance) -> Result<SolutionValue> {
    let d = inst.dim;
    let mut rng = ChaCha20Rng::seed_from_u64(DIRECT_SOLVE_SEED ^ 1);
    let base_def = ProblemDef::lp(d, inst.objective.clone(), inst.box_bound.clone());
    let (first, _) = solve_small(&inst.constraints, &base_def, &mut rng)?;
    let SolutionValue::Lp { objective: c_star, .. } = first else {
        unreachable!("LP solve returns an LP value");
    };

    let mut constraints = inst.constraints.clone();
    // pin the objective value: c.x <= c* and -c.x <= -c*
    constraints.push(Element::Halfspace { a: inst.objective.clone(), b: c_star.clone() });
    constraints.push(Element::Halfspace {
        a: inst.objective.iter().map(|v| -v).collect(),
        b: -c_star.clone(),
    });

    let mut point = Vec::with_capacity(d);
    for i in 0..d {
        let mut axis = vec![s_zero(); d];
        axis[i] = s_one();
        let def = ProblemDef::lp(d, axis.clone(), inst.box_bound.clone());
        let (v, _) = solve_small(&constraints, &def, &mut rng)?;
        let SolutionValue::Lp { objective: xi, .. } = v else { unreachable!() };
        // pin x_i = xi
        let mut neg = vec![s_zero(); d];
        neg[i] = s_int(-1);
        constraints.push(Element::Halfspace { a: axis, b: xi.clone() });
        constraints.push(Element::Halfspace { a: neg, b: -xi.clone() });
        point.push(xi);
    }
    Ok(SolutionValue::Lp { objective: dot(&inst.objective, &point), point })
}

/// Result of one full violation scan.
#[derive(Debug, Clone)]
pub struct ScanResult {
    /// ascending indices of violating elements
    pub violators: Vec<usize>,
    /// weight of the violators, as an exponent histogram
    pub violator_hist: ExpHistogram,
    /// total weight of the scanned elements
    pub total_hist: ExpHistogram,
}

/// One scan over `elements`: which violate the basis value, plus `w(V)` and
/// `w(S)` accumulated in the same pass.
pub fn violation_scan(
    value: &SolutionValue,
    elements: &[Element],
    weights: &WeightState,
) -> Result<ScanResult> {
    debug_assert_eq!(weights.exponents.len(), elements.len());
    let mut violators = Vec::new();
    let mut violator_hist = ExpHistogram::default();
    let mut total_hist = ExpHistogram::default();
    for (i, e) in elements.iter().enumerate() {
        let a = weights.exponents[i];
        total_hist.add(a, 1);
        if violates(value, e)? {
            violators.push(i);
            violator_hist.add(a, 1);
        }
    }
    Ok(ScanResult { violators, violator_hist, total_hist })
}

pub fn lp_violation_scan(value: &SolutionValue, inst: &LpInstance, weights: &WeightState) -> Result<ScanResult> {
    violation_scan(value, &inst.constraints, weights)
}

pub fn svm_violation_scan(value: &SolutionValue, inst: &SvmInstance, weights: &WeightState) -> Result<ScanResult> {
    violation_scan(value, &inst.samples, weights)
}

pub fn meb_violation_scan(value: &SolutionValue, inst: &MebInstance, weights: &WeightState) -> Result<ScanResult> {
    violation_scan(value, &inst.points, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hs(a: &[i64], b: i64) -> Element {
        Element::Halfspace { a: a.iter().map(|&v| s_int(v)).collect(), b: s_int(b) }
    }

    fn boxed_lp(dim: usize, objective: Vec<Scalar>, mut constraints: Vec<Element>, m: i64) -> LpInstance {
        let def = ProblemDef::lp(dim, objective.clone(), s_int(m));
        constraints.extend(def.box_halfspaces());
        LpInstance { dim, objective, constraints, box_bound: s_int(m) }
    }

    #[test]
    fn lexmin_vacuous_objective() {
        // c = 0, constraints x1 >= 1, x2 >= 2: lexmin point is (1, 2)
        let inst = boxed_lp(
            2,
            vec![s_zero(), s_zero()],
            vec![hs(&[-1, 0], -1), hs(&[0, -1], -2)],
            10,
        );
        let v = lp_solve_lexmin_sequential(&inst).unwrap();
        assert_eq!(
            v,
            SolutionValue::Lp { objective: s_zero(), point: vec![s_int(1), s_int(2)] }
        );
        assert_eq!(solve_direct(&ProblemInstance::Lp(inst)).unwrap(), v);
    }

    #[test]
    fn lexmin_vee() {
        let inst = boxed_lp(
            2,
            vec![s_zero(), s_one()],
            vec![hs(&[1, -1], 0), hs(&[-1, -1], 0)],
            10,
        );
        let v = lp_solve_lexmin_sequential(&inst).unwrap();
        assert_eq!(v, SolutionValue::Lp { objective: s_zero(), point: vec![s_zero(), s_zero()] });
    }

    #[test]
    fn scan_examples() {
        // x* = (0,0) against {x1 <= 1, -x1 <= -1, x2 <= 0}: only index 1 fails
        let value = SolutionValue::Lp { objective: s_zero(), point: vec![s_zero(), s_zero()] };
        let elements = vec![hs(&[1, 0], 1), hs(&[-1, 0], -1), hs(&[0, 1], 0)];
        let mut w = WeightState::new(3, 2);
        w.exponents = vec![0, 1, 0];
        // n = 4, r = 2 gives integer base 2
        w.n = 4;
        let scan = violation_scan(&value, &elements, &w).unwrap();
        assert_eq!(scan.violators, vec![1]);
        let t = num_bigint::BigInt::from(2);
        assert_eq!(scan.violator_hist.poly().eval_int(&t), num_bigint::BigInt::from(2));
        assert_eq!(scan.total_hist.poly().eval_int(&t), num_bigint::BigInt::from(4));
    }

    #[test]
    fn scan_empty_when_optimal() {
        let value = SolutionValue::Lp { objective: s_zero(), point: vec![s_zero(), s_zero()] };
        let elements = vec![hs(&[1, 0], 1), hs(&[0, 1], 2)];
        let w = WeightState::new(2, 2);
        let scan = violation_scan(&value, &elements, &w).unwrap();
        assert!(scan.violators.is_empty());
        assert!(scan.violator_hist.is_empty());
    }

    #[test]
    fn meb_scan_example() {
        let value = SolutionValue::Meb { radius_sq: s_one(), center: vec![s_int(1), s_zero()] };
        let elements = vec![
            Element::Point { p: vec![s_int(1), s_int(1)] },
            Element::Point { p: vec![s_int(5), s_int(0)] },
        ];
        let w = WeightState::new(2, 1);
        let scan = violation_scan(&value, &elements, &w).unwrap();
        assert_eq!(scan.violators, vec![1]);
    }

    #[test]
    fn meb_three_point_example() {
        let inst = MebInstance {
            dim: 2,
            points: vec![
                Element::Point { p: vec![s_int(0), s_int(0)] },
                Element::Point { p: vec![s_int(2), s_int(0)] },
                Element::Point { p: vec![s_int(1), s_int(1)] },
            ],
        };
        let v = meb_solve(&inst).unwrap();
        assert_eq!(v, SolutionValue::Meb { radius_sq: s_one(), center: vec![s_int(1), s_zero()] });
    }

    #[test]
    fn svm_two_point_example() {
        let inst = SvmInstance {
            dim: 2,
            samples: vec![
                Element::LabeledPoint { x: vec![s_int(1), s_int(0)], y: 1 },
                Element::LabeledPoint { x: vec![s_int(-1), s_int(0)], y: -1 },
            ],
        };
        let v = svm_solve(&inst).unwrap();
        assert_eq!(v, SolutionValue::Svm { norm_sq: s_one(), u: vec![s_one(), s_zero()] });
    }
}
