//! The LP-type problem abstraction: elements, solution values with their
//! total order, violation tests, and a generic randomized small-instance
//! solver shared by all three problem kinds.

use crate::scalar::*;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use std::cmp::Ordering;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("solution values of different kinds cannot be compared")]
    KindMismatch,
    #[error("infeasible instance (empty feasible region / non-separable)")]
    Infeasible,
    #[error("unbounded linear program (no bounding box)")]
    Unbounded,
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("monte-carlo run failed (violator weight exceeded threshold)")]
    Fail,
    #[error("machine memory cap exceeded: {0}")]
    MemoryExceeded(String),
    #[error("TCI promise violated: curves do not cross")]
    NoCrossing,
}

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum ProblemKind {
    Lp,
    Svm,
    Meb,
}

/// One constraint of an LP-type instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    /// `a · x <= b`
    Halfspace { a: Vec<Scalar>, b: Scalar },
    /// labeled sample, `y` in {-1, +1}
    LabeledPoint { x: Vec<Scalar>, y: i8 },
    Point { p: Vec<Scalar> },
}

impl Element {
    pub fn dim(&self) -> usize {
        match self {
            Element::Halfspace { a, .. } => a.len(),
            Element::LabeledPoint { x, .. } => x.len(),
            Element::Point { p } => p.len(),
        }
    }
}

/// Optimum of an LP-type problem together with its witness point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionValue {
    Lp { objective: Scalar, point: Vec<Scalar> },
    Svm { norm_sq: Scalar, u: Vec<Scalar> },
    /// `radius_sq < 0` encodes the empty ball (the bottom of the order).
    Meb { radius_sq: Scalar, center: Vec<Scalar> },
}

impl SolutionValue {
    pub fn witness(&self) -> &[Scalar] {
        match self {
            SolutionValue::Lp { point, .. } => point,
            SolutionValue::Svm { u, .. } => u,
            SolutionValue::Meb { center, .. } => center,
        }
    }

    pub fn kind(&self) -> ProblemKind {
        match self {
            SolutionValue::Lp { .. } => ProblemKind::Lp,
            SolutionValue::Svm { .. } => ProblemKind::Svm,
            SolutionValue::Meb { .. } => ProblemKind::Meb,
        }
    }
}

/// Total order on the range of `f`. LP compares the objective and breaks
/// ties lexicographically on the point; SVM and MEB compare their scalar.
pub fn order_compare(v1: &SolutionValue, v2: &SolutionValue) -> Result<Ordering> {
    match (v1, v2) {
        (
            SolutionValue::Lp { objective: o1, point: p1 },
            SolutionValue::Lp { objective: o2, point: p2 },
        ) => {
            if p1.len() != p2.len() {
                return Err(Error::KindMismatch);
            }
            Ok(o1.cmp(o2).then_with(|| p1.cmp(p2)))
        }
        (SolutionValue::Svm { norm_sq: a, .. }, SolutionValue::Svm { norm_sq: b, .. }) => {
            Ok(a.cmp(b))
        }
        (SolutionValue::Meb { radius_sq: a, .. }, SolutionValue::Meb { radius_sq: b, .. }) => {
            Ok(a.cmp(b))
        }
        _ => Err(Error::KindMismatch),
    }
}

/// Does `e` violate a basis with optimum `value`? Implemented as the
/// witness-point membership test.
pub fn violates(value: &SolutionValue, e: &Element) -> Result<bool> {
    match (value, e) {
        (SolutionValue::Lp { point, .. }, Element::Halfspace { a, b }) => Ok(&dot(a, point) > b),
        (SolutionValue::Svm { u, .. }, Element::LabeledPoint { x, y }) => {
            let margin = dot(u, x) * s_int(*y as i64);
            Ok(margin < s_one())
        }
        (SolutionValue::Meb { radius_sq, center }, Element::Point { p }) => {
            Ok(&norm_sq(&sub(center, p)) > radius_sq)
        }
        _ => Err(Error::KindMismatch),
    }
}

/// Minimal subset of the argument set attaining its `f` value.
#[derive(Debug, Clone)]
pub struct Basis {
    /// positions into the element list the basis was computed from
    pub indices: Vec<usize>,
    pub elements: Vec<Element>,
    pub value: SolutionValue,
}

/// Problem description shared by all operations. `nu` and `lambda` are both
/// `d + 1` for the three supported kinds.
#[derive(Debug, Clone)]
pub struct ProblemDef {
    pub kind: ProblemKind,
    pub dim: usize,
    /// LP objective vector; unused for SVM/MEB.
    pub objective: Option<Vec<Scalar>>,
    /// Half-width `M` of the LP bounding box `|x_i| <= M`. Every LP subset is
    /// solved subject to the box, which keeps `f` finite.
    pub box_bound: Option<Scalar>,
}

pub const DEFAULT_BOX_EXP: u32 = 20;

impl ProblemDef {
    pub fn lp(dim: usize, objective: Vec<Scalar>, box_bound: Scalar) -> Self {
        ProblemDef { kind: ProblemKind::Lp, dim, objective: Some(objective), box_bound: Some(box_bound) }
    }

    pub fn lp_unboxed(dim: usize, objective: Vec<Scalar>) -> Self {
        ProblemDef { kind: ProblemKind::Lp, dim, objective: Some(objective), box_bound: None }
    }

    pub fn svm(dim: usize) -> Self {
        ProblemDef { kind: ProblemKind::Svm, dim, objective: None, box_bound: None }
    }

    pub fn meb(dim: usize) -> Self {
        ProblemDef { kind: ProblemKind::Meb, dim, objective: None, box_bound: None }
    }

    /// Combinatorial dimension.
    pub fn nu(&self) -> usize {
        self.dim + 1
    }

    /// VC dimension of the constraint set-system.
    pub fn lambda(&self) -> usize {
        self.dim + 1
    }

    /// The box sides as explicit halfspaces, in a fixed order.
    pub fn box_halfspaces(&self) -> Vec<Element> {
        let Some(m) = &self.box_bound else {
            return Vec::new();
        };
        let mut out = Vec::with_capacity(2 * self.dim);
        for i in 0..self.dim {
            for sign in [1i64, -1] {
                let mut a = vec![s_zero(); self.dim];
                a[i] = s_int(sign);
                out.push(Element::Halfspace { a, b: m.clone() });
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// small-case primitives: exact optimum of a handful of constraints
// ---------------------------------------------------------------------------

/// Exact optimum of a tiny constraint set (at most nu+1 elements plus, for
/// LP, the implicit box). Returns the value and the support: positions into
/// `pinned` that are tight at the optimum.
fn base_solve(pinned: &[&Element], def: &ProblemDef) -> Result<(SolutionValue, Vec<usize>)> {
    match def.kind {
        ProblemKind::Lp => base_solve_lp(pinned, def),
        ProblemKind::Svm => base_solve_svm(pinned, def),
        ProblemKind::Meb => base_solve_meb(pinned, def),
    }
}

fn halfspace(e: &Element) -> (&Vec<Scalar>, &Scalar) {
    match e {
        Element::Halfspace { a, b } => (a, b),
        _ => unreachable!("LP elements are halfspaces"),
    }
}

fn base_solve_lp(pinned: &[&Element], def: &ProblemDef) -> Result<(SolutionValue, Vec<usize>)> {
    let d = def.dim;
    let c = def.objective.as_ref().expect("LP def carries an objective");
    if def.box_bound.is_none() {
        return Err(Error::Unbounded);
    }
    let boxes = def.box_halfspaces();
    // candidate rows: pinned first, then box
    let mut rows: Vec<&Element> = pinned.to_vec();
    rows.extend(boxes.iter());
    let k = rows.len();
    let feasible = |x: &[Scalar]| -> bool {
        rows.iter().all(|e| {
            let (a, b) = halfspace(e);
            &dot(a, x) <= b
        })
    };
    let mut best: Option<(SolutionValue, Vec<usize>)> = None;
    // every vertex of the boxed polytope is the intersection of d tight rows
    let mut subset = vec![0usize; d];
    enumerate_subsets(k, d, &mut subset, &mut |t| {
        let m: Vec<Vec<Scalar>> = t.iter().map(|&i| halfspace(rows[i]).0.clone()).collect();
        let rhs: Vec<Scalar> = t.iter().map(|&i| halfspace(rows[i]).1.clone()).collect();
        let Some(x) = solve_linear_system(&m, &rhs) else {
            return;
        };
        if !feasible(&x) {
            return;
        }
        let cand = SolutionValue::Lp { objective: dot(c, &x), point: x };
        let better = match &best {
            None => true,
            Some((b, _)) => order_compare(&cand, b).unwrap() == Ordering::Less,
        };
        if better {
            let support = t.iter().copied().filter(|&i| i < pinned.len()).collect();
            best = Some((cand, support));
        }
    });
    best.ok_or(Error::Infeasible)
}

fn base_solve_svm(pinned: &[&Element], def: &ProblemDef) -> Result<(SolutionValue, Vec<usize>)> {
    let d = def.dim;
    let signed = |e: &Element| -> Vec<Scalar> {
        match e {
            Element::LabeledPoint { x, y } => {
                x.iter().map(|v| v * s_int(*y as i64)).collect()
            }
            _ => unreachable!("SVM elements are labeled points"),
        }
    };
    let rows: Vec<Vec<Scalar>> = pinned.iter().map(|e| signed(e)).collect();
    let feasible = |u: &[Scalar]| rows.iter().all(|r| dot(r, u) >= s_one());
    let mut best: Option<(SolutionValue, Vec<usize>)> = None;
    let consider = |u: Vec<Scalar>, support: Vec<usize>, best: &mut Option<(SolutionValue, Vec<usize>)>| {
        if !feasible(&u) {
            return;
        }
        let cand = SolutionValue::Svm { norm_sq: norm_sq(&u), u };
        let better = match best {
            None => true,
            Some((b, _)) => order_compare(&cand, b).unwrap() == Ordering::Less,
        };
        if better {
            *best = Some((cand, support));
        }
    };
    consider(vec![s_zero(); d], Vec::new(), &mut best);
    // least-norm u with the subset tight: u = sum lambda_j v_j, Gram lambda = 1
    for size in 1..=d.min(rows.len()) {
        let mut subset = vec![0usize; size];
        enumerate_subsets(rows.len(), size, &mut subset, &mut |t| {
            let vs: Vec<&Vec<Scalar>> = t.iter().map(|&i| &rows[i]).collect();
            let gram: Vec<Vec<Scalar>> =
                vs.iter().map(|a| vs.iter().map(|b| dot(a, b)).collect()).collect();
            let rhs = vec![s_one(); size];
            let Some(lambda) = solve_linear_system(&gram, &rhs) else {
                return;
            };
            let mut u = vec![s_zero(); d];
            for (l, v) in lambda.iter().zip(&vs) {
                for (ui, vi) in u.iter_mut().zip(v.iter()) {
                    *ui += l * vi;
                }
            }
            consider(u, t.to_vec(), &mut best);
        });
    }
    best.ok_or(Error::Infeasible)
}

fn pt(e: &Element) -> &Vec<Scalar> {
    match e {
        Element::Point { p } => p,
        _ => unreachable!("MEB elements are points"),
    }
}

fn base_solve_meb(pinned: &[&Element], def: &ProblemDef) -> Result<(SolutionValue, Vec<usize>)> {
    let d = def.dim;
    if pinned.is_empty() {
        // bottom of the order: the empty ball
        return Ok((
            SolutionValue::Meb { radius_sq: s_int(-1), center: vec![s_zero(); d] },
            Vec::new(),
        ));
    }
    let pts: Vec<&Vec<Scalar>> = pinned.iter().map(|e| pt(e)).collect();
    let covers = |center: &[Scalar], r_sq: &Scalar| {
        pts.iter().all(|p| &norm_sq(&sub(center, p)) <= r_sq)
    };
    let mut best: Option<(SolutionValue, Vec<usize>)> = None;
    for size in 1..=(d + 1).min(pts.len()) {
        let mut subset = vec![0usize; size];
        enumerate_subsets(pts.len(), size, &mut subset, &mut |t| {
            // circumcenter of an affinely independent subset, inside its hull's
            // affine span: center = p0 + sum mu_k (p_k - p0)
            let p0 = pts[t[0]];
            let center: Vec<Scalar> = if size == 1 {
                p0.clone()
            } else {
                let dirs: Vec<Vec<Scalar>> = t[1..].iter().map(|&i| sub(pts[i], p0)).collect();
                let gram: Vec<Vec<Scalar>> =
                    dirs.iter().map(|a| dirs.iter().map(|b| dot(a, b)).collect()).collect();
                let rhs: Vec<Scalar> =
                    dirs.iter().map(|a| dot(a, a) / s_int(2)).collect();
                let Some(mu) = solve_linear_system(&gram, &rhs) else {
                    return;
                };
                let mut cvec = p0.clone();
                for (m, dir) in mu.iter().zip(&dirs) {
                    for (ci, di) in cvec.iter_mut().zip(dir.iter()) {
                        *ci += m * di;
                    }
                }
                cvec
            };
            let r_sq = norm_sq(&sub(&center, p0));
            if !covers(&center, &r_sq) {
                return;
            }
            let cand = SolutionValue::Meb { radius_sq: r_sq, center };
            let better = match &best {
                None => true,
                Some((b, _)) => order_compare(&cand, b).unwrap() == Ordering::Less,
            };
            if better {
                best = Some((cand, t.to_vec()));
            }
        });
    }
    best.ok_or(Error::Infeasible)
}

/// Calls `f` with every `size`-subset of `0..k` (ascending order).
fn enumerate_subsets(k: usize, size: usize, buf: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    fn rec(k: usize, size: usize, start: usize, depth: usize, buf: &mut [usize], f: &mut dyn FnMut(&[usize])) {
        if depth == size {
            f(&buf[..size]);
            return;
        }
        for i in start..k {
            buf[depth] = i;
            rec(k, size, i + 1, depth + 1, buf, f);
        }
    }
    if size > k {
        return;
    }
    rec(k, size, 0, 0, buf, f);
}

// ---------------------------------------------------------------------------
// generic randomized solver
// ---------------------------------------------------------------------------

/// Exact optimum and a minimal basis of `elements`, by the randomized
/// incremental recursion: scan in random order, restart with a violating
/// element pinned, recursion depth at most nu+1. The base case enumerates
/// bases among the pinned elements by solving equality systems.
pub fn solve_small<R: Rng>(
    elements: &[Element],
    def: &ProblemDef,
    rng: &mut R,
) -> Result<(SolutionValue, Basis)> {
    if elements.is_empty() && def.kind == ProblemKind::Meb {
        return Err(Error::Infeasible);
    }
    let mut order: Vec<usize> = (0..elements.len()).collect();
    order.shuffle(rng);
    let mut pinned: Vec<usize> = Vec::with_capacity(def.nu() + 1);
    let value = welzl(elements, &mut order, elements.len(), &mut pinned, def)?;
    debug_assert!(pinned.is_empty());
    let basis = reduce_to_basis(elements, &value, def)?;
    Ok((value, basis))
}

fn welzl(
    elements: &[Element],
    order: &mut [usize],
    upto: usize,
    pinned: &mut Vec<usize>,
    def: &ProblemDef,
) -> Result<SolutionValue> {
    let pinned_refs: Vec<&Element> = pinned.iter().map(|&i| &elements[i]).collect();
    let (mut value, _) = base_solve(&pinned_refs, def)?;
    if pinned.len() > def.nu() {
        // a basis never exceeds nu elements; the pinned set is already forced
        return Ok(value);
    }
    let mut i = 0;
    while i < upto {
        let e = order[i];
        if violates(&value, &elements[e])? {
            pinned.push(e);
            value = welzl(elements, order, i, pinned, def)?;
            pinned.pop();
            // move-to-front keeps frequently violating elements early
            order[..=i].rotate_right(1);
        }
        i += 1;
    }
    Ok(value)
}

/// Extracts a minimal basis: same `f` value, and removing any member
/// strictly decreases `f`. `value` must equal `f(elements)`.
pub fn reduce_to_basis(
    elements: &[Element],
    value: &SolutionValue,
    def: &ProblemDef,
) -> Result<Basis> {
    // only tight elements can be part of a basis
    let mut kept: Vec<usize> = Vec::new();
    for (i, e) in elements.iter().enumerate() {
        if is_tight(value, e)? {
            kept.push(i);
        }
    }
    // greedy drop: remove any element whose removal keeps f unchanged
    let mut changed = true;
    while changed {
        changed = false;
        for pos in 0..kept.len() {
            let mut trial = kept.clone();
            trial.remove(pos);
            let trial_refs: Vec<&Element> = trial.iter().map(|&i| &elements[i]).collect();
            if let Ok((v, _)) = base_solve_or_full(&trial_refs, def) {
                if order_compare(&v, value)? == Ordering::Equal {
                    kept = trial;
                    changed = true;
                    break;
                }
            }
        }
    }
    Ok(Basis {
        elements: kept.iter().map(|&i| elements[i].clone()).collect(),
        indices: kept,
        value: value.clone(),
    })
}

/// `f` of a small set; falls back to the recursion when the set is larger
/// than the base case handles directly. The fixed seed keeps
/// `reduce_to_basis` a pure function of its inputs.
fn base_solve_or_full(refs: &[&Element], def: &ProblemDef) -> Result<(SolutionValue, Vec<usize>)> {
    if refs.len() <= def.nu() + 1 {
        base_solve(refs, def)
    } else {
        let owned: Vec<Element> = refs.iter().map(|e| (*e).clone()).collect();
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(0x6c70_7479_7065);
        let (v, _) = solve_small(&owned, def, &mut rng)?;
        Ok((v, Vec::new()))
    }
}

fn is_tight(value: &SolutionValue, e: &Element) -> Result<bool> {
    match (value, e) {
        (SolutionValue::Lp { point, .. }, Element::Halfspace { a, b }) => Ok(&dot(a, point) == b),
        (SolutionValue::Svm { u, .. }, Element::LabeledPoint { x, y }) => {
            Ok(dot(u, x) * s_int(*y as i64) == s_one())
        }
        (SolutionValue::Meb { radius_sq, center }, Element::Point { p }) => {
            Ok(&norm_sq(&sub(center, p)) == radius_sq)
        }
        _ => Err(Error::KindMismatch),
    }
}

use rand::SeedableRng;

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::ChaCha20Rng;

    fn hs(a: &[i64], b: i64) -> Element {
        Element::Halfspace { a: a.iter().map(|&v| s_int(v)).collect(), b: s_int(b) }
    }

    fn lp_value(objective: i64, point: &[i64]) -> SolutionValue {
        SolutionValue::Lp {
            objective: s_int(objective),
            point: point.iter().map(|&v| s_int(v)).collect(),
        }
    }

    /// y >= x and y >= -x with a box: minimum of y at the apex (0, 0).
    fn vee() -> (Vec<Element>, ProblemDef) {
        let def = ProblemDef::lp(2, vec![s_int(0), s_int(1)], s_int(10));
        let elems = vec![hs(&[1, -1], 0), hs(&[-1, -1], 0)];
        (elems, def)
    }

    #[test]
    fn order_compare_examples() {
        assert_eq!(order_compare(&lp_value(0, &[0, 0]), &lp_value(0, &[0, 0])).unwrap(), Ordering::Equal);
        assert_eq!(order_compare(&lp_value(1, &[5, 5]), &lp_value(2, &[0, 0])).unwrap(), Ordering::Less);
        assert_eq!(order_compare(&lp_value(1, &[0, 3]), &lp_value(1, &[1, 0])).unwrap(), Ordering::Less);
        let meb = SolutionValue::Meb { radius_sq: s_int(1), center: vec![s_int(0)] };
        assert_eq!(order_compare(&lp_value(0, &[0, 0]), &meb), Err(Error::KindMismatch));
    }

    #[test]
    fn violates_examples() {
        let v = lp_value(0, &[0, 0]);
        assert!(!violates(&v, &hs(&[1, 1], 1)).unwrap());
        assert!(violates(&v, &hs(&[-1, 0], -1)).unwrap());
        let ball = SolutionValue::Meb { radius_sq: s_int(1), center: vec![s_int(1), s_int(0)] };
        let far = Element::Point { p: vec![s_int(3), s_int(0)] };
        assert!(violates(&ball, &far).unwrap());
    }

    #[test]
    fn solve_small_vee() {
        let (elems, def) = vee();
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        let (value, basis) = solve_small(&elems, &def, &mut rng).unwrap();
        assert_eq!(value, lp_value(0, &[0, 0]));
        let mut idx = basis.indices.clone();
        idx.sort_unstable();
        assert_eq!(idx, vec![0, 1]);
    }

    #[test]
    fn solve_small_meb_diameter() {
        let def = ProblemDef::meb(2);
        let elems = vec![
            Element::Point { p: vec![s_int(0), s_int(0)] },
            Element::Point { p: vec![s_int(2), s_int(0)] },
        ];
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        let (value, _) = solve_small(&elems, &def, &mut rng).unwrap();
        assert_eq!(value, SolutionValue::Meb { radius_sq: s_int(1), center: vec![s_int(1), s_int(0)] });
    }

    #[test]
    fn solve_small_svm_antipodal() {
        let def = ProblemDef::svm(2);
        let elems = vec![
            Element::LabeledPoint { x: vec![s_int(1), s_int(0)], y: 1 },
            Element::LabeledPoint { x: vec![s_int(-1), s_int(0)], y: -1 },
        ];
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        let (value, _) = solve_small(&elems, &def, &mut rng).unwrap();
        assert_eq!(value, SolutionValue::Svm { norm_sq: s_int(1), u: vec![s_int(1), s_int(0)] });
    }

    #[test]
    fn svm_infeasible_is_error() {
        let def = ProblemDef::svm(1);
        let elems = vec![
            Element::LabeledPoint { x: vec![s_int(1)], y: 1 },
            Element::LabeledPoint { x: vec![s_int(1)], y: -1 },
        ];
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        assert_eq!(solve_small(&elems, &def, &mut rng).unwrap_err(), Error::Infeasible);
    }

    #[test]
    fn lp_without_box_is_unbounded() {
        let def = ProblemDef::lp_unboxed(2, vec![s_int(0), s_int(1)]);
        let elems = vec![hs(&[1, -1], 0)];
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        assert_eq!(solve_small(&elems, &def, &mut rng).unwrap_err(), Error::Unbounded);
    }

    #[test]
    fn reduce_to_basis_examples() {
        let (elems, def) = vee();
        let value = lp_value(0, &[0, 0]);
        let basis = reduce_to_basis(&elems, &value, &def).unwrap();
        let mut idx = basis.indices.clone();
        idx.sort_unstable();
        assert_eq!(idx, vec![0, 1]);

        // interior MEB point is dropped
        let def = ProblemDef::meb(2);
        let elems = vec![
            Element::Point { p: vec![s_int(0), s_int(0)] },
            Element::Point { p: vec![s_int(2), s_int(0)] },
            Element::Point { p: vec![s_int(1), s_ratio(1, 2)] },
        ];
        let value = SolutionValue::Meb { radius_sq: s_int(1), center: vec![s_int(1), s_int(0)] };
        let basis = reduce_to_basis(&elems, &value, &def).unwrap();
        let mut idx = basis.indices.clone();
        idx.sort_unstable();
        assert_eq!(idx, vec![0, 1]);

        // a single constraint achieving its own optimum is its own basis
        let def = ProblemDef::lp(1, vec![s_int(1)], s_int(10));
        let elems = vec![hs(&[-1], -3)]; // x >= 3, minimize x
        let value = SolutionValue::Lp { objective: s_int(3), point: vec![s_int(3)] };
        let basis = reduce_to_basis(&elems, &value, &def).unwrap();
        assert_eq!(basis.indices, vec![0]);
    }
}
