//! The model-agnostic iteration loop: sample a weighted net, compute its
//! basis, scan for violators, check the success predicate exactly, and
//! reweight. Las-Vegas mode loops until no element violates the basis;
//! Monte-Carlo mode samples a larger net and reports failure instead of
//! retrying.

use crate::core::*;
use crate::problems::{violation_scan, ProblemInstance};
use crate::rngutil;
use crate::scalar::{s_one, s_int, Scalar};
use crate::weights::*;
use num_bigint::BigInt;
use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    LasVegas,
    MonteCarlo,
}

/// `1/(10 nu n^{1/r})`, exact when `n` is a perfect `r`-th power.
#[derive(Debug, Clone, PartialEq)]
pub enum Epsilon {
    Exact(Scalar),
    Approx(f64),
}

impl Epsilon {
    pub fn to_f64(&self) -> f64 {
        match self {
            Epsilon::Exact(s) => crate::scalar::scalar_to_f64(s),
            Epsilon::Approx(v) => *v,
        }
    }
}

/// Largest admissible pass parameter for `n` elements. `ceil(log2 n)`: the
/// loosest cap under which `n^(1/r) >= 2`, and the one every documented
/// parameter choice satisfies.
pub fn max_r(n: usize) -> u32 {
    (usize::BITS - (n - 1).leading_zeros()).max(1)
}

pub fn epsilon_for(nu: usize, n: usize, r: u32) -> Result<Epsilon> {
    if n < 2 || nu < 1 {
        return Err(Error::Range(format!("epsilon_for needs n >= 2, nu >= 1 (n={n}, nu={nu})")));
    }
    if r < 1 || r > max_r(n) {
        return Err(Error::Range(format!("r must satisfy 1 <= r <= {} (r={r})", max_r(n))));
    }
    if let Some(root) = integer_base(n, r) {
        let den = BigInt::from(10 * nu as u64) * root;
        Ok(Epsilon::Exact(Scalar::new(BigInt::from(1), den)))
    } else {
        let root = (n as f64).powf(1.0 / r as f64);
        Ok(Epsilon::Approx(1.0 / (10.0 * nu as f64 * root)))
    }
}

/// Net size from the sampling lemma: `ceil(max(8L/e ln(8L/e), 4/e ln(2/D)))`
/// with natural logarithms.
pub fn net_size(epsilon: f64, lambda: usize, delta: f64) -> usize {
    assert!(epsilon > 0.0 && epsilon < 1.0, "epsilon in (0,1)");
    assert!(delta > 0.0 && delta < 1.0, "delta in (0,1)");
    let l = lambda as f64;
    let a = 8.0 * l / epsilon;
    let first = a * a.ln();
    let second = 4.0 / epsilon * (2.0 / delta).ln();
    first.max(second).ceil() as usize
}

/// `m` i.i.d. indices drawn with probability proportional to weight.
pub fn sample_net<R: Rng>(weights: &WeightState, m: usize, rng: &mut R) -> Vec<usize> {
    let hist = weights.histogram();
    let draws = draw_classes(&hist, weights.n, weights.r, m, rng);
    let mut resolver = RankResolver::new(&draws);
    for (i, &a) in weights.exponents.iter().enumerate() {
        resolver.feed(i, a);
    }
    resolver.finish()
}

/// Number of stored bases the element violates; this is the exponent the
/// incremental weight state holds for it.
pub fn weight_of(element: &Element, bases: &[Basis]) -> Result<u32> {
    let mut count = 0;
    for b in bases {
        if violates(&b.value, element)? {
            count += 1;
        }
    }
    Ok(count)
}

#[derive(Debug, Clone)]
pub struct IterationRecord {
    /// resolved net indices, ascending (duplicates kept)
    pub net_indices: Vec<usize>,
    pub basis: Basis,
    pub violator_count: usize,
    pub violator_weight: f64,
    pub total_weight: f64,
    pub success: bool,
    /// histogram of the weight state after this iteration's update, present
    /// only for successful iterations (successive snapshots drive the weight
    /// growth checks)
    pub post_hist: Option<ExpHistogram>,
}

#[derive(Debug, Clone)]
pub struct MetaTrace {
    pub n: usize,
    pub r: u32,
    pub nu: usize,
    pub lambda: usize,
    pub epsilon: f64,
    pub m: usize,
    pub iterations: Vec<IterationRecord>,
    pub successes: u64,
}

impl MetaTrace {
    pub fn iteration_count(&self) -> usize {
        self.iterations.len()
    }

    /// Weight sandwich check over every successful iteration, exact.
    pub fn weight_growth_ok(&self) -> bool {
        let mut t = 0u64;
        for rec in &self.iterations {
            if let Some(h) = &rec.post_hist {
                t += 1;
                if !weight_sandwich_holds(h, t, self.nu, self.n, self.r) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone)]
pub struct MetaRun {
    pub value: SolutionValue,
    pub basis: Basis,
    pub trace: MetaTrace,
}

/// Net size used by a run of the given mode.
pub fn run_net_size(inst: &ProblemInstance, r: u32, mode: Mode) -> Result<(Epsilon, usize)> {
    let def = inst.def();
    let n = inst.len();
    let eps = epsilon_for(def.nu(), n, r)?;
    let delta = match mode {
        Mode::LasVegas => 2.0 / 3.0,
        Mode::MonteCarlo => 1.0 / (n as f64 * def.nu() as f64),
    };
    let m = net_size(eps.to_f64(), def.lambda(), delta);
    Ok((eps, m))
}

/// Runs the meta-iteration on an in-memory instance.
pub fn run_meta(inst: &ProblemInstance, r: u32, mode: Mode, seed: u64) -> Result<MetaRun> {
    let def = inst.def();
    let elements = inst.elements();
    let n = elements.len();
    let (eps, m) = run_net_size(inst, r, mode)?;
    let mut weights = WeightState::new(n, r);
    let mut iterations: Vec<IterationRecord> = Vec::new();
    let mut successes = 0u64;

    for iter in 1u64.. {
        let mut rng_net = rngutil::stream2(seed, "net", iter, 0);
        let mut net = sample_net(&weights, m, &mut rng_net);
        net.sort_unstable();
        let mut distinct = net.clone();
        distinct.dedup();
        let net_elements: Vec<Element> = distinct.iter().map(|&i| elements[i].clone()).collect();
        let mut rng_solve = rngutil::stream2(seed, "solve", iter, 0);
        let (value, local_basis) = solve_small(&net_elements, &def, &mut rng_solve)?;
        let basis = Basis {
            indices: local_basis.indices.iter().map(|&i| distinct[i]).collect(),
            elements: local_basis.elements,
            value: local_basis.value,
        };

        let scan = violation_scan(&value, elements, &weights)?;
        let success = success_check(&scan.violator_hist, &scan.total_hist, def.nu(), n, r);
        let done = success && scan.violators.is_empty();
        let mut record = IterationRecord {
            net_indices: net,
            basis: basis.clone(),
            violator_count: scan.violators.len(),
            violator_weight: scan.violator_hist.weight_f64(n, r),
            total_weight: scan.total_hist.weight_f64(n, r),
            success,
            post_hist: None,
        };
        if success && !done {
            weights.bump(&scan.violators);
            successes += 1;
            record.post_hist = Some(weights.histogram());
        }
        iterations.push(record);
        if done {
            return Ok(MetaRun {
                value,
                basis,
                trace: MetaTrace {
                    n,
                    r,
                    nu: def.nu(),
                    lambda: def.lambda(),
                    epsilon: eps.to_f64(),
                    m,
                    iterations,
                    successes,
                },
            });
        }
        if !success && mode == Mode::MonteCarlo {
            return Err(Error::Fail);
        }
    }
    unreachable!("the Las-Vegas loop only exits by returning")
}
