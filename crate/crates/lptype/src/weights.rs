//! Multiplicative weights in exponent form. An element's weight is
//! `(n^(1/r))^a` for an integer exponent `a`, so the state of the whole
//! weight function is an integer exponent per element, or, aggregated, a
//! histogram mapping exponents to counts. Weight comparisons are carried
//! out exactly: totals are polynomials in `t = n^(1/r)` with nonnegative
//! integer coefficients, compared either with an integer `t` (when `n` is a
//! perfect `r`-th power) or with adaptively refined rational bounds on `t`.

use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Per-element integer exponents realizing `w(S_i) = (n^{1/r})^{a_i}`.
#[derive(Debug, Clone)]
pub struct WeightState {
    pub exponents: Vec<u32>,
    pub n: usize,
    pub r: u32,
}

impl WeightState {
    pub fn new(n: usize, r: u32) -> Self {
        WeightState { exponents: vec![0; n], n, r }
    }

    pub fn histogram(&self) -> ExpHistogram {
        let mut h = ExpHistogram::default();
        for &a in &self.exponents {
            h.add(a, 1);
        }
        h
    }

    /// Applies one successful iteration: every violator's exponent rises by 1.
    pub fn bump(&mut self, violators: &[usize]) {
        for &i in violators {
            self.exponents[i] += 1;
        }
    }
}

/// Exponent histogram: how many elements sit at each exponent.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExpHistogram {
    pub counts: BTreeMap<u32, u64>,
}

impl ExpHistogram {
    pub fn add(&mut self, exponent: u32, count: u64) {
        if count > 0 {
            *self.counts.entry(exponent).or_insert(0) += count;
        }
    }

    pub fn merge(&mut self, other: &ExpHistogram) {
        for (&a, &c) in &other.counts {
            self.add(a, c);
        }
    }

    pub fn total_count(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn max_exponent(&self) -> u32 {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    /// The total weight as a polynomial in `t`.
    pub fn poly(&self) -> TPoly {
        TPoly {
            coeffs: self.counts.iter().map(|(&a, &c)| (a, BigInt::from(c))).collect(),
        }
    }

    /// Total weight in floating point, for reporting only.
    pub fn weight_f64(&self, n: usize, r: u32) -> f64 {
        let ln_t = (n as f64).ln() / r as f64;
        self.counts
            .iter()
            .map(|(&a, &c)| (c as f64) * (a as f64 * ln_t).exp())
            .sum()
    }
}

/// Sparse polynomial `sum c_a t^a` with nonnegative big-integer coefficients.
#[derive(Debug, Clone, Default)]
pub struct TPoly {
    pub coeffs: BTreeMap<u32, BigInt>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly::default()
    }

    pub fn scale(&self, k: &BigInt) -> TPoly {
        TPoly { coeffs: self.coeffs.iter().map(|(&a, c)| (a, c * k)).collect() }
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: u32) -> TPoly {
        TPoly { coeffs: self.coeffs.iter().map(|(&a, c)| (a + shift, c.clone())).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(|c| c.is_zero())
    }

    /// Exact value for an integer base.
    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&a, c) in &self.coeffs {
            acc += c * t.pow(a);
        }
        acc
    }

    /// Value at a rational point (all coefficients nonnegative, so the
    /// polynomial is monotone on t > 0 and interval bounds follow).
    pub fn eval_rational(&self, t: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for (&a, c) in &self.coeffs {
            acc += Scalar::from_integer(c.clone()) * pow_rational(t, a);
        }
        acc
    }
}

fn pow_rational(t: &Scalar, e: u32) -> Scalar {
    let mut acc = Scalar::one();
    let mut base = t.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// Exact integer `r`-th root of `n` when `n` is a perfect power.
pub fn integer_base(n: usize, r: u32) -> Option<BigInt> {
    let n = BigInt::from(n);
    let root = n.nth_root(r);
    if root.pow(r) == n {
        Some(root)
    } else {
        None
    }
}

/// Rational bounds `lo <= n^{num/den} <= hi` with `hi - lo <= 2^-k`-ish
/// resolution, via integer root extraction on scaled values.
pub fn power_bounds(n: &BigInt, num: u32, den: u32, k: u32) -> (Scalar, Scalar) {
    // n^{num/den}: root of n^num, scaled by 2^(den*k)
    let scaled = n.pow(num) << (den * k) as usize;
    let x = scaled.nth_root(den);
    let denom = BigInt::one() << k as usize;
    (
        Scalar::new(x.clone(), denom.clone()),
        Scalar::new(x + BigInt::one(), denom),
    )
}

/// Compares `lhs(t)` with `rhs(t)` at `t = n^{1/r}`, exactly when possible
/// and otherwise by interval refinement. An undecided comparison at the
/// finest precision (2^-256) is reported as `Equal`.
pub fn cmp_tpoly(lhs: &TPoly, rhs: &TPoly, n: usize, r: u32) -> Ordering {
    if let Some(t) = integer_base(n, r) {
        return lhs.eval_int(&t).cmp(&rhs.eval_int(&t));
    }
    let n_big = BigInt::from(n);
    for k in [32u32, 64, 128, 256] {
        let (t_lo, t_hi) = power_bounds(&n_big, 1, r, k);
        let l_lo = lhs.eval_rational(&t_lo);
        let l_hi = lhs.eval_rational(&t_hi);
        let r_lo = rhs.eval_rational(&t_lo);
        let r_hi = rhs.eval_rational(&t_hi);
        if l_hi < r_lo {
            return Ordering::Less;
        }
        if l_lo > r_hi {
            return Ordering::Greater;
        }
    }
    Ordering::Equal
}

/// The success predicate of one iteration: `w(V) <= eps * w(S)` with
/// `eps = 1/(10 nu n^{1/r})`, i.e. `10 nu t w(V) <= w(S)` exactly.
pub fn success_check(hist_v: &ExpHistogram, hist_s: &ExpHistogram, nu: usize, n: usize, r: u32) -> bool {
    if hist_v.is_empty() {
        return true;
    }
    let lhs = hist_v.poly().shift(1).scale(&BigInt::from(10 * nu as u64));
    let rhs = hist_s.poly();
    cmp_tpoly(&lhs, &rhs, n, r) != Ordering::Greater
}

/// Rational interval containing `e^{num/den}` (both nonnegative).
pub fn exp_bounds(num: u64, den: u64) -> (Scalar, Scalar) {
    let q = Scalar::new(BigInt::from(num), BigInt::from(den));
    let terms = 64usize;
    let mut sum = Scalar::zero();
    let mut term = Scalar::one();
    for j in 1..=terms {
        sum += &term;
        term = term * &q / Scalar::from_integer(BigInt::from(j as u64));
    }
    // remainder of the tail: term * 1/(1 - q/(terms+1)), valid for q < terms+1
    let ratio = &q / Scalar::from_integer(BigInt::from(terms as u64 + 1));
    assert!(ratio < Scalar::one(), "exponent argument too large for the Taylor bound");
    let rem = &term / (Scalar::one() - ratio);
    (sum.clone(), sum + rem)
}

/// Verifies the two-sided weight growth bound after the `t`-th successful
/// iteration: `n^{t/(nu r)} <= w_t(S) <= e^{t/(10 nu)} * n`.
pub fn weight_sandwich_holds(hist_s: &ExpHistogram, t: u64, nu: usize, n: usize, r: u32) -> bool {
    let poly = hist_s.poly();
    let n_big = BigInt::from(n);
    // exact path: integer base
    let nur = nu as u64 * r as u64;
    let lower_ok;
    let upper_ok;
    if let Some(base) = integer_base(n, r) {
        let w = poly.eval_int(&base); // w is an integer here
        // lower: w^(nu r) >= n^t
        lower_ok = w.pow(nur as u32) >= n_big.pow(t as u32);
        // upper: w <= e^{t/10nu} * n; comparing against the Taylor lower
        // bound of e^q keeps the check rigorous
        let (e_lo, _) = exp_bounds(t, 10 * nu as u64);
        upper_ok = Scalar::from_integer(w) <= e_lo * Scalar::from_integer(n_big.clone());
    } else {
        let mut lo_ok = false;
        let mut hi_ok = false;
        for k in [64u32, 128, 256] {
            let (t_lo, t_hi) = power_bounds(&n_big, 1, r, k);
            let w_lo = poly.eval_rational(&t_lo);
            let w_hi = poly.eval_rational(&t_hi);
            if !lo_ok {
                // need w >= n^{t/(nu r)}: compare a lower bound on w with an
                // upper bound on the power
                let (_, p_hi) = power_bounds(&n_big, t as u32, nur as u32, k);
                if w_lo >= p_hi {
                    lo_ok = true;
                }
            }
            if !hi_ok {
                let (e_lo, _) = exp_bounds(t, 10 * nu as u64);
                if w_hi <= e_lo * Scalar::from_integer(n_big.clone()) {
                    hi_ok = true;
                }
            }
            if lo_ok && hi_ok {
                break;
            }
        }
        lower_ok = lo_ok;
        upper_ok = hi_ok;
    }
    lower_ok && upper_ok
}

// ---------------------------------------------------------------------------
// weighted draws
// ---------------------------------------------------------------------------

/// One net draw, addressed as (exponent class, rank within the class).
/// Ranks index the class members in ascending element order, which both the
/// in-memory sampler and the streaming pass can resolve identically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassDraw {
    pub exponent: u32,
    pub rank: u64,
}

/// Draws `m` i.i.d. (class, rank) pairs with class probability proportional
/// to `count * t^exponent`. Class weights are formed in the log domain with
/// f64 keys; ranks are uniform integers drawn exactly.
pub fn draw_classes<R: Rng>(
    hist: &ExpHistogram,
    n: usize,
    r: u32,
    m: usize,
    rng: &mut R,
) -> Vec<ClassDraw> {
    assert!(!hist.is_empty(), "cannot sample from an empty histogram");
    let ln_t = (n as f64).ln() / r as f64;
    let classes: Vec<(u32, u64)> = hist.counts.iter().map(|(&a, &c)| (a, c)).collect();
    let max_ln: f64 = classes
        .iter()
        .map(|&(a, c)| a as f64 * ln_t + (c as f64).ln())
        .fold(f64::NEG_INFINITY, f64::max);
    let mut cum: Vec<f64> = Vec::with_capacity(classes.len());
    let mut acc = 0.0;
    for &(a, c) in &classes {
        acc += (a as f64 * ln_t + (c as f64).ln() - max_ln).exp();
        cum.push(acc);
    }
    let total = acc;
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        let x: f64 = rng.gen::<f64>() * total;
        let mut idx = cum.partition_point(|&v| v < x);
        if idx >= classes.len() {
            idx = classes.len() - 1;
        }
        let (a, c) = classes[idx];
        let rank = rng.gen_range(0..c);
        out.push(ClassDraw { exponent: a, rank });
    }
    out
}

/// Resolves (class, rank) draws against elements visited in ascending index
/// order. Feed every element exactly once per pass.
pub struct RankResolver {
    /// per class: sorted list of (rank, draw slot)
    pending: BTreeMap<u32, Vec<(u64, usize)>>,
    /// per class: how many members seen so far
    seen: BTreeMap<u32, u64>,
    /// draw slot -> element index
    pub resolved: Vec<Option<usize>>,
}

impl RankResolver {
    pub fn new(draws: &[ClassDraw]) -> Self {
        let mut pending: BTreeMap<u32, Vec<(u64, usize)>> = BTreeMap::new();
        for (slot, d) in draws.iter().enumerate() {
            pending.entry(d.exponent).or_default().push((d.rank, slot));
        }
        for v in pending.values_mut() {
            v.sort_unstable();
            v.reverse(); // pop from the back in ascending rank order
        }
        RankResolver { pending, seen: BTreeMap::new(), resolved: vec![None; draws.len()] }
    }

    pub fn feed(&mut self, element_index: usize, exponent: u32) {
        let seen = self.seen.entry(exponent).or_insert(0);
        let rank = *seen;
        *seen += 1;
        if let Some(v) = self.pending.get_mut(&exponent) {
            while let Some(&(r, slot)) = v.last() {
                if r == rank {
                    self.resolved[slot] = Some(element_index);
                    v.pop();
                } else {
                    break;
                }
            }
        }
    }

    pub fn finish(self) -> Vec<usize> {
        self.resolved
            .into_iter()
            .map(|o| o.expect("every drawn rank must resolve within one pass"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn histogram_poly_roundtrip() {
        let mut h = ExpHistogram::default();
        h.add(0, 3);
        h.add(2, 1);
        let t = BigInt::from(2);
        assert_eq!(h.poly().eval_int(&t), BigInt::from(7));
        assert_eq!(h.total_count(), 4);
    }

    #[test]
    fn success_check_exact_base() {
        // n = 16, r = 4 => t = 2, nu = 1: w(V) <= w(S) / (10 * 2)
        let mut s = ExpHistogram::default();
        s.add(0, 16);
        let mut v = ExpHistogram::default();
        v.add(0, 1);
        // 10 * 1 * 2 * 1 = 20 > 16: fails
        assert!(!success_check(&v, &s, 1, 16, 4));
        let empty = ExpHistogram::default();
        assert!(success_check(&empty, &s, 1, 16, 4));
    }

    #[test]
    fn success_check_irrational_base() {
        // n = 10, r = 3: t ~ 2.154
        let mut s = ExpHistogram::default();
        s.add(0, 1000);
        let mut v = ExpHistogram::default();
        v.add(0, 1);
        // 10 * 2 * t = 43.09 <= 1000
        assert!(success_check(&v, &s, 2, 10, 3));
        let mut v2 = ExpHistogram::default();
        v2.add(0, 100);
        assert!(!success_check(&v2, &s, 2, 10, 3));
    }

    #[test]
    fn power_bounds_bracket() {
        let (lo, hi) = power_bounds(&BigInt::from(10), 1, 3, 64);
        let cube = |x: &Scalar| x * x * x;
        assert!(cube(&lo) <= Scalar::from_integer(BigInt::from(10)));
        assert!(cube(&hi) >= Scalar::from_integer(BigInt::from(10)));
        assert!(&hi - &lo <= Scalar::new(BigInt::from(2), BigInt::one() << 64));
    }

    #[test]
    fn exp_bounds_bracket_e() {
        let (lo, hi) = exp_bounds(1, 1);
        let e = std::f64::consts::E;
        assert!(lo.to_f64().unwrap() <= e && e <= hi.to_f64().unwrap());
        assert!((&hi - &lo).to_f64().unwrap() < 1e-30);
    }

    #[test]
    fn sandwich_initial_state() {
        // t = 0 trivially holds: n^0 = 1 <= n <= e^0 * n
        let mut s = ExpHistogram::default();
        s.add(0, 100);
        assert!(weight_sandwich_holds(&s, 0, 3, 100, 4));
    }

    #[test]
    fn draw_single_element() {
        let mut h = ExpHistogram::default();
        h.add(0, 1);
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        let draws = draw_classes(&h, 50, 4, 10, &mut rng);
        assert!(draws.iter().all(|d| d.exponent == 0 && d.rank == 0));
    }

    #[test]
    fn draw_concentrated_weight() {
        // exponent 60 vs 0 with base 2: the heavy class wins essentially always
        let mut h = ExpHistogram::default();
        h.add(60, 1);
        h.add(0, 99);
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        let draws = draw_classes(&h, 1 << 4, 4, 2000, &mut rng); // n=16, r=4, t=2
        let heavy = draws.iter().filter(|d| d.exponent == 60).count();
        assert!(heavy >= 1995, "heavy class drawn {heavy}/2000");
    }

    #[test]
    fn resolver_matches_direct_lookup() {
        let exps = vec![0u32, 1, 0, 1, 1, 0];
        let draws = vec![
            ClassDraw { exponent: 1, rank: 2 },
            ClassDraw { exponent: 0, rank: 0 },
            ClassDraw { exponent: 1, rank: 0 },
            ClassDraw { exponent: 1, rank: 2 },
        ];
        let mut resolver = RankResolver::new(&draws);
        for (i, &a) in exps.iter().enumerate() {
            resolver.feed(i, a);
        }
        assert_eq!(resolver.finish(), vec![4, 0, 1, 4]);
    }
}
