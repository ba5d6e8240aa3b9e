//! Exact rational scalars and the few dense linear-algebra helpers the
//! solvers need. Everything is arbitrary precision; nothing here rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Write as _;

/// Exact rational number. `BigRational` keeps the invariants we rely on:
/// always reduced, denominator strictly positive.
pub type Scalar = BigRational;

pub fn s_int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn s_ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn s_zero() -> Scalar {
    Scalar::zero()
}

pub fn s_one() -> Scalar {
    Scalar::one()
}

/// Canonical text form `num/den` (denominator always written, even when 1).
pub fn scalar_to_string(s: &Scalar) -> String {
    let mut out = String::new();
    let _ = write!(out, "{}/{}", s.numer(), s.denom());
    out
}

/// Parses `num/den` or a bare integer `num`.
pub fn scalar_from_str(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (text.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(Scalar::new(num, den))
}

/// `floor` of an exact rational as a `BigInt`.
pub fn scalar_floor(s: &Scalar) -> BigInt {
    s.floor().to_integer()
}

pub fn scalar_to_f64(s: &Scalar) -> f64 {
    s.to_f64().unwrap_or_else(|| {
        // Fall back on a crude split for magnitudes outside f64 range.
        if s.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Number of bits needed to write the scalar as a (sign, numer, denom) pair.
pub fn scalar_bits(s: &Scalar) -> u64 {
    1 + s.numer().bits() + s.denom().bits()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn norm_sq(a: &[Scalar]) -> Scalar {
    dot(a, a)
}

/// Solves the square system `m x = rhs` by Gaussian elimination with exact
/// pivoting. Returns `None` when the matrix is singular.
pub fn solve_linear_system(m: &[Vec<Scalar>], rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    debug_assert_eq!(rhs.len(), n);
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut b: Vec<Scalar> = rhs.to_vec();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        b[col] *= &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..n {
                    let t = &factor * &a[col][c];
                    a[r][c] -= t;
                }
                let t = &factor * &b[col];
                b[r] -= t;
            }
        }
    }
    Some(b)
}

/// Rank of a small matrix, by elimination on a copy.
pub fn rank(m: &[Vec<Scalar>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, pivot);
        for i in (r + 1)..rows {
            if !a[i][col].is_zero() {
                let factor = &a[i][col] / &a[r][col];
                for c in col..cols {
                    let t = &factor * &a[r][c];
                    a[i][c] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        for (n, d) in [(1i64, 2i64), (-3, 7), (0, 1), (10, 5)] {
            let s = s_ratio(n, d);
            let back = scalar_from_str(&scalar_to_string(&s)).unwrap();
            assert_eq!(s, back);
        }
        assert_eq!(scalar_from_str("42").unwrap(), s_int(42));
        assert!(scalar_from_str("1/0").is_none());
        assert!(scalar_from_str("x").is_none());
    }

    #[test]
    fn linear_solve_2x2() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        let m = vec![vec![s_int(1), s_int(1)], vec![s_int(1), s_int(-1)]];
        let sol = solve_linear_system(&m, &[s_int(3), s_int(1)]).unwrap();
        assert_eq!(sol, vec![s_int(2), s_int(1)]);
        let singular = vec![vec![s_int(1), s_int(1)], vec![s_int(2), s_int(2)]];
        assert!(solve_linear_system(&singular, &[s_int(1), s_int(2)]).is_none());
    }

    #[test]
    fn rank_small() {
        let m = vec![vec![s_int(1), s_int(2)], vec![s_int(2), s_int(4)]];
        assert_eq!(rank(&m), 1);
    }
}
