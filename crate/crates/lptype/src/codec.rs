//! Message codec shared by the coordinator and MPC simulators, plus the bit
//! meter. Records are length-prefixed; scalars are signed big-integer pairs.
//! The meter charges exactly the bits the codec would put on the wire.

use crate::core::Element;
use crate::scalar::{scalar_bits, Scalar};
use crate::weights::ExpHistogram;

/// Length prefix: 32 bits per record.
const LEN_PREFIX_BITS: u64 = 32;

pub fn scalar_wire_bits(s: &Scalar) -> u64 {
    LEN_PREFIX_BITS + scalar_bits(s)
}

pub fn element_wire_bits(e: &Element) -> u64 {
    let scalars: Vec<&Scalar> = match e {
        Element::Halfspace { a, b } => a.iter().chain(std::iter::once(b)).collect(),
        Element::LabeledPoint { x, .. } => x.iter().collect(),
        Element::Point { p } => p.iter().collect(),
    };
    let label_bits = matches!(e, Element::LabeledPoint { .. }) as u64;
    LEN_PREFIX_BITS + label_bits + scalars.iter().map(|s| scalar_wire_bits(s)).sum::<u64>()
}

pub fn elements_wire_bits(elems: &[Element]) -> u64 {
    LEN_PREFIX_BITS + elems.iter().map(element_wire_bits).sum::<u64>()
}

pub fn value_wire_bits(v: &crate::core::SolutionValue) -> u64 {
    use crate::core::SolutionValue::*;
    let scalars: Vec<&Scalar> = match v {
        Lp { objective, point } => std::iter::once(objective).chain(point.iter()).collect(),
        Svm { norm_sq, u } => std::iter::once(norm_sq).chain(u.iter()).collect(),
        Meb { radius_sq, center } => std::iter::once(radius_sq).chain(center.iter()).collect(),
    };
    LEN_PREFIX_BITS + scalars.iter().map(|s| scalar_wire_bits(s)).sum::<u64>()
}

/// A weight report `w(S_i)` as a dense exponent-count array: one count per
/// exponent in `0..=max_exp`, `ceil(log2(n+1))` bits each. This realizes the
/// `O(l/r log n)`-bit weight encoding without irrational numbers on the wire.
pub fn histogram_wire_bits(max_exp: u32, n: usize) -> u64 {
    let per_count = (n as u64 + 1).next_power_of_two().trailing_zeros().max(1) as u64;
    LEN_PREFIX_BITS + (max_exp as u64 + 1) * per_count
}

pub fn count_wire_bits(max_value: u64) -> u64 {
    ((max_value + 1).next_power_of_two().trailing_zeros().max(1)) as u64
}

/// Dense-array encoding and decoding of a histogram (used by tests to pin
/// the wire format; the meter charges `histogram_wire_bits`).
pub fn encode_histogram(h: &ExpHistogram, max_exp: u32) -> Vec<u64> {
    (0..=max_exp).map(|a| h.counts.get(&a).copied().unwrap_or(0)).collect()
}

pub fn decode_histogram(dense: &[u64]) -> ExpHistogram {
    let mut h = ExpHistogram::default();
    for (a, &c) in dense.iter().enumerate() {
        h.add(a as u32, c);
    }
    h
}

/// Running bit meter, split by direction for per-party accounting.
#[derive(Debug, Clone, Default)]
pub struct BitMeter {
    pub bits_up: u64,
    pub bits_down: u64,
}

impl BitMeter {
    pub fn charge_up(&mut self, bits: u64) {
        self.bits_up += bits;
    }
    pub fn charge_down(&mut self, bits: u64) {
        self.bits_down += bits;
    }
    pub fn total(&self) -> u64 {
        self.bits_up + self.bits_down
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::s_ratio;

    #[test]
    fn histogram_dense_roundtrip() {
        let mut h = ExpHistogram::default();
        h.add(0, 5);
        h.add(3, 2);
        let dense = encode_histogram(&h, 4);
        assert_eq!(dense, vec![5, 0, 0, 2, 0]);
        assert_eq!(decode_histogram(&dense), h);
    }

    #[test]
    fn wire_bits_are_positive_and_monotone() {
        let small = s_ratio(1, 2);
        let big = s_ratio(123_456_789, 987);
        assert!(scalar_wire_bits(&big) > scalar_wire_bits(&small));
        assert_eq!(count_wire_bits(15), 4);
        assert_eq!(count_wire_bits(16), 5);
    }
}
