//! Exact solvers for low-dimensional LP-type problems (linear programming,
//! hard-margin linear SVM, minimum enclosing ball), executed either directly
//! or under simulated multi-pass streaming, coordinator, and MPC models with
//! exact resource metering, plus generators for random and adversarial
//! (two-curve intersection) instances.
//!
//! All geometry is bit-exact: coordinates, optima, and every feasibility
//! test use arbitrary-precision rationals.

pub mod codec;
pub mod coord;
pub mod core;
pub mod instgen;
pub mod meta;
pub mod mpc;
pub mod oracle;
pub mod problems;
pub mod rngutil;
pub mod scalar;
pub mod stream;
pub mod weights;
