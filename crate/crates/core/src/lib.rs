//! Exact computer algebra for the Alexander polynomial of null-homologous
//! links, the strut and wheel calculus behind the Århus and LMO invariants,
//! and the two-way translation between `∇(M)` of a rank-one 3-manifold and
//! the wheel part of its LMO invariant.
//!
//! Everything is exact over `Q`; there is no floating point anywhere. The
//! crate only needs `alloc`, so it builds for `no_std` targets. File formats,
//! parsing and the command-line tool live in the `nabla-lmo` crate.

#![cfg_attr(not(test), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod alexander;
pub mod error;
pub mod gaussian;
pub mod laurent;
pub mod matrix;
pub mod mmr;
pub mod rational;
pub mod seifert;
pub mod series;
pub mod surgery;
mod terms;
pub mod wheels;
pub mod zpoly;

pub use error::{Error, Result};
pub use laurent::HalfLaurent;
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use rational::Rational;
pub use series::HSeries;
pub use zpoly::ZPoly;

/// Truncation order used when the caller does not pick one.
pub const DEFAULT_ORDER: usize = 16;
