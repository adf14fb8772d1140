//! Exact arithmetic in `S_n`, the algebra generated by `x_1..x_n`,
//! `y_1..y_n` with `y_i x_i = 1` and all other pairs commuting, together with
//! its Laurent quotients, the corner-matrix model of `GL_inf(S_{n-1})` and
//! the homomorphisms that compute `K_1` classes.
//!
//! Every structure is generic over a [`scalar::Scalar`] field; the aliases
//! below fix the field to the rationals.

pub mod algebra;
pub mod battery;
pub mod error;
pub mod group;
pub mod index;
pub mod k1;
pub mod laurent;
pub mod sample;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Fp, Scalar, Q};

pub type QElement = algebra::SnElement<Q>;
pub type QSplitElement = algebra::SplitElement<Q>;
pub type QLaurentElement = laurent::LaurentElement<Q>;
pub type QLaurentUnit = laurent::LaurentUnit<Q>;
pub type QCornerMatrix = group::CornerMatrix<Q>;
pub type QGeneratorToken = group::GeneratorToken<Q>;
pub type QGroupWord = group::GroupWord<Q>;
pub type QDecompositionReport = k1::DecompositionReport<Q>;
pub type QK1Report = k1::K1Report<Q>;
