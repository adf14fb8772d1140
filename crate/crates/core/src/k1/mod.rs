//! Determinant-type homomorphisms, the effective decomposition of congruence
//! units and the K1 structure reports.

mod decompose;
mod det;
mod enumerate;
mod lattice;

pub use decompose::{decompose, decompose_full_gl, is_elementary_product, DecompositionReport};
pub use det::{bdet, deg_nij, det_i};
pub use enumerate::{
    enumerate_congruence_generators, enumerate_generators, k1_report, theta_generator_total,
    K1Case, K1Report,
};
pub use lattice::{chi_j, psi_prime, LatticeVector};
