//! Laurent polynomials `K[x_j, x_j^-1 : j in V]`, their units and corner
//! determinants. These are the commutative targets of every determinant-type
//! map on `S_n`.

mod det;
mod element;
mod reduce;

pub use det::{laurent_det, LaurentCornerMatrix};
pub use element::{as_unit_monomial, deg_xj, LaurentElement, LaurentUnit};
pub use reduce::laurent_reduce;
