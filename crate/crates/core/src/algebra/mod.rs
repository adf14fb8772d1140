//! The algebra `S_n`: normal-form arithmetic, the split basis, ideal
//! membership and the polynomial module used as an independent oracle.

mod action;
mod element;
mod ideal;
mod monomial;
mod split;

pub use action::{act_on_polynomial, monomials_up_to, oracle_compare, oracle_equal, PnPolynomial};
pub use element::SnElement;
pub use ideal::{ideal_level, in_ideal, split_level, IdealSpec};
pub use monomial::SnMonomial;
pub use split::{from_split, to_split, SplitElement, SplitFactor, SplitKey};
