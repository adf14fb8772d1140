//! `GL_inf(S_{n-1})` as corner matrices and as the units `1 + p_n` of `S_n`:
//! generators, words with known inverses, elementary factorizations and the
//! identity suite.

mod corner;
mod factor;
mod generators;
mod identities;
mod word;

pub use corner::{as_matrix, CornerMatrix};
pub use factor::{
    factor_mu_elementary, factor_theta_elementary, scaled_idempotent_word, theta_relabeling,
    whitehead_diag,
};
pub use generators::{e_set, gen_mu, gen_theta, gen_theta_pow, gen_x, gen_y};
pub use identities::{commutator_expansion_holds, identity_suite, sample_lambdas, CheckOutcome};
pub use word::{verify_inverse, Generator, GeneratorToken, GroupWord};
