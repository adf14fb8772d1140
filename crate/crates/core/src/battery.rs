//! Seeded invariant batteries run alongside the identity replay.

use num_traits::One;

use crate::algebra::{oracle_compare, SnElement};
use crate::error::Result;
use crate::group::{
    factor_mu_elementary, factor_theta_elementary, gen_mu, gen_theta, CheckOutcome, CornerMatrix,
};
use crate::index::{complement, set, subsets_of_size, without};
use crate::k1::{bdet, decompose, decompose_full_gl, deg_nij, is_elementary_product, theta_generator_total};
use crate::sample::Sampler;
use crate::scalar::{Scalar, Q};

fn outcome(id: &str, label: &str, run: impl FnOnce() -> Result<Vec<String>>) -> CheckOutcome {
    let (passed, detail) = match run() {
        Ok(f) if f.is_empty() => (true, String::new()),
        Ok(f) => (false, f.join("; ")),
        Err(e) => (false, format!("error: {e}")),
    };
    CheckOutcome { id: id.into(), label: label.into(), passed, detail }
}

/// Elementary words for `diag(theta_ij(J), 1)`, `J = {1,2}` and `{1,2,3}`.
pub fn theta_factorization() -> CheckOutcome {
    outcome("theta-factorization", "elementary words for theta_ij(J)", || {
        let mut f = Vec::new();
        for (n, j_set) in [(3, set(&[1, 2])), (4, set(&[1, 2, 3]))] {
            for &i in &j_set {
                for &j in &j_set {
                    if i == j {
                        continue;
                    }
                    let w = factor_theta_elementary::<Q>(n, i, j, &j_set)?;
                    let target = CornerMatrix::diag(n, &[gen_theta(n - 1, i, j, &j_set)?])?;
                    if !w.is_elementary() || w.eval()? != target {
                        f.push(format!("theta_{i}{j}({j_set:?})"));
                    }
                }
            }
        }
        Ok(f)
    })
}

/// Elementary words for `mu_I(lambda)` with `n` in `I`, `|I| >= 2`.
pub fn mu_factorization() -> CheckOutcome {
    outcome("mu-factorization", "elementary words for mu_I(lambda)", || {
        let n = 4;
        let mut f = Vec::new();
        for rest in (1..n).flat_map(|k| subsets_of_size(n - 1, k)) {
            let mut i_set = rest.clone();
            i_set.insert(n);
            for l in [Q::from_i64(2), Q::ratio(-1, 2), Q::from_i64(-1)] {
                let w = factor_mu_elementary(n, &i_set, &l)?;
                if !w.is_elementary() || w.eval_element()? != gen_mu(n, &i_set, &l)? {
                    f.push(format!("mu_{i_set:?}({l})"));
                }
            }
        }
        Ok(f)
    })
}

/// `deg_{n,I,i}(theta_{m(J),j}(J))` is `-1`, `1` or `0` as `(I, i)` is
/// `(J \ m(J), m(J))`, `(J \ j, j)` or anything else.
pub fn degree_table() -> CheckOutcome {
    outcome("degree-table", "degrees of theta_{m(J),j}(J)", || {
        let mut f = Vec::new();
        for n in [3, 4] {
            for j_set in (3..=n).flat_map(|k| subsets_of_size(n, k)).filter(|s| s.contains(&n)) {
                let m = *without(&j_set, &[n]).iter().next_back().expect("two elements below n");
                for &j in &without(&j_set, &[n, m]) {
                    let theta = gen_theta::<Q>(n, m, j, &j_set)?;
                    for i_set in subsets_of_size(n, j_set.len() - 1) {
                        for i in complement(&i_set, n) {
                            let want = if i_set == without(&j_set, &[m]) && i == m {
                                -1
                            } else if i_set == without(&j_set, &[j]) && i == j {
                                1
                            } else {
                                0
                            };
                            if deg_nij(&theta, &i_set, i)? != want {
                                f.push(format!("n={n} J={j_set:?} j={j} I={i_set:?} i={i}"));
                            }
                        }
                    }
                }
            }
        }
        Ok(f)
    })
}

/// Theta generator totals `(N - 2) 2^(N-1) + 1` over `S_N`, `N = 2..6`.
pub fn generator_count() -> CheckOutcome {
    outcome("generator-count", "theta generator totals", || {
        let mut f = Vec::new();
        for size in 2..=6usize {
            let want = (size - 2) * (1 << (size - 1)) + 1;
            let got = theta_generator_total(size + 1)?;
            if got != want {
                f.push(format!("S_{size}: {got} != {want}"));
            }
        }
        Ok(f)
    })
}

/// Normal-form products agree with composed actions on polynomials.
pub fn oracle_agreement(seed: u64, count: usize) -> CheckOutcome {
    outcome("oracle-agreement", "products against the polynomial action", || {
        let mut s = Sampler::new(seed);
        let mut f = Vec::new();
        for k in 0..count {
            let n = 1 + k % 2;
            let a = SnElement::monomial(s.monomial_of_degree(n, 4), Q::from_i64(1));
            let b = SnElement::monomial(s.monomial_of_degree(n, 4), Q::from_i64(1));
            if !oracle_compare(&a, &b, 8) {
                f.push(format!("{a} * {b}"));
            }
        }
        Ok(f)
    })
}

/// Decomposition of random congruence words recomposes exactly and
/// recovers the theta and mu exponents.
pub fn decomposition_round_trip(seed: u64, count: usize) -> CheckOutcome {
    outcome("decomposition-round-trip", "decomposition of congruence words", || {
        let mut s = Sampler::new(seed);
        let n = 4;
        let supports: Vec<_> = (1..=3).flat_map(|k| subsets_of_size(3, k)).collect();
        let mut f = Vec::new();
        for k in 0..count {
            let support = &supports[k % supports.len()];
            let t = s.congruence_word(n, support, 5);
            let a = t.word.eval_element()?;
            let r = decompose(&a, support, n)?;
            if r.recompose()? != a || r.n_ij != t.n_ij || r.lambda_k != t.lambda_k {
                f.push(t.word.to_string());
            }
        }
        Ok(f)
    })
}

/// `a = mu_n(lambda) e` with `lambda` the product of the `mu_n` letters.
pub fn full_gl_classifier(seed: u64, count: usize) -> CheckOutcome {
    outcome("full-gl-classifier", "mu_n part of random units", || {
        let mut s = Sampler::new(seed);
        let mut f = Vec::new();
        for k in 0..count {
            let n = 2 + k % 3;
            let (w, lambda) = s.full_word(n, 5);
            let (l, e) = decompose_full_gl(&w.eval()?)?;
            let d = bdet(&e)?;
            if l != lambda || !d.is_scalar() || !d.coeff.is_one() {
                f.push(w.to_string());
            }
        }
        Ok(f)
    })
}

/// `p`-elementary words pass the membership test; one extra theta or
/// nontrivial mu letter makes them fail.
pub fn membership_criterion(seed: u64, count: usize) -> CheckOutcome {
    outcome("membership-criterion", "elementary membership of congruence words", || {
        let mut s = Sampler::new(seed);
        let n = 4;
        let support = set(&[1, 2]);
        let mut f = Vec::new();
        for k in 0..count {
            let w = s.elementary_word(n, Some(&support), 4);
            let a = w.eval_element()?;
            if !is_elementary_product(&a, &support, n)? {
                f.push(format!("elementary word rejected: {w}"));
            }
            let extra = if k % 2 == 0 {
                gen_theta(n, 2, 1, &set(&[1, 2, n]))?
            } else {
                gen_mu(n, &set(&[1 + k % 4 / 2, n]), &s.nontrivial_scalar())?
            };
            if is_elementary_product(&(&extra * &a), &support, n)? {
                f.push(format!("non-elementary word accepted: {w}"));
            }
        }
        Ok(f)
    })
}

/// `det(u bar)` is multiplicative and has no Laurent part on units.
pub fn bdet_multiplicative(seed: u64, count: usize) -> CheckOutcome {
    outcome("bdet-multiplicative", "det(u bar) on products", || {
        let mut s = Sampler::new(seed);
        let mut f = Vec::new();
        for k in 0..count {
            let n = 2 + k % 2;
            let u = s.full_word(n, 4).0.eval()?;
            let v = s.full_word(n, 4).0.eval()?;
            let (du, dv, duv) = (bdet(&u)?, bdet(&v)?, bdet(&u.mat_mul(&v)?)?);
            if !(du.is_scalar() && dv.is_scalar() && duv.is_scalar()) || duv.coeff != du.coeff * dv.coeff {
                f.push(format!("pair {k}"));
            }
        }
        Ok(f)
    })
}

/// Every battery with the default seed and modest sample counts.
pub fn invariant_batteries() -> Vec<CheckOutcome> {
    let seed = 2010;
    vec![
        theta_factorization(),
        mu_factorization(),
        degree_table(),
        generator_count(),
        oracle_agreement(seed, 100),
        decomposition_round_trip(seed, 20),
        full_gl_classifier(seed, 20),
        membership_criterion(seed, 20),
        bdet_multiplicative(seed, 20),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::Instant;

    #[test]
    fn batteries_pass() {
        let t = Instant::now();
        for c in invariant_batteries() {
            assert!(c.passed, "{}: {}", c.id, c.detail);
            eprintln!("{} ok at {:?}", c.id, t.elapsed());
        }
    }
}
