use std::fmt;

use crate::error::{Error, Result};
use crate::group::GeneratorToken;
use crate::index::{binomial, check_set, subsets_of_size, with, without, IndexSet};
use crate::scalar::Scalar;

fn theta_token<S: Scalar>(i: usize, j: usize, set: IndexSet) -> GeneratorToken<S> {
    GeneratorToken::theta(i, j, set, 1)
}

fn check_level(n: usize, s: usize) -> Result<()> {
    if s < 2 || s + 1 > n {
        return Err(Error::InvalidArgument(format!("level {s} outside 2..={}", n.saturating_sub(1))));
    }
    Ok(())
}

/// The sets `J` with `|J| = s + 1` and `n` in `J`, in lexicographic order.
fn sets_through_n(n: usize, s: usize) -> Vec<IndexSet> {
    subsets_of_size(n - 1, s).into_iter().map(|t| with(&t, n)).collect()
}

/// The generators `theta_{m(J),j}(J)` of the level-`s` theta group of
/// `GL(S_{n-1})`, `m(J) = max(J \ n)`, ordered by `J` and then `j`.
pub fn enumerate_generators<S: Scalar>(n: usize, s: usize) -> Result<Vec<GeneratorToken<S>>> {
    check_level(n, s)?;
    let mut out = Vec::new();
    for j_set in sets_through_n(n, s) {
        let m = *without(&j_set, &[n]).iter().next_back().expect("J has two elements besides n");
        for &j in without(&j_set, &[n, m]).iter() {
            out.push(theta_token(m, j, j_set.clone()));
        }
    }
    Ok(out)
}

/// The level-`s` theta generators of the congruence group for the prime
/// with the given support: first the sets meeting the support in a single
/// `i`, then those meeting it at least twice.
pub fn enumerate_congruence_generators<S: Scalar>(
    n: usize,
    s: usize,
    support: &IndexSet,
) -> Result<Vec<GeneratorToken<S>>> {
    check_level(n, s)?;
    check_support(n, support)?;
    let sets = sets_through_n(n, s);
    let mut out = Vec::new();
    for &i in support {
        for j_set in sets.iter().filter(|t| t.intersection(support).eq([&i])) {
            let rest = without(j_set, &[n, i]);
            let Some(&m) = rest.iter().next_back() else { continue };
            for &j in without(&rest, &[m]).iter() {
                out.push(theta_token(m, j, j_set.clone()));
            }
        }
    }
    for j_set in sets.iter().filter(|t| t.intersection(support).count() >= 2) {
        let m = *without(j_set, &[n]).iter().next_back().expect("J has two elements besides n");
        for &j in without(j_set, &[n, m]).iter() {
            out.push(theta_token(m, j, j_set.clone()));
        }
    }
    Ok(out)
}

/// Number of theta generators of `GL(S_{n-1})` over all levels.
pub fn theta_generator_total(n: usize) -> Result<usize> {
    let mut total = 0;
    for s in 2..n {
        total += enumerate_generators::<crate::scalar::Q>(n, s)?.len();
    }
    Ok(total)
}

fn check_support(n: usize, support: &IndexSet) -> Result<()> {
    check_set(support, n)?;
    if support.is_empty() || support.contains(&n) {
        return Err(Error::InvalidIndexSet(format!("support must be a nonempty subset of 1..{}", n - 1)));
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum K1Case {
    Full,
    Congruence(IndexSet),
}

/// The structure of `K1(S_{n-1})` or of `K1(S_{n-1}, p)`.
#[derive(Clone, PartialEq, Debug)]
pub struct K1Report<S> {
    pub n: usize,
    pub case: K1Case,
    pub structure: String,
    /// Number of listed theta generators.
    pub generator_count: usize,
    pub generators: Vec<GeneratorToken<S>>,
    /// Index sets `I` of the one-parameter groups `mu_I(K*)`.
    pub mu_families: Vec<IndexSet>,
}

/// `K*` in the full case, listing every theta generator; in the
/// congruence case `Z^{C(m,2)} x (K*)^m`, listing `theta_ij({i,j,n})` for
/// `i > j` in the support and the groups `mu_{{k,n}}(K*)`.
pub fn k1_report<S: Scalar>(n: usize, support: Option<&IndexSet>) -> Result<K1Report<S>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("ambient index {n} must be at least 2")));
    }
    match support {
        None => {
            let mut generators = Vec::new();
            for s in 2..n {
                generators.extend(enumerate_generators(n, s)?);
            }
            Ok(K1Report {
                n,
                case: K1Case::Full,
                structure: "K*".into(),
                generator_count: generators.len(),
                generators,
                mu_families: vec![[n].into_iter().collect()],
            })
        }
        Some(p) => {
            check_support(n, p)?;
            let m = p.len();
            let structure = if m == 1 {
                "K*".to_string()
            } else {
                format!("Z^{} x (K*)^{m}", binomial(m, 2))
            };
            let mut generators = Vec::new();
            for &j in p {
                for &i in p.iter().filter(|&&i| i > j) {
                    generators.push(theta_token(i, j, [i, j, n].into_iter().collect()));
                }
            }
            Ok(K1Report {
                n,
                case: K1Case::Congruence(p.clone()),
                structure,
                generator_count: generators.len(),
                generators,
                mu_families: p.iter().map(|&k| [k, n].into_iter().collect()).collect(),
            })
        }
    }
}

impl<S: Scalar> fmt::Display for K1Report<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.structure)?;
        for g in &self.generators {
            writeln!(f, "  {g}")?;
        }
        for m in &self.mu_families {
            let s: Vec<String> = m.iter().map(|i| i.to_string()).collect();
            writeln!(f, "  mu{{{}}}(K*)", s.join(","))?;
        }
        Ok(())
    }
}
