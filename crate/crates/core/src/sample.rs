//! Seeded random elements and generator words for property checks.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{SnElement, SnMonomial};
use crate::group::{GeneratorToken, GroupWord};
use crate::index::{set, IndexSet};
use crate::scalar::{Scalar, Q};

/// A word together with the exponents of its theta and mu letters.
#[derive(Clone, Debug)]
pub struct TalliedWord {
    pub word: GroupWord<Q>,
    /// Net exponent of `theta_ij({i,j,n})`, keyed by `(i, j)` with `i > j`.
    pub n_ij: BTreeMap<(usize, usize), i64>,
    /// Product of the scalars of `mu_{{k,n}}` letters.
    pub lambda_k: BTreeMap<usize, Q>,
}

/// Deterministic sampler over `Q`.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// `p/q` with `|p| <= 5`, `1 <= q <= 4`.
    pub fn scalar(&mut self) -> Q {
        Q::ratio(self.rng.gen_range(-5..=5), self.rng.gen_range(1..=4))
    }

    pub fn nonzero_scalar(&mut self) -> Q {
        loop {
            let c = self.scalar();
            if !c.is_zero() {
                return c;
            }
        }
    }

    /// A nonzero scalar different from 1.
    pub fn nontrivial_scalar(&mut self) -> Q {
        loop {
            let c = self.nonzero_scalar();
            if !c.is_one() {
                return c;
            }
        }
    }

    pub fn monomial(&mut self, n: usize, max_exp: u32) -> SnMonomial {
        let alpha: Vec<u32> = (0..n).map(|_| self.rng.gen_range(0..=max_exp)).collect();
        let beta: Vec<u32> = (0..n).map(|_| self.rng.gen_range(0..=max_exp)).collect();
        SnMonomial::new(&alpha, &beta)
    }

    /// A monomial of total degree at most `d`.
    pub fn monomial_of_degree(&mut self, n: usize, d: u32) -> SnMonomial {
        let mut exps = vec![0u32; 2 * n];
        let total = self.rng.gen_range(0..=d);
        for _ in 0..total {
            let k = self.rng.gen_range(0..2 * n);
            exps[k] += 1;
        }
        SnMonomial::new(&exps[..n], &exps[n..])
    }

    pub fn element(&mut self, n: usize, terms: usize, max_exp: u32) -> SnElement<Q> {
        let mut a = SnElement::zero(n);
        for _ in 0..terms {
            let m = SnElement::monomial(self.monomial(n, max_exp), self.nonzero_scalar());
            a = &a + &m;
        }
        a
    }

    /// An entry of `S_{k}`: a scalar multiple of a short monomial, times
    /// `e_c` for a random `c` of the support when one is given.
    fn entry(&mut self, k: usize, support: Option<&IndexSet>) -> SnElement<Q> {
        let mut a = SnElement::monomial(self.monomial(k, 1), self.nonzero_scalar());
        if let Some(p) = support {
            let items: Vec<usize> = p.iter().copied().collect();
            let c = *items.choose(&mut self.rng).expect("nonempty support");
            a = &SnElement::idempotent(k, &set(&[c])).expect("valid component") * &a;
        }
        a
    }

    /// `1 + a E_ij` over `S_{n-1}` with `i != j` in `0..3`; `a` lies in
    /// the ideal of the support when one is given.
    pub fn elementary_token(&mut self, n: usize, support: Option<&IndexSet>) -> GeneratorToken<Q> {
        let i = self.rng.gen_range(0..3);
        let j = (i + self.rng.gen_range(1..3)) % 3;
        GeneratorToken::elem(i, j, self.entry(n - 1, support))
    }

    pub fn elementary_word(&mut self, n: usize, support: Option<&IndexSet>, len: usize) -> GroupWord<Q> {
        GroupWord::new(n, (0..len).map(|_| self.elementary_token(n, support)).collect())
    }

    /// Theta, mu and `p`-elementary letters of the congruence group of the
    /// prime with the given support (a subset of `1..n-1`).
    pub fn congruence_word(&mut self, n: usize, support: &IndexSet, len: usize) -> TalliedWord {
        let items: Vec<usize> = support.iter().copied().collect();
        let mut word = GroupWord::empty(n);
        let mut n_ij = BTreeMap::new();
        let mut lambda_k: BTreeMap<usize, Q> = items.iter().map(|&k| (k, Q::from_i64(1))).collect();
        for &i in &items {
            for &j in items.iter().filter(|&&j| j < i) {
                n_ij.insert((i, j), 0);
            }
        }
        for _ in 0..len {
            let kind = self.rng.gen_range(0..3);
            if kind == 0 && items.len() >= 2 {
                let pick: Vec<usize> = items.choose_multiple(&mut self.rng, 2).copied().collect();
                let (a, b) = (pick[0], pick[1]);
                let e = self.rng.gen_range(-2..=2i64);
                word.push(GeneratorToken::theta(a, b, set(&[a, b, n]), e));
                let (key, sign) = if a > b { ((a, b), 1) } else { ((b, a), -1) };
                *n_ij.get_mut(&key).expect("pair of the support") += sign * e;
            } else if kind == 1 {
                let k = *items.choose(&mut self.rng).expect("nonempty support");
                let l = self.nonzero_scalar();
                word.push(GeneratorToken::mu(set(&[k, n]), l.clone()));
                let slot = lambda_k.get_mut(&k).expect("support element");
                *slot = slot.clone() * l;
            } else {
                word.push(self.elementary_token(n, Some(support)));
            }
        }
        TalliedWord { word, n_ij, lambda_k }
    }

    /// Theta, `mu_n` and elementary letters of `GL(S_{n-1})`; returns the
    /// word and the product of its `mu_n` scalars.
    pub fn full_word(&mut self, n: usize, len: usize) -> (GroupWord<Q>, Q) {
        let mut word = GroupWord::empty(n);
        let mut lambda = Q::from_i64(1);
        for _ in 0..len {
            match self.rng.gen_range(0..3) {
                0 if n >= 3 => {
                    let pick: Vec<usize> = (1..n).collect::<Vec<_>>().choose_multiple(&mut self.rng, 2).copied().collect();
                    let e = if self.rng.gen_bool(0.5) { 1 } else { -1 };
                    word.push(GeneratorToken::theta(pick[0], pick[1], set(&[pick[0], pick[1], n]), e));
                }
                1 => {
                    let l = self.nonzero_scalar();
                    lambda = lambda * l.clone();
                    word.push(GeneratorToken::mu(set(&[n]), l));
                }
                _ => word.push(self.elementary_token(n, None)),
            }
        }
        (word, lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_reproducible() {
        let a = Sampler::new(7).element(3, 4, 2);
        let b = Sampler::new(7).element(3, 4, 2);
        assert_eq!(a, b);
    }

    #[test]
    fn congruence_word_tallies() {
        let mut s = Sampler::new(1);
        let t = s.congruence_word(4, &set(&[1, 3]), 6);
        assert_eq!(t.n_ij.len(), 1);
        assert_eq!(t.lambda_k.len(), 2);
        assert!(t.word.eval_element().is_ok());
    }
}
