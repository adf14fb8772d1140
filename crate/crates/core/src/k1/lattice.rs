use std::collections::BTreeMap;
use std::fmt;

use super::det::det_i;
use crate::algebra::{ideal_level, SnElement};
use crate::error::{Error, Result};
use crate::index::{complement, subsets_of_size, with, IndexSet};
use crate::laurent::deg_xj;
use crate::scalar::Scalar;

/// A finitely supported integer combination of basis vectors `(j, I)`,
/// `j` outside `I`. Zero coordinates are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LatticeVector {
    coords: BTreeMap<(usize, IndexSet), i64>,
}

impl LatticeVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `(j, I)` scaled by `k`.
    pub fn basis(j: usize, set: IndexSet, k: i64) -> Self {
        let mut v = Self::zero();
        v.add(j, set, k);
        v
    }

    pub fn coords(&self) -> &BTreeMap<(usize, IndexSet), i64> {
        &self.coords
    }

    pub fn get(&self, j: usize, set: &IndexSet) -> i64 {
        self.coords.get(&(j, set.clone())).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add(&mut self, j: usize, set: IndexSet, k: i64) {
        let slot = self.coords.entry((j, set)).or_insert(0);
        *slot += k;
        if *slot == 0 {
            self.coords.retain(|_, v| *v != 0);
        }
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((j, s), k) in &other.coords {
            out.add(*j, s.clone(), *k);
        }
        out
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|((j, s), k)| {
                let set: Vec<String> = s.iter().map(|i| i.to_string()).collect();
                format!("{k}*({j},{{{}}})", set.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `psi'_{n,s}(u)`: all degrees `deg_{n,I,j}(u)` with `|I| = s`.
pub fn psi_prime<S: Scalar>(u: &SnElement<S>, s: usize) -> Result<LatticeVector> {
    let n = u.n();
    if s == 0 || s >= n {
        return Err(Error::InvalidArgument(format!("level {s} outside 1..{n}")));
    }
    let level = ideal_level(&(u - &SnElement::one(n)));
    if level < s {
        return Err(Error::NotInLevel { required: s, actual: level });
    }
    let mut v = LatticeVector::zero();
    for set in subsets_of_size(n, s) {
        let d = det_i(u, &set)?;
        for j in complement(&set, n) {
            v.add(j, set.clone(), deg_xj(&d, j)?);
        }
    }
    Ok(v)
}

/// `chi'_J(v)`: the sum of the coordinates `(j, I)` with `{j} + I = J`.
pub fn chi_j(v: &LatticeVector, set: &IndexSet) -> i64 {
    v.coords
        .iter()
        .filter(|((j, s), _)| with(s, *j) == *set)
        .map(|(_, k)| *k)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::gen_theta;
    use crate::index::{set, without};
    use crate::scalar::Q;

    #[test]
    fn psi_prime_of_theta() {
        let n = 4;
        let j_set = set(&[1, 3, 4]);
        for (i, j) in [(1, 3), (3, 1), (4, 1), (3, 4)] {
            let theta = gen_theta::<Q>(n, i, j, &j_set).unwrap();
            let v = psi_prime(&theta, 2).unwrap();
            let expected = LatticeVector::basis(i, without(&j_set, &[i]), -1)
                .sum(&LatticeVector::basis(j, without(&j_set, &[j]), 1));
            assert_eq!(v, expected, "theta_{i}{j}");
            for big in subsets_of_size(n, 3) {
                assert_eq!(chi_j(&v, &big), 0);
            }
        }
    }

    #[test]
    fn psi_prime_of_one_is_zero() {
        assert!(psi_prime(&SnElement::<Q>::one(3), 2).unwrap().is_zero());
    }

    #[test]
    fn lattice_addition_cancels() {
        let a = LatticeVector::basis(1, set(&[2]), 3);
        let b = LatticeVector::basis(1, set(&[2]), -3);
        assert!(a.sum(&b).is_zero());
        assert_eq!(a.to_string(), "3*(1,{2})");
    }
}
