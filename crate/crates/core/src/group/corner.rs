use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{in_ideal, to_split, IdealSpec, SnElement, SplitElement, SplitFactor, SplitKey};
use crate::algebra::from_split;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An `N x N` matrix over `S_{n-1}` equal to the identity outside finitely
/// many stored entries. Entries are 0-indexed.
///
/// Such matrices are the units `1 + p_n` of `S_n`: the entry `a` at
/// `(p, q)` corresponds to `a E_pq(n)`.
#[derive(Clone, PartialEq, Debug)]
pub struct CornerMatrix<S> {
    n: usize,
    entries: BTreeMap<(usize, usize), SnElement<S>>,
}

impl<S: Scalar> CornerMatrix<S> {
    /// The identity; `n >= 1` is the ambient count, entries live in `S_{n-1}`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "corner matrices need n >= 1");
        CornerMatrix { n, entries: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Ambient count of the entry ring.
    pub fn entry_n(&self) -> usize {
        self.n - 1
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), SnElement<S>> {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sets the full entry at `(row, col)`.
    pub fn set(&mut self, row: usize, col: usize, value: SnElement<S>) -> Result<()> {
        if value.n() != self.entry_n() {
            return Err(Error::DimensionMismatch { left: self.entry_n(), right: value.n() });
        }
        let is_default = if row == col { value.is_one() } else { value.is_zero() };
        if is_default {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
        Ok(())
    }

    pub fn with(mut self, row: usize, col: usize, value: SnElement<S>) -> Result<Self> {
        self.set(row, col, value)?;
        Ok(self)
    }

    pub fn get(&self, row: usize, col: usize) -> SnElement<S> {
        match self.entries.get(&(row, col)) {
            Some(v) => v.clone(),
            None if row == col => SnElement::one(self.entry_n()),
            None => SnElement::zero(self.entry_n()),
        }
    }

    /// One past the largest row or column index of a stored entry.
    pub fn extent(&self) -> usize {
        self.entries.keys().map(|&(r, c)| r.max(c) + 1).max().unwrap_or(0)
    }

    /// The elementary matrix `1 + a E_ij`, `i != j`.
    pub fn elementary(n: usize, i: usize, j: usize, a: SnElement<S>) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidArgument("elementary matrices need i != j".into()));
        }
        Self::identity(n).with(i, j, a)
    }

    /// The diagonal matrix with the given leading entries.
    pub fn diag(n: usize, diagonal: &[SnElement<S>]) -> Result<Self> {
        let mut m = Self::identity(n);
        for (k, v) in diagonal.iter().enumerate() {
            m.set(k, k, v.clone())?;
        }
        Ok(m)
    }

    /// A `2 x 2` block `[[a, b], [c, d]]` at rows `(0, 1)`.
    pub fn block2(n: usize, a: SnElement<S>, b: SnElement<S>, c: SnElement<S>, d: SnElement<S>) -> Result<Self> {
        Self::identity(n).with(0, 0, a)?.with(0, 1, b)?.with(1, 0, c)?.with(1, 1, d)
    }

    /// Exact product over `S_{n-1}`.
    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let size = self.extent().max(other.extent());
        let mut out = Self::identity(self.n);
        for r in 0..size {
            for c in 0..size {
                let mut acc = SnElement::zero(self.entry_n());
                for k in 0..size {
                    let a = self.entries.get(&(r, k));
                    let b = other.entries.get(&(k, c));
                    let term = match (a, b) {
                        (None, None) if r == k && k == c => SnElement::one(self.entry_n()),
                        (None, None) => continue,
                        (Some(a), None) if k == c => a.clone(),
                        (None, Some(b)) if r == k => b.clone(),
                        (Some(a), Some(b)) => a * b,
                        _ => continue,
                    };
                    acc = &acc + &term;
                }
                out.set(r, c, acc)?;
            }
        }
        Ok(out)
    }

    /// Applies `f` to every entry of the finite corner, keeping the identity
    /// pattern outside it. `f` must be the restriction of a unital ring map.
    pub fn map_entries(&self, f: impl Fn(&SnElement<S>) -> SnElement<S>) -> Result<Self> {
        let mut out = Self::identity(self.n);
        for (&(r, c), v) in &self.entries {
            out.set(r, c, f(v))?;
        }
        Ok(out)
    }

    /// The element `1 + sum (a_pq - delta_pq) E_pq(n)` of `S_n`.
    pub fn as_element(&self) -> SnElement<S> {
        let mut out = SnElement::one(self.n);
        for (&(r, c), v) in &self.entries {
            let shifted = if r == c { v - &SnElement::one(self.entry_n()) } else { v.clone() };
            out = &out + &shifted.tensor_unit(r as u32, c as u32);
        }
        out
    }
}

/// Reads a unit of `1 + p_n` as a corner matrix over `S_{n-1}`.
pub fn as_matrix<S: Scalar>(u: &SnElement<S>) -> Result<CornerMatrix<S>> {
    let n = u.n();
    if n == 0 {
        return Err(Error::InvalidArgument("S_0 has no matrix form".into()));
    }
    let d = u - &SnElement::one(n);
    if !in_ideal(&d, &IdealSpec::HeightOne(n))? {
        return Err(Error::NotInCongruenceForm { component: n });
    }
    let mut blocks: BTreeMap<(usize, usize), SplitElement<S>> = BTreeMap::new();
    for (key, c) in to_split(&d).iter() {
        let SplitFactor::Unit(p, q) = key[n - 1] else {
            unreachable!("membership in p_n was checked")
        };
        blocks
            .entry((p as usize, q as usize))
            .or_insert_with(|| SplitElement::zero(n - 1))
            .add_term(SplitKey::from_slice(&key[..n - 1]), c.clone());
    }
    let mut m = CornerMatrix::identity(n);
    for ((r, c), s) in blocks {
        let mut v = from_split(&s);
        if r == c {
            v = &v + &SnElement::one(n - 1);
        }
        m.set(r, c, v)?;
    }
    Ok(m)
}

impl<S: Scalar> fmt::Display for CornerMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "identity");
        }
        let parts: Vec<String> =
            self.entries.iter().map(|((r, c), v)| format!("({r},{c}): {v}")).collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generators::{gen_mu, gen_theta};
    use crate::index::set;
    use crate::scalar::Q;

    type E = SnElement<Q>;
    type M = CornerMatrix<Q>;

    #[test]
    fn mu_matrix_forms() {
        let n = 3;
        let lam = Q::from_i64(5);
        let m = as_matrix(&gen_mu(n, &set(&[3]), &lam).unwrap()).unwrap();
        assert_eq!(m, M::diag(n, &[E::scalar(2, lam.clone())]).unwrap());
        let m = as_matrix(&gen_mu(n, &set(&[1, 3]), &lam).unwrap()).unwrap();
        let e1 = E::idempotent(2, &set(&[1])).unwrap();
        let expected = &E::one(2) + &e1.scale(&Q::from_i64(4));
        assert_eq!(m, M::diag(n, &[expected]).unwrap());
    }

    #[test]
    fn theta_matrix_form_and_round_trip() {
        let t = gen_theta::<Q>(3, 1, 2, &set(&[1, 2, 3])).unwrap();
        let m = as_matrix(&t).unwrap();
        let inner = gen_theta::<Q>(2, 1, 2, &set(&[1, 2])).unwrap();
        assert_eq!(m, M::diag(3, &[inner]).unwrap());
        assert_eq!(m.as_element(), t);
    }

    #[test]
    fn lemma_inverse_pair() {
        let n = 2;
        let x = E::x(1, 1).unwrap();
        let y = E::y(1, 1).unwrap();
        let e = E::idempotent(1, &set(&[1])).unwrap();
        let a = M::block2(n, y.clone(), E::zero(1), e.clone(), x.clone()).unwrap();
        let b = M::block2(n, x, e, E::zero(1), y).unwrap();
        assert!(a.mat_mul(&b).unwrap().is_identity());
        assert!(b.mat_mul(&a).unwrap().is_identity());
        assert_eq!(as_matrix(&a.as_element()).unwrap(), a);
    }

    #[test]
    fn non_congruence_input_is_rejected() {
        let x = E::x(2, 2).unwrap();
        assert_eq!(as_matrix(&x), Err(Error::NotInCongruenceForm { component: 2 }));
    }

    #[test]
    fn as_element_is_multiplicative() {
        let n = 3;
        let a = M::elementary(n, 0, 1, E::x(2, 1).unwrap()).unwrap();
        let b = M::elementary(n, 1, 0, E::y(2, 2).unwrap()).unwrap();
        let ab = a.mat_mul(&b).unwrap();
        assert_eq!(ab.as_element(), &a.as_element() * &b.as_element());
    }
}
