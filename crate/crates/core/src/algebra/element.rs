use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use super::monomial::{Exps, SnMonomial};
use crate::error::{Error, Result};
use crate::index::{check_component, check_set, IndexSet};
use crate::scalar::Scalar;

/// A finite linear combination of normal-form monomials `x^alpha y^beta`
/// of `S_n = S_1(1) (x) ... (x) S_1(n)`.
///
/// Zero coefficients are never stored; the zero element is the empty map.
#[derive(Clone, PartialEq, Debug)]
pub struct SnElement<S> {
    n: usize,
    terms: BTreeMap<SnMonomial, S>,
}

impl<S: Scalar> SnElement<S> {
    pub fn zero(n: usize) -> Self {
        SnElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, S::one())
    }

    pub fn scalar(n: usize, c: S) -> Self {
        Self::monomial(SnMonomial::one(n), c)
    }

    pub fn monomial(m: SnMonomial, c: S) -> Self {
        let n = m.n();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SnElement { n, terms }
    }

    /// Sums the given terms, merging repeated monomials and pruning zeros.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (SnMonomial, S)>) -> Self {
        let mut out = Self::zero(n);
        for (m, c) in terms {
            assert_eq!(m.n(), n, "monomial has wrong number of components");
            out.add_term(m, c);
        }
        out
    }

    fn generator(n: usize, i: usize, is_y: bool) -> Result<Self> {
        check_component(i, n)?;
        let mut exps = Exps::from_elem(0, 2 * n);
        exps[if is_y { n + i - 1 } else { i - 1 }] = 1;
        Ok(Self::monomial(SnMonomial::from_exps(exps), S::one()))
    }

    /// The generator `x_i` (1-based component).
    pub fn x(n: usize, i: usize) -> Result<Self> {
        Self::generator(n, i, false)
    }

    /// The generator `y_i` (1-based component).
    pub fn y(n: usize, i: usize) -> Result<Self> {
        Self::generator(n, i, true)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<SnMonomial, S> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SnMonomial, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_scalar().is_some_and(|c| c.is_one())
    }

    /// The scalar value if the element lies in `K`.
    pub fn as_scalar(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn coeff(&self, m: &SnMonomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub(crate) fn add_term(&mut self, m: SnMonomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = std::mem::replace(v, S::zero()) + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        SnElement {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c.clone())).collect(),
        }
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: self.n, right: other.n })
        }
    }

    /// Exact product in normal form.
    pub fn nf_mul(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = Self::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    /// `lambda * a + mu * b`.
    pub fn ring_linear(a: &Self, b: &Self, lambda: &S, mu: &S) -> Result<Self> {
        a.check_dims(b)?;
        let mut out = a.scale(lambda);
        for (m, c) in &b.terms {
            out.add_term(m.clone(), c.clone() * mu.clone());
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The matrix unit `E_{alpha beta}(I) = prod_{i in I} (x_i^a y_i^b - x_i^(a+1) y_i^(b+1))`.
    ///
    /// `alpha[k]`, `beta[k]` belong to the k-th smallest element of `set`.
    pub fn matrix_unit(n: usize, set: &IndexSet, alpha: &[u32], beta: &[u32]) -> Result<Self> {
        if set.is_empty() {
            return Err(Error::InvalidIndexSet("matrix unit needs a nonempty index set".into()));
        }
        check_set(set, n)?;
        if alpha.len() != set.len() || beta.len() != set.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} exponents per side, got {} and {}",
                set.len(),
                alpha.len(),
                beta.len()
            )));
        }
        let mut acc = Self::one(n);
        for (k, &i) in set.iter().enumerate() {
            let mut lo = Exps::from_elem(0, 2 * n);
            lo[i - 1] = alpha[k];
            lo[n + i - 1] = beta[k];
            let mut hi = lo.clone();
            hi[i - 1] += 1;
            hi[n + i - 1] += 1;
            let factor = Self::from_terms(
                n,
                [(SnMonomial::from_exps(lo), S::one()), (SnMonomial::from_exps(hi), -S::one())],
            );
            acc = &acc * &factor;
        }
        Ok(acc)
    }

    /// The idempotent `e_I = E_{00}(I)`; `e_{{}} = 1`.
    pub fn idempotent(n: usize, set: &IndexSet) -> Result<Self> {
        if set.is_empty() {
            return Ok(Self::one(n));
        }
        let zeros = vec![0; set.len()];
        Self::matrix_unit(n, set, &zeros, &zeros)
    }

    /// Components (1-based) on which some term has a nonzero exponent.
    pub fn support_components(&self) -> IndexSet {
        let mut out = IndexSet::new();
        for m in self.terms.keys() {
            for c in 0..self.n {
                if m.component(c) != (0, 0) {
                    out.insert(c + 1);
                }
            }
        }
        out
    }

    /// Views the element inside `S_{new_n}` by appending trivial components.
    pub fn embed(&self, new_n: usize) -> Self {
        assert!(new_n >= self.n, "cannot embed S_{} into S_{new_n}", self.n);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = Exps::from_elem(0, 2 * new_n);
            exps[..self.n].copy_from_slice(m.alpha());
            exps[new_n..new_n + self.n].copy_from_slice(m.beta());
            (SnMonomial::from_exps(exps), c.clone())
        });
        SnElement { n: new_n, terms: terms.collect() }
    }

    /// Drops trailing components, which must be trivial on every term.
    pub fn restrict(&self, new_n: usize) -> Result<Self> {
        assert!(new_n <= self.n);
        let mut out = Self::zero(new_n);
        for (m, c) in &self.terms {
            if let Some(c_bad) = (new_n..self.n).find(|&k| m.component(k) != (0, 0)) {
                return Err(Error::NonScalarComponent { component: c_bad + 1 });
            }
            out.terms.insert(SnMonomial::new(&m.alpha()[..new_n], &m.beta()[..new_n]), c.clone());
        }
        Ok(out)
    }

    /// `self (x) E_{pq}` as an element of `S_{n+1}`, the new component last.
    pub fn tensor_unit(&self, p: u32, q: u32) -> Self {
        let n1 = self.n + 1;
        let mut out = Self::zero(n1);
        for (m, c) in &self.terms {
            for (shift, sign) in [(0u32, S::one()), (1, -S::one())] {
                let mut exps = Exps::from_elem(0, 2 * n1);
                exps[..self.n].copy_from_slice(m.alpha());
                exps[n1..n1 + self.n].copy_from_slice(m.beta());
                exps[self.n] = p + shift;
                exps[n1 + self.n] = q + shift;
                out.add_term(SnMonomial::from_exps(exps), c.clone() * sign);
            }
        }
        out
    }

    /// Applies the tensor-factor permutation sending component `c` to `perm[c-1]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n;
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::InvalidArgument(format!("permutation of length {} on S_{n}", perm.len())));
        }
        for &p in perm {
            check_component(p, n)?;
            if std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = Exps::from_elem(0, 2 * n);
            for k in 0..n {
                let (a, b) = m.component(k);
                exps[perm[k] - 1] = a;
                exps[n + perm[k] - 1] = b;
            }
            (SnMonomial::from_exps(exps), c.clone())
        });
        Ok(SnElement { n, terms: terms.collect() })
    }
}

impl<S: Scalar> fmt::Display for SnElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

// Operator forms panic on dimension mismatch; the checked forms are
// `nf_mul` and `ring_linear`.

impl<S: Scalar> Add for &SnElement<S> {
    type Output = SnElement<S>;
    fn add(self, rhs: Self) -> SnElement<S> {
        SnElement::ring_linear(self, rhs, &S::one(), &S::one()).expect("dimension mismatch in +")
    }
}

impl<S: Scalar> Sub for &SnElement<S> {
    type Output = SnElement<S>;
    fn sub(self, rhs: Self) -> SnElement<S> {
        SnElement::ring_linear(self, rhs, &S::one(), &-S::one()).expect("dimension mismatch in -")
    }
}

impl<S: Scalar> Mul for &SnElement<S> {
    type Output = SnElement<S>;
    fn mul(self, rhs: Self) -> SnElement<S> {
        self.nf_mul(rhs).expect("dimension mismatch in *")
    }
}

impl<S: Scalar> Neg for &SnElement<S> {
    type Output = SnElement<S>;
    fn neg(self) -> SnElement<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Add for SnElement<S> {
    type Output = SnElement<S>;
    fn add(self, rhs: Self) -> SnElement<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for SnElement<S> {
    type Output = SnElement<S>;
    fn sub(self, rhs: Self) -> SnElement<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for SnElement<S> {
    type Output = SnElement<S>;
    fn mul(self, rhs: Self) -> SnElement<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Neg for SnElement<S> {
    type Output = SnElement<S>;
    fn neg(self) -> SnElement<S> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::set;
    use crate::scalar::Q;

    type E = SnElement<Q>;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    #[test]
    fn defining_relation() {
        let y1 = E::y(1, 1).unwrap();
        let x1 = E::x(1, 1).unwrap();
        assert_eq!(&y1 * &x1, E::one(1));
        assert_ne!(&x1 * &y1, E::one(1));
    }

    #[test]
    fn matrix_units_multiply_by_kronecker_rule() {
        let s = set(&[1]);
        let e01 = E::matrix_unit(1, &s, &[0], &[1]).unwrap();
        let e12 = E::matrix_unit(1, &s, &[1], &[2]).unwrap();
        let e02 = E::matrix_unit(1, &s, &[0], &[2]).unwrap();
        assert_eq!(&e01 * &e12, e02);
        assert!((&e12 * &e01).is_zero());
    }

    #[test]
    fn matrix_unit_examples() {
        let s = set(&[1]);
        let x = E::x(1, 1).unwrap();
        let y = E::y(1, 1).unwrap();
        assert_eq!(E::matrix_unit(1, &s, &[0], &[0]).unwrap(), &E::one(1) - &(&x * &y));
        let x2y = &(&x * &x) * &y;
        assert_eq!(E::matrix_unit(1, &s, &[1], &[0]).unwrap(), &x - &x2y);
        let e = E::idempotent(2, &set(&[1, 2])).unwrap();
        assert_eq!(e.len(), 4);
        assert_eq!(&e * &e, e);
    }

    #[test]
    fn ring_linear_examples() {
        let x = E::x(1, 1).unwrap();
        let y = E::y(1, 1).unwrap();
        let a = &x + &y;
        assert_eq!(E::ring_linear(&a, &x, &q(1), &q(0)).unwrap(), a);
        assert!(E::ring_linear(&a, &a, &q(1), &q(-1)).unwrap().is_zero());
        let e00 = E::idempotent(1, &set(&[1])).unwrap();
        assert_eq!(&(&x * &y) + &e00, E::one(1));
        assert!(E::ring_linear(&a, &E::one(2), &q(1), &q(1)).is_err());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert_eq!(
            E::one(1).nf_mul(&E::one(2)),
            Err(Error::DimensionMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn display_is_lexicographic() {
        let x1 = E::x(2, 1).unwrap();
        let y1 = E::y(2, 1).unwrap();
        let a = &(&E::one(2) - &(&x1 * &y1)) + &x1.scale(&Q::ratio(3, 2));
        assert_eq!(a.to_string(), "1 + 3/2*x1 - x1*y1");
        assert_eq!(E::zero(2).to_string(), "0");
        assert_eq!((-&x1).to_string(), "-x1");
    }

    #[test]
    fn tensor_unit_and_permute() {
        let x1 = E::x(1, 1).unwrap();
        let t = x1.tensor_unit(0, 1);
        let expected = &E::x(2, 1).unwrap() * &E::matrix_unit(2, &set(&[2]), &[0], &[1]).unwrap();
        assert_eq!(t, expected);
        let sw = t.permute(&[2, 1]).unwrap();
        let expected = &E::x(2, 2).unwrap() * &E::matrix_unit(2, &set(&[1]), &[0], &[1]).unwrap();
        assert_eq!(sw, expected);
        assert!(t.permute(&[1, 1]).is_err());
    }

    #[test]
    fn embed_and_restrict_round_trip() {
        let a = &E::x(2, 1).unwrap() + &E::y(2, 2).unwrap();
        let b = a.embed(4);
        assert_eq!(b.n(), 4);
        assert_eq!(b.restrict(2).unwrap(), a);
        assert!(E::x(3, 3).unwrap().restrict(2).is_err());
    }
}
