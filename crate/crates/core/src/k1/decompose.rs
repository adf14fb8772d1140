use std::collections::BTreeMap;

use super::det::{bdet, deg_nij, det_i};
use crate::algebra::{in_ideal, IdealSpec, SnElement};
use crate::error::{Error, Result};
use crate::group::{gen_mu, gen_theta_pow, CornerMatrix};
use crate::index::{set, IndexSet};
use crate::laurent::LaurentUnit;
use crate::scalar::Scalar;

/// The unique factorization
/// `a = prod theta_ij({i,j,n})^{n_ij} * prod mu_{{k,n}}(lambda_k) * residual`
/// of a congruence unit, with `residual` a product of `p`-elementary matrices.
#[derive(Clone, PartialEq, Debug)]
pub struct DecompositionReport<S> {
    pub n: usize,
    /// Keyed by `(i, j)`, `i > j`.
    pub n_ij: BTreeMap<(usize, usize), i64>,
    pub lambda_k: BTreeMap<usize, S>,
    pub residual: SnElement<S>,
    pub is_elementary: bool,
}

/// Pairs `i > j` of the support, ordered by `{i, j, n}` lexicographically.
fn support_pairs(support: &IndexSet) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = support
        .iter()
        .flat_map(|&i| support.iter().filter(move |&&j| j < i).map(move |&j| (i, j)))
        .collect();
    pairs.sort_by_key(|&(i, j)| (j, i));
    pairs
}

fn theta_product<S: Scalar>(n: usize, exps: &[((usize, usize), i64)]) -> Result<SnElement<S>> {
    let mut acc = SnElement::one(n);
    for &((i, j), k) in exps {
        if k != 0 {
            acc = &acc * &gen_theta_pow(n, i, j, &set(&[i, j, n]), k)?;
        }
    }
    Ok(acc)
}

fn scalar_of<S: Scalar>(u: LaurentUnit<S>, what: &str) -> Result<S> {
    if u.coeff.is_zero() {
        Err(Error::NotAUnit(format!("{what} = 0")))
    } else if u.is_scalar() {
        Ok(u.coeff)
    } else {
        Err(Error::StructuralAnomaly(format!("{what} = {u} is not a scalar")))
    }
}

fn check_congruence<S: Scalar>(a: &SnElement<S>, support: &IndexSet, n: usize) -> Result<()> {
    if a.n() != n {
        return Err(Error::DimensionMismatch { left: a.n(), right: n });
    }
    let spec = IdealSpec::PPn { support: support.clone(), n };
    spec.validate(n)?;
    if !in_ideal(&(a - &SnElement::one(n)), &spec)? {
        return Err(Error::NotInCongruenceIdeal);
    }
    Ok(())
}

impl<S: Scalar> DecompositionReport<S> {
    /// `prod theta^{n_ij} * prod mu(lambda_k) * residual`.
    pub fn recompose(&self) -> Result<SnElement<S>> {
        let mut order: Vec<_> = self.n_ij.iter().map(|(&p, &k)| (p, k)).collect();
        order.sort_by_key(|&((i, j), _)| (j, i));
        let mut acc = theta_product(self.n, &order)?;
        for (&k, l) in &self.lambda_k {
            acc = &acc * &gen_mu(self.n, &set(&[k, self.n]), l)?;
        }
        Ok(&acc * &self.residual)
    }
}

/// Splits a unit `a` with `a - 1` in `p p_n` into its theta, mu and
/// elementary parts. `n` is the distinguished (ambient) index; the caller
/// asserts that `a` is invertible.
pub fn decompose<S: Scalar>(a: &SnElement<S>, support: &IndexSet, n: usize) -> Result<DecompositionReport<S>> {
    check_congruence(a, support, n)?;
    let pairs = support_pairs(support);
    let mut exps = Vec::with_capacity(pairs.len());
    for &(i, j) in &pairs {
        exps.push(((i, j), deg_nij(a, &set(&[i, n]), j)?));
    }
    let inverse_thetas: Vec<_> = exps.iter().rev().map(|&(p, k)| (p, -k)).collect();
    let theta_inv = theta_product(n, &inverse_thetas)?;
    let stripped = a * &theta_inv;
    let mut lambda_k = BTreeMap::new();
    let mut mu_inv = SnElement::one(n);
    for &k in support {
        let l = scalar_of(det_i(&stripped, &set(&[k, n]))?, &format!("det_{{{k},{n}}}"))?;
        mu_inv = &mu_inv * &gen_mu(n, &set(&[k, n]), &l.inverse().expect("nonzero"))?;
        lambda_k.insert(k, l);
    }
    let residual = &(&mu_inv * &theta_inv) * a;
    let is_elementary = exps.iter().all(|&(_, k)| k == 0) && lambda_k.values().all(|l| l.is_one());
    Ok(DecompositionReport { n, n_ij: exps.into_iter().collect(), lambda_k, residual, is_elementary })
}

/// Whether `a` is a product of `p`-elementary matrices: every
/// `deg_{n,{i,n},j}(a)` vanishes and every `det_{{k,n}}(a)` equals 1.
pub fn is_elementary_product<S: Scalar>(a: &SnElement<S>, support: &IndexSet, n: usize) -> Result<bool> {
    check_congruence(a, support, n)?;
    for (i, j) in support_pairs(support) {
        if deg_nij(a, &set(&[i, n]), j)? != 0 {
            return Ok(false);
        }
    }
    for &k in support {
        let d = det_i(a, &set(&[k, n]))?;
        if !(d.is_scalar() && d.coeff.is_one()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `a = mu_n(lambda) e` with `lambda = det(a bar)` and `e` elementary.
pub fn decompose_full_gl<S: Scalar>(a: &CornerMatrix<S>) -> Result<(S, CornerMatrix<S>)> {
    let lambda = scalar_of(bdet(a)?, "det(a bar)")?;
    let k = a.entry_n();
    let scale = CornerMatrix::diag(a.n(), &[SnElement::scalar(k, lambda.inverse().expect("nonzero"))])?;
    Ok((lambda, scale.mat_mul(a)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{gen_theta, GeneratorToken, GroupWord};
    use crate::scalar::Q;
    use num_traits::One;

    type E = SnElement<Q>;

    #[test]
    fn trivial_input() {
        let r = decompose(&E::one(3), &set(&[1, 2]), 3).unwrap();
        assert!(r.is_elementary);
        assert!(r.residual.is_one());
        assert!(r.n_ij.values().all(|&k| k == 0));
        assert!(r.lambda_k.values().all(|l| l.is_one()));
    }

    #[test]
    fn theta_mu_elementary_word() {
        let n = 3;
        let e1 = E::idempotent(2, &set(&[1])).unwrap();
        let w = GroupWord::new(
            n,
            vec![
                GeneratorToken::theta(2, 1, set(&[1, 2, 3]), 3),
                GeneratorToken::mu(set(&[1, 3]), Q::from_i64(5)),
                GeneratorToken::elem(0, 1, e1),
            ],
        );
        let a = w.eval_element().unwrap();
        let r = decompose(&a, &set(&[1, 2]), n).unwrap();
        assert_eq!(r.n_ij[&(2, 1)], 3);
        assert_eq!(r.lambda_k[&1], Q::from_i64(5));
        assert_eq!(r.lambda_k[&2], Q::from_i64(1));
        assert!(!r.is_elementary);
        assert_eq!(r.recompose().unwrap(), a);
        assert!(!is_elementary_product(&a, &set(&[1, 2]), n).unwrap());
    }

    #[test]
    fn theta_times_inverse_is_trivial() {
        let s = set(&[1, 2, 3]);
        let a = &gen_theta::<Q>(3, 1, 2, &s).unwrap() * &gen_theta::<Q>(3, 2, 1, &s).unwrap();
        let r = decompose(&a, &set(&[1, 2]), 3).unwrap();
        assert!(r.is_elementary && r.residual.is_one());
    }

    #[test]
    fn non_congruence_input_is_rejected() {
        let a = gen_mu(3, &set(&[1]), &Q::from_i64(2)).unwrap();
        assert_eq!(decompose(&a, &set(&[1]), 3), Err(Error::NotInCongruenceIdeal));
    }

    #[test]
    fn full_gl_split() {
        let x1 = E::x(2, 1).unwrap();
        let unip = CornerMatrix::elementary(3, 0, 1, x1).unwrap();
        let mu = CornerMatrix::diag(3, &[E::scalar(2, Q::from_i64(7))]).unwrap();
        let (l, e) = decompose_full_gl(&mu.mat_mul(&unip).unwrap()).unwrap();
        assert_eq!(l, Q::from_i64(7));
        assert_eq!(e, unip);
        let (l, e) = decompose_full_gl(&CornerMatrix::<Q>::identity(3)).unwrap();
        assert!(l.is_one() && e.is_identity());
        let theta = CornerMatrix::<Q>::diag(3, &[gen_theta(2, 1, 2, &set(&[1, 2])).unwrap()]).unwrap();
        let (l, e) = decompose_full_gl(&theta).unwrap();
        assert!(l.is_one());
        assert_eq!(e, theta);
    }
}
