use std::collections::BTreeMap;


use super::element::SnElement;
use crate::scalar::Scalar;

/// A commutative polynomial in `x_1..x_n`, the module on which `S_n` acts.
#[derive(Clone, PartialEq, Debug)]
pub struct PnPolynomial<S> {
    n: usize,
    terms: BTreeMap<Vec<u32>, S>,
}

impl<S: Scalar> PnPolynomial<S> {
    pub fn zero(n: usize) -> Self {
        PnPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn monomial(exps: Vec<u32>, c: S) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, S> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: S) {
        assert_eq!(exps.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                let s = std::mem::replace(v, S::zero()) + c;
                if s.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }
}

/// The action on `K[x_1..x_n]`: `x_i` multiplies by `x_i`; `y_i` lowers the
/// `x_i`-degree by one and kills monomials of `x_i`-degree zero.
///
/// Each term `x^alpha y^beta` is applied as `y^beta` first, then `x^alpha`.
pub fn act_on_polynomial<S: Scalar>(a: &SnElement<S>, p: &PnPolynomial<S>) -> PnPolynomial<S> {
    assert_eq!(a.n(), p.n(), "dimension mismatch in action");
    let n = p.n();
    let mut out = PnPolynomial::zero(n);
    for (m, c) in a.iter() {
        'poly: for (g, d) in p.terms() {
            let mut exps = g.clone();
            for k in 0..n {
                let (al, be) = m.component(k);
                if exps[k] < be {
                    continue 'poly;
                }
                exps[k] = exps[k] - be + al;
            }
            out.add_term(exps, c.clone() * d.clone());
        }
    }
    out
}

/// All exponent vectors in `n` variables of total degree at most `d`.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[k] = e;
            go(k + 1, left - e, cur, out);
        }
        cur[k] = 0;
    }
    let mut out = Vec::new();
    go(0, d, &mut vec![0; n], &mut out);
    out
}

/// Whether `(ab) * m = a * (b * m)` for every monomial `m` of degree `<= d`.
pub fn oracle_compare<S: Scalar>(a: &SnElement<S>, b: &SnElement<S>, d: u32) -> bool {
    let Ok(ab) = a.nf_mul(b) else {
        return false;
    };
    monomials_up_to(a.n(), d).into_iter().all(|g| {
        let m = PnPolynomial::monomial(g, S::one());
        act_on_polynomial(&ab, &m) == act_on_polynomial(a, &act_on_polynomial(b, &m))
    })
}

/// Whether `a` and `b` act identically on every monomial of degree `<= d`.
pub fn oracle_equal<S: Scalar>(a: &SnElement<S>, b: &SnElement<S>, d: u32) -> bool {
    a.n() == b.n()
        && monomials_up_to(a.n(), d).into_iter().all(|g| {
            let m = PnPolynomial::monomial(g, S::one());
            act_on_polynomial(a, &m) == act_on_polynomial(b, &m)
        })
}
