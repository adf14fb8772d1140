use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::index::IndexSet;
use crate::scalar::Scalar;

/// A Laurent polynomial over the variables `x_j`, `j` in `vars`.
///
/// Exponent vectors are aligned with `vars` in increasing order. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentElement<S> {
    vars: IndexSet,
    terms: BTreeMap<Vec<i64>, S>,
}

impl<S: Scalar> LaurentElement<S> {
    pub fn zero(vars: &IndexSet) -> Self {
        LaurentElement { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &IndexSet) -> Self {
        Self::scalar(vars, S::one())
    }

    pub fn scalar(vars: &IndexSet, c: S) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn monomial(vars: &IndexSet, expo: Vec<i64>, c: S) -> Self {
        assert_eq!(expo.len(), vars.len(), "exponent vector has wrong length");
        let mut out = Self::zero(vars);
        out.add_term(expo, c);
        out
    }

    /// `x_j^k`.
    pub fn var_pow(vars: &IndexSet, j: usize, k: i64) -> Result<Self> {
        let pos = vars.iter().position(|&v| v == j).ok_or(Error::UnknownVariable(j))?;
        let mut expo = vec![0; vars.len()];
        expo[pos] = k;
        Ok(Self::monomial(vars, expo, S::one()))
    }

    pub fn vars(&self) -> &IndexSet {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, S> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&v| v == 0))
    }

    pub fn add_term(&mut self, expo: Vec<i64>, c: S) {
        debug_assert_eq!(expo.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&expo) {
            Some(v) => {
                let s = std::mem::replace(v, S::zero()) + c;
                if s.is_zero() {
                    self.terms.remove(&expo);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(expo, c);
            }
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "Laurent variable sets differ");
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    ///
    /// Each quotient exponent coordinate is confined to
    /// `[min(self) - min(d), max(self) - max(d)]`, which bounds the search.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        self.check_vars(d);
        if d.is_zero() {
            return None;
        }
        let k = self.vars.len();
        let mut q = Self::zero(&self.vars);
        if self.is_zero() {
            return Some(q);
        }
        let bounds = |p: &Self| -> Vec<(i64, i64)> {
            (0..k)
                .map(|i| {
                    let it = p.terms.keys().map(|e| e[i]);
                    (it.clone().min().unwrap_or(0), it.max().unwrap_or(0))
                })
                .collect()
        };
        let (ba, bd) = (bounds(self), bounds(d));
        let (lead_d, lead_dc) = d.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut r = self.clone();
        while let Some((er, cr)) = r.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let eq: Vec<i64> = er.iter().zip(&lead_d).map(|(a, b)| a - b).collect();
            let inside = (0..k).all(|i| eq[i] >= ba[i].0 - bd[i].0 && eq[i] <= ba[i].1 - bd[i].1);
            if !inside {
                return None;
            }
            let cq = cr / lead_dc.clone();
            let t = Self::monomial(&self.vars, eq.clone(), cq.clone());
            r = &r - &(&t * d);
            q.add_term(eq, cq);
        }
        Some(q)
    }
}

impl<S: Scalar> Add for &LaurentElement<S> {
    type Output = LaurentElement<S>;
    fn add(self, rhs: Self) -> LaurentElement<S> {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &LaurentElement<S> {
    type Output = LaurentElement<S>;
    fn sub(self, rhs: Self) -> LaurentElement<S> {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<S: Scalar> Mul for &LaurentElement<S> {
    type Output = LaurentElement<S>;
    fn mul(self, rhs: Self) -> LaurentElement<S> {
        self.check_vars(rhs);
        let mut out = LaurentElement::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &LaurentElement<S> {
    type Output = LaurentElement<S>;
    fn neg(self) -> LaurentElement<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> fmt::Display for LaurentElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = monomial_text(&self.vars, e);
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

fn monomial_text(vars: &IndexSet, expo: &[i64]) -> String {
    vars.iter()
        .zip(expo)
        .filter(|(_, &e)| e != 0)
        .map(|(j, &e)| if e == 1 { format!("x{j}") } else { format!("x{j}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// A unit `coeff * x^expo` of a Laurent ring.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentUnit<S> {
    pub coeff: S,
    pub vars: IndexSet,
    pub expo: Vec<i64>,
}

impl<S: Scalar> LaurentUnit<S> {
    pub fn is_scalar(&self) -> bool {
        self.expo.iter().all(|&e| e == 0)
    }

    pub fn to_element(&self) -> LaurentElement<S> {
        LaurentElement::monomial(&self.vars, self.expo.clone(), self.coeff.clone())
    }
}

impl<S: Scalar> fmt::Display for LaurentUnit<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_element())
    }
}

/// Recognises `a` as `lambda x^gamma`; the units of a Laurent ring over a
/// field are exactly its nonzero monomials.
pub fn as_unit_monomial<S: Scalar>(a: &LaurentElement<S>) -> Result<LaurentUnit<S>> {
    if a.terms.len() != 1 {
        return Err(Error::NotAUnit(a.to_string()));
    }
    let (e, c) = a.terms.iter().next().expect("one term");
    Ok(LaurentUnit { coeff: c.clone(), vars: a.vars.clone(), expo: e.clone() })
}

/// The exponent of `x_j` in `u`.
pub fn deg_xj<S: Scalar>(u: &LaurentUnit<S>, j: usize) -> Result<i64> {
    u.vars
        .iter()
        .position(|&v| v == j)
        .map(|p| u.expo[p])
        .ok_or(Error::UnknownVariable(j))
}
