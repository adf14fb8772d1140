use std::fmt;

use super::corner::{as_matrix, CornerMatrix};
use super::generators::{gen_mu, gen_theta_pow};
use crate::algebra::SnElement;
use crate::error::{Error, Result};
use crate::index::{check_set, IndexSet};
use crate::scalar::Scalar;

/// An invertible generator of `GL_inf(S_{n-1}) = (1 + p_n)^*`.
#[derive(Clone, PartialEq, Debug)]
pub enum Generator<S> {
    /// `1 + a E_ij`, `i != j`, `a` in `S_{n-1}`.
    Elem { i: usize, j: usize, a: SnElement<S> },
    /// `mu_I(lambda)`, `n` in `I`.
    Mu { set: IndexSet, lambda: S },
    /// `theta_ij(J)`, `n` in `J`, `i != j` in `J \ n`.
    Theta { i: usize, j: usize, set: IndexSet },
}

/// A generator raised to an integer power.
#[derive(Clone, PartialEq, Debug)]
pub struct GeneratorToken<S> {
    pub gen: Generator<S>,
    pub exp: i64,
}

impl<S: Scalar> GeneratorToken<S> {
    pub fn elem(i: usize, j: usize, a: SnElement<S>) -> Self {
        GeneratorToken { gen: Generator::Elem { i, j, a }, exp: 1 }
    }

    pub fn mu(set: IndexSet, lambda: S) -> Self {
        GeneratorToken { gen: Generator::Mu { set, lambda }, exp: 1 }
    }

    pub fn theta(i: usize, j: usize, set: IndexSet, exp: i64) -> Self {
        GeneratorToken { gen: Generator::Theta { i, j, set }, exp }
    }

    pub fn is_elementary(&self) -> bool {
        matches!(self.gen, Generator::Elem { .. })
    }

    pub fn inverse(&self) -> Self {
        GeneratorToken { gen: self.gen.clone(), exp: -self.exp }
    }

    fn validate(&self, n: usize) -> Result<()> {
        match &self.gen {
            Generator::Elem { i, j, a } => {
                if i == j {
                    return Err(Error::InvalidArgument("elementary token needs i != j".into()));
                }
                if a.n() + 1 != n {
                    return Err(Error::DimensionMismatch { left: n - 1, right: a.n() });
                }
            }
            Generator::Mu { set, lambda } => {
                check_set(set, n)?;
                if !set.contains(&n) {
                    return Err(Error::InvalidIndexSet(format!("mu token set must contain {n}")));
                }
                if lambda.is_zero() {
                    return Err(Error::ZeroScalar);
                }
            }
            Generator::Theta { i, j, set } => {
                check_set(set, n)?;
                if !set.contains(&n) || *i == n || *j == n || i == j {
                    return Err(Error::InvalidIndexSet(format!(
                        "theta token needs {n} in the set and distinct indices below it"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The token as an element of `S_n`.
    pub fn eval_element(&self, n: usize) -> Result<SnElement<S>> {
        self.validate(n)?;
        match &self.gen {
            Generator::Elem { i, j, a } => {
                let k = S::from_i64(self.exp);
                Ok(&SnElement::one(n) + &a.scale(&k).tensor_unit(*i as u32, *j as u32))
            }
            Generator::Mu { set, lambda } => {
                let l = lambda.powi(self.exp).ok_or(Error::ZeroScalar)?;
                gen_mu(n, set, &l)
            }
            Generator::Theta { i, j, set } => gen_theta_pow(n, *i, *j, set, self.exp),
        }
    }

    /// The token as a corner matrix over `S_{n-1}`.
    pub fn eval(&self, n: usize) -> Result<CornerMatrix<S>> {
        self.validate(n)?;
        match &self.gen {
            Generator::Elem { i, j, a } => {
                CornerMatrix::elementary(n, *i, *j, a.scale(&S::from_i64(self.exp)))
            }
            _ => as_matrix(&self.eval_element(n)?),
        }
    }
}

impl<S: Scalar> fmt::Display for GeneratorToken<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set_text = |s: &IndexSet| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        match &self.gen {
            Generator::Elem { i, j, a } => write!(f, "e[{i},{j}]({a})")?,
            Generator::Mu { set, lambda } => write!(f, "mu{{{}}}({lambda})", set_text(set))?,
            Generator::Theta { i, j, set } => write!(f, "theta[{i},{j}]{{{}}}", set_text(set))?,
        }
        if self.exp != 1 {
            write!(f, "^{}", self.exp)?;
        }
        Ok(())
    }
}

/// A product of generator tokens, evaluated left to right.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupWord<S> {
    pub n: usize,
    pub tokens: Vec<GeneratorToken<S>>,
}

impl<S: Scalar> GroupWord<S> {
    pub fn empty(n: usize) -> Self {
        GroupWord { n, tokens: Vec::new() }
    }

    pub fn new(n: usize, tokens: Vec<GeneratorToken<S>>) -> Self {
        GroupWord { n, tokens }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn push(&mut self, t: GeneratorToken<S>) {
        self.tokens.push(t);
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let mut tokens = self.tokens.clone();
        tokens.extend(other.tokens.iter().cloned());
        Ok(GroupWord { n: self.n, tokens })
    }

    pub fn is_elementary(&self) -> bool {
        self.tokens.iter().all(GeneratorToken::is_elementary)
    }

    /// Reverses the word and inverts every token.
    pub fn inverse(&self) -> Self {
        GroupWord { n: self.n, tokens: self.tokens.iter().rev().map(GeneratorToken::inverse).collect() }
    }

    pub fn eval(&self) -> Result<CornerMatrix<S>> {
        let mut acc = CornerMatrix::identity(self.n);
        for t in &self.tokens {
            acc = acc.mat_mul(&t.eval(self.n)?)?;
        }
        Ok(acc)
    }

    pub fn eval_element(&self) -> Result<SnElement<S>> {
        let mut acc = SnElement::one(self.n);
        for t in &self.tokens {
            acc = &acc * &t.eval_element(self.n)?;
        }
        Ok(acc)
    }

    /// Applies `f` to every elementary value; other tokens are kept.
    pub fn map_elem_values(&self, f: impl Fn(&SnElement<S>) -> SnElement<S>) -> Self {
        let tokens = self
            .tokens
            .iter()
            .map(|t| match &t.gen {
                Generator::Elem { i, j, a } => {
                    GeneratorToken { gen: Generator::Elem { i: *i, j: *j, a: f(a) }, exp: t.exp }
                }
                _ => t.clone(),
            })
            .collect();
        GroupWord { n: self.n, tokens }
    }
}

impl<S: Scalar> fmt::Display for GroupWord<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.tokens.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Whether `u v = v u = 1`.
pub fn verify_inverse<S: Scalar>(u: &CornerMatrix<S>, v: &CornerMatrix<S>) -> Result<bool> {
    Ok(u.mat_mul(v)?.is_identity() && v.mat_mul(u)?.is_identity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::set;
    use crate::scalar::Q;

    type E = SnElement<Q>;

    fn sample_word() -> GroupWord<Q> {
        let n = 3;
        GroupWord::new(
            n,
            vec![
                GeneratorToken::theta(2, 1, set(&[1, 2, 3]), 2),
                GeneratorToken::elem(0, 1, E::x(2, 1).unwrap()),
                GeneratorToken::mu(set(&[1, 3]), Q::from_i64(5)),
                GeneratorToken::elem(2, 0, E::y(2, 2).unwrap()),
                GeneratorToken::theta(1, 2, set(&[1, 2, 3]), -1),
            ],
        )
    }

    #[test]
    fn empty_word_is_identity() {
        assert!(GroupWord::<Q>::empty(3).eval().unwrap().is_identity());
    }

    #[test]
    fn inverse_word_cancels() {
        let w = sample_word();
        let a = w.eval().unwrap();
        let b = w.inverse().eval().unwrap();
        assert!(verify_inverse(&a, &b).unwrap());
        assert!((&w.eval_element().unwrap() * &w.inverse().eval_element().unwrap()).is_one());
    }

    #[test]
    fn matrix_and_element_evaluations_agree() {
        let w = sample_word();
        assert_eq!(w.eval().unwrap().as_element(), w.eval_element().unwrap());
    }

    #[test]
    fn scaled_idempotent_inverse() {
        let n = 3;
        let e = E::idempotent(2, &set(&[1, 2])).unwrap();
        let lam = Q::from_i64(3);
        let u = &E::one(2) + &e.scale(&lam);
        let v = &E::one(2) - &e.scale(&(lam.clone() / (Q::from_i64(1) + lam)));
        let mu = CornerMatrix::diag(n, &[u]).unwrap();
        let mv = CornerMatrix::diag(n, &[v]).unwrap();
        assert!(verify_inverse(&mu, &mv).unwrap());
    }
}
