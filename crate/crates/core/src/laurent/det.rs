use std::collections::BTreeMap;

use super::element::LaurentElement;
use crate::index::IndexSet;
use crate::scalar::Scalar;

/// An `N x N` matrix over a Laurent ring that equals the identity outside
/// finitely many stored entries. Entries are 0-indexed.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentCornerMatrix<S> {
    vars: IndexSet,
    entries: BTreeMap<(usize, usize), LaurentElement<S>>,
}

impl<S: Scalar> LaurentCornerMatrix<S> {
    pub fn identity(vars: &IndexSet) -> Self {
        LaurentCornerMatrix { vars: vars.clone(), entries: BTreeMap::new() }
    }

    pub fn vars(&self) -> &IndexSet {
        &self.vars
    }

    /// Sets the full entry at `(row, col)`.
    pub fn set(&mut self, row: usize, col: usize, value: LaurentElement<S>) {
        assert_eq!(value.vars(), &self.vars, "entry over the wrong Laurent ring");
        let default_one = row == col;
        let is_default = if default_one { value.is_one() } else { value.is_zero() };
        if is_default {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> LaurentElement<S> {
        match self.entries.get(&(row, col)) {
            Some(v) => v.clone(),
            None if row == col => LaurentElement::one(&self.vars),
            None => LaurentElement::zero(&self.vars),
        }
    }

    /// One past the largest row or column index of a stored entry.
    pub fn extent(&self) -> usize {
        self.entries.keys().map(|&(r, c)| r.max(c) + 1).max().unwrap_or(0)
    }

    pub fn dense(&self, size: usize) -> Vec<Vec<LaurentElement<S>>> {
        (0..size).map(|r| (0..size).map(|c| self.get(r, c)).collect()).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let size = self.extent().max(other.extent());
        let mut out = Self::identity(&self.vars);
        for r in 0..size {
            for c in 0..size {
                let mut acc = LaurentElement::zero(&self.vars);
                for k in 0..size {
                    acc = &acc + &(&self.get(r, k) * &other.get(k, c));
                }
                out.set(r, c, acc);
            }
        }
        out
    }
}

/// Cofactor expansion along the first row.
pub fn det_cofactor<S: Scalar>(m: &[Vec<LaurentElement<S>>], vars: &IndexSet) -> LaurentElement<S> {
    let d = m.len();
    if d == 0 {
        return LaurentElement::one(vars);
    }
    if d == 1 {
        return m[0][0].clone();
    }
    let mut acc = LaurentElement::zero(vars);
    for c in 0..d {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<_>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][c] * &det_cofactor(&minor, vars);
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Fraction-free Bareiss elimination with row pivoting.
pub fn det_bareiss<S: Scalar>(m: &[Vec<LaurentElement<S>>], vars: &IndexSet) -> LaurentElement<S> {
    let d = m.len();
    let mut a: Vec<Vec<LaurentElement<S>>> = m.to_vec();
    let mut prev = LaurentElement::one(vars);
    let mut negate = false;
    for k in 0..d {
        if a[k][k].is_zero() {
            match (k + 1..d).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return LaurentElement::zero(vars),
            }
        }
        for i in k + 1..d {
            for j in k + 1..d {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss quotient is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = if d == 0 { LaurentElement::one(vars) } else { a[d - 1][d - 1].clone() };
    if negate {
        -&det
    } else {
        det
    }
}

/// Determinant of the finite corner; cofactor expansion up to `4 x 4`,
/// Bareiss above.
pub fn laurent_det<S: Scalar>(m: &LaurentCornerMatrix<S>) -> LaurentElement<S> {
    let size = m.extent();
    let dense = m.dense(size);
    if size <= 4 {
        det_cofactor(&dense, m.vars())
    } else {
        det_bareiss(&dense, m.vars())
    }
}
