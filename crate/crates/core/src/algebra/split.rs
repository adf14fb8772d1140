use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use super::element::SnElement;
use super::monomial::{Exps, SnMonomial};
use crate::scalar::Scalar;

/// One component of a split-basis word, from `S_1 = K + xK[x] + yK[y] + F`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SplitFactor {
    One,
    /// `x^m`, `m >= 1`.
    XPow(u32),
    /// `y^m`, `m >= 1`.
    YPow(u32),
    /// The matrix unit `E_pq`.
    Unit(u32, u32),
}

impl SplitFactor {
    pub fn is_unit(&self) -> bool {
        matches!(self, SplitFactor::Unit(..))
    }

    /// `x^a y^b` in the split basis of `S_1`.
    fn expand(a: u32, b: u32) -> SmallVec<[(SplitFactor, bool); 4]> {
        let mut out = SmallVec::new();
        if a >= b {
            let d = a - b;
            out.push((if d == 0 { SplitFactor::One } else { SplitFactor::XPow(d) }, false));
            out.extend((0..b).map(|k| (SplitFactor::Unit(d + k, k), true)));
        } else {
            let d = b - a;
            out.push((SplitFactor::YPow(d), false));
            out.extend((0..a).map(|k| (SplitFactor::Unit(k, d + k), true)));
        }
        out
    }

    /// Normal-form `(alpha, beta)` pairs with signs.
    fn collapse(self) -> SmallVec<[((u32, u32), bool); 2]> {
        let mut out = SmallVec::new();
        match self {
            SplitFactor::One => out.push(((0, 0), false)),
            SplitFactor::XPow(m) => out.push(((m, 0), false)),
            SplitFactor::YPow(m) => out.push(((0, m), false)),
            SplitFactor::Unit(p, q) => {
                out.push(((p, q), false));
                out.push(((p + 1, q + 1), true));
            }
        }
        out
    }
}

pub type SplitKey = SmallVec<[SplitFactor; 4]>;

/// An element of `S_n` written in the tensor product of the per-component
/// split bases. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct SplitElement<S> {
    n: usize,
    terms: BTreeMap<SplitKey, S>,
}

impl<S: Scalar> SplitElement<S> {
    pub fn zero(n: usize) -> Self {
        SplitElement { n, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<SplitKey, S> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SplitKey, &S)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Every key has length `n` and every power is positive.
    pub fn is_well_formed(&self) -> bool {
        self.terms.keys().all(|k| {
            k.len() == self.n
                && k.iter().all(|f| !matches!(f, SplitFactor::XPow(0) | SplitFactor::YPow(0)))
        }) && self.terms.values().all(|c| !c.is_zero())
    }

    /// Adds a term. Panics on a malformed key.
    pub fn add_term(&mut self, key: SplitKey, c: S) {
        assert_eq!(key.len(), self.n, "split key has wrong length");
        assert!(
            key.iter().all(|f| !matches!(f, SplitFactor::XPow(0) | SplitFactor::YPow(0))),
            "split powers must be positive"
        );
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                let s = std::mem::replace(v, S::zero()) + c;
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// Number of components carrying a matrix unit in the given key.
    pub fn unit_count(key: &SplitKey) -> usize {
        key.iter().filter(|f| f.is_unit()).count()
    }
}

/// Tensor-expands per-component signed lists into full keys.
fn tensor_expand<T: Clone, U, F>(parts: &[SmallVec<[(T, bool); 4]>], mut emit: F, init: U)
where
    F: FnMut(&[T], bool, &U),
{
    let n = parts.len();
    let mut idx = vec![0usize; n];
    let mut cur: Vec<T> = Vec::with_capacity(n);
    if parts.iter().any(|p| p.is_empty()) {
        return;
    }
    loop {
        cur.clear();
        let mut neg = false;
        for (k, p) in parts.iter().enumerate() {
            let (t, s) = &p[idx[k]];
            cur.push(t.clone());
            neg ^= *s;
        }
        emit(&cur, neg, &init);
        let mut k = 0;
        loop {
            if k == n {
                return;
            }
            idx[k] += 1;
            if idx[k] < parts[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Rewrites a normal-form element in the split basis.
pub fn to_split<S: Scalar>(a: &SnElement<S>) -> SplitElement<S> {
    let n = a.n();
    let mut out = SplitElement::zero(n);
    for (m, c) in a.iter() {
        let parts: Vec<SmallVec<[(SplitFactor, bool); 4]>> =
            (0..n).map(|k| {
                let (x, y) = m.component(k);
                SplitFactor::expand(x, y)
            }).collect();
        let mut acc: Vec<(SplitKey, bool)> = Vec::new();
        tensor_expand(&parts, |key, neg, _| acc.push((SplitKey::from_slice(key), neg)), ());
        for (key, neg) in acc {
            out.add_term(key, if neg { -c.clone() } else { c.clone() });
        }
    }
    out
}

/// Inverse of [`to_split`].
pub fn from_split<S: Scalar>(s: &SplitElement<S>) -> SnElement<S> {
    let n = s.n();
    let mut out = SnElement::zero(n);
    for (key, c) in s.iter() {
        let parts: Vec<SmallVec<[((u32, u32), bool); 4]>> =
            key.iter().map(|f| f.collapse().into_iter().collect()).collect();
        let mut acc: Vec<(SnMonomial, bool)> = Vec::new();
        tensor_expand(
            &parts,
            |pairs, neg, _| {
                let mut exps = Exps::from_elem(0, 2 * n);
                for (k, &(x, y)) in pairs.iter().enumerate() {
                    exps[k] = x;
                    exps[n + k] = y;
                }
                acc.push((SnMonomial::from_exps(exps), neg));
            },
            (),
        );
        for (m, neg) in acc {
            out.add_term(m, if neg { -c.clone() } else { c.clone() });
        }
    }
    out
}

impl<S: Scalar> fmt::Display for SplitElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (key, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = key
                .iter()
                .enumerate()
                .filter_map(|(i, fac)| {
                    let i = i + 1;
                    match *fac {
                        SplitFactor::One => None,
                        SplitFactor::XPow(1) => Some(format!("x{i}")),
                        SplitFactor::XPow(m) => Some(format!("x{i}^{m}")),
                        SplitFactor::YPow(1) => Some(format!("y{i}")),
                        SplitFactor::YPow(m) => Some(format!("y{i}^{m}")),
                        SplitFactor::Unit(p, q) => Some(format!("E({i};{p},{q})")),
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
