use super::element::SnElement;
use super::split::{to_split, SplitElement, SplitFactor};
use crate::error::{Error, Result};
use crate::index::{check_component, check_set, IndexSet};
use crate::scalar::Scalar;

/// The ideals of `S_n` whose membership is decided on the split basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IdealSpec {
    /// The height-one prime `p_i`.
    HeightOne(usize),
    /// `p_I`, the product of the `p_i` for `i` in `I`.
    PI(IndexSet),
    /// `a_{n,s}`, the sum of all `p_I` with `|I| = s`.
    Ans(usize),
    /// `p p_n`, the sum of `p_{{i,n}}` over `i` in the support.
    PPn { support: IndexSet, n: usize },
}

impl IdealSpec {
    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            IdealSpec::HeightOne(i) => check_component(*i, n),
            IdealSpec::PI(set) => {
                if set.is_empty() {
                    return Err(Error::InvalidIndexSet("p_I needs a nonempty I".into()));
                }
                check_set(set, n)
            }
            IdealSpec::Ans(s) => {
                if *s == 0 || *s > n {
                    Err(Error::InvalidArgument(format!("level {s} outside 1..={n}")))
                } else {
                    Ok(())
                }
            }
            IdealSpec::PPn { support, n: d } => {
                if support.is_empty() {
                    return Err(Error::InvalidIndexSet("support must be nonempty".into()));
                }
                check_component(*d, n)?;
                check_set(support, n)?;
                if support.contains(d) {
                    return Err(Error::InvalidIndexSet(format!(
                        "support must not contain the distinguished index {d}"
                    )));
                }
                Ok(())
            }
        }
    }

    fn admits(&self, key: &[SplitFactor]) -> bool {
        let unit = |i: usize| key[i - 1].is_unit();
        match self {
            IdealSpec::HeightOne(i) => unit(*i),
            IdealSpec::PI(set) => set.iter().all(|&i| unit(i)),
            IdealSpec::Ans(s) => key.iter().filter(|f| f.is_unit()).count() >= *s,
            IdealSpec::PPn { support, n } => unit(*n) && support.iter().any(|&i| unit(i)),
        }
    }
}

/// Whether every split-basis term of `a` lies in the ideal.
pub fn in_ideal<S: Scalar>(a: &SnElement<S>, spec: &IdealSpec) -> Result<bool> {
    spec.validate(a.n())?;
    Ok(to_split(a).iter().all(|(k, _)| spec.admits(k)))
}

/// The largest `s` with `a` in `a_{n,s}`; `0` outside `a_{n,1}`, `n` for zero.
pub fn ideal_level<S: Scalar>(a: &SnElement<S>) -> usize {
    split_level(&to_split(a))
}

pub fn split_level<S: Scalar>(s: &SplitElement<S>) -> usize {
    s.iter().map(|(k, _)| SplitElement::<S>::unit_count(k)).min().unwrap_or(s.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::set;
    use crate::scalar::Q;

    type E = SnElement<Q>;

    #[test]
    fn levels() {
        assert_eq!(ideal_level(&E::x(2, 1).unwrap()), 0);
        assert_eq!(ideal_level(&E::idempotent(2, &set(&[1, 2])).unwrap()), 2);
        assert_eq!(ideal_level(&E::zero(3)), 3);
    }

    #[test]
    fn membership_patterns() {
        let n = 3;
        let e13 = E::idempotent(n, &set(&[1, 3])).unwrap();
        let x2 = E::x(n, 2).unwrap();
        let a = &e13 * &x2;
        assert!(in_ideal(&a, &IdealSpec::HeightOne(1)).unwrap());
        assert!(!in_ideal(&a, &IdealSpec::HeightOne(2)).unwrap());
        assert!(in_ideal(&a, &IdealSpec::PI(set(&[1, 3]))).unwrap());
        assert!(in_ideal(&a, &IdealSpec::Ans(2)).unwrap());
        assert!(!in_ideal(&a, &IdealSpec::Ans(3)).unwrap());
        let spec = IdealSpec::PPn { support: set(&[1, 2]), n: 3 };
        assert!(in_ideal(&a, &spec).unwrap());
        let b = &E::idempotent(n, &set(&[2])).unwrap() + &E::idempotent(n, &set(&[3])).unwrap();
        assert!(!in_ideal(&b, &spec).unwrap());
        assert!(in_ideal(&a, &IdealSpec::Ans(4)).is_err());
    }
}
