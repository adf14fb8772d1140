use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{ideal_level, to_split, SnElement, SplitFactor};
use crate::error::{Error, Result};
use crate::group::CornerMatrix;
use crate::index::{check_set, complement, full, IndexSet};
use crate::laurent::{as_unit_monomial, deg_xj, laurent_det, laurent_reduce, LaurentCornerMatrix, LaurentElement, LaurentUnit};
use crate::scalar::Scalar;

/// `det(u bar)`: every entry reduced to `L_{n-1}`, then the determinant of
/// the finite corner. The caller asserts that `u` is invertible.
pub fn bdet<S: Scalar>(u: &CornerMatrix<S>) -> Result<LaurentUnit<S>> {
    let vars = full(u.entry_n());
    let mut m = LaurentCornerMatrix::identity(&vars);
    for (&(r, c), a) in u.entries() {
        m.set(r, c, laurent_reduce(a, &vars)?);
    }
    as_unit_monomial(&laurent_det(&m))
}

/// `det_I(u)` for `u - 1` in `a_{n,s}`, `s = |I|`.
///
/// Only split terms whose matrix-unit factors sit exactly on `I` survive the
/// projection onto `p_I` modulo `a_{n,s+1}`; the remaining factors become
/// Laurent monomials over the complement of `I`.
pub fn det_i<S: Scalar>(u: &SnElement<S>, set: &IndexSet) -> Result<LaurentUnit<S>> {
    let n = u.n();
    check_set(set, n)?;
    if set.is_empty() || set.len() >= n {
        return Err(Error::InvalidIndexSet(format!("det_I needs 0 < |I| < {n}, got {set:?}")));
    }
    let delta = u - &SnElement::one(n);
    let level = ideal_level(&delta);
    if level < set.len() {
        return Err(Error::NotInLevel { required: set.len(), actual: level });
    }
    let vars = complement(set, n);
    let mut blocks: BTreeMap<(Vec<u32>, Vec<u32>), LaurentElement<S>> = BTreeMap::new();
    for (key, c) in to_split(&delta).iter() {
        let on_set = (1..=n).all(|k| key[k - 1].is_unit() == set.contains(&k));
        if !on_set {
            continue;
        }
        let (mut alpha, mut beta) = (Vec::new(), Vec::new());
        for &k in set {
            if let SplitFactor::Unit(p, q) = key[k - 1] {
                alpha.push(p);
                beta.push(q);
            }
        }
        let expo = vars
            .iter()
            .map(|&j| match key[j - 1] {
                SplitFactor::XPow(m) => m as i64,
                SplitFactor::YPow(m) => -(m as i64),
                _ => 0,
            })
            .collect();
        blocks
            .entry((alpha, beta))
            .or_insert_with(|| LaurentElement::zero(&vars))
            .add_term(expo, c.clone());
    }
    let labels: BTreeSet<&Vec<u32>> = blocks.keys().flat_map(|(a, b)| [a, b]).collect();
    let index: BTreeMap<&Vec<u32>, usize> = labels.into_iter().enumerate().map(|(i, l)| (l, i)).collect();
    let mut m = LaurentCornerMatrix::identity(&vars);
    for ((alpha, beta), v) in &blocks {
        let (r, c) = (index[alpha], index[beta]);
        let full_entry = if r == c { &m.get(r, c) + v } else { v.clone() };
        m.set(r, c, full_entry);
    }
    as_unit_monomial(&laurent_det(&m))
}

/// `deg_{n,I,j}(u)`: the `x_j`-degree of `det_I(u)`, `j` outside `I`.
pub fn deg_nij<S: Scalar>(u: &SnElement<S>, set: &IndexSet, j: usize) -> Result<i64> {
    if set.contains(&j) {
        return Err(Error::InvalidIndexSet(format!("{j} must lie outside {set:?}")));
    }
    deg_xj(&det_i(u, set)?, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{gen_mu, gen_theta, GeneratorToken, GroupWord};
    use crate::index::{set, subsets_of_size, without};
    use crate::scalar::Q;

    type E = SnElement<Q>;

    #[test]
    fn bdet_examples() {
        let x1 = E::x(2, 1).unwrap();
        let unip = CornerMatrix::elementary(3, 0, 1, x1).unwrap();
        let d = bdet(&unip).unwrap();
        assert!(d.is_scalar() && d.coeff == Q::from_i64(1));
        let mu = crate::group::as_matrix(&gen_mu(3, &set(&[3]), &Q::from_i64(4)).unwrap()).unwrap();
        let d = bdet(&mu).unwrap();
        assert!(d.is_scalar() && d.coeff == Q::from_i64(4));
        let theta = CornerMatrix::<Q>::diag(3, &[gen_theta(2, 1, 2, &set(&[1, 2])).unwrap()]).unwrap();
        let d = bdet(&theta).unwrap();
        assert!(d.is_scalar() && d.coeff == Q::from_i64(1));
    }

    #[test]
    fn det_i_of_mu_is_lambda() {
        let u = gen_mu(3, &set(&[1, 3]), &Q::ratio(-2, 3)).unwrap();
        let d = det_i(&u, &set(&[1, 3])).unwrap();
        assert!(d.is_scalar());
        assert_eq!(d.coeff, Q::ratio(-2, 3));
        let other = det_i(&u, &set(&[2, 3])).unwrap();
        assert!(other.is_scalar() && other.coeff == Q::from_i64(1));
    }

    #[test]
    fn det_i_of_off_diagonal_unit_is_one() {
        let s = set(&[1, 2]);
        let a = &E::x(3, 3).unwrap() + &E::scalar(3, Q::from_i64(2));
        let off = &a * &E::matrix_unit(3, &s, &[0, 1], &[2, 1]).unwrap();
        let u = &E::one(3) + &off;
        let d = det_i(&u, &s).unwrap();
        assert!(d.is_scalar() && d.coeff == Q::from_i64(1));
    }

    #[test]
    fn det_i_of_theta_is_x_j() {
        let n = 4;
        let j_set = set(&[1, 2, 4]);
        let (m, j) = (2, 1);
        let theta = gen_theta::<Q>(n, m, j, &j_set).unwrap();
        let d = det_i(&theta, &without(&j_set, &[j])).unwrap();
        assert_eq!(d.coeff, Q::from_i64(1));
        assert_eq!(deg_xj(&d, j).unwrap(), 1);
        assert_eq!(d.expo.iter().sum::<i64>(), 1);
    }

    #[test]
    fn level_is_checked() {
        let u = gen_mu(3, &set(&[1]), &Q::from_i64(2)).unwrap();
        assert_eq!(det_i(&u, &set(&[1, 2])), Err(Error::NotInLevel { required: 2, actual: 1 }));
    }

    fn degree_table(n: usize) {
        for j_set in (3..=n).flat_map(|k| subsets_of_size(n, k)).filter(|s| s.contains(&n)) {
            let m = *without(&j_set, &[n]).iter().max().unwrap();
            for &j in without(&j_set, &[n, m]).iter() {
                let theta = gen_theta::<Q>(n, m, j, &j_set).unwrap();
                let s = j_set.len() - 1;
                for i_set in subsets_of_size(n, s) {
                    for i in complement(&i_set, n) {
                        let expected = if i_set == without(&j_set, &[m]) && i == m {
                            -1
                        } else if i_set == without(&j_set, &[j]) && i == j {
                            1
                        } else {
                            0
                        };
                        assert_eq!(deg_nij(&theta, &i_set, i).unwrap(), expected, "J={j_set:?} j={j} I={i_set:?} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn degree_table_ambient_three_and_four() {
        degree_table(3);
        degree_table(4);
    }

    #[test]
    fn bdet_is_trivial_on_elementary_words() {
        let w = GroupWord::new(
            3,
            vec![
                GeneratorToken::elem(0, 1, E::x(2, 1).unwrap()),
                GeneratorToken::elem(1, 0, E::y(2, 2).unwrap()),
                GeneratorToken::elem(0, 2, E::scalar(2, Q::from_i64(3))),
            ],
        );
        let d = bdet(&w.eval().unwrap()).unwrap();
        assert!(d.is_scalar() && d.coeff == Q::from_i64(1));
    }
}
