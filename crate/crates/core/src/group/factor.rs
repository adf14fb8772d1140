//! Explicit elementary words for the diagonal units `diag(u, u^-1)`,
//! `mu_I(lambda)` and `theta_ij(J)` of `GL_inf(S_{n-1})`.

use super::word::{GeneratorToken, GroupWord};
use crate::algebra::SnElement;
use crate::error::{Error, Result};
use crate::index::{check_component, check_set, complement, without, IndexSet};
use crate::scalar::Scalar;

/// `e_ij(u) e_ji(-v) e_ij(u) e_ij(-1) e_ji(1) e_ij(-1) = diag(u at i, v at j)`
/// for mutually inverse `u, v` in `S_{n-1}`.
pub fn whitehead_diag<S: Scalar>(
    n: usize,
    u: &SnElement<S>,
    u_inv: &SnElement<S>,
    i: usize,
    j: usize,
) -> Result<GroupWord<S>> {
    if i == j {
        return Err(Error::InvalidArgument("Whitehead word needs distinct rows".into()));
    }
    let one = SnElement::one(n - 1);
    if !u.nf_mul(u_inv)?.is_one() || !u_inv.nf_mul(u)?.is_one() {
        return Err(Error::InverseCheckFailed(format!("{u} and {u_inv} are not mutually inverse")));
    }
    Ok(GroupWord::new(
        n,
        vec![
            GeneratorToken::elem(i, j, u.clone()),
            GeneratorToken::elem(j, i, -u_inv),
            GeneratorToken::elem(i, j, u.clone()),
            GeneratorToken::elem(i, j, -&one),
            GeneratorToken::elem(j, i, one.clone()),
            GeneratorToken::elem(i, j, -&one),
        ],
    ))
}

/// Elementary word for `diag(1 + (nu - 1) e_{extra + m}, 1)` placed at rows
/// `(r0, r1)`, over `S_{n-1}`.
///
/// With `lambda = 1/nu - 1` the four-factor shift identity in component `m`
/// gives `diag(1 + lambda, 1/(1 + lambda)) diag(1 + (nu - 1) e_m, 1)`; the
/// Whitehead word cancels the first factor and multiplying every value by
/// `e_extra` dresses the result.
pub fn scaled_idempotent_word<S: Scalar>(
    n: usize,
    m: usize,
    extra: &IndexSet,
    nu: &S,
    rows: (usize, usize),
) -> Result<GroupWord<S>> {
    let k = n - 1;
    check_component(m, k)?;
    check_set(extra, k)?;
    if extra.contains(&m) {
        return Err(Error::InvalidIndexSet(format!("{m} repeated in the dressing set")));
    }
    let nu_inv = nu.inverse().ok_or(Error::ZeroScalar)?;
    if nu.is_one() {
        return Ok(GroupWord::empty(n));
    }
    let (r0, r1) = rows;
    let lambda = nu_inv.clone() - S::one();
    let x = SnElement::x(k, m)?;
    let y = SnElement::y(k, m)?;
    let mut w = whitehead_diag(n, &SnElement::scalar(k, nu.clone()), &SnElement::scalar(k, nu_inv), r0, r1)?;
    w.push(GeneratorToken::elem(r1, r0, y.scale(&-nu.clone())));
    w.push(GeneratorToken::elem(r0, r1, x.scale(&lambda)));
    w.push(GeneratorToken::elem(r1, r0, y));
    w.push(GeneratorToken::elem(r0, r1, x.scale(&-(lambda * nu.clone()))));
    if extra.is_empty() {
        return Ok(w);
    }
    let e = SnElement::idempotent(k, extra)?;
    Ok(w.map_elem_values(|a| &e * a))
}

/// Elementary word for `mu_I(lambda)`, `n` in `I`, `|I| >= 2`.
pub fn factor_mu_elementary<S: Scalar>(n: usize, set: &IndexSet, lambda: &S) -> Result<GroupWord<S>> {
    check_set(set, n)?;
    if !set.contains(&n) || set.len() < 2 {
        return Err(Error::InvalidIndexSet(format!("mu factorization needs {n} in a set of size >= 2")));
    }
    let m = *without(set, &[n]).iter().next_back().expect("nonempty");
    scaled_idempotent_word(n, m, &without(set, &[n, m]), lambda, (0, 1))
}

fn one_minus<S: Scalar>(a: &SnElement<S>) -> SnElement<S> {
    &SnElement::one(a.n()) - a
}

/// The word for `diag(theta_12({1..m}), 1)` over `S_{n-1}`.
fn canonical_theta_word<S: Scalar>(n: usize, m: usize) -> Result<GroupWord<S>> {
    let k = n - 1;
    let one = SnElement::one(k);
    let (x1, y1) = (SnElement::x(k, 1)?, SnElement::y(k, 1)?);
    let (x2, y2) = (SnElement::x(k, 2)?, SnElement::y(k, 2)?);
    let e2 = SnElement::idempotent(k, &crate::index::set(&[2]))?;
    let rest: IndexSet = (3..=m).collect();
    let ei = SnElement::idempotent(k, &rest)?;
    let y2m1 = &y2 - &one;
    let minus_one = -S::one();

    // [[x2, e2], [0, y2]] as an elementary word.
    let mut w = GroupWord::new(
        n,
        vec![GeneratorToken::elem(0, 1, x2.clone()), GeneratorToken::elem(1, 0, -&y2)],
    );
    w = w.concat(&scaled_idempotent_word(n, 2, &IndexSet::new(), &minus_one, (0, 1))?)?;
    w.push(GeneratorToken::elem(1, 0, one.clone()));
    w.push(GeneratorToken::elem(0, 1, -&one));
    w.push(GeneratorToken::elem(1, 0, one_minus(&x2)));

    // [[1 + (y2-1) x1 y1 e_I, 0], [e2 y1 e_I, 1 + (x2-1) e_I]].
    w.push(GeneratorToken::elem(1, 0, -&(&(&x2 * &y1) * &ei)));
    w.push(GeneratorToken::elem(0, 1, &y2m1 * &x1));
    w.push(GeneratorToken::elem(1, 0, &y1 * &ei));
    w.push(GeneratorToken::elem(0, 1, -&(&y2m1 * &x1)));
    w.push(GeneratorToken::elem(0, 1, &(&(&y2m1 * &one_minus(&x2)) * &x1) * &ei));
    if m == 2 {
        return Ok(w);
    }

    // Inverse of [[1 + (x2-1)(1-e_I), e2 (1-e_I)], [0, e_I + (1-e_I) y2]].
    let not_i = one_minus(&ei);
    w.push(GeneratorToken::elem(1, 0, x2.clone()));
    w.push(GeneratorToken::elem(0, 1, &one_minus(&y2) * &not_i));
    w.push(GeneratorToken::elem(1, 0, -&(&one + &(&(&x2 - &one) * &ei))));
    w = w.concat(&scaled_idempotent_word(n, 2, &rest, &minus_one, (0, 1))?)?;
    w = w.concat(&scaled_idempotent_word(n, 2, &IndexSet::new(), &minus_one, (0, 1))?)?;
    let x2m1_2e2 = &(&x2 - &one) + &e2.scale(&S::from_i64(2));
    w.push(GeneratorToken::elem(0, 1, -&(&x2m1_2e2 * &not_i)));
    Ok(w)
}

/// Component relabeling sending `1, 2` to `i, j`, `3..m` to `J \ {i, j}` and
/// the remaining labels to the complement of `J`, each in increasing order.
pub fn theta_relabeling(k: usize, i: usize, j: usize, set: &IndexSet) -> Vec<usize> {
    let mut perm = vec![i, j];
    perm.extend(without(set, &[i, j]));
    perm.extend(complement(set, k));
    perm
}

/// Elementary word over `S_{n-1}` for `diag(theta_ij(J), 1)` at rows `(0, 1)`,
/// `J` a subset of `{1..n-1}`.
pub fn factor_theta_elementary<S: Scalar>(
    n: usize,
    i: usize,
    j: usize,
    set: &IndexSet,
) -> Result<GroupWord<S>> {
    if n < 3 {
        return Err(Error::InvalidArgument("theta factorization needs n >= 3".into()));
    }
    let k = n - 1;
    check_set(set, k)?;
    if set.len() < 2 || i == j || !set.contains(&i) || !set.contains(&j) {
        return Err(Error::InvalidIndexSet(format!(
            "theta factorization needs distinct {i}, {j} in a set of size >= 2"
        )));
    }
    let canonical = canonical_theta_word(n, set.len())?;
    let perm = theta_relabeling(k, i, j, set);
    Ok(canonical.map_elem_values(|a| a.permute(&perm).expect("valid permutation")))
}
