use crate::algebra::SnElement;
use crate::error::{Error, Result};
use crate::index::{check_component, check_set, without, IndexSet};
use crate::scalar::Scalar;

/// The idempotent `e_I` of `S_n`.
pub fn e_set<S: Scalar>(n: usize, set: &IndexSet) -> Result<SnElement<S>> {
    SnElement::idempotent(n, set)
}

/// `mu_I(lambda) = lambda e_I + 1 - e_I`.
pub fn gen_mu<S: Scalar>(n: usize, set: &IndexSet, lambda: &S) -> Result<SnElement<S>> {
    if lambda.is_zero() {
        return Err(Error::ZeroScalar);
    }
    let e = e_set(n, set)?;
    SnElement::ring_linear(&SnElement::one(n), &e, &S::one(), &(lambda.clone() - S::one()))
}

/// `u e_I + 1 - e_I`.
fn dress<S: Scalar>(n: usize, u: &SnElement<S>, set: &IndexSet) -> Result<SnElement<S>> {
    let e = e_set(n, set)?;
    Ok(&(&(u * &e) + &SnElement::one(n)) - &e)
}

fn check_outside(i: usize, set: &IndexSet, n: usize) -> Result<()> {
    check_component(i, n)?;
    check_set(set, n)?;
    if set.contains(&i) {
        return Err(Error::InvalidIndexSet(format!("{i} must lie outside the set")));
    }
    Ok(())
}

/// `X(i, I) = x_i e_I + 1 - e_I`, `i` not in `I`.
pub fn gen_x<S: Scalar>(n: usize, i: usize, set: &IndexSet) -> Result<SnElement<S>> {
    check_outside(i, set, n)?;
    dress(n, &SnElement::x(n, i)?, set)
}

/// `Y(i, I) = y_i e_I + 1 - e_I`, `i` not in `I`.
pub fn gen_y<S: Scalar>(n: usize, i: usize, set: &IndexSet) -> Result<SnElement<S>> {
    check_outside(i, set, n)?;
    dress(n, &SnElement::y(n, i)?, set)
}

/// `theta_ij(J) = Y(i, J \ i) X(j, J \ j)`; inverse `theta_ji(J)`.
pub fn gen_theta<S: Scalar>(n: usize, i: usize, j: usize, set: &IndexSet) -> Result<SnElement<S>> {
    check_set(set, n)?;
    if i == j || !set.contains(&i) || !set.contains(&j) {
        return Err(Error::InvalidIndexSet(format!(
            "theta needs distinct {i}, {j} inside {set:?}"
        )));
    }
    let y = gen_y(n, i, &without(set, &[i]))?;
    let x = gen_x(n, j, &without(set, &[j]))?;
    Ok(&y * &x)
}

/// `theta_ij(J)^k`, using `theta_ji(J)` for negative `k`.
pub fn gen_theta_pow<S: Scalar>(
    n: usize,
    i: usize,
    j: usize,
    set: &IndexSet,
    k: i64,
) -> Result<SnElement<S>> {
    let base = if k >= 0 { gen_theta(n, i, j, set)? } else { gen_theta(n, j, i, set)? };
    Ok(base.pow(k.unsigned_abs() as u32))
}
