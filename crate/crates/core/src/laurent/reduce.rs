use super::element::LaurentElement;
use crate::algebra::{to_split, SnElement, SplitFactor};
use crate::error::{Error, Result};
use crate::index::{check_set, IndexSet};
use crate::scalar::Scalar;

/// Reduces `a` modulo the matrix-unit ideal at every component of `drop`,
/// sending `x_j -> x_j` and `y_j -> x_j^-1` there.
///
/// Components outside `drop` must be scalar on every surviving term.
pub fn laurent_reduce<S: Scalar>(a: &SnElement<S>, drop: &IndexSet) -> Result<LaurentElement<S>> {
    check_set(drop, a.n())?;
    let mut out = LaurentElement::zero(drop);
    for (key, c) in to_split(a).iter() {
        if drop.iter().any(|&j| key[j - 1].is_unit()) {
            continue;
        }
        if let Some(pos) = (0..a.n()).find(|k| !drop.contains(&(k + 1)) && key[*k] != SplitFactor::One) {
            return Err(Error::NonScalarComponent { component: pos + 1 });
        }
        let expo = drop
            .iter()
            .map(|&j| match key[j - 1] {
                SplitFactor::XPow(m) => m as i64,
                SplitFactor::YPow(m) => -(m as i64),
                _ => 0,
            })
            .collect();
        out.add_term(expo, c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SnMonomial;
    use crate::index::set;
    use crate::scalar::Q;

    type E = SnElement<Q>;

    #[test]
    fn reduction_examples() {
        let v = set(&[1]);
        let a = E::monomial(SnMonomial::new(&[2], &[3]), Q::from_i64(1));
        let r = laurent_reduce(&a, &v).unwrap();
        assert_eq!(r, LaurentElement::var_pow(&v, 1, -1).unwrap());
        let e = E::idempotent(1, &v).unwrap();
        assert!(laurent_reduce(&e, &v).unwrap().is_zero());
        let five = E::scalar(1, Q::from_i64(5));
        assert_eq!(laurent_reduce(&five, &v).unwrap(), LaurentElement::scalar(&v, Q::from_i64(5)));
    }

    #[test]
    fn undropped_components_must_be_scalar() {
        let a = E::x(2, 2).unwrap();
        assert_eq!(
            laurent_reduce(&a, &set(&[1])),
            Err(Error::NonScalarComponent { component: 2 })
        );
        let b = &E::x(2, 1).unwrap() * &E::idempotent(2, &set(&[1])).unwrap();
        assert!(laurent_reduce(&(&b + &E::x(2, 1).unwrap()), &set(&[1, 2])).is_ok());
    }
}
