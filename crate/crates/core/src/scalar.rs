//! Ground-field scalars.
//!
//! Everything above this module is generic over [`Scalar`]. Two fields ship
//! with the crate: arbitrary-precision rationals ([`Q`]) and the prime
//! fields [`Fp`]. Floating point types are deliberately not scalars: every
//! algorithm here relies on exact zero tests.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

/// An exact field.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Used only by the printer to choose between `+` and `-`.
    fn is_negative(&self) -> bool {
        false
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    /// `self^k` for any integer `k`; `None` for `0^k` with `k < 0`.
    fn powi(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * sq.clone();
            }
            e >>= 1;
            if e > 0 {
                sq = sq.clone() * sq;
            }
        }
        Some(acc)
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

/// Arbitrary-precision rationals, the default ground field.
pub type Q = BigRational;

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// The prime field `Z/PZ`. `P` must be prime; this is not checked.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow_u(self, mut e: u64) -> Self {
        let mut acc = 1u128;
        let mut b = self.0 as u128;
        let p = P as u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        Fp(acc as u64)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp((self.0 as u128 * rhs.0 as u128 % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in F_{P}");
        self * rhs.pow_u(P - 2)
    }
}

impl<const P: u64> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, _rhs: Self) -> Self {
        Fp(0)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        let v = i128::from_str_radix(s, radix)?;
        Ok(Fp(v.rem_euclid(P as i128) as u64))
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_display_omits_unit_denominator() {
        assert_eq!(Q::from_i64(5).to_string(), "5");
        assert_eq!(Q::ratio(-3, 6).to_string(), "-1/2");
    }

    #[test]
    fn powi_handles_negative_exponents() {
        let two = Q::from_i64(2);
        assert_eq!(two.powi(-3), Some(Q::ratio(1, 8)));
        assert_eq!(Q::zero().powi(-1), None);
        assert_eq!(Q::zero().powi(0), Some(Q::one()));
    }

    #[test]
    fn prime_field_inverse() {
        type F7 = Fp<7>;
        for v in 1..7 {
            let a = F7::new(v);
            assert_eq!(a * a.inverse().unwrap(), F7::one());
        }
        assert_eq!(F7::new(-1), F7::new(6));
        assert_eq!(-F7::new(3), F7::new(4));
        assert_eq!(F7::from_str_radix("-9", 10).unwrap(), F7::new(5));
    }
}
