//! Exact scalar domains.
//!
//! Every matrix in this crate has entries in one of the domains below. None
//! of them carry a global "current field": a [`QuadScalar`] knows its own
//! radicand, so the additive and multiplicative identities are produced from
//! an existing value with [`Ring::zero_like`] and [`Ring::one_like`].

mod bernoulli;
mod quad;
mod zmod;

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use bernoulli::{bernoulli, bernoulli_with_bound, DEFAULT_BERNOULLI_BOUND};
pub use quad::{quad_inv, quad_mul, QuadScalar};
pub use zmod::ZMod;

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Commutative ring with exact equality and canonical hashing.
pub trait Ring:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, v: i64) -> Self;
    fn is_zero_elem(&self) -> bool;

    fn is_one_elem(&self) -> bool {
        *self == self.one_like()
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inverse(&self) -> Option<Self>;
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn from_i64_like(&self, v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

impl Field for Rational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Domain(format!("malformed rational {s:?}"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Returns `Some(n)` when the rational is an integer.
pub fn rational_to_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.numer().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_text_round_trip() {
        for s in ["0", "7", "-3/4", "5/66"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("4/8").unwrap()), "1/2");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in -500i64..500, b in 1i64..500, c in -500i64..500, e in 1i64..500) {
            let r = rat(a, b);
            let s = rat(c, e);
            prop_assert_eq!((r.clone() + s.clone()) - s.clone(), r.clone());
            if !s.is_zero() {
                prop_assert_eq!((r.clone() * s.clone()) / s.clone(), r.clone());
            }
            prop_assert!(r.denom() > &BigInt::zero());
            prop_assert!(num_integer::Integer::gcd(r.numer(), r.denom()).is_one());
        }
    }
}
