use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{format_rational, parse_rational, Field, Rational, Ring};
use crate::error::{Error, Result};

/// An element `a + b*sqrt(D)` of the quadratic field `Q(sqrt(D))`.
///
/// `D` is squarefree and different from 0 and 1. Values with different `D`
/// never mix: the checked operations return a domain error and the operator
/// impls panic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadScalar {
    d: i64,
    a: Rational,
    b: Rational,
}

fn is_squarefree(d: i64) -> bool {
    let n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

impl QuadScalar {
    pub fn new(d: i64, a: Rational, b: Rational) -> Result<Self> {
        if d == 0 || d == 1 || !is_squarefree(d) {
            return Err(Error::Domain(format!("radicand {d} is not squarefree and different from 0, 1")));
        }
        Ok(QuadScalar { d, a, b })
    }

    pub fn from_rational(d: i64, a: Rational) -> Result<Self> {
        Self::new(d, a, Rational::zero())
    }

    /// `sqrt(D)` itself.
    pub fn sqrt(d: i64) -> Result<Self> {
        Self::new(d, Rational::zero(), Rational::one())
    }

    pub fn radicand(&self) -> i64 {
        self.d
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }

    pub fn conjugate(&self) -> Self {
        QuadScalar { d: self.d, a: self.a.clone(), b: -self.b.clone() }
    }

    /// `a^2 - D b^2`.
    pub fn norm(&self) -> Rational {
        self.a.clone() * self.a.clone() - Rational::from_integer(BigInt::from(self.d)) * self.b.clone() * self.b.clone()
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::Domain(format!(
                "cannot combine elements of Q(sqrt({})) and Q(sqrt({}))",
                self.d, other.d
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(QuadScalar { d: self.d, a: &self.a + &other.a, b: &self.b + &other.b })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let d = Rational::from_integer(BigInt::from(self.d));
        Ok(QuadScalar {
            d: self.d,
            a: &self.a * &other.a + d * &self.b * &other.b,
            b: &self.a * &other.b + &self.b * &other.a,
        })
    }

    pub fn checked_inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QuadScalar { d: self.d, a: &self.a / &n, b: -(&self.b / &n) })
    }

    /// Parses the text produced by `Display`: `a`, `b*sqrt(D)`, `a+b*sqrt(D)`,
    /// `a-b*sqrt(D)` and `sqrt(D)` with optional sign. A value without a
    /// radical part takes the supplied default radicand.
    pub fn parse(s: &str, default_d: i64) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Domain(format!("malformed quadratic scalar {s:?}"));
        let Some(pos) = s.find("sqrt(") else {
            return Self::from_rational(default_d, parse_rational(&s)?);
        };
        let close = s[pos..].find(')').ok_or_else(bad)? + pos;
        if close != s.len() - 1 {
            return Err(bad());
        }
        let d: i64 = s[pos + 5..close].parse().map_err(|_| bad())?;
        let head = &s[..pos];
        // head is "[a(+|-)][coef*]" where coef may be empty.
        let (coef_text, a_text) = {
            let coef_end = head.strip_suffix('*').unwrap_or(head);
            let explicit_mul = coef_end.len() != head.len();
            // find the sign separating a from the coefficient, skipping a
            // leading sign and signs that follow '/'.
            let bytes = coef_end.as_bytes();
            let mut split = None;
            for i in (1..bytes.len()).rev() {
                if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/' {
                    split = Some(i);
                    break;
                }
            }
            match split {
                Some(i) => (&coef_end[i..], Some(&coef_end[..i])),
                None if explicit_mul || coef_end.is_empty() || coef_end == "-" || coef_end == "+" => {
                    (coef_end, None)
                }
                None => return Err(bad()),
            }
        };
        let b = match coef_text {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            t => parse_rational(t.strip_prefix('+').unwrap_or(t))?,
        };
        let a = match a_text {
            None => Rational::zero(),
            Some(t) => parse_rational(t)?,
        };
        if d != default_d && default_d != 0 {
            return Err(Error::Domain(format!("radicand {d} differs from field radicand {default_d}")));
        }
        Self::new(d, a, b)
    }
}

/// `(a + b sqrt D)(c + e sqrt D) = (ac + D be) + (ae + bc) sqrt D`.
pub fn quad_mul(x: &QuadScalar, y: &QuadScalar) -> Result<QuadScalar> {
    x.checked_mul(y)
}

/// Inverse as conjugate over norm.
pub fn quad_inv(x: &QuadScalar) -> Result<QuadScalar> {
    x.checked_inv()
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let radical = |b: &Rational| -> String {
            if b.is_one() {
                format!("sqrt({})", self.d)
            } else {
                format!("{}*sqrt({})", format_rational(b), self.d)
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.a)),
            (true, false) => {
                if self.b.is_negative() {
                    write!(f, "-{}", radical(&-self.b.clone()))
                } else {
                    write!(f, "{}", radical(&self.b))
                }
            }
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}-{}", format_rational(&self.a), radical(&-self.b.clone()))
                } else {
                    write!(f, "{}+{}", format_rational(&self.a), radical(&self.b))
                }
            }
        }
    }
}

impl Add for QuadScalar {
    type Output = QuadScalar;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("mixed quadratic fields")
    }
}

impl Sub for QuadScalar {
    type Output = QuadScalar;
    fn sub(self, rhs: Self) -> Self {
        self.checked_add(&-rhs).expect("mixed quadratic fields")
    }
}

impl Mul for QuadScalar {
    type Output = QuadScalar;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("mixed quadratic fields")
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> Self {
        QuadScalar { d: self.d, a: -self.a, b: -self.b }
    }
}

impl Ring for QuadScalar {
    fn zero_like(&self) -> Self {
        QuadScalar { d: self.d, a: Rational::zero(), b: Rational::zero() }
    }
    fn one_like(&self) -> Self {
        QuadScalar { d: self.d, a: Rational::one(), b: Rational::zero() }
    }
    fn from_i64_like(&self, v: i64) -> Self {
        QuadScalar { d: self.d, a: Rational::from_integer(BigInt::from(v)), b: Rational::zero() }
    }
    fn is_zero_elem(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl Field for QuadScalar {
    fn inverse(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
}
