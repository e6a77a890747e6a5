use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{rat, Rational};
use crate::error::{Error, Result};

pub const DEFAULT_BERNOULLI_BOUND: u32 = 200;

/// Bernoulli number `B_n` with `B_1 = -1/2`, `B_2 = 1/6`, `B_4 = -1/30`.
///
/// Only `n = 1` and even `n` are accepted; odd indices above one vanish and
/// are rejected as a domain error.
pub fn bernoulli(n: u32) -> Result<Rational> {
    bernoulli_with_bound(n, DEFAULT_BERNOULLI_BOUND)
}

pub fn bernoulli_with_bound(n: u32, bound: u32) -> Result<Rational> {
    if n > 1 && n % 2 == 1 {
        return Err(Error::Domain(format!("B_{n}: odd index above 1")));
    }
    if n > bound {
        return Err(Error::Resource(format!("B_{n} exceeds bound {bound}")));
    }
    if n == 1 {
        return Ok(rat(-1, 2));
    }
    Ok(akiyama_tanigawa(n as usize))
}

// Akiyama–Tanigawa triangle. It yields B_1 = +1/2, which is irrelevant here
// since only even indices reach it.
fn akiyama_tanigawa(n: usize) -> Rational {
    let mut row: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        row.push(Rational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = row[j - 1].clone() - row[j].clone();
            row[j - 1] = Rational::from_integer(BigInt::from(j)) * diff;
        }
    }
    let b = row[0].clone();
    if b.is_zero() {
        Rational::zero()
    } else {
        b
    }
}
