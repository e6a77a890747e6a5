use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Ring;

/// Residue class modulo `n >= 2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ZMod {
    value: u64,
    modulus: u64,
}

impl ZMod {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        let m = modulus as i128;
        let v = ((value as i128 % m) + m) % m;
        ZMod { value: v as u64, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
    }
}

impl fmt::Display for ZMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for ZMod {
    type Output = ZMod;
    fn add(self, rhs: Self) -> Self {
        self.check(&rhs);
        ZMod { value: ((self.value as u128 + rhs.value as u128) % self.modulus as u128) as u64, modulus: self.modulus }
    }
}

impl Sub for ZMod {
    type Output = ZMod;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for ZMod {
    type Output = ZMod;
    fn mul(self, rhs: Self) -> Self {
        self.check(&rhs);
        ZMod { value: ((self.value as u128 * rhs.value as u128) % self.modulus as u128) as u64, modulus: self.modulus }
    }
}

impl Neg for ZMod {
    type Output = ZMod;
    fn neg(self) -> Self {
        ZMod { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }
}

impl Ring for ZMod {
    fn zero_like(&self) -> Self {
        ZMod { value: 0, modulus: self.modulus }
    }
    fn one_like(&self) -> Self {
        ZMod { value: 1, modulus: self.modulus }
    }
    fn from_i64_like(&self, v: i64) -> Self {
        ZMod::new(v, self.modulus)
    }
    fn is_zero_elem(&self) -> bool {
        self.value == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = ZMod::new(-1, 6);
        assert_eq!(a.value(), 5);
        assert_eq!((a * a).value(), 1);
        assert_eq!((a + ZMod::new(3, 6)).value(), 2);
        assert_eq!((-ZMod::new(0, 6)).value(), 0);
    }
}
