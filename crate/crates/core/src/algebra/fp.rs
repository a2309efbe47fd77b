//! Prime fields GF(p) with a word-sized modulus chosen at runtime.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{EuclideanDomain, Field, IntegralDomain, Ring};
use crate::error::{Error, Result};

/// A checked prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    /// Accepts `p` only if it is prime (trial division; intended for small moduli).
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Modulus(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Residue in `[0, p)` tagged with its modulus.
///
/// Mixing residues of different moduli panics: cross-domain arithmetic is a
/// programming error, and parsed inputs are checked for field agreement
/// before any arithmetic happens.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: Modulus,
}

impl Fp {
    pub fn new(value: i64, modulus: Modulus) -> Self {
        let p = modulus.0 as i128;
        let v = (value as i128).rem_euclid(p) as u64;
        Fp { value: v, modulus }
    }

    pub fn from_u64(value: u64, modulus: Modulus) -> Self {
        Fp {
            value: value % modulus.0,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    fn check(&self, other: &Fp) {
        assert_eq!(
            self.modulus, other.modulus,
            "arithmetic between GF({}) and GF({}) is rejected",
            self.modulus.0, other.modulus.0
        );
    }

    fn pow_u64(self, mut exp: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::from_u64(1, self.modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let p = self.modulus.0 as u128;
        let v = (self.value as u128 + rhs.value as u128) % p;
        Fp {
            value: v as u64,
            modulus: self.modulus,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        let v = if self.value == 0 {
            0
        } else {
            self.modulus.0 - self.value
        };
        Fp {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let p = self.modulus.0 as u128;
        let v = (self.value as u128 * rhs.value as u128) % p;
        Fp {
            value: v as u64,
            modulus: self.modulus,
        }
    }
}

impl Ring for Fp {
    type Domain = Modulus;

    fn domain(&self) -> Modulus {
        self.modulus
    }
    fn zero_in(m: &Modulus) -> Self {
        Fp::from_u64(0, *m)
    }
    fn one_in(m: &Modulus) -> Self {
        Fp::from_u64(1, *m)
    }
    fn from_i64_in(m: &Modulus, value: i64) -> Self {
        Fp::new(value, *m)
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value)
    }
}

impl IntegralDomain for Fp {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        divisor.inv().map(|d| *self * d)
    }
}

impl EuclideanDomain for Fp {
    type Size = u8;

    fn euclid_size(&self) -> u8 {
        0
    }

    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        (self.div(divisor), self.zero_like())
    }

    fn normalize(&self) -> (Self, Self) {
        if self.value == 0 {
            (*self, self.one_like())
        } else {
            (self.one_like(), *self)
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.inv()
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        // Fermat: a^(p-2) = a^-1
        (self.value != 0).then(|| self.pow_u64(self.modulus.0 - 2))
    }

    fn characteristic(&self) -> u64 {
        self.modulus.0
    }

    fn elements(m: &Modulus) -> Option<Vec<Self>> {
        Some((0..m.0).map(|v| Fp::from_u64(v, *m)).collect())
    }
}
