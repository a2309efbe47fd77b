//! Coefficient-domain traits.
//!
//! Elements carry their own domain (the modulus for prime fields, nothing
//! for ℤ and ℚ), so constants can always be produced from an existing
//! element or an explicit domain value. No global state is involved.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with identity whose elements know their domain.
pub trait Ring:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    type Domain: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn domain(&self) -> Self::Domain;
    fn zero_in(domain: &Self::Domain) -> Self;
    fn one_in(domain: &Self::Domain) -> Self;
    fn from_i64_in(domain: &Self::Domain, value: i64) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one_in(&self.domain())
    }

    fn zero_like(&self) -> Self {
        Self::zero_in(&self.domain())
    }

    fn one_like(&self) -> Self {
        Self::one_in(&self.domain())
    }

    /// Total order used only for deterministic output; carries no algebraic meaning.
    fn canonical_cmp(&self, other: &Self) -> Ordering;

    /// Whether the element prints with a leading minus sign.
    fn is_negative(&self) -> bool {
        false
    }

    fn power(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// A ring without zero divisors, with exact division where it exists.
pub trait IntegralDomain: Ring {
    /// `Some(q)` with `q * divisor == self`, `None` if the division is not exact
    /// or the divisor is zero.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

/// A Euclidean domain (ℤ, F\[λ\], or a field).
pub trait EuclideanDomain: IntegralDomain {
    type Size: Ord + Clone + fmt::Debug;

    /// Euclidean size of a nonzero element.
    fn euclid_size(&self) -> Self::Size;

    /// Quotient and remainder with `r == 0` or `size(r) < size(divisor)`.
    fn div_rem(&self, divisor: &Self) -> (Self, Self);

    /// Splits `self = unit * normal` with `normal` the canonical associate
    /// (positive for ℤ, monic for polynomials, 1 for nonzero field elements).
    /// Returns `(normal, unit)`; zero maps to `(0, 1)`.
    fn normalize(&self) -> (Self, Self);

    fn unit_inverse(&self) -> Option<Self>;

    fn is_unit(&self) -> bool {
        self.unit_inverse().is_some()
    }

    fn normalized(&self) -> Self {
        self.normalize().0
    }
}

pub trait Field: EuclideanDomain {
    fn inv(&self) -> Option<Self>;

    /// 0 for ℚ, p for GF(p).
    fn characteristic(&self) -> u64;

    fn div(&self, other: &Self) -> Self {
        self.clone() * other.inv().expect("division by zero field element")
    }

    /// All elements of a finite field in increasing residue order; `None` for ℚ.
    fn elements(domain: &Self::Domain) -> Option<Vec<Self>>;
}

/// Normalized greatest common divisor over a Euclidean domain; `gcd(0, 0) = 0`.
pub fn gcd<R: EuclideanDomain>(a: &R, b: &R) -> R {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    a.normalized()
}

/// Extended Euclid: returns `(g, s, t)` with `s·a + t·b = g`, `g` normalized.
pub fn ext_gcd<R: EuclideanDomain>(a: &R, b: &R) -> (R, R, R) {
    let zero = a.zero_like();
    let one = a.one_like();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (one.clone(), zero.clone());
    let (mut t0, mut t1) = (zero, one);
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let s = s0 - q.clone() * s1.clone();
        s0 = std::mem::replace(&mut s1, s);
        let t = t0 - q * t1.clone();
        t0 = std::mem::replace(&mut t1, t);
    }
    let (g, unit) = r0.normalize();
    let inv = unit.unit_inverse().expect("normalizing unit is invertible");
    (g, s0 * inv.clone(), t0 * inv)
}

// ---------------------------------------------------------------------------
// ℤ

impl Ring for BigInt {
    type Domain = ();

    fn domain(&self) {}
    fn zero_in(_: &()) -> Self {
        BigInt::zero()
    }
    fn one_in(_: &()) -> Self {
        BigInt::one()
    }
    fn from_i64_in(_: &(), value: i64) -> Self {
        BigInt::from(value)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl IntegralDomain for BigInt {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            return None;
        }
        let (q, r) = Integer::div_rem(self, divisor);
        Zero::is_zero(&r).then_some(q)
    }
}

impl EuclideanDomain for BigInt {
    type Size = BigUint;

    fn euclid_size(&self) -> BigUint {
        self.magnitude().clone()
    }

    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        Integer::div_rem(self, divisor)
    }

    fn normalize(&self) -> (Self, Self) {
        match self.sign() {
            Sign::Minus => (-self.clone(), -BigInt::one()),
            _ => (self.clone(), BigInt::one()),
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        One::is_one(&self.abs()).then(|| self.clone())
    }
}

// ---------------------------------------------------------------------------
// ℚ

impl Ring for BigRational {
    type Domain = ();

    fn domain(&self) {}
    fn zero_in(_: &()) -> Self {
        BigRational::zero()
    }
    fn one_in(_: &()) -> Self {
        BigRational::one()
    }
    fn from_i64_in(_: &(), value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl IntegralDomain for BigRational {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        (!Zero::is_zero(divisor)).then(|| self / divisor)
    }
}

impl EuclideanDomain for BigRational {
    type Size = u8;

    fn euclid_size(&self) -> u8 {
        0
    }

    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        (self / divisor, BigRational::zero())
    }

    fn normalize(&self) -> (Self, Self) {
        if Zero::is_zero(self) {
            (BigRational::zero(), BigRational::one())
        } else {
            (BigRational::one(), self.clone())
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        self.unit_inverse()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn elements(_: &()) -> Option<Vec<Self>> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn integer_gcd_is_positive() {
        assert_eq!(gcd(&int(-12), &int(18)), int(6));
        assert_eq!(gcd(&int(0), &int(-5)), int(5));
        assert_eq!(gcd(&int(0), &int(0)), int(0));
    }

    #[test]
    fn integer_ext_gcd_bezout() {
        for (a, b) in [(240, 46), (-7, 3), (0, 9), (12, -18)] {
            let (g, s, t) = ext_gcd(&int(a), &int(b));
            assert_eq!(s * int(a) + t * int(b), g.clone());
            assert_eq!(g, gcd(&int(a), &int(b)));
        }
    }

    #[test]
    fn integer_exact_div() {
        assert_eq!(int(12).exact_div(&int(-4)), Some(int(-3)));
        assert_eq!(int(12).exact_div(&int(5)), None);
        assert_eq!(int(12).exact_div(&int(0)), None);
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(Ring::power(&int(3), 5), int(243));
        assert_eq!(Ring::power(&int(-2), 0), int(1));
    }
}
