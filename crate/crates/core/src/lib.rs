//! Exact computation of Smith forms, invariant factors, elementary divisors,
//! rational/primary/Jordan canonical forms, regular matrix pencils and the
//! spectral analysis of small-oscillation systems.
//!
//! Everything is exact: integers and rationals are arbitrary precision and
//! prime fields carry their modulus. The algorithms are generic over the
//! coefficient traits in [`algebra::scalar`]; the aliases below fix the
//! concrete domains used in practice.

pub mod algebra;
pub mod canonical;
pub mod error;
pub mod matrix;
pub mod oscillations;
pub mod pencil;
pub mod smith;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::BigRational;

pub use algebra::{Fp, Modulus, Poly};
pub use matrix::Mat;

/// Arbitrary-precision integer.
pub type Int = BigInt;
/// Arbitrary-precision rational in lowest terms.
pub type Q = BigRational;
pub type QPoly = Poly<Q>;
pub type FpPoly = Poly<Fp>;
pub type IntMat = Mat<Int>;
pub type QMat = Mat<Q>;
pub type FpMat = Mat<Fp>;
pub type QPolyMat = Mat<QPoly>;

/// Rational polynomial from integer coefficients, constant term first.
pub fn qpoly(coeffs: &[i64]) -> QPoly {
    Poly::from_i64s(&(), coeffs)
}

/// Rational matrix from integer rows.
pub fn qmat(rows: &[&[i64]]) -> QMat {
    Mat::from_i64_rows(&(), rows)
}

/// Rational vector from integers.
pub fn qvec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| Q::from_integer(x.into())).collect()
}

/// Matrix over GF(p) from integer rows (reduced mod p).
pub fn fpmat(m: Modulus, rows: &[&[i64]]) -> FpMat {
    Mat::from_i64_rows(&m, rows)
}
