//! Exact scalars, univariate polynomials, factorization and real roots.

pub mod binary_form;
pub mod factor;
pub mod fp;
pub mod poly;
pub mod scalar;
pub mod sturm;

pub use binary_form::{BinaryForm, HomogeneousPoint};
pub use factor::{factor, rational_roots, squarefree_decompose, Factor, FactorField, Factorization};
pub use fp::{Fp, Modulus};
pub use poly::Poly;
pub use scalar::{ext_gcd, gcd, EuclideanDomain, Field, IntegralDomain, Ring};
pub use sturm::{isolate_real_roots, sturm_count, Bound, RootInterval};

/// Monic greatest common divisor of two polynomials over one field; `gcd(0, 0) = 0`.
pub fn poly_gcd<F: Field>(f: &Poly<F>, g: &Poly<F>) -> crate::Result<Poly<F>> {
    if f.base_domain() != g.base_domain() {
        return Err(crate::Error::DomainMismatch);
    }
    Ok(gcd(f, g))
}
