//! Homogeneous binary forms in `(u, v)` and points of the projective line.

use std::cmp::Ordering;
use std::fmt;

use super::poly::{exponent_suffix, Poly};
use super::scalar::{Field, Ring};
use crate::error::{Error, Result};

/// `Σ c_k u^k v^{d−k}` for `k = 0..=d`; the degree is fixed even when
/// leading coefficients vanish, and the zero form is allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm<F: Field> {
    domain: F::Domain,
    degree: usize,
    coeffs: Vec<F>,
}

impl<F: Field> BinaryForm<F> {
    pub fn new(domain: F::Domain, degree: usize, mut coeffs: Vec<F>) -> Result<Self> {
        if coeffs.len() > degree + 1 {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for a form of degree {degree}",
                coeffs.len()
            )));
        }
        coeffs.resize(degree + 1, F::zero_in(&domain));
        Ok(BinaryForm { domain, degree, coeffs })
    }

    pub fn zero(domain: &F::Domain, degree: usize) -> Self {
        BinaryForm {
            domain: domain.clone(),
            degree,
            coeffs: vec![F::zero_in(domain); degree + 1],
        }
    }

    /// Homogenizes `p(λ)` at degree `d ≥ deg p` with `λ = u / v`.
    pub fn homogenize(p: &Poly<F>, degree: usize) -> Result<Self> {
        if p.degree().is_some_and(|dp| dp > degree) {
            return Err(Error::InconsistentDegree {
                expected: degree,
                got: p.degree().unwrap(),
            });
        }
        Self::new(p.base_domain().clone(), degree, p.coeffs().to_vec())
    }

    /// `f(λ, 1)`.
    pub fn dehomogenize(&self) -> Poly<F> {
        Poly::new(self.domain.clone(), self.coeffs.clone())
    }

    /// `f(1, μ)`: coefficient of `μ^j` is `c_{d−j}`.
    pub fn dehomogenize_at_infinity(&self) -> Poly<F> {
        Poly::new(self.domain.clone(), self.coeffs.iter().rev().cloned().collect())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn domain(&self) -> &F::Domain {
        &self.domain
    }

    /// Coefficient of `u^k v^{d−k}`.
    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn eval(&self, u: &F, v: &F) -> F {
        let mut acc = F::zero_in(&self.domain);
        for (k, c) in self.coeffs.iter().enumerate() {
            acc = acc + c.clone() * u.power(k as u64) * v.power((self.degree - k) as u64);
        }
        acc
    }

    pub fn scale(&self, c: &F) -> Self {
        BinaryForm {
            domain: self.domain.clone(),
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// Multiplicity of the point at infinity `(1:0)`, i.e. the power of `v`
    /// dividing the form; `None` for the zero form.
    pub fn infinity_multiplicity(&self) -> Option<usize> {
        let top = self.coeffs.iter().rposition(|c| !c.is_zero())?;
        Some(self.degree - top)
    }

    /// `(a·u + b·v)^e` product helper.
    pub fn linear_power(a: &F, b: &F, e: usize) -> Self {
        let domain = a.domain();
        let mut acc = Self::new(domain.clone(), 0, vec![F::one_in(&domain)]).unwrap();
        let lin = Self::new(domain, 1, vec![b.clone(), a.clone()]).unwrap();
        for _ in 0..e {
            acc = &acc * &lin;
        }
        acc
    }

    fn render_term(c: &F, k: usize, d: usize, unicode: bool, out: &mut String) {
        let mut mono = String::new();
        for (var, e) in [("u", k), ("v", d - k)] {
            if e == 0 {
                continue;
            }
            if !mono.is_empty() && !unicode {
                mono.push('*');
            }
            mono.push_str(var);
            mono.push_str(&exponent_suffix(e, unicode));
        }
        let neg = c.is_negative();
        let mag = if neg { -c.clone() } else { c.clone() };
        let minus = if unicode { "−" } else { "-" };
        if out.is_empty() {
            if neg {
                out.push_str(minus);
            }
        } else {
            out.push_str(if neg { " " } else { " + " });
            if neg {
                out.push_str(minus);
                out.push(' ');
            }
        }
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if !mag.is_one() {
            let s = mag.to_string();
            if s.contains('/') {
                out.push_str(&format!("({s})"));
            } else {
                out.push_str(&s);
            }
            if !unicode {
                out.push('*');
            }
            out.push_str(&mono);
        } else {
            out.push_str(&mono);
        }
    }

    /// Terms in descending powers of `u`.
    pub fn render(&self, unicode: bool) -> String {
        let mut out = String::new();
        for k in (0..=self.degree).rev() {
            let c = &self.coeffs[k];
            if !c.is_zero() {
                Self::render_term(c, k, self.degree, unicode, &mut out);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<F: Field> std::ops::Mul for &BinaryForm<F> {
    type Output = BinaryForm<F>;
    fn mul(self, rhs: &BinaryForm<F>) -> BinaryForm<F> {
        let d = self.degree + rhs.degree;
        let mut coeffs = vec![F::zero_in(&self.domain); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        BinaryForm {
            domain: self.domain.clone(),
            degree: d,
            coeffs,
        }
    }
}

impl<F: Field> std::ops::Neg for &BinaryForm<F> {
    type Output = BinaryForm<F>;
    fn neg(self) -> BinaryForm<F> {
        self.scale(&-F::one_in(&self.domain))
    }
}

impl<F: Field> fmt::Display for BinaryForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

/// A point `(a : b)` of the projective line, normalized to `b = 1` when
/// `b ≠ 0` and to `(1 : 0)` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousPoint<F: Field> {
    a: F,
    b: F,
}

impl<F: Field> HomogeneousPoint<F> {
    pub fn new(a: F, b: F) -> Result<Self> {
        if b.is_zero() {
            if a.is_zero() {
                return Err(Error::InvalidParameter("point (0 : 0)".into()));
            }
            return Ok(Self::infinity(&a.domain()));
        }
        let inv = b.inv().expect("nonzero");
        Ok(HomogeneousPoint {
            a: a * inv,
            b: b.one_like(),
        })
    }

    pub fn finite(c: F) -> Self {
        let one = c.one_like();
        HomogeneousPoint { a: c, b: one }
    }

    pub fn infinity(domain: &F::Domain) -> Self {
        HomogeneousPoint {
            a: F::one_in(domain),
            b: F::zero_in(domain),
        }
    }

    pub fn a(&self) -> &F {
        &self.a
    }

    pub fn b(&self) -> &F {
        &self.b
    }

    pub fn is_infinite(&self) -> bool {
        self.b.is_zero()
    }

    /// Affine coordinate `a / b` for finite points.
    pub fn value(&self) -> Option<&F> {
        (!self.is_infinite()).then_some(&self.a)
    }

    /// The linear form vanishing at this point as `(coeff of u, coeff of v)`:
    /// `u − a·v` for finite points, `v` at infinity.
    pub fn linear_factor(&self) -> (F, F) {
        if self.is_infinite() {
            (self.a.zero_like(), self.a.one_like())
        } else {
            (self.b.clone(), -self.a.clone())
        }
    }

    /// Finite points by value, then infinity last.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        match (self.value(), other.value()) {
            (Some(x), Some(y)) => x.canonical_cmp(y),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => Ordering::Equal,
        }
    }

    /// Renders the vanishing linear form, e.g. `(u − 3v)` or `v`.
    pub fn render_factor(&self, exponent: usize, unicode: bool) -> String {
        let (cu, cv) = self.linear_factor();
        let form = BinaryForm::new(self.a.domain(), 1, vec![cv, cu]).expect("degree 1");
        let body = form.render(unicode);
        let mut s = if body.contains(' ') { format!("({body})") } else { body };
        s.push_str(&exponent_suffix(exponent, unicode));
        s
    }
}

impl<F: Field> fmt::Display for HomogeneousPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {})", self.a, self.b)
    }
}
