//! Dense univariate polynomials, coefficients stored low-to-high.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{EuclideanDomain, Field, IntegralDomain, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<R: Ring> {
    domain: R::Domain,
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(domain: R::Domain, coeffs: Vec<R>) -> Self {
        let mut p = Poly { domain, coeffs };
        p.trim();
        p
    }

    /// Builds from a non-empty coefficient list, taking the domain from its first entry.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        let domain = coeffs.first().expect("coefficient list must be non-empty").domain();
        Poly::new(domain, coeffs)
    }

    pub fn from_i64s(domain: &R::Domain, coeffs: &[i64]) -> Self {
        Poly::new(
            domain.clone(),
            coeffs.iter().map(|&c| R::from_i64_in(domain, c)).collect(),
        )
    }

    pub fn zero(domain: &R::Domain) -> Self {
        Poly {
            domain: domain.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(domain: &R::Domain) -> Self {
        Poly::constant(R::one_in(domain))
    }

    pub fn constant(c: R) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The indeterminate λ.
    pub fn x(domain: &R::Domain) -> Self {
        Poly::new(domain.clone(), vec![R::zero_in(domain), R::one_in(domain)])
    }

    /// `λ − root`.
    pub fn linear(root: &R) -> Self {
        Poly::from_coeffs(vec![-root.clone(), root.one_like()])
    }

    pub fn monomial(c: R, k: usize) -> Self {
        let domain = c.domain();
        let mut coeffs = vec![R::zero_in(&domain); k];
        coeffs.push(c);
        Poly::new(domain, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn base_domain(&self) -> &R::Domain {
        &self.domain
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(|| R::zero_in(&self.domain))
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero_in(&self.domain), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(
            self.domain.clone(),
            self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| R::from_i64_in(&self.domain, i as i64) * c.clone())
            .collect();
        Poly::new(self.domain.clone(), coeffs)
    }

    /// Multiplication by λ^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero_in(&self.domain); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(self.domain.clone(), coeffs)
    }

    pub fn map<S: Ring>(&self, domain: S::Domain, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(domain, self.coeffs.iter().map(f).collect())
    }

    /// Multiplicity of λ as a factor (0 for nonzero constant term; `None` for zero).
    pub fn trailing_zeros(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn render(&self, var: &str, unicode: bool) -> String {
        render_poly(self, var, unicode)
    }
}

impl<F: Field> Poly<F> {
    /// Monic associate; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Poly<R>) -> Poly<R> {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (a, b) in long.coeffs.iter_mut().zip(short.coeffs) {
            *a = a.clone() + b;
        }
        long.trim();
        long
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            domain: self.domain,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Poly<R>) -> Poly<R> {
        self + (-rhs)
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Poly<R>) -> Poly<R> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::zero(&self.domain);
        }
        let mut out = vec![R::zero_in(&self.domain); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(self.domain, out)
    }
}

impl<R: Ring> Ring for Poly<R> {
    type Domain = R::Domain;

    fn domain(&self) -> R::Domain {
        self.domain.clone()
    }
    fn zero_in(domain: &R::Domain) -> Self {
        Poly::zero(domain)
    }
    fn one_in(domain: &R::Domain) -> Self {
        Poly::one(domain)
    }
    fn from_i64_in(domain: &R::Domain, value: i64) -> Self {
        Poly::new(domain.clone(), vec![R::from_i64_in(domain, value)])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    /// Degree first, then coefficients compared from the constant term upward.
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.canonical_cmp(b))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

/// Exact long division, valid over any integral domain when the quotient exists.
impl<R: IntegralDomain> IntegralDomain for Poly<R> {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let dlen = divisor.coeffs.len();
        if dlen == 0 {
            return None;
        }
        if self.coeffs.is_empty() {
            return Some(self.clone());
        }
        if self.coeffs.len() < dlen {
            return None;
        }
        let lc = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![R::zero_in(&self.domain); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dlen - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.exact_div(lc)?;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - q.clone() * d.clone();
            }
            quot[k] = q;
        }
        rem.iter()
            .all(|c| c.is_zero())
            .then(|| Poly::new(self.domain.clone(), quot))
    }
}

impl<F: Field> EuclideanDomain for Poly<F> {
    type Size = usize;

    fn euclid_size(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lc_inv = divisor
            .leading()
            .expect("polynomial division by zero")
            .inv()
            .expect("nonzero leading coefficient");
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return (Poly::zero(&self.domain), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero_in(&self.domain); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dlen - 1].clone() * lc_inv.clone();
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - q.clone() * d.clone();
            }
            quot[k] = q;
        }
        rem.truncate(dlen - 1);
        (
            Poly::new(self.domain.clone(), quot),
            Poly::new(self.domain.clone(), rem),
        )
    }

    fn normalize(&self) -> (Self, Self) {
        match self.leading() {
            None => (self.clone(), Poly::one(&self.domain)),
            Some(lc) => (self.monic(), Poly::constant(lc.clone())),
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            self.coeffs[0].inv().map(Poly::constant)
        } else {
            None
        }
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// Exponent suffix: `³` in unicode mode, `^3` otherwise; empty for 1.
pub fn exponent_suffix(e: usize, unicode: bool) -> String {
    match (e, unicode) {
        (1, _) => String::new(),
        (_, true) => superscript(e),
        (_, false) => format!("^{e}"),
    }
}

fn render_poly<R: Ring>(p: &Poly<R>, var: &str, unicode: bool) -> String {
    if p.coeffs.is_empty() {
        return "0".to_string();
    }
    let minus = if unicode { "−" } else { "-" };
    let mut out = String::new();
    for (k, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push_str(minus);
            }
        } else {
            out.push_str(if negative { " " } else { " + " });
            if negative {
                out.push_str(minus);
                out.push(' ');
            }
        }
        let mag = magnitude.to_string();
        let mag = if mag.contains(['/', ' ', '+', '-']) {
            format!("({mag})")
        } else {
            mag
        };
        let power = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}{}", exponent_suffix(k, unicode)),
        };
        if k == 0 {
            out.push_str(&mag);
        } else if magnitude.is_one() {
            out.push_str(&power);
        } else if unicode {
            out.push_str(&mag);
            out.push_str(&power);
        } else {
            out.push_str(&format!("{mag}*{power}"));
        }
    }
    out
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_poly(self, "λ", true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::{Fp, Modulus};
    use crate::algebra::scalar::gcd;
    use crate::{qpoly, Q};

    #[test]
    fn trims_and_degrees() {
        let p = qpoly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(qpoly(&[0, 0]).degree(), None);
    }

    #[test]
    fn division_identity() {
        let f = qpoly(&[-6, 11, -6, 1]);
        let g = qpoly(&[-1, 1]);
        let (q, r) = f.div_rem(&g);
        assert!(r.is_zero());
        assert_eq!(q, qpoly(&[6, -5, 1]));
        let (q, r) = qpoly(&[1, 0, 1]).div_rem(&qpoly(&[1, 1]));
        assert_eq!(q * qpoly(&[1, 1]) + r.clone(), qpoly(&[1, 0, 1]));
        assert_eq!(r, qpoly(&[2]));
    }

    #[test]
    fn gcd_shared_factor() {
        // (λ−1)²(λ−2) and (λ−1)(λ−3)
        let f = qpoly(&[-1, 1]) * qpoly(&[-1, 1]) * qpoly(&[-2, 1]);
        let g = qpoly(&[-1, 1]) * qpoly(&[-3, 1]);
        assert_eq!(gcd(&f, &g), qpoly(&[-1, 1]));
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let f = qpoly(&[2, 4]);
        assert_eq!(
            gcd(&f, &Poly::zero(&())),
            qpoly(&[0, 1]) + Poly::constant(Q::new(1.into(), 2.into()))
        );
        assert!(gcd(&Poly::<Q>::zero(&()), &Poly::zero(&())).is_zero());
    }

    #[test]
    fn gcd_over_gf2() {
        let m = Modulus::new(2).unwrap();
        let f = Poly::<Fp>::from_i64s(&m, &[1, 0, 1]);
        let g = Poly::<Fp>::from_i64s(&m, &[1, 1]);
        assert_eq!(gcd(&f, &g), g);
        // λ²+1 = (λ+1)² over GF(2)
        assert_eq!(g.clone() * g, f);
    }

    #[test]
    fn derivative_in_characteristic_p() {
        let m = Modulus::new(3).unwrap();
        let f = Poly::<Fp>::monomial(Fp::new(1, m), 3);
        assert!(f.derivative().is_zero());
    }

    #[test]
    fn exact_division_over_integers() {
        use num_bigint::BigInt;
        let f = Poly::<BigInt>::from_i64s(&(), &[-2, 0, 2]);
        let g = Poly::<BigInt>::from_i64s(&(), &[-1, 1]);
        assert_eq!(f.exact_div(&g), Some(Poly::from_i64s(&(), &[2, 2])));
        assert_eq!(f.exact_div(&Poly::from_i64s(&(), &[1, 3])), None);
    }

    #[test]
    fn rendering() {
        let f = qpoly(&[0, -3, 4, -1]);
        assert_eq!(f.render("x", false), "-x^3 + 4*x^2 - 3*x");
        assert_eq!(f.to_string(), "−λ³ + 4λ² − 3λ");
        assert_eq!(qpoly(&[-1, 1]).to_string(), "λ − 1");
        let half = Poly::constant(Q::new(1.into(), 2.into())) * qpoly(&[0, 1]);
        assert_eq!(half.render("x", false), "(1/2)*x");
    }

    #[test]
    fn canonical_order_degree_then_low_coefficients() {
        let a = qpoly(&[-3, 1]);
        let b = qpoly(&[-2, 1]);
        let c = qpoly(&[1, 0, 1]);
        assert_eq!(a.canonical_cmp(&b), Ordering::Less);
        assert_eq!(b.canonical_cmp(&c), Ordering::Less);
    }
}
