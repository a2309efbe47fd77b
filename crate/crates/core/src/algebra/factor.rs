//! Square-free decomposition, irreducible factorization and rational roots.
//!
//! Over GF(p) the square-free parts are split by deterministic Berlekamp.
//! Over ℚ linear factors come from rational-root enumeration; what remains is
//! split by Kronecker's interpolation method up to degree 8. Larger residuals
//! are kept whole and flagged as not certified irreducible.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::fp::Fp;
use super::poly::Poly;
use super::scalar::{gcd, EuclideanDomain, Field, IntegralDomain, Ring};
use crate::error::{Error, Result};
use crate::matrix::{nullspace, Mat};

/// Residuals of higher degree than this are not split over ℚ.
pub const KRONECKER_DEGREE_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor<F: Field> {
    pub poly: Poly<F>,
    pub exponent: usize,
    /// False when the factor is an unsplit residual that may still be reducible.
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<F: Field> {
    pub unit: F,
    pub factors: Vec<Factor<F>>,
}

impl<F: Field> Factorization<F> {
    /// Product of all factors with the leading coefficient restored.
    pub fn expand(&self) -> Poly<F> {
        self.factors.iter().fold(Poly::constant(self.unit.clone()), |acc, f| {
            acc * f.poly.power(f.exponent as u64)
        })
    }

    pub fn is_complete(&self) -> bool {
        self.factors.iter().all(|f| f.certified)
    }

    pub fn splits(&self) -> bool {
        self.factors.iter().all(|f| f.poly.degree() == Some(1))
    }
}

/// Fields over which univariate polynomials can be factored.
pub trait FactorField: Field {
    /// Splits a monic square-free polynomial of positive degree into monic
    /// pieces, each flagged with whether it is certified irreducible.
    fn split_squarefree(f: &Poly<Self>) -> Vec<(Poly<Self>, bool)>;
}

/// Sorts by degree, then coefficient list from the constant term upward.
pub fn poly_order<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Ordering {
    a.canonical_cmp(b)
}

/// Square-free decomposition of a nonzero polynomial: monic, pairwise coprime
/// square-free parts `g_i` with `Π g_i^{m_i} = monic(f)`, sorted by multiplicity.
pub fn squarefree_decompose<F: Field>(f: &Poly<F>) -> Result<Vec<(Poly<F>, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut parts = Vec::new();
    squarefree_into(&f.monic(), 1, &mut parts);
    parts.sort_by_key(|a| a.1);
    // merge equal multiplicities (coprime, so the product stays square-free)
    let mut merged: Vec<(Poly<F>, usize)> = Vec::new();
    for (g, m) in parts {
        match merged.last_mut() {
            Some((h, k)) if *k == m => *h = h.clone() * g,
            _ => merged.push((g, m)),
        }
    }
    Ok(merged)
}

fn squarefree_into<F: Field>(f: &Poly<F>, scale: usize, out: &mut Vec<(Poly<F>, usize)>) {
    if f.degree().unwrap_or(0) == 0 {
        return;
    }
    let p = f.leading().unwrap().characteristic();
    let mut c = gcd(f, &f.derivative());
    let mut w = f.exact_div(&c).expect("gcd divides f");
    let mut i = 1;
    while w.degree() != Some(0) {
        let y = gcd(&w, &c);
        let fac = w.exact_div(&y).expect("gcd divides w");
        if fac.degree() != Some(0) {
            out.push((fac.monic(), i * scale));
        }
        w = y.clone();
        c = c.exact_div(&y).expect("gcd divides c");
        i += 1;
    }
    if c.degree() != Some(0) {
        // only in characteristic p: c is a p-th power
        assert!(p > 0, "non-constant cofactor in characteristic 0");
        let root = pth_root(&c, p);
        squarefree_into(&root.monic(), scale * p as usize, out);
    }
}

/// `g` with `g(λ)^p = f(λ)`; valid over GF(p) where every coefficient is its own p-th root.
fn pth_root<F: Field>(f: &Poly<F>, p: u64) -> Poly<F> {
    let p = p as usize;
    let coeffs = f.coeffs().iter().step_by(p).cloned().collect();
    debug_assert!(f.coeffs().iter().enumerate().all(|(i, c)| i % p == 0 || c.is_zero()));
    Poly::new(f.base_domain().clone(), coeffs)
}

pub fn is_squarefree<F: Field>(f: &Poly<F>) -> bool {
    !f.is_zero() && gcd(f, &f.derivative()).degree() == Some(0)
}

/// Complete factorization into monic irreducibles, sorted by (degree, coefficients).
pub fn factor<F: FactorField>(f: &Poly<F>) -> Result<Factorization<F>> {
    let unit = f.leading().ok_or(Error::ZeroPolynomial)?.clone();
    let mut factors = Vec::new();
    for (part, m) in squarefree_decompose(f)? {
        for (poly, certified) in F::split_squarefree(&part) {
            factors.push(Factor {
                poly,
                exponent: m,
                certified,
            });
        }
    }
    factors.sort_by(|a, b| poly_order(&a.poly, &b.poly).then(b.exponent.cmp(&a.exponent)));
    Ok(Factorization { unit, factors })
}

// ---------------------------------------------------------------------------
// GF(p): Berlekamp

impl FactorField for Fp {
    fn split_squarefree(f: &Poly<Fp>) -> Vec<(Poly<Fp>, bool)> {
        berlekamp(f).into_iter().map(|g| (g, true)).collect()
    }
}

/// Deterministic Berlekamp splitting of a monic square-free polynomial over GF(p).
pub fn berlekamp(f: &Poly<Fp>) -> Vec<Poly<Fp>> {
    let n = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![f.clone()],
        Some(n) => n,
    };
    let m = *f.base_domain();
    let p = m.get();
    // Row i of Q holds λ^{ip} mod f.
    let xp = pow_mod(&Poly::x(&m), p, f);
    let mut rows = Vec::with_capacity(n);
    let mut cur = Poly::one(&m);
    for _ in 0..n {
        rows.push((0..n).map(|j| cur.coeff(j)).collect::<Vec<_>>());
        cur = (cur * xp.clone()).div_rem(f).1;
    }
    // v with Σ_j v_j (Q_j − e_j) = 0, i.e. (Q − I)ᵀ v = 0
    let q_minus_i = Mat::from_fn(&m, n, n, |i, j| {
        let mut v = rows[j][i];
        if i == j {
            v = v - Fp::one_in(&m);
        }
        v
    });
    let basis = nullspace(&q_minus_i);
    let k = basis.len();
    let mut pieces = vec![f.clone()];
    'outer: for v in &basis {
        let g = Poly::new(m, v.clone());
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        for s in 0..p {
            let shifted = g.clone() - Poly::constant(Fp::from_u64(s, m));
            let mut next = Vec::with_capacity(pieces.len() + 1);
            for h in pieces {
                if h.degree() == Some(1) {
                    next.push(h);
                    continue;
                }
                let d = gcd(&h, &shifted);
                match d.degree() {
                    Some(dd) if dd > 0 && Some(dd) < h.degree() => {
                        next.push(h.exact_div(&d).unwrap().monic());
                        next.push(d);
                    }
                    _ => next.push(h),
                }
            }
            pieces = next;
            if pieces.len() == k {
                break 'outer;
            }
        }
    }
    debug_assert_eq!(pieces.len(), k);
    pieces.sort_by(poly_order);
    pieces
}

fn pow_mod<F: Field>(base: &Poly<F>, mut exp: u64, modulus: &Poly<F>) -> Poly<F> {
    let mut acc = Poly::one(modulus.base_domain());
    let mut b = base.div_rem(modulus).1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc * b.clone()).div_rem(modulus).1;
        }
        b = (b.clone() * b).div_rem(modulus).1;
        exp >>= 1;
    }
    acc
}

// ---------------------------------------------------------------------------
// ℚ: rational roots and Kronecker's method

type IntPoly = Poly<BigInt>;

/// Primitive integer polynomial with positive leading coefficient, proportional to `f`.
pub fn primitive_part(f: &Poly<BigRational>) -> IntPoly {
    let denom_lcm = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut ints: Vec<BigInt> = ints.into_iter().map(|c| c / &content).collect();
    if ints.last().is_some_and(Signed::is_negative) {
        ints = ints.into_iter().map(|c| -c).collect();
    }
    Poly::new((), ints)
}

fn to_rational(f: &IntPoly) -> Poly<BigRational> {
    f.map((), |c| BigRational::from_integer(c.clone()))
}

fn int_content(f: &IntPoly) -> BigInt {
    f.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Prime factorization of `|n|` by trial division, primes ascending.
pub fn factor_integer(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    assert!(!Zero::is_zero(&n));
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        let mut e = 0;
        while Zero::is_zero(&(&n % &d)) {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += if d == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        primes.push((n, 1));
    }
    primes
}

/// Positive divisors of a nonzero integer, ascending.
pub fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let primes = factor_integer(n);
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for dv in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(dv * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// All rational roots with multiplicities, ascending.
pub fn rational_roots(f: &Poly<BigRational>) -> Result<Vec<(BigRational, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let zeros = f.trailing_zeros().unwrap();
    if zeros > 0 {
        roots.push((BigRational::zero(), zeros));
    }
    let reduced = Poly::new((), f.coeffs()[zeros..].to_vec());
    if reduced.degree() == Some(0) {
        return Ok(roots);
    }
    // candidates come from the square-free part to keep the divisor sets small
    let sqf = reduced.exact_div(&gcd(&reduced, &reduced.derivative())).unwrap();
    let prim = primitive_part(&sqf);
    let lead = prim.leading().unwrap().clone();
    let trail = prim.coeff(0);
    let mut candidates = Vec::new();
    for q in positive_divisors(&lead) {
        for p in positive_divisors(&trail) {
            for sign in [1, -1] {
                candidates.push(BigRational::new(BigInt::from(sign) * &p, q.clone()));
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    for c in candidates {
        if Ring::is_zero(&prim.map((), |x| BigRational::from_integer(x.clone())).eval(&c)) {
            let lin = Poly::linear(&c);
            let mut g = reduced.clone();
            let mut mult = 0;
            while let Some(q) = g.exact_div(&lin) {
                g = q;
                mult += 1;
            }
            roots.push((c, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(roots)
}

impl FactorField for BigRational {
    fn split_squarefree(f: &Poly<BigRational>) -> Vec<(Poly<BigRational>, bool)> {
        let mut out = Vec::new();
        let mut rest = f.clone();
        for (root, _) in rational_roots(f).expect("nonzero input") {
            let lin = Poly::linear(&root);
            rest = rest.exact_div(&lin).expect("root divides");
            out.push((lin, true));
        }
        if rest.degree().unwrap_or(0) > 0 {
            for (g, certified) in kronecker_split(&primitive_part(&rest)) {
                out.push((to_rational(&g).monic(), certified));
            }
        }
        out.sort_by(|a, b| poly_order(&a.0, &b.0));
        out
    }
}

/// Splits a primitive integer polynomial without rational roots into
/// irreducible factors (degree ≤ cap) or leaves it whole and uncertified.
fn kronecker_split(f: &IntPoly) -> Vec<(IntPoly, bool)> {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    if n <= 3 {
        // no rational roots ⇒ no linear factor ⇒ irreducible
        return vec![(f.clone(), true)];
    }
    if n > KRONECKER_DEGREE_CAP {
        return vec![(f.clone(), false)];
    }
    for d in 2..=n / 2 {
        if let Some(g) = kronecker_find_factor(f, d) {
            let h = f.exact_div(&g).expect("found factor divides");
            let mut out = kronecker_split(&g);
            out.extend(kronecker_split(&h));
            return out;
        }
    }
    vec![(f.clone(), true)]
}

fn eval_int(f: &IntPoly, at: &BigInt) -> BigInt {
    f.coeffs().iter().rev().fold(BigInt::zero(), |acc, c| acc * at + c)
}

/// Searches for an integer factor of exact degree `d` by interpolating divisor
/// combinations of `f` evaluated at `d + 1` integer points.
fn kronecker_find_factor(f: &IntPoly, d: usize) -> Option<IntPoly> {
    // pick the d+1 points with the fewest divisor candidates
    let mut pool: Vec<(BigInt, Vec<BigInt>)> = (-12i64..=12)
        .map(BigInt::from)
        .filter_map(|a| {
            let v = eval_int(f, &a);
            (!Zero::is_zero(&v)).then(|| (a, positive_divisors(&v)))
        })
        .collect();
    pool.sort_by_key(|(a, divs)| (divs.len(), a.abs()));
    pool.truncate(d + 1);
    if pool.len() < d + 1 {
        return None;
    }
    let points: Vec<BigRational> = pool.iter().map(|(a, _)| BigRational::from_integer(a.clone())).collect();
    let choices: Vec<Vec<BigInt>> = pool
        .iter()
        .enumerate()
        .map(|(i, (_, divs))| {
            if i == 0 {
                // g and −g are both factors; fix the sign at the first point
                divs.clone()
            } else {
                divs.iter().flat_map(|x| [x.clone(), -x.clone()]).collect()
            }
        })
        .collect();
    let lead = f.leading().unwrap().clone();
    let mut idx = vec![0usize; d + 1];
    loop {
        let values: Vec<BigRational> = idx
            .iter()
            .zip(&choices)
            .map(|(&i, c)| BigRational::from_integer(c[i].clone()))
            .collect();
        if let Some(g) = interpolate_integer(&points, &values) {
            if g.degree() == Some(d) && Zero::is_zero(&(&lead % g.leading().unwrap())) {
                let g = normalize_int_sign(g);
                if f.exact_div(&g).is_some() {
                    return Some(g);
                }
            }
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return None;
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn normalize_int_sign(g: IntPoly) -> IntPoly {
    let c = int_content(&g);
    let g = Poly::new((), g.coeffs().iter().map(|x| x / &c).collect());
    if g.leading().is_some_and(|x| x.sign() == Sign::Minus) {
        -g
    } else {
        g
    }
}

/// Newton interpolation; `None` if the interpolant has non-integer coefficients.
fn interpolate_integer(xs: &[BigRational], ys: &[BigRational]) -> Option<IntPoly> {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    // expand Newton form
    let mut poly = Poly::<BigRational>::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        poly = poly * Poly::linear(&xs[i]) + Poly::constant(coef[i].clone());
    }
    poly.coeffs()
        .iter()
        .all(|c| c.is_integer())
        .then(|| Poly::new((), poly.coeffs().iter().map(|c| c.to_integer()).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Modulus;
    use crate::{qpoly, Q};

    fn lin(c: i64) -> Poly<Q> {
        qpoly(&[-c, 1])
    }

    fn gf(p: u64, c: &[i64]) -> Poly<Fp> {
        Poly::from_i64s(&Modulus::new(p).unwrap(), c)
    }

    #[test]
    fn squarefree_six_by_six() {
        let f = lin(1).power(2) * lin(2).power(3) * lin(3);
        let parts = squarefree_decompose(&f).unwrap();
        assert_eq!(parts, vec![(lin(3), 1), (lin(1), 2), (lin(2), 3)]);
    }

    #[test]
    fn squarefree_trivial_and_zero() {
        assert_eq!(squarefree_decompose(&lin(5)).unwrap(), vec![(lin(5), 1)]);
        assert_eq!(squarefree_decompose(&Poly::<Q>::zero(&())), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn squarefree_gf3_cubic() {
        let f = gf(3, &[0, -1, 0, 1]);
        assert!(is_squarefree(&f));
        assert_eq!(squarefree_decompose(&f).unwrap(), vec![(f.clone(), 1)]);
    }

    #[test]
    fn squarefree_pth_power_gf3() {
        // (λ+1)^3 · λ over GF(3): derivative of the cube vanishes
        let f = gf(3, &[1, 1]).power(3) * gf(3, &[0, 1]);
        let parts = squarefree_decompose(&f).unwrap();
        assert_eq!(parts, vec![(gf(3, &[0, 1]), 1), (gf(3, &[1, 1]), 3)]);
        let g = gf(2, &[1, 1]).power(6) * gf(2, &[1, 1, 1]).power(2);
        let parts = squarefree_decompose(&g).unwrap();
        assert_eq!(parts, vec![(gf(2, &[1, 1, 1]), 2), (gf(2, &[1, 1]), 6)]);
    }

    #[test]
    fn factor_mixed_example() {
        let f = lin(3).power(3) * lin(2);
        let fz = factor(&f).unwrap();
        assert_eq!(fz.factors.len(), 2);
        assert_eq!((fz.factors[0].poly.clone(), fz.factors[0].exponent), (lin(3), 3));
        assert_eq!((fz.factors[1].poly.clone(), fz.factors[1].exponent), (lin(2), 1));
        assert_eq!(fz.expand(), f);
    }

    #[test]
    fn factor_difference_of_squares() {
        let fz = factor(&qpoly(&[-1, 0, 1])).unwrap();
        let polys: Vec<_> = fz.factors.iter().map(|f| f.poly.clone()).collect();
        assert_eq!(polys, vec![lin(1), lin(-1)]);
    }

    #[test]
    fn factor_gf2_irreducible_quadratic() {
        let f = gf(2, &[1, 1, 1]);
        let fz = factor(&f).unwrap();
        assert_eq!(fz.factors.len(), 1);
        assert_eq!(fz.factors[0].poly, f);
        assert!(fz.factors[0].certified);
    }

    #[test]
    fn berlekamp_splits_product_of_irreducibles() {
        // (λ²+λ+1)(λ³+λ+1)(λ) over GF(2)
        let f = gf(2, &[1, 1, 1]) * gf(2, &[1, 1, 0, 1]) * gf(2, &[0, 1]);
        let pieces = berlekamp(&f);
        assert_eq!(pieces, vec![gf(2, &[0, 1]), gf(2, &[1, 1, 1]), gf(2, &[1, 1, 0, 1])]);
    }

    #[test]
    fn rational_roots_examples() {
        let f = lin(1).power(2) * lin(2).power(3) * lin(3);
        let r = rational_roots(&f).unwrap();
        let as_int: Vec<_> = r.iter().map(|(q, m)| (q.to_integer(), *m)).collect();
        assert_eq!(as_int, vec![(1.into(), 2), (2.into(), 3), (3.into(), 1)]);
        assert!(rational_roots(&qpoly(&[-2, 0, 1])).unwrap().is_empty());
        let r = rational_roots(&qpoly(&[1, -5, 6])).unwrap();
        let third = Q::new(1.into(), 3.into());
        let half = Q::new(1.into(), 2.into());
        assert_eq!(r, vec![(third, 1), (half, 1)]);
    }

    #[test]
    fn zero_root_multiplicity() {
        let f = qpoly(&[0, 0, -1, 1]);
        let r = rational_roots(&f).unwrap();
        assert_eq!(r, vec![(Q::zero(), 2), (Q::one(), 1)]);
    }

    #[test]
    fn kronecker_splits_quartic() {
        // (λ²+1)(λ²+λ+2): no rational roots
        let f = qpoly(&[1, 0, 1]) * qpoly(&[2, 1, 1]);
        let fz = factor(&f).unwrap();
        assert!(fz.is_complete());
        let polys: Vec<_> = fz.factors.iter().map(|f| f.poly.clone()).collect();
        assert_eq!(polys, vec![qpoly(&[1, 0, 1]), qpoly(&[2, 1, 1])]);
    }

    #[test]
    fn kronecker_certifies_irreducible_quartic() {
        // λ⁴ + 1 is irreducible over ℚ
        let fz = factor(&qpoly(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(fz.factors.len(), 1);
        assert!(fz.factors[0].certified);
    }

    #[test]
    fn large_residual_is_flagged() {
        // λ⁹ + λ + 1... choose an input without rational roots and degree > 8
        let f = qpoly(&[3, 1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let fz = factor(&f).unwrap();
        assert!(!fz.is_complete());
        assert_eq!(fz.expand(), f);
    }

    #[test]
    fn integer_factorization() {
        let f: Vec<(i64, u32)> = factor_integer(&BigInt::from(-360))
            .into_iter()
            .map(|(p, e)| (i64::try_from(p).unwrap(), e))
            .collect();
        assert_eq!(f, vec![(2, 3), (3, 2), (5, 1)]);
    }

    #[test]
    fn divisors_of_twelve() {
        let d: Vec<i64> = positive_divisors(&BigInt::from(-12))
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
    }
}
