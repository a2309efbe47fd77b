//! Sturm chains and exact real-root isolation over ℚ.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::factor::{primitive_part, rational_roots, squarefree_decompose};
use super::poly::Poly;
use super::scalar::{gcd, EuclideanDomain, IntegralDomain, Ring};
use crate::error::{Error, Result};

type Q = BigRational;

/// Interval endpoint, possibly infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Q),
    PosInf,
}

impl Bound {
    pub fn int(v: i64) -> Self {
        Bound::Finite(Q::from_integer(BigInt::from(v)))
    }

    fn rank(&self) -> i8 {
        match self {
            Bound::NegInf => -1,
            Bound::Finite(_) => 0,
            Bound::PosInf => 1,
        }
    }

    fn lt(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
            _ => self.rank() < other.rank(),
        }
    }
}

/// The chain `p0 = sqf(f)`, `p1 = p0'`, `p_{i+1} = −rem(p_{i−1}, p_i)`, each
/// term rescaled by a positive constant to a primitive integer polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    terms: Vec<Poly<Q>>,
}

impl SturmChain {
    pub fn new(f: &Poly<Q>) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sqf = f.exact_div(&gcd(f, &f.derivative())).expect("gcd divides f");
        let mut terms = vec![strip_content(&sqf)];
        if sqf.degree() == Some(0) {
            return Ok(SturmChain { terms });
        }
        terms.push(strip_content(&sqf.derivative()));
        loop {
            let n = terms.len();
            let (_, r) = terms[n - 2].div_rem(&terms[n - 1]);
            if r.is_zero() {
                break;
            }
            terms.push(strip_content(&-r));
        }
        Ok(SturmChain { terms })
    }

    pub fn terms(&self) -> &[Poly<Q>] {
        &self.terms
    }

    /// Sign variations of the chain at a point, zeros skipped.
    pub fn variations(&self, at: &Bound) -> usize {
        let signs = self.terms.iter().map(|p| sign_at(p, at)).filter(|&s| s != 0);
        let mut count = 0;
        let mut prev = 0;
        for s in signs {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Distinct roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> Result<usize> {
        if !lo.lt(hi) {
            return Err(Error::EmptyInterval);
        }
        Ok(self.variations(lo) - self.variations(hi))
    }
}

/// Positive rescaling to a primitive integer polynomial; keeps every sign.
fn strip_content(f: &Poly<Q>) -> Poly<Q> {
    if f.is_zero() {
        return f.clone();
    }
    let prim = primitive_part(f);
    let mut g = prim.map((), |c| Q::from_integer(c.clone()));
    if Signed::is_negative(f.leading().unwrap()) {
        g = -g;
    }
    g
}

fn sign_of(q: &Q) -> i8 {
    if Zero::is_zero(q) {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_at(p: &Poly<Q>, at: &Bound) -> i8 {
    let Some(d) = p.degree() else { return 0 };
    let lead = sign_of(p.leading().unwrap());
    match at {
        Bound::Finite(x) => sign_of(&p.eval(x)),
        Bound::PosInf => lead,
        Bound::NegInf => {
            if d % 2 == 0 {
                lead
            } else {
                -lead
            }
        }
    }
}

/// Number of distinct real roots of `f` in `(lo, hi]`.
pub fn sturm_count(f: &Poly<Q>, lo: &Bound, hi: &Bound) -> Result<usize> {
    SturmChain::new(f)?.count(lo, hi)
}

/// Closed rational interval `[lo, hi]` holding exactly one distinct real root;
/// `lo == hi` marks an exact rational root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Q,
    pub hi: Q,
    pub multiplicity: usize,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn exact(&self) -> Option<&Q> {
        self.is_exact().then_some(&self.lo)
    }

    /// Whether the root is known to be positive, negative or zero.
    pub fn sign(&self) -> i8 {
        if self.lo.is_positive() {
            1
        } else if Signed::is_negative(&self.hi) {
            -1
        } else {
            0
        }
    }
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// Cauchy bound: every root has absolute value below `1 + max |a_i / a_n|`.
fn cauchy_bound(f: &Poly<Q>) -> Q {
    let lead = f.leading().unwrap().abs();
    let n = f.degree().unwrap();
    f.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(Q::zero(), |acc, x| if x > acc { x } else { acc })
        + Q::one()
}

/// Disjoint isolating intervals for the distinct real roots, ascending.
///
/// Rational roots are exact point intervals. Irrational roots get open-ended
/// rational intervals that contain no rational root of `f` and whose
/// endpoints are not roots, so `sturm_count(lo, hi) == 1` certifies each.
pub fn isolate_real_roots(f: &Poly<Q>) -> Result<Vec<RootInterval>> {
    let parts = squarefree_decompose(f)?;
    let mut out: Vec<RootInterval> = rational_roots(f)?
        .into_iter()
        .map(|(r, m)| RootInterval {
            lo: r.clone(),
            hi: r,
            multiplicity: m,
        })
        .collect();
    // product of the square-free parts with rational roots removed: its roots
    // are exactly the irrational real roots of f, each simple
    let mut g = parts.iter().fold(Poly::one(&()), |acc, (p, _)| acc * p.clone());
    for r in &out {
        g = g.exact_div(&Poly::linear(&r.lo)).expect("rational root divides");
    }
    if g.degree().unwrap_or(0) > 0 {
        let chain = SturmChain::new(&g)?;
        let part_chains = parts
            .iter()
            .map(|(p, m)| Ok((SturmChain::new(p)?, *m)))
            .collect::<Result<Vec<_>>>()?;
        let b = cauchy_bound(&g);
        let mut pending = vec![(-b.clone(), b)];
        let mut found = Vec::new();
        while let Some((lo, hi)) = pending.pop() {
            let c = chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))?;
            match c {
                0 => {}
                1 => found.push((lo, hi)),
                _ => {
                    let mid = (&lo + &hi) / Q::from_integer(BigInt::from(2));
                    pending.push((mid.clone(), hi));
                    pending.push((lo, mid));
                }
            }
        }
        // zero is excluded too, so every interval has a definite sign
        let mut avoid: Vec<Q> = out.iter().map(|r| r.lo.clone()).collect();
        avoid.push(Q::zero());
        for (lo, hi) in found {
            let (lo, hi) = exclude_points(&chain, lo, hi, &avoid);
            let (lo_b, hi_b) = (Bound::Finite(lo.clone()), Bound::Finite(hi.clone()));
            // now the interval holds no rational root, so the part owning the root counts 1
            let mut multiplicity = 0;
            for (pc, m) in &part_chains {
                if pc.count(&lo_b, &hi_b)? == 1 {
                    multiplicity = *m;
                    break;
                }
            }
            debug_assert!(multiplicity > 0);
            out.push(RootInterval { lo, hi, multiplicity });
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// Shrinks an isolating interval until none of `points` lies in it. The points
/// are never roots of the chain's polynomial, so splitting there keeps the
/// root strictly inside one side.
fn exclude_points(chain: &SturmChain, mut lo: Q, mut hi: Q, points: &[Q]) -> (Q, Q) {
    for r in points {
        if &lo < r && r < &hi {
            let left = chain
                .count(&Bound::Finite(lo.clone()), &Bound::Finite(r.clone()))
                .expect("ordered");
            if left == 1 {
                hi = r.clone();
            } else {
                lo = r.clone();
            }
        }
        // move an endpoint sitting on the point by bisecting toward the root
        while &lo == r || &hi == r {
            let mid = (&lo + &hi) / Q::from_integer(BigInt::from(2));
            let c = chain
                .count(&Bound::Finite(lo.clone()), &Bound::Finite(mid.clone()))
                .expect("ordered");
            if c == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
    (lo, hi)
}

/// Narrows an irrational isolating interval by bisection until its width is at most `width`.
pub fn refine(f: &Poly<Q>, iv: &RootInterval, width: &Q) -> Result<RootInterval> {
    if iv.is_exact() {
        return Ok(iv.clone());
    }
    let chain = SturmChain::new(f)?;
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    let two = Q::from_integer(BigInt::from(2));
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        if chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(mid.clone()))? >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(RootInterval {
        lo,
        hi,
        multiplicity: iv.multiplicity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly;

    #[test]
    fn count_singular_symmetric() {
        // −x(3−x)(1−x) = −x³ + 4x² − 3x
        let s = qpoly(&[0, -3, 4, -1]);
        assert_eq!(sturm_count(&s, &Bound::NegInf, &Bound::PosInf).unwrap(), 3);
        assert_eq!(sturm_count(&s, &Bound::int(0), &Bound::int(3)).unwrap(), 2);
        assert_eq!(sturm_count(&s, &Bound::int(-1), &Bound::int(0)).unwrap(), 1);
    }

    #[test]
    fn count_trivial() {
        assert_eq!(
            sturm_count(&qpoly(&[1, 0, 1]), &Bound::NegInf, &Bound::PosInf).unwrap(),
            0
        );
        let f = qpoly(&[-2, 1]).power(4);
        assert_eq!(sturm_count(&f, &Bound::int(0), &Bound::int(5)).unwrap(), 1);
        assert_eq!(sturm_count(&f, &Bound::int(2), &Bound::int(5)).unwrap(), 0);
        assert_eq!(
            sturm_count(&f, &Bound::int(5), &Bound::int(0)),
            Err(Error::EmptyInterval)
        );
    }

    #[test]
    fn isolate_sqrt_two() {
        let f = qpoly(&[-2, 0, 1]);
        let ivs = isolate_real_roots(&f).unwrap();
        assert_eq!(ivs.len(), 2);
        for iv in &ivs {
            assert!(!iv.is_exact());
            let c = sturm_count(&f, &Bound::Finite(iv.lo.clone()), &Bound::Finite(iv.hi.clone()));
            assert_eq!(c.unwrap(), 1);
        }
        assert!(ivs[0].hi < ivs[1].lo);
        assert_eq!(ivs[0].sign(), -1);
        assert_eq!(ivs[1].sign(), 1);
    }

    #[test]
    fn isolate_singular_symmetric_exact() {
        let ivs = isolate_real_roots(&qpoly(&[0, -3, 4, -1])).unwrap();
        let pts: Vec<_> = ivs.iter().map(|iv| iv.exact().unwrap().to_integer()).collect();
        assert_eq!(pts, vec![0.into(), 1.into(), 3.into()]);
    }

    #[test]
    fn isolate_mixed_rational_and_irrational() {
        // (λ−1)(λ²−2)² (λ+1): rational roots sit between and beside the irrational ones
        let f = qpoly(&[-1, 1]) * qpoly(&[-2, 0, 1]).power(2) * qpoly(&[1, 1]);
        let ivs = isolate_real_roots(&f).unwrap();
        assert_eq!(ivs.len(), 4);
        let mults: Vec<_> = ivs.iter().map(|iv| iv.multiplicity).collect();
        assert_eq!(mults, vec![2, 1, 1, 2]);
        for w in ivs.windows(2) {
            assert!(w[0].hi < w[1].lo);
        }
    }

    #[test]
    fn refine_narrows() {
        let f = qpoly(&[-2, 0, 1]);
        let iv = isolate_real_roots(&f).unwrap()[1].clone();
        let w = Q::new(1.into(), 1000.into());
        let r = refine(&f, &iv, &w).unwrap();
        assert!(&r.hi - &r.lo <= w);
        assert!(&r.lo * &r.lo < Q::from_integer(2.into()));
        assert!(&r.hi * &r.hi > Q::from_integer(2.into()));
    }
}
