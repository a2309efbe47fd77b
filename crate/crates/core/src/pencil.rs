//! Matrix pencils `uP + vQ` under strict equivalence `(P, Q) ↦ (HᵀPK, HᵀQK)`.
//!
//! Regular pencils are classified by their homogeneous elementary divisors,
//! finite ones from the Smith form of `λP + Q` and those at `(1 : 0)` from the
//! powers of `μ` in the Smith form of `P + μQ`. Singular pencils are detected
//! and refused: their minimal indices are not computed here.

use std::cmp::Ordering;
use std::fmt;

use crate::algebra::binary_form::{BinaryForm, HomogeneousPoint};
use crate::algebra::factor::FactorField;
use crate::algebra::poly::{exponent_suffix, Poly};
use crate::algebra::scalar::Field;
use crate::canonical::{hypercompanion, jordan_block, primary_form};
use crate::error::{Error, Result};
use crate::matrix::{det, linear_matrix, mat_inverse, nullspace, rref, Mat};
use crate::smith::{divisor_data_of_lambda_matrix, factor_order, smith_form};

/// A square pencil: `P` multiplies `u` (or `λ`), `Q` multiplies `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil<F: Field> {
    p: Mat<F>,
    q: Mat<F>,
}

impl<F: Field> Pencil<F> {
    pub fn new(p: Mat<F>, q: Mat<F>) -> Result<Self> {
        p.require_square()?;
        q.require_square()?;
        if p.rows() != q.rows() {
            return Err(Error::DimensionMismatch(format!(
                "pencil halves are {}x{} and {}x{}",
                p.rows(),
                p.cols(),
                q.rows(),
                q.cols()
            )));
        }
        if p.domain() != q.domain() {
            return Err(Error::DomainMismatch);
        }
        Ok(Pencil { p, q })
    }

    pub fn p(&self) -> &Mat<F> {
        &self.p
    }

    pub fn q(&self) -> &Mat<F> {
        &self.q
    }

    pub fn size(&self) -> usize {
        self.p.rows()
    }

    pub fn domain(&self) -> &F::Domain {
        self.p.domain()
    }

    /// `(HᵀPK, HᵀQK)`.
    pub fn transform(&self, h: &Mat<F>, k: &Mat<F>) -> Self {
        let ht = h.transpose();
        Pencil {
            p: &(&ht * &self.p) * k,
            q: &(&ht * &self.q) * k,
        }
    }
}

/// `det(uP + vQ)` as a binary form of degree `n`, read off `det(λP + Q)` and
/// checked against `det(P + μQ)` and direct evaluation at `(1, t)`.
pub fn pencil_det<F: Field>(pc: &Pencil<F>) -> Result<BinaryForm<F>> {
    let n = pc.size();
    let dom = pc.domain();
    let finite = det(&linear_matrix(&pc.p, &pc.q))?;
    let form = BinaryForm::homogenize(&finite, n)?;
    let at_infinity = det(&linear_matrix(&pc.q, &pc.p))?;
    assert_eq!(
        form.dehomogenize_at_infinity(),
        at_infinity,
        "dehomogenizations of the pencil determinant disagree"
    );
    let points: Vec<F> = match F::elements(dom) {
        Some(all) => all.into_iter().take(n + 1).collect(),
        None => (0..=n as i64).map(|t| F::from_i64_in(dom, t)).collect(),
    };
    let one = F::one_in(dom);
    for t in points {
        let direct = det(&(&pc.p + &pc.q.scale(&t)))?;
        assert_eq!(form.eval(&one, &t), direct, "pencil determinant fails at (1, {t})");
    }
    Ok(form)
}

pub fn pencil_regular<F: Field>(pc: &Pencil<F>) -> Result<bool> {
    Ok(!pencil_det(pc)?.is_zero())
}

/// Where an elementary divisor sits: a point of the projective line for
/// linear factors, otherwise the irreducible polynomial in `λ = u / v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Locus<F: Field> {
    Point(HomogeneousPoint<F>),
    Irreducible(Poly<F>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilDivisor<F: Field> {
    pub locus: Locus<F>,
    pub exponent: usize,
    pub certified: bool,
}

impl<F: Field> PencilDivisor<F> {
    pub fn degree(&self) -> usize {
        let d = match &self.locus {
            Locus::Point(_) => 1,
            Locus::Irreducible(p) => p.degree().unwrap_or(0),
        };
        d * self.exponent
    }

    pub fn is_infinite(&self) -> bool {
        matches!(&self.locus, Locus::Point(pt) if pt.is_infinite())
    }

    /// Defining factor in `λ` for finite divisors.
    pub fn finite_factor(&self) -> Option<Poly<F>> {
        match &self.locus {
            Locus::Point(pt) => pt.value().map(Poly::linear),
            Locus::Irreducible(p) => Some(p.clone()),
        }
    }

    /// Finite points, then irreducibles of higher degree, then infinity;
    /// exponent descending within each locus.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let class = |d: &Self| match &d.locus {
            Locus::Point(pt) if pt.is_infinite() => 2,
            _ => 0,
        };
        class(self)
            .cmp(&class(other))
            .then_with(|| match (self.finite_factor(), other.finite_factor()) {
                (Some(a), Some(b)) => factor_order(&a, &b),
                _ => Ordering::Equal,
            })
            .then(other.exponent.cmp(&self.exponent))
    }

    /// Homogeneous factor such as `(u−3v)²`, `(u²+v²)` or `v³`.
    pub fn render(&self, unicode: bool) -> String {
        match &self.locus {
            Locus::Point(pt) => pt.render_factor(self.exponent, unicode).replace(' ', ""),
            Locus::Irreducible(p) => {
                let d = p.degree().unwrap_or(0);
                let form = BinaryForm::homogenize(p, d).expect("degree fits");
                format!(
                    "({}){}",
                    form.render(unicode).replace(' ', ""),
                    exponent_suffix(self.exponent, unicode)
                )
            }
        }
    }
}

impl<F: Field> fmt::Display for PencilDivisor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

/// Strict-equivalence invariants of a regular pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilInvariants<F: Field> {
    pub size: usize,
    pub regular: bool,
    /// Rank of `λP + Q` over `F(λ)`.
    pub rank: usize,
    /// `n − deg det(λP + Q)`: the total degree carried by `(1 : 0)`.
    pub infinite_degree: usize,
    /// Sorted by [`PencilDivisor::canonical_cmp`].
    pub divisors: Vec<PencilDivisor<F>>,
}

impl<F: Field> PencilInvariants<F> {
    pub fn total_degree(&self) -> usize {
        self.divisors.iter().map(PencilDivisor::degree).sum()
    }

    pub fn from_divisors(size: usize, mut divisors: Vec<PencilDivisor<F>>) -> Self {
        divisors.sort_by(|a, b| a.canonical_cmp(b));
        let infinite_degree = divisors.iter().filter(|d| d.is_infinite()).map(|d| d.exponent).sum();
        PencilInvariants {
            size,
            regular: true,
            rank: size,
            infinite_degree,
            divisors,
        }
    }
}

/// What can still be said about a singular pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularReport<F: Field> {
    pub size: usize,
    pub rank: usize,
    /// `D_1 | … | D_rank` of `λP + Q`.
    pub chain: Vec<Poly<F>>,
}

/// Rank and gcd chain of `λP + Q`; meaningful for singular pencils too.
pub fn singular_report<F: Field>(pc: &Pencil<F>) -> SingularReport<F> {
    let sf = smith_form(&linear_matrix(&pc.p, &pc.q));
    let diag = sf.diagonal();
    let chain = crate::smith::chain_from_diagonal(&diag[..sf.rank]);
    SingularReport {
        size: pc.size(),
        rank: sf.rank,
        chain,
    }
}

fn mu_multiplicity<F: Field>(f: &Poly<F>) -> usize {
    f.trailing_zeros().unwrap_or(0)
}

/// Homogeneous elementary divisors of a regular pencil.
pub fn pencil_divisors<F: FactorField>(pc: &Pencil<F>) -> Result<PencilInvariants<F>> {
    let n = pc.size();
    let (finite, sf) = divisor_data_of_lambda_matrix(&linear_matrix(&pc.p, &pc.q))?;
    if sf.rank < n {
        return Err(Error::SingularPencil { rank: sf.rank, size: n });
    }
    let mut divisors: Vec<PencilDivisor<F>> = finite
        .elementary_divisors
        .into_iter()
        .map(|d| {
            let locus = match d.linear_root() {
                Some(c) => Locus::Point(HomogeneousPoint::finite(c)),
                None => Locus::Irreducible(d.factor.clone()),
            };
            PencilDivisor {
                locus,
                exponent: d.exponent,
                certified: d.certified,
            }
        })
        .collect();
    let at_infinity = smith_form(&linear_matrix(&pc.q, &pc.p));
    for d in at_infinity.diagonal() {
        let e = mu_multiplicity(&d);
        if e > 0 {
            divisors.push(PencilDivisor {
                locus: Locus::Point(HomogeneousPoint::infinity(pc.domain())),
                exponent: e,
                certified: true,
            });
        }
    }
    let inv = PencilInvariants::from_divisors(n, divisors);
    let finite_degree = finite.chain.last().and_then(Poly::degree).unwrap_or(0);
    if inv.total_degree() != n || inv.infinite_degree != n - finite_degree {
        return Err(Error::InconsistentDegree {
            expected: n,
            got: inv.total_degree(),
        });
    }
    Ok(inv)
}

/// Block pair per divisor: `(λ − c)^e ↦ (I_e, −J_e(c))`, `φ^e ↦ (I, −H(φ^e))`,
/// infinity `↦ (N_e, I_e)`.
pub fn canonical_pencil<F: Field>(domain: &F::Domain, inv: &PencilInvariants<F>) -> Result<Pencil<F>> {
    if !inv.regular || inv.total_degree() != inv.size || inv.size == 0 {
        return Err(Error::InconsistentDegree {
            expected: inv.size,
            got: inv.total_degree(),
        });
    }
    let mut sorted = inv.divisors.clone();
    sorted.sort_by(|a, b| a.canonical_cmp(b));
    let mut ps = Vec::new();
    let mut qs = Vec::new();
    let zero = F::zero_in(domain);
    for d in &sorted {
        let e = d.exponent;
        match &d.locus {
            Locus::Point(pt) if pt.is_infinite() => {
                ps.push(jordan_block(domain, &zero, e));
                qs.push(Mat::identity(domain, e));
            }
            Locus::Point(pt) => {
                let c = pt.value().expect("finite").clone();
                ps.push(Mat::identity(domain, e));
                qs.push(-&jordan_block(domain, &c, e));
            }
            Locus::Irreducible(phi) => {
                let h = hypercompanion(phi, e)?;
                ps.push(Mat::identity(domain, h.rows()));
                qs.push(-&h);
            }
        }
    }
    Pencil::new(Mat::block_diag(domain, &ps), Mat::block_diag(domain, &qs))
}

/// A basis of the span of `vectors` (length-`n` columns), as a subset.
fn column_basis<F: Field>(domain: &F::Domain, n: usize, vectors: &[Vec<F>]) -> Vec<Vec<F>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Mat::from_cols(domain, n, vectors);
    let (_, pivots) = rref(&m);
    pivots.into_iter().map(|j| vectors[j].clone()).collect()
}

/// `{x : A x ∈ span(basis)}`.
fn preimage<F: Field>(a: &Mat<F>, basis: &[Vec<F>]) -> Vec<Vec<F>> {
    let n = a.rows();
    let dom = a.domain();
    let k = basis.len();
    // [A | −B] (x, y) = 0
    let aug = Mat::from_fn(dom, n, n + k, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else {
            -basis[j - n][i].clone()
        }
    });
    let xs: Vec<Vec<F>> = nullspace(&aug).into_iter().map(|v| v[..n].to_vec()).collect();
    column_basis(dom, n, &xs)
}

fn image<F: Field>(a: &Mat<F>, basis: &[Vec<F>]) -> Vec<Vec<F>> {
    basis.iter().map(|v| a.mul_vec(v)).collect()
}

fn limit<F: Field>(start: Vec<Vec<F>>, step: impl Fn(&[Vec<F>]) -> Vec<Vec<F>>) -> Vec<Vec<F>> {
    let mut cur = start;
    loop {
        let next = step(&cur);
        if next.len() == cur.len() {
            return next;
        }
        cur = next;
    }
}

/// `X·(P, Q)·Y` equal to the canonical pair of the pencil's invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalReduction<F: Field> {
    pub canonical: Pencil<F>,
    pub x: Mat<F>,
    pub y: Mat<F>,
    pub verified: bool,
}

fn block_diag_opt<F: Field>(domain: &F::Domain, blocks: &[Option<Mat<F>>]) -> Mat<F> {
    let present: Vec<Mat<F>> = blocks.iter().flatten().cloned().collect();
    Mat::block_diag(domain, &present)
}

fn sub_block<F: Field>(m: &Mat<F>, from: usize, to: usize) -> Option<Mat<F>> {
    (to > from).then(|| {
        let idx: Vec<usize> = (from..to).collect();
        m.submatrix(&idx, &idx)
    })
}

/// Reduces a regular pencil to its canonical pair using the Wong sequences
/// `V_{i+1} = A⁻¹(E·V_i)` and `W_{i+1} = E⁻¹(A·W_i)` of `λE − A = λP + Q`.
pub fn canonical_reduction<F: FactorField>(pc: &Pencil<F>) -> Result<CanonicalReduction<F>> {
    let inv = pencil_divisors(pc)?;
    let n = pc.size();
    let dom = pc.domain().clone();
    let e = pc.p.clone();
    let a = -&pc.q;
    let unit = |i: usize| -> Vec<F> {
        (0..n)
            .map(|j| if i == j { F::one_in(&dom) } else { F::zero_in(&dom) })
            .collect()
    };
    let v_star = limit((0..n).map(unit).collect(), |v| preimage(&a, &image(&e, v)));
    let w_star = limit(Vec::new(), |w| preimage(&e, &image(&a, w)));
    let r = v_star.len();
    if r + w_star.len() != n {
        return Err(Error::SingularPencil {
            rank: r + w_star.len(),
            size: n,
        });
    }
    let mut t_cols = v_star.clone();
    t_cols.extend(w_star.iter().cloned());
    let mut s_cols = image(&e, &v_star);
    s_cols.extend(image(&a, &w_star));
    let t0 = Mat::from_cols(&dom, n, &t_cols);
    let s0_inv = mat_inverse(&Mat::from_cols(&dom, n, &s_cols))?;
    let e_red = &(&s0_inv * &e) * &t0;
    let a_red = &(&s0_inv * &a) * &t0;
    // finite part λI − J, infinite part λN − I
    let (tj, tj_inv) = match sub_block(&a_red, 0, r) {
        Some(j) => {
            let pf = primary_form(&j)?;
            let ti = mat_inverse(&pf.transform)?;
            (Some(pf.transform), Some(ti))
        }
        None => (None, None),
    };
    let (tn, tn_inv_neg) = match sub_block(&e_red, r, n) {
        Some(nil) => {
            let pf = primary_form(&-&nil)?;
            let ti = mat_inverse(&pf.transform)?;
            (Some(pf.transform), Some(-&ti))
        }
        None => (None, None),
    };
    let x = &block_diag_opt(&dom, &[tj_inv, tn_inv_neg]) * &s0_inv;
    let y = &t0 * &block_diag_opt(&dom, &[tj, tn]);
    let canonical = canonical_pencil(&dom, &inv)?;
    let verified = det(&x).map(|d| !d.is_zero()).unwrap_or(false)
        && det(&y).map(|d| !d.is_zero()).unwrap_or(false)
        && &(&x * &pc.p) * &y == canonical.p
        && &(&x * &pc.q) * &y == canonical.q;
    Ok(CanonicalReduction {
        canonical,
        x,
        y,
        verified,
    })
}

/// Outcome of a strict-equivalence test; the witness satisfies
/// `Hᵀ(uP + vQ)K = uP′ + vQ′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence<F: Field> {
    pub equivalent: bool,
    pub witness: Option<(Mat<F>, Mat<F>)>,
    pub verified: bool,
}

pub fn pencil_equivalent<F: FactorField>(a: &Pencil<F>, b: &Pencil<F>) -> Result<Equivalence<F>> {
    if a.size() != b.size() {
        return Err(Error::DimensionMismatch(format!(
            "pencil sizes {} and {}",
            a.size(),
            b.size()
        )));
    }
    if a.domain() != b.domain() {
        return Err(Error::DomainMismatch);
    }
    let ia = pencil_divisors(a)?;
    let ib = pencil_divisors(b)?;
    if ia.divisors != ib.divisors {
        return Ok(Equivalence {
            equivalent: false,
            witness: None,
            verified: true,
        });
    }
    let ra = canonical_reduction(a)?;
    let rb = canonical_reduction(b)?;
    let ht = &mat_inverse(&rb.x)? * &ra.x;
    let k = &ra.y * &mat_inverse(&rb.y)?;
    let h = ht.transpose();
    let verified = ra.verified && rb.verified && a.transform(&h, &k) == *b;
    Ok(Equivalence {
        equivalent: true,
        witness: Some((h, k)),
        verified,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KroneckerKind {
    I,
    II,
    III,
}

/// An elementary bilinear form, its pencil `uM + vMᵀ` and the determinant
/// identity it should satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KroneckerForm<F: Field> {
    pub kind: KroneckerKind,
    pub matrix: Mat<F>,
    pub pencil: Pencil<F>,
    pub expected: BinaryForm<F>,
    pub actual: BinaryForm<F>,
}

impl<F: Field> KroneckerForm<F> {
    /// `Some(1)` if `actual = expected`, `Some(−1)` if `actual = −expected`, else `None`.
    pub fn sign(&self) -> Option<i8> {
        if self.actual == self.expected {
            Some(1)
        } else if self.actual == -&self.expected {
            Some(-1)
        } else {
            None
        }
    }
}

fn sign_pow<F: Field>(domain: &F::Domain, k: usize) -> F {
    F::from_i64_in(domain, if k.is_multiple_of(2) { 1 } else { -1 })
}

/// Builds form I (size `n + 1`), II (size `2m`) or III (size `n + 1`,
/// parameters `a`, `b` with `a² ≠ b²`) entry by entry; `M[i][j]` is the
/// coefficient of `x_i y_j`.
pub fn kronecker_elementary_form<F: Field>(
    domain: &F::Domain,
    kind: KroneckerKind,
    size: usize,
    params: Option<(F, F)>,
) -> Result<KroneckerForm<F>> {
    if size < 2 {
        return Err(Error::InvalidParameter(format!("size {size} must be at least 2")));
    }
    let mut m = Mat::zeros(domain, size, size);
    let add = |m: &mut Mat<F>, i: usize, j: usize, c: F| {
        let v = m.get(i, j).clone() + c;
        m.set(i, j, v);
    };
    let one = F::one_in(domain);
    let expected = match kind {
        KroneckerKind::I => {
            let n = size - 1;
            for h in 0..n {
                add(&mut m, h, h + 1, sign_pow(domain, n));
                add(&mut m, h + 1, h, sign_pow(domain, h));
            }
            add(&mut m, n, n, one.clone());
            BinaryForm::linear_power(&one, &sign_pow(domain, n), n + 1)
        }
        KroneckerKind::II => {
            if !size.is_multiple_of(2) {
                return Err(Error::InvalidParameter(format!(
                    "form II needs an even size, got {size}"
                )));
            }
            let mm = size / 2;
            for h in 0..size - 1 {
                add(&mut m, h, h + 1, sign_pow(domain, mm));
                add(&mut m, h + 1, h, sign_pow(domain, h));
            }
            BinaryForm::linear_power(&one, &sign_pow(domain, mm), size)
        }
        KroneckerKind::III => {
            let (a, b) = params.ok_or_else(|| Error::InvalidParameter("form III needs a and b".into()))?;
            if a.clone() * a.clone() == b.clone() * b.clone() {
                return Err(Error::InvalidParameter("form III needs a² ≠ b²".into()));
            }
            for h in 0..size - 1 {
                add(&mut m, h, h + 1, a.clone());
                add(&mut m, h + 1, h, b.clone());
            }
            if size.is_multiple_of(2) {
                let half = size / 2;
                &BinaryForm::linear_power(&a, &b, half) * &BinaryForm::linear_power(&b, &a, half)
            } else {
                BinaryForm::zero(domain, size)
            }
        }
    };
    let pencil = Pencil::new(m.clone(), m.transpose())?;
    let actual = pencil_det(&pencil)?;
    Ok(KroneckerForm {
        kind,
        matrix: m,
        pencil,
        expected,
        actual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::{Fp, Modulus};
    use crate::smith::divisor_data;
    use crate::{qmat, Q};

    fn q(v: i64) -> Q {
        Q::from_integer(v.into())
    }

    fn id(n: usize) -> Mat<Q> {
        Mat::identity(&(), n)
    }

    #[test]
    fn scalar_pencil_determinant() {
        let pc = Pencil::new(id(3), id(3)).unwrap();
        assert_eq!(pencil_det(&pc).unwrap(), BinaryForm::linear_power(&q(1), &q(1), 3));
        let inv = pencil_divisors(&pc).unwrap();
        assert_eq!(inv.divisors.len(), 3);
        assert!(inv.divisors.iter().all(|d| d.render(true) == "(u+v)"));
    }

    #[test]
    fn nilpotent_pencil_is_infinite() {
        let n = qmat(&[&[0, 1], &[0, 0]]);
        let pc = Pencil::new(n, id(2)).unwrap();
        let f = pencil_det(&pc).unwrap();
        assert_eq!(f, BinaryForm::linear_power(&q(0), &q(1), 2));
        let inv = pencil_divisors(&pc).unwrap();
        assert_eq!(inv.infinite_degree, 2);
        assert_eq!(inv.divisors.len(), 1);
        assert_eq!(inv.divisors[0].render(true), "v²");
        let red = canonical_reduction(&pc).unwrap();
        assert!(red.verified);
    }

    #[test]
    fn six_by_six_pencil_matches_matrix_divisors() {
        let j = qmat(&[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 2, 1, 0, 0],
            &[0, 0, 0, 2, 1, 0],
            &[0, 0, 0, 0, 2, 0],
            &[0, 0, 0, 0, 0, 3],
        ]);
        let pc = Pencil::new(id(6), -&j).unwrap();
        let inv = pencil_divisors(&pc).unwrap();
        let dd = divisor_data(&j).unwrap();
        let finite: Vec<_> = inv
            .divisors
            .iter()
            .map(|d| (d.finite_factor().unwrap(), d.exponent))
            .collect();
        let expected: Vec<_> = dd
            .elementary_divisors
            .iter()
            .map(|d| (d.factor.clone(), d.exponent))
            .collect();
        assert_eq!(finite, expected);
        let rendered: Vec<String> = inv.divisors.iter().map(|d| d.render(true)).collect();
        assert_eq!(rendered, vec!["(u−v)", "(u−v)", "(u−2v)³", "(u−3v)"]);
    }

    #[test]
    fn singular_pencil_refused() {
        let p = qmat(&[&[1, 0], &[0, 0]]);
        let qm = qmat(&[&[0, 1], &[0, 0]]);
        let pc = Pencil::new(p, qm).unwrap();
        assert!(!pencil_regular(&pc).unwrap());
        assert_eq!(pencil_divisors(&pc), Err(Error::SingularPencil { rank: 1, size: 2 }));
        assert_eq!(singular_report(&pc).rank, 1);
    }

    #[test]
    fn canonical_round_trip_mixed() {
        // finite (λ−2)², λ² + 1, and an infinite divisor of exponent 2
        let divs = vec![
            PencilDivisor {
                locus: Locus::Point(HomogeneousPoint::finite(q(2))),
                exponent: 2,
                certified: true,
            },
            PencilDivisor {
                locus: Locus::Irreducible(crate::qpoly(&[1, 0, 1])),
                exponent: 1,
                certified: true,
            },
            PencilDivisor {
                locus: Locus::Point(HomogeneousPoint::infinity(&())),
                exponent: 2,
                certified: true,
            },
        ];
        let inv = PencilInvariants::from_divisors(6, divs);
        let pc = canonical_pencil(&(), &inv).unwrap();
        assert_eq!(pencil_divisors(&pc).unwrap(), inv);
        let red = canonical_reduction(&pc).unwrap();
        assert!(red.verified);
    }

    #[test]
    fn equivalence_under_twist() {
        let p = qmat(&[&[1, 2, 0], &[0, 1, 0], &[0, 0, 0]]);
        let qm = qmat(&[&[0, 1, 1], &[1, 0, 0], &[0, 0, 1]]);
        let a = Pencil::new(p, qm).unwrap();
        let h = qmat(&[&[1, 1, 0], &[0, 1, 0], &[2, 0, 1]]);
        let k = qmat(&[&[1, 0, 3], &[0, 1, 0], &[0, -1, 1]]);
        let b = a.transform(&h, &k);
        let eq = pencil_equivalent(&a, &b).unwrap();
        assert!(eq.equivalent);
        assert!(eq.verified);
    }

    #[test]
    fn kronecker_small_cases() {
        let k1 = kronecker_elementary_form::<Q>(&(), KroneckerKind::I, 2, None).unwrap();
        assert_eq!(k1.sign(), Some(1));
        assert_eq!(k1.actual.render(true), "u² − 2uv + v²");
        let k2 = kronecker_elementary_form::<Q>(&(), KroneckerKind::II, 2, None).unwrap();
        assert_eq!(k2.sign(), Some(1));
        let k3 = kronecker_elementary_form(&(), KroneckerKind::III, 2, Some((q(2), q(1)))).unwrap();
        assert_eq!(k3.sign(), Some(-1));
        let k3odd = kronecker_elementary_form(&(), KroneckerKind::III, 3, Some((q(2), q(1)))).unwrap();
        assert!(k3odd.actual.is_zero());
        assert!(kronecker_elementary_form(&(), KroneckerKind::III, 2, Some((q(1), q(-1)))).is_err());
    }

    #[test]
    fn gf2_pencil_equivalence() {
        let m = Modulus::new(2).unwrap();
        let a = Pencil::new(
            Mat::<Fp>::from_i64_rows(&m, &[&[1, 1], &[0, 1]]),
            Mat::<Fp>::from_i64_rows(&m, &[&[0, 1], &[1, 1]]),
        )
        .unwrap();
        let red = canonical_reduction(&a).unwrap();
        assert!(red.verified);
    }
}
