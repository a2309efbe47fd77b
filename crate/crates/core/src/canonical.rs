//! Similarity invariants and canonical forms of a single square matrix:
//! rational (companion) form, primary (hypercompanion) form, Jordan form.
//!
//! Transforms come from the Smith form of `λI − A`: if `U(λI − A)V = S`,
//! the columns of `U⁻¹`, pushed through `p(λ)·e_j ↦ p(A)e_j`, generate the
//! cyclic summands `F[λ]/(d_i)`.

use std::fmt;

use crate::algebra::factor::{factor, FactorField};
use crate::algebra::poly::Poly;
use crate::algebra::scalar::{Field, IntegralDomain, Ring};
use crate::error::{Error, Result};
use crate::matrix::{char_matrix, det, mat_inverse, poly_vec_at_matrix, Mat};
use crate::smith::{factor_order, smith_form, sort_divisors, ElementaryDivisor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    Rational,
    Primary,
    Jordan,
}

impl FormKind {
    pub fn name(self) -> &'static str {
        match self {
            FormKind::Rational => "rational",
            FormKind::Primary => "primary",
            FormKind::Jordan => "jordan",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Block<F: Field> {
    /// Companion block of an invariant factor.
    Companion(Poly<F>),
    /// Hypercompanion block of `factor^exponent`.
    Hypercompanion { factor: Poly<F>, exponent: usize },
    /// `cI + N` of the given size.
    Jordan { eigenvalue: F, size: usize },
}

impl<F: Field> Block<F> {
    pub fn dimension(&self) -> usize {
        match self {
            Block::Companion(p) => p.degree().unwrap_or(0),
            Block::Hypercompanion { factor, exponent } => factor.degree().unwrap_or(0) * exponent,
            Block::Jordan { size, .. } => *size,
        }
    }

    pub fn matrix(&self, domain: &F::Domain) -> Mat<F> {
        match self {
            Block::Companion(p) => companion(p).expect("monic invariant factor"),
            Block::Hypercompanion { factor, exponent } => hypercompanion(factor, *exponent).expect("monic irreducible"),
            Block::Jordan { eigenvalue, size } => jordan_block(domain, eigenvalue, *size),
        }
    }
}

impl<F: Field> fmt::Display for Block<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::Companion(p) => write!(f, "C({p})"),
            Block::Hypercompanion { factor, exponent } => {
                let d = ElementaryDivisor {
                    factor: factor.clone(),
                    exponent: *exponent,
                    certified: true,
                };
                write!(f, "H({})", d.render(true))
            }
            Block::Jordan { eigenvalue, size } => write!(f, "J{size}({eigenvalue})"),
        }
    }
}

/// A canonical form `T⁻¹·A·T = matrix` with its block structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalResult<F: Field> {
    pub kind: FormKind,
    pub blocks: Vec<Block<F>>,
    pub matrix: Mat<F>,
    pub transform: Mat<F>,
    /// Set only after `T⁻¹AT = matrix` was checked exactly.
    pub verified: bool,
    /// False when some block comes from an unsplit factor that may be reducible.
    pub certified: bool,
}

impl<F: Field> CanonicalResult<F> {
    /// Recomputes `A·T = T·matrix` with `det T ≠ 0`.
    pub fn check(&self, a: &Mat<F>) -> bool {
        transform_holds(a, &self.transform, &self.matrix)
    }
}

fn transform_holds<F: Field>(a: &Mat<F>, t: &Mat<F>, form: &Mat<F>) -> bool {
    a.rows() == t.rows() && t.is_square() && det(t).map(|d| !d.is_zero()).unwrap_or(false) && (a * t) == (t * form)
}

/// Companion matrix with `det(λI − C) = f`: first column `−a_1, …, −a_α`,
/// ones on the superdiagonal, for `f = λ^α + a_1 λ^{α−1} + … + a_α`.
pub fn companion<F: Field>(f: &Poly<F>) -> Result<Mat<F>> {
    let n = match f.degree() {
        Some(n) if n >= 1 && f.is_monic() => n,
        _ => return Err(Error::NotMonic(f.to_string())),
    };
    let d = f.base_domain();
    let one = F::one_in(d);
    Ok(Mat::from_fn(d, n, n, |i, j| {
        if j == 0 {
            // a_{i+1} is the coefficient of λ^{n−1−i}
            -f.coeff(n - 1 - i)
        } else if j == i + 1 {
            one.clone()
        } else {
            F::zero_in(d)
        }
    }))
}

/// Block for `φ^e`: companion blocks of `φ` on the diagonal, coupled by a 1
/// from the last row of each block into the first column of the next.
pub fn hypercompanion<F: Field>(phi: &Poly<F>, exponent: usize) -> Result<Mat<F>> {
    let c = companion(phi)?;
    let d = c.rows();
    let dom = phi.base_domain();
    let blocks = vec![c; exponent];
    let mut h = Mat::block_diag(dom, &blocks);
    for s in 1..exponent {
        h.set((s - 1) * d + d - 1, s * d, F::one_in(dom));
    }
    Ok(h)
}

/// `cI + N` of size `k`.
pub fn jordan_block<F: Field>(domain: &F::Domain, c: &F, k: usize) -> Mat<F> {
    Mat::from_fn(domain, k, k, |i, j| {
        if i == j {
            c.clone()
        } else if j == i + 1 {
            F::one_in(domain)
        } else {
            F::zero_in(domain)
        }
    })
}

/// `f(A)·w` by Horner's rule on vectors.
fn apply_poly<F: Field>(f: &Poly<F>, a: &Mat<F>, w: &[F]) -> Vec<F> {
    let mut acc = vec![F::zero_in(a.domain()); w.len()];
    for c in f.coeffs().iter().rev() {
        acc = a.mul_vec(&acc);
        for (x, wi) in acc.iter_mut().zip(w) {
            *x = x.clone() + c.clone() * wi.clone();
        }
    }
    acc
}

/// Columns `(A^{d−1}g, …, Ag, g)`.
fn krylov_columns<F: Field>(a: &Mat<F>, g: &[F], d: usize) -> Vec<Vec<F>> {
    let mut cols = vec![g.to_vec()];
    for _ in 1..d {
        let next = a.mul_vec(cols.last().unwrap());
        cols.push(next);
    }
    cols.reverse();
    cols
}

/// Nontrivial invariant factors of `λI − A` paired with cyclic generators.
fn cyclic_decomposition<F: Field>(a: &Mat<F>) -> Result<Vec<(Poly<F>, Vec<F>)>> {
    let cm = char_matrix(a)?;
    let sf = smith_form(&cm);
    let mut out = Vec::new();
    for (i, d) in sf.diagonal().into_iter().enumerate() {
        if d.degree().unwrap_or(0) == 0 {
            continue;
        }
        let w = poly_vec_at_matrix(&sf.u_inv.col(i), a);
        out.push((d, w));
    }
    Ok(out)
}

fn finish<F: Field>(
    a: &Mat<F>,
    kind: FormKind,
    blocks: Vec<Block<F>>,
    cols: Vec<Vec<F>>,
    certified: bool,
) -> CanonicalResult<F> {
    let dom = a.domain();
    let mats: Vec<Mat<F>> = blocks.iter().map(|b| b.matrix(dom)).collect();
    let matrix = Mat::block_diag(dom, &mats);
    let transform = Mat::from_cols(dom, a.rows(), &cols);
    let verified = transform_holds(a, &transform, &matrix);
    CanonicalResult {
        kind,
        blocks,
        matrix,
        transform,
        verified,
        certified,
    }
}

/// Block-diagonal of companions of the nontrivial invariant factors, in chain order.
pub fn rational_canonical_form<F: Field>(a: &Mat<F>) -> Result<CanonicalResult<F>> {
    let mut blocks = Vec::new();
    let mut cols = Vec::new();
    for (d, w) in cyclic_decomposition(a)? {
        cols.extend(krylov_columns(a, &w, d.degree().unwrap()));
        blocks.push(Block::Companion(d));
    }
    Ok(finish(a, FormKind::Rational, blocks, cols, true))
}

struct PrimaryPiece<F: Field> {
    factor: Poly<F>,
    exponent: usize,
    certified: bool,
    columns: Vec<Vec<F>>,
}

fn primary_pieces<F: FactorField>(a: &Mat<F>) -> Result<Vec<PrimaryPiece<F>>> {
    let mut pieces = Vec::new();
    for (d, w) in cyclic_decomposition(a)? {
        for f in factor(&d)?.factors {
            let pe = f.poly.power(f.exponent as u64);
            let cofactor = d.exact_div(&pe).expect("factor divides");
            let g = apply_poly(&cofactor, a, &w);
            let deg = f.poly.degree().unwrap();
            let mut columns = Vec::with_capacity(deg * f.exponent);
            for s in 0..f.exponent {
                let gs = apply_poly(&f.poly.power((f.exponent - 1 - s) as u64), a, &g);
                columns.extend(krylov_columns(a, &gs, deg));
            }
            pieces.push(PrimaryPiece {
                factor: f.poly,
                exponent: f.exponent,
                certified: f.certified,
                columns,
            });
        }
    }
    pieces.sort_by(|x, y| factor_order(&x.factor, &y.factor).then(y.exponent.cmp(&x.exponent)));
    Ok(pieces)
}

/// One hypercompanion block per elementary divisor; for linear factors these
/// are Jordan blocks.
pub fn primary_form<F: FactorField>(a: &Mat<F>) -> Result<CanonicalResult<F>> {
    let pieces = primary_pieces(a)?;
    let certified = pieces.iter().all(|p| p.certified);
    let mut blocks = Vec::new();
    let mut cols = Vec::new();
    for p in pieces {
        blocks.push(Block::Hypercompanion {
            factor: p.factor,
            exponent: p.exponent,
        });
        cols.extend(p.columns);
    }
    Ok(finish(a, FormKind::Primary, blocks, cols, certified))
}

/// Jordan form `cI + N` blocks; requires the characteristic polynomial to
/// split over the base field.
pub fn jordan_form<F: FactorField>(a: &Mat<F>) -> Result<CanonicalResult<F>> {
    let chi = crate::matrix::char_poly(a)?;
    let offending: Vec<String> = factor(&chi)?
        .factors
        .iter()
        .filter(|f| f.poly.degree() != Some(1))
        .map(|f| f.poly.to_string())
        .collect();
    if !offending.is_empty() {
        return Err(Error::SplitFieldRequired { factors: offending });
    }
    let mut blocks = Vec::new();
    let mut cols = Vec::new();
    for p in primary_pieces(a)? {
        let c = -p.factor.coeff(0);
        blocks.push(Block::Jordan {
            eigenvalue: c,
            size: p.exponent,
        });
        cols.extend(p.columns);
    }
    Ok(finish(a, FormKind::Jordan, blocks, cols, true))
}

/// Eigenvalues with their Jordan block sizes (descending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanStructure<F: Field> {
    pub blocks: Vec<(F, Vec<usize>)>,
}

impl<F: Field> JordanStructure<F> {
    pub fn size(&self) -> usize {
        self.blocks.iter().flat_map(|(_, s)| s).sum()
    }

    fn from_pairs(mut pairs: Vec<(F, usize)>) -> Self {
        pairs.sort_by(|x, y| x.0.canonical_cmp(&y.0).then(y.1.cmp(&x.1)));
        let mut blocks: Vec<(F, Vec<usize>)> = Vec::new();
        for (c, k) in pairs {
            match blocks.last_mut() {
                Some((e, sizes)) if *e == c => sizes.push(k),
                _ => blocks.push((c, vec![k])),
            }
        }
        JordanStructure { blocks }
    }
}

impl<F: Field> fmt::Display for JordanStructure<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|(c, sizes)| {
                let s: Vec<String> = sizes.iter().map(usize::to_string).collect();
                format!("{c}:[{}]", s.join(","))
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl<F: Field> CanonicalResult<F> {
    /// Block structure of a Jordan result.
    pub fn jordan_structure(&self) -> Option<JordanStructure<F>> {
        let pairs = self
            .blocks
            .iter()
            .map(|b| match b {
                Block::Jordan { eigenvalue, size } => Some((eigenvalue.clone(), *size)),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(JordanStructure::from_pairs(pairs))
    }
}

/// `(λ − c)^e ↦` block `(c, e)`.
pub fn eldiv_to_jordan<F: Field>(divisors: &[ElementaryDivisor<F>]) -> Result<JordanStructure<F>> {
    let pairs = divisors
        .iter()
        .map(|d| {
            d.linear_root()
                .map(|c| (c, d.exponent))
                .ok_or_else(|| Error::NonlinearFactor(d.render(true)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(JordanStructure::from_pairs(pairs))
}

/// Inverse of [`eldiv_to_jordan`].
pub fn jordan_to_eldiv<F: Field>(js: &JordanStructure<F>) -> Vec<ElementaryDivisor<F>> {
    let mut out: Vec<ElementaryDivisor<F>> = js
        .blocks
        .iter()
        .flat_map(|(c, sizes)| {
            sizes.iter().map(move |&k| ElementaryDivisor {
                factor: Poly::linear(c),
                exponent: k,
                certified: true,
            })
        })
        .collect();
    sort_divisors(&mut out);
    out
}

/// Assembles the Jordan matrix of a structure.
pub fn jordan_matrix<F: Field>(domain: &F::Domain, js: &JordanStructure<F>) -> Mat<F> {
    let blocks: Vec<Mat<F>> = js
        .blocks
        .iter()
        .flat_map(|(c, sizes)| sizes.iter().map(move |&k| jordan_block(domain, c, k)))
        .collect();
    Mat::block_diag(domain, &blocks)
}

/// Multiplicative block `c(I + N)`, the shape substitutions `y ↦ cy, z ↦ c(z + y)` produce.
pub fn multiplicative_block<F: Field>(domain: &F::Domain, c: &F, k: usize) -> Result<Mat<F>> {
    if c.is_zero() {
        return Err(Error::InvalidParameter(
            "multiplicative block needs a nonzero eigenvalue".into(),
        ));
    }
    Ok(jordan_block(domain, &F::one_in(domain), k).scale(c))
}

/// `D = diag(1, c, …, c^{k−1})` with `D⁻¹(cI + N)D = c(I + N)`.
pub fn multiplicative_transform<F: Field>(domain: &F::Domain, c: &F, k: usize) -> Result<Mat<F>> {
    if c.is_zero() {
        return Err(Error::InvalidParameter(
            "multiplicative block needs a nonzero eigenvalue".into(),
        ));
    }
    let powers: Vec<F> = (0..k).map(|i| c.power(i as u64)).collect();
    Ok(Mat::diagonal(domain, &powers))
}

/// Outcome of a similarity test; `witness` satisfies `T⁻¹AT = B` when present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Similarity<F: Field> {
    pub similar: bool,
    pub witness: Option<Mat<F>>,
    pub verified: bool,
}

/// Decides similarity by comparing invariant factors; on success composes the
/// two rational-form transforms into a witness.
pub fn similar<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Result<Similarity<F>> {
    a.require_square()?;
    b.require_square()?;
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    if a.domain() != b.domain() {
        return Err(Error::DomainMismatch);
    }
    let ra = rational_canonical_form(a)?;
    let rb = rational_canonical_form(b)?;
    if ra.blocks != rb.blocks {
        return Ok(Similarity {
            similar: false,
            witness: None,
            verified: ra.verified && rb.verified,
        });
    }
    let t = &ra.transform * &mat_inverse(&rb.transform)?;
    let verified = transform_holds(a, &t, b);
    Ok(Similarity {
        similar: true,
        witness: Some(t),
        verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::{Fp, Modulus};
    use crate::matrix::char_poly;
    use crate::smith::divisor_data;
    use crate::{qmat, qpoly, qvec, Q};

    fn six_by_six(which: usize) -> Mat<Q> {
        let mut j = qmat(&[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 2, 0, 0, 0],
            &[0, 0, 0, 2, 0, 0],
            &[0, 0, 0, 0, 2, 0],
            &[0, 0, 0, 0, 0, 3],
        ]);
        let one = Q::from_integer(1.into());
        match which {
            1 => {}
            2 => {
                j.set(2, 3, one.clone());
                j.set(3, 4, one);
            }
            _ => j.set(3, 4, one),
        }
        j
    }

    #[test]
    fn companion_orientation() {
        let f = qpoly(&[5, 3, 1]);
        let c = companion(&f).unwrap();
        assert_eq!(c, qmat(&[&[-3, 1], &[-5, 0]]));
        assert_eq!(char_poly(&c).unwrap(), f);
        assert_eq!(companion(&qpoly(&[-7, 1])).unwrap(), qmat(&[&[7]]));
        let cube = companion(&qpoly(&[0, 0, 0, 1])).unwrap();
        assert_eq!(char_poly(&cube).unwrap(), qpoly(&[0, 0, 0, 1]));
        assert!(cube.pow(3).is_zero());
        assert!(matches!(companion(&qpoly(&[1, 2])), Err(Error::NotMonic(_))));
    }

    #[test]
    fn rational_form_singular_symmetric() {
        let a = qmat(&[&[1, -1, 0], &[-1, 2, 1], &[0, 1, 1]]);
        let r = rational_canonical_form(&a).unwrap();
        assert!(r.verified);
        assert_eq!(r.blocks, vec![Block::Companion(qpoly(&[0, 3, -4, 1]))]);
    }

    #[test]
    fn rational_form_scalar_matrix() {
        let a = qmat(&[&[4, 0], &[0, 4]]);
        let r = rational_canonical_form(&a).unwrap();
        assert!(r.verified);
        assert_eq!(r.blocks.len(), 2);
        assert_eq!(r.matrix, a);
    }

    #[test]
    fn rational_form_six_by_six_middle() {
        let r = rational_canonical_form(&six_by_six(2)).unwrap();
        assert!(r.verified);
        let dims: Vec<usize> = r.blocks.iter().map(Block::dimension).collect();
        assert_eq!(dims, vec![1, 5]);
    }

    #[test]
    fn jordan_singular_symmetric() {
        let a = qmat(&[&[1, -1, 0], &[-1, 2, 1], &[0, 1, 1]]);
        let j = jordan_form(&a).unwrap();
        assert!(j.verified);
        assert_eq!(j.matrix, qmat(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 3]]));
        let expected = [qvec(&[1, 1, -1]), qvec(&[1, 0, 1]), qvec(&[1, -2, -1])];
        for (k, e) in expected.iter().enumerate() {
            let col = j.transform.col(k);
            let ratio = col[0].clone() / e[0].clone();
            assert!(col.iter().zip(e).all(|(x, y)| *x == ratio.clone() * y.clone()));
        }
    }

    #[test]
    fn jordan_recovers_six_by_six_third() {
        let j3 = six_by_six(3);
        let t0 = {
            let mut t = Mat::identity(&(), 6);
            t.add_row_multiple(0, 5, &Q::from_integer(2.into()));
            t.add_row_multiple(3, 1, &Q::from_integer((-1).into()));
            t.add_row_multiple(4, 2, &Q::from_integer(3.into()));
            t.add_row_multiple(5, 0, &Q::from_integer(1.into()));
            t
        };
        let a = &(&mat_inverse(&t0).unwrap() * &j3) * &t0;
        let j = jordan_form(&a).unwrap();
        assert!(j.verified);
        assert_eq!(j.jordan_structure().unwrap().to_string(), "1:[1,1] 2:[2,1] 3:[1]");
    }

    #[test]
    fn jordan_requires_split() {
        let m = Modulus::new(2).unwrap();
        let c = Mat::<Fp>::from_i64_rows(&m, &[&[1, 1], &[1, 0]]);
        match jordan_form(&c) {
            Err(Error::SplitFieldRequired { factors }) => assert_eq!(factors, vec!["λ² + λ + 1"]),
            other => panic!("unexpected {other:?}"),
        }
        let p = primary_form(&c).unwrap();
        assert!(p.verified);
    }

    #[test]
    fn hypercompanion_gf2_square() {
        let m = Modulus::new(2).unwrap();
        let phi = Poly::<Fp>::from_i64s(&m, &[1, 1, 1]);
        let h = hypercompanion(&phi, 2).unwrap();
        let dd = divisor_data(&h).unwrap();
        assert_eq!(dd.elementary_divisors.len(), 1);
        assert_eq!(dd.elementary_divisors[0].factor, phi);
        assert_eq!(dd.elementary_divisors[0].exponent, 2);
        let p = primary_form(&h).unwrap();
        assert!(p.verified);
        assert_eq!(p.matrix, h);
    }

    #[test]
    fn identity_jordan() {
        let a = qmat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let j = jordan_form(&a).unwrap();
        assert_eq!(j.matrix, a);
        assert!(j.transform.is_identity());
    }

    #[test]
    fn six_by_six_pairwise_not_similar() {
        for x in 1..=3 {
            for y in 1..=3 {
                let s = similar(&six_by_six(x), &six_by_six(y)).unwrap();
                assert_eq!(s.similar, x == y);
                if s.similar {
                    assert!(s.verified);
                }
            }
        }
    }

    #[test]
    fn eldiv_jordan_dictionary() {
        let dd = divisor_data(&six_by_six(3)).unwrap();
        let js = eldiv_to_jordan(&dd.elementary_divisors).unwrap();
        assert_eq!(js.to_string(), "1:[1,1] 2:[2,1] 3:[1]");
        assert_eq!(jordan_to_eldiv(&js), dd.elementary_divisors);
        let bad = vec![ElementaryDivisor {
            factor: qpoly(&[1, 0, 1]),
            exponent: 1,
            certified: true,
        }];
        assert!(matches!(eldiv_to_jordan(&bad), Err(Error::NonlinearFactor(_))));
    }

    #[test]
    fn multiplicative_dictionary() {
        let c = Q::from_integer(3.into());
        let add = jordan_block(&(), &c, 3);
        let mul = multiplicative_block(&(), &c, 3).unwrap();
        let d = multiplicative_transform(&(), &c, 3).unwrap();
        assert_eq!(&(&mat_inverse(&d).unwrap() * &add) * &d, mul);
    }
}
