//! Small oscillations `M y″ + K y = 0` with symmetric `M`, `K` and `M`
//! positive definite.
//!
//! The spectral variable is `s` with characteristic equation
//! `det(K − sM) = 0` and `s = ρ²`: a mode oscillates as `sin(ρt + β)` when
//! `s > 0`, drifts affinely when `s = 0` and grows exponentially when `s < 0`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::algebra::poly_gcd;
use crate::algebra::scalar::{IntegralDomain, Ring};
use crate::algebra::sturm::{isolate_real_roots, sturm_count, Bound, RootInterval};
use crate::error::{Error, Result};
use crate::matrix::{adjugate, det, linear_matrix, nullspace};
use crate::{QMat, QPoly, QPolyMat, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OscSystem {
    m: QMat,
    k: QMat,
}

fn leading_minors(a: &QMat) -> Result<Vec<Q>> {
    (1..=a.rows())
        .map(|k| {
            let idx: Vec<usize> = (0..k).collect();
            det(&a.submatrix(&idx, &idx))
        })
        .collect()
}

impl OscSystem {
    /// Checks symmetry of both matrices and positive definiteness of `M`.
    pub fn new(m: QMat, k: QMat) -> Result<Self> {
        m.require_square()?;
        k.require_square()?;
        if m.rows() != k.rows() {
            return Err(Error::DimensionMismatch(format!(
                "mass matrix is {0}x{0}, stiffness matrix is {1}x{1}",
                m.rows(),
                k.rows()
            )));
        }
        if !m.is_symmetric() || !k.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        for (i, d) in leading_minors(&m)?.into_iter().enumerate() {
            if !d.is_positive() {
                return Err(Error::NotPositiveDefinite {
                    index: i + 1,
                    value: d.to_string(),
                });
            }
        }
        Ok(OscSystem { m, k })
    }

    pub fn m(&self) -> &QMat {
        &self.m
    }

    pub fn k(&self) -> &QMat {
        &self.k
    }

    pub fn size(&self) -> usize {
        self.m.rows()
    }

    /// `K − sM` as a matrix of polynomials in `s`.
    pub fn pencil_matrix(&self) -> QPolyMat {
        linear_matrix(&-&self.m, &self.k)
    }

    /// `K − sM` at a given `s`.
    pub fn at(&self, s: &Q) -> QMat {
        &self.k - &self.m.scale(s)
    }
}

/// `det(K − sM)`, of degree `n` with leading coefficient `(−1)^n det M`.
pub fn char_poly(sys: &OscSystem) -> Result<QPoly> {
    det(&sys.pencil_matrix())
}

/// Adjugate of `K − sM`, entrywise polynomials in `s`.
pub fn adjugate_poly(sys: &OscSystem) -> Result<QPolyMat> {
    adjugate(&sys.pencil_matrix())
}

/// Eigenvectors for one exact root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eigenvectors {
    /// Column `column` of the adjugate at the root: nonzero and unnormalized.
    Adjugate { column: usize, vector: Vec<Q> },
    /// Every adjugate column vanishes at the root; an exact basis of
    /// `ker(K − sM)` instead.
    Nullspace { basis: Vec<Vec<Q>> },
}

impl Eigenvectors {
    pub fn is_degenerate(&self) -> bool {
        matches!(self, Eigenvectors::Nullspace { .. })
    }

    pub fn vectors(&self) -> Vec<Vec<Q>> {
        match self {
            Eigenvectors::Adjugate { vector, .. } => vec![vector.clone()],
            Eigenvectors::Nullspace { basis } => basis.clone(),
        }
    }
}

/// The first nonzero column of `adj(K − s_j M)`, or a nullspace basis when
/// all columns vanish.
pub fn eigvec_adjugate(sys: &OscSystem, s: &Q) -> Result<Eigenvectors> {
    if !char_poly(sys)?.eval(s).is_zero() {
        return Err(Error::NotARoot(s.to_string()));
    }
    let at = sys.at(s);
    let adj = adjugate(&at)?;
    for j in 0..adj.cols() {
        let col = adj.col(j);
        if col.iter().any(|x| !x.is_zero()) {
            return Ok(Eigenvectors::Adjugate { column: j, vector: col });
        }
    }
    Ok(Eigenvectors::Nullspace { basis: nullspace(&at) })
}

/// Signature of a symmetric form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    /// `Δ_k / Δ_{k−1}` when `Δ_1 … Δ_{n−1}` are all nonzero.
    pub quotients: Option<Vec<Q>>,
    /// `Δ_n = 0`: the form itself is degenerate.
    pub degenerate: bool,
}

impl Inertia {
    pub fn signature(&self) -> (usize, usize, usize) {
        (self.positive, self.negative, self.zero)
    }

    fn from_diagonal(d: &[Q]) -> (usize, usize, usize) {
        let pos = d.iter().filter(|x| x.is_positive()).count();
        let neg = d.iter().filter(|x| Signed::is_negative(*x)).count();
        (pos, neg, d.len() - pos - neg)
    }
}

/// Diagonal of a congruence reduction `Cᵀ A C = D`.
pub fn congruence_diagonal(a: &QMat) -> Result<Vec<Q>> {
    a.require_square()?;
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = a.rows();
    let mut w = a.clone();
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        if w.get(k, k).is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !w.get(i, i).is_zero()) {
                w.swap_rows(k, i);
                w.swap_cols(k, i);
            } else if let Some(j) = (k + 1..n).find(|&j| !w.get(k, j).is_zero()) {
                // new diagonal entry 2·a_kj since a_jj = a_kk = 0
                let one = Q::one();
                w.add_row_multiple(k, j, &one);
                w.add_col_multiple(k, j, &one);
            }
        }
        let p = w.get(k, k).clone();
        if !p.is_zero() {
            for i in k + 1..n {
                let f = -(w.get(i, k).clone() / &p);
                w.add_row_multiple(i, k, &f);
                w.add_col_multiple(i, k, &f);
            }
        }
        diag.push(p);
    }
    Ok(diag)
}

/// Signature via leading principal minors when they allow it, always
/// cross-checked against congruence elimination.
pub fn inertia(a: &QMat) -> Result<Inertia> {
    let diag = congruence_diagonal(a)?;
    let (positive, negative, zero) = Inertia::from_diagonal(&diag);
    let n = a.rows();
    let minors = leading_minors(a)?;
    let degenerate = minors.last().is_some_and(Ring::is_zero);
    let quotients = minors[..n.saturating_sub(1)].iter().all(|d| !d.is_zero()).then(|| {
        let mut prev = Q::one();
        minors
            .iter()
            .map(|d| {
                let q = d / &prev;
                prev = d.clone();
                q
            })
            .collect::<Vec<_>>()
    });
    if let Some(qs) = &quotients {
        assert_eq!(
            Inertia::from_diagonal(qs),
            (positive, negative, zero),
            "minor quotients and congruence elimination disagree"
        );
    }
    Ok(Inertia {
        positive,
        negative,
        zero,
        quotients,
        degenerate,
    })
}

/// Lagrange's trichotomy, which demotes every repeated root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LagrangeVerdict {
    Stable,
    Unstable,
    Conditional,
}

/// Stability by the sign of the roots alone, multiplicity irrelevant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeierstrassVerdict {
    Stable,
    Marginal,
    Unstable,
}

impl fmt::Display for LagrangeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LagrangeVerdict::Stable => "stable",
            LagrangeVerdict::Unstable => "unstable",
            LagrangeVerdict::Conditional => "conditional",
        })
    }
}

impl fmt::Display for WeierstrassVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeierstrassVerdict::Stable => "stable",
            WeierstrassVerdict::Marginal => "marginal",
            WeierstrassVerdict::Unstable => "unstable",
        })
    }
}

/// Real roots of the characteristic polynomial with their certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub char_poly: QPoly,
    /// Distinct real roots, ascending.
    pub roots: Vec<RootInterval>,
    /// Sturm count over the whole line.
    pub sturm_real: usize,
    /// Degree of the square-free part: the number of distinct complex roots.
    pub distinct: usize,
}

impl Spectrum {
    /// All roots real: the Sturm count matches the distinct-root count.
    pub fn all_real(&self) -> bool {
        self.sturm_real == self.distinct
    }

    pub fn real_root_count(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn has_repeated(&self) -> bool {
        self.roots.iter().any(|r| r.multiplicity > 1)
    }
}

pub fn spectrum(sys: &OscSystem) -> Result<Spectrum> {
    let f = char_poly(sys)?;
    let roots = isolate_real_roots(&f)?;
    let sturm_real = sturm_count(&f, &Bound::NegInf, &Bound::PosInf)?;
    let g = poly_gcd(&f, &f.derivative())?;
    let distinct = f.degree().unwrap_or(0) - g.degree().unwrap_or(0);
    Ok(Spectrum {
        char_poly: f,
        roots,
        sturm_real,
        distinct,
    })
}

fn verdicts(sp: &Spectrum) -> (LagrangeVerdict, WeierstrassVerdict) {
    let all_real = sp.all_real() && sp.roots.len() == sp.distinct;
    let any_negative = sp.roots.iter().any(|r| r.sign() < 0);
    let any_zero = sp.roots.iter().any(|r| r.sign() == 0);
    let lagrange = if !all_real || any_negative {
        LagrangeVerdict::Unstable
    } else if any_zero || sp.has_repeated() {
        LagrangeVerdict::Conditional
    } else {
        LagrangeVerdict::Stable
    };
    let weierstrass = if !all_real || any_negative {
        WeierstrassVerdict::Unstable
    } else if any_zero {
        WeierstrassVerdict::Marginal
    } else {
        WeierstrassVerdict::Stable
    };
    (lagrange, weierstrass)
}

pub fn classify_stability(sys: &OscSystem) -> Result<(LagrangeVerdict, WeierstrassVerdict)> {
    Ok(verdicts(&spectrum(sys)?))
}

/// Eigen data of a mode whose root is irrational: the adjugate column as
/// polynomials in `s`, to be evaluated at the isolated root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModeVectors {
    Exact(Eigenvectors),
    Symbolic {
        column: usize,
        polys: Vec<QPoly>,
    },
    /// All adjugate columns vanish at an irrational root.
    SymbolicDegenerate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mode {
    pub root: RootInterval,
    pub vectors: ModeVectors,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeReport {
    pub size: usize,
    pub spectrum: Spectrum,
    pub modes: Vec<Mode>,
    pub lagrange_1766: LagrangeVerdict,
    pub weierstrass_1858: WeierstrassVerdict,
    pub template: String,
    pub notes: Vec<String>,
}

pub const SIGN_CONVENTION: &str =
    "characteristic equation det(K − sM) = 0 with s = ρ²; oscillation needs every s real and positive";

fn exact_sqrt(q: &Q) -> Option<Q> {
    if Signed::is_negative(q) {
        return None;
    }
    let root = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(Q::new(root(q.numer())?, root(q.denom())?))
}

/// `√s` rendered exactly when possible, e.g. `2`, `√3`, `√(1/2)`, `√s₂`.
fn render_rate(s: &RootInterval, label: &str) -> String {
    match s.exact() {
        Some(v) => {
            let mag = v.abs();
            match exact_sqrt(&mag) {
                Some(r) => r.to_string(),
                None if mag.is_integer() => format!("√{mag}"),
                None => format!("√({mag})"),
            }
        }
        None => format!("√|{label}|"),
    }
}

fn mode_terms(idx: usize, mode: &Mode) -> Vec<String> {
    let count = match &mode.vectors {
        ModeVectors::Exact(e) => e.vectors().len(),
        _ => 1,
    };
    let label = format!("s{idx}");
    let rate = render_rate(&mode.root, &label);
    (0..count)
        .map(|k| {
            let tag = if count == 1 {
                format!("{idx}")
            } else {
                format!("{idx}{}", (b'a' + k as u8) as char)
            };
            let v = format!("v{tag}");
            match mode.root.sign() {
                1 => {
                    let arg = if rate == "1" {
                        "t".to_string()
                    } else {
                        format!("{rate}·t")
                    };
                    format!("α{tag}·{v}·sin({arg} + β{tag})")
                }
                0 => format!("(α{tag} + γ{tag}·t)·{v}"),
                _ => format!("{v}·(α{tag}·cosh({rate}·t) + γ{tag}·sinh({rate}·t))"),
            }
        })
        .collect()
}

fn symbolic_mode(sys: &OscSystem, adj: &QPolyMat, f: &QPoly, root: &RootInterval) -> Result<ModeVectors> {
    let lo = Bound::Finite(root.lo.clone());
    let hi = Bound::Finite(root.hi.clone());
    let sqf = f.exact_div(&poly_gcd(f, &f.derivative())?).expect("gcd divides");
    for j in 0..sys.size() {
        let col = adj.col(j);
        let vanishes = col.iter().all(|e| {
            e.is_zero() || {
                let g = poly_gcd(e, &sqf).expect("same domain");
                !g.is_constant() && sturm_count(&g, &lo, &hi).unwrap_or(0) == 1
            }
        });
        if !vanishes {
            return Ok(ModeVectors::Symbolic { column: j, polys: col });
        }
    }
    Ok(ModeVectors::SymbolicDegenerate)
}

pub fn mode_report(sys: &OscSystem) -> Result<ModeReport> {
    let sp = spectrum(sys)?;
    let (lagrange, weierstrass) = verdicts(&sp);
    let adj = adjugate_poly(sys)?;
    let mut modes = Vec::new();
    for root in &sp.roots {
        let vectors = match root.exact() {
            Some(s) => ModeVectors::Exact(eigvec_adjugate(sys, s)?),
            None => symbolic_mode(sys, &adj, &sp.char_poly, root)?,
        };
        modes.push(Mode {
            root: root.clone(),
            vectors,
        });
    }
    let mut notes = vec![SIGN_CONVENTION.to_string()];
    if !sp.all_real() || sp.real_root_count() < sys.size() {
        notes.push(format!(
            "{} non-real roots (counted with multiplicity)",
            sys.size() - sp.real_root_count()
        ));
    }
    for m in &modes {
        if m.root.multiplicity > 1 && m.root.sign() > 0 && weierstrass == WeierstrassVerdict::Stable {
            notes.push(format!(
                "repeated root s = {} (multiplicity {}), stable: t does NOT leave the sine",
                m.root, m.root.multiplicity
            ));
        }
    }
    let template = modes
        .iter()
        .enumerate()
        .flat_map(|(i, m)| mode_terms(i + 1, m))
        .collect::<Vec<_>>()
        .join(" + ");
    Ok(ModeReport {
        size: sys.size(),
        spectrum: sp,
        modes,
        lagrange_1766: lagrange,
        weierstrass_1858: weierstrass,
        template: format!("y(t) = {template}"),
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Mat;
    use crate::{qmat, qpoly, qvec};

    fn q(v: i64) -> Q {
        Q::from_integer(v.into())
    }

    fn a23() -> QMat {
        qmat(&[&[1, -1, 0], &[-1, 2, 1], &[0, 1, 1]])
    }

    fn id(n: usize) -> QMat {
        Mat::identity(&(), n)
    }

    fn proportional(a: &[Q], b: &[Q]) -> bool {
        (0..a.len()).all(|i| (0..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
    }

    #[test]
    fn three_by_three_characteristic_data() {
        let sys = OscSystem::new(id(3), a23()).unwrap();
        assert_eq!(char_poly(&sys).unwrap(), qpoly(&[0, -3, 4, -1]));
        let adj = adjugate_poly(&sys).unwrap();
        // (1−s)(2−s) − 1 = s² − 3s + 1
        assert_eq!(adj.get(0, 0), &qpoly(&[1, -3, 1]));
        for (s, v) in [(1, [1, 0, 1]), (0, [1, 1, -1]), (3, [1, -2, -1])] {
            let e = eigvec_adjugate(&sys, &q(s)).unwrap();
            assert!(!e.is_degenerate());
            assert!(proportional(&e.vectors()[0], &qvec(&v)), "s = {s}");
        }
        assert!(eigvec_adjugate(&sys, &q(2)).is_err());
    }

    #[test]
    fn inertia_examples() {
        let i3 = inertia(&id(3)).unwrap();
        assert_eq!(i3.signature(), (3, 0, 0));
        assert_eq!(i3.quotients, Some(qvec(&[1, 1, 1])));
        let a = inertia(&a23()).unwrap();
        assert_eq!(a.signature(), (2, 0, 1));
        assert!(a.degenerate);
        assert_eq!(inertia(&qmat(&[&[1, 0], &[0, -1]])).unwrap().signature(), (1, 1, 0));
        // zero diagonal forces the off-diagonal step
        let h = inertia(&qmat(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(h.signature(), (1, 1, 0));
        assert_eq!(h.quotients, None);
    }

    #[test]
    fn verdicts_on_examples() {
        let eq = OscSystem::new(id(2), id(2)).unwrap();
        assert_eq!(
            classify_stability(&eq).unwrap(),
            (LagrangeVerdict::Conditional, WeierstrassVerdict::Stable)
        );
        let saddle = OscSystem::new(id(2), qmat(&[&[1, 0], &[0, -1]])).unwrap();
        assert_eq!(
            classify_stability(&saddle).unwrap(),
            (LagrangeVerdict::Unstable, WeierstrassVerdict::Unstable)
        );
        let sys = OscSystem::new(id(3), a23()).unwrap();
        assert_eq!(
            classify_stability(&sys).unwrap(),
            (LagrangeVerdict::Conditional, WeierstrassVerdict::Marginal)
        );
    }

    #[test]
    fn diagonal_char_poly() {
        let sys = OscSystem::new(qmat(&[&[2, 0], &[0, 1]]), qmat(&[&[4, 0], &[0, 3]])).unwrap();
        assert_eq!(char_poly(&sys).unwrap(), qpoly(&[4, -2]) * qpoly(&[3, -1]));
    }

    #[test]
    fn reports() {
        let eq = mode_report(&OscSystem::new(id(2), id(2)).unwrap()).unwrap();
        assert_eq!(eq.modes.len(), 1);
        match &eq.modes[0].vectors {
            ModeVectors::Exact(Eigenvectors::Nullspace { basis }) => assert_eq!(basis.len(), 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(eq.notes.iter().any(|n| n.contains("t does NOT leave the sine")));

        let one = mode_report(&OscSystem::new(id(1), qmat(&[&[4]])).unwrap()).unwrap();
        assert_eq!(one.template, "y(t) = α1·v1·sin(2·t + β1)");

        let r = mode_report(&OscSystem::new(id(3), a23()).unwrap()).unwrap();
        assert_eq!(r.modes.len(), 3);
        assert!(r.template.contains("(α1 + γ1·t)·v1"));
        assert!(r.template.contains("sin(t + β2)"));
        assert!(r.template.contains("sin(√3·t + β3)"));
    }

    #[test]
    fn irrational_modes_are_symbolic() {
        // s² − 3s + 1 has irrational roots
        let sys = OscSystem::new(id(2), qmat(&[&[1, 1], &[1, 2]])).unwrap();
        let r = mode_report(&sys).unwrap();
        assert_eq!(r.modes.len(), 2);
        assert!(r
            .modes
            .iter()
            .all(|m| matches!(m.vectors, ModeVectors::Symbolic { .. })));
        assert_eq!(r.weierstrass_1858, WeierstrassVerdict::Stable);
        assert!(r.template.contains("√|s1|"));
    }

    #[test]
    fn rejects_bad_systems() {
        assert_eq!(
            OscSystem::new(qmat(&[&[1, 2], &[2, 1]]), id(2)).unwrap_err(),
            Error::NotPositiveDefinite {
                index: 2,
                value: "-3".into()
            }
        );
        assert_eq!(
            OscSystem::new(id(2), qmat(&[&[1, 2], &[0, 1]])).unwrap_err(),
            Error::NotSymmetric
        );
    }
}
