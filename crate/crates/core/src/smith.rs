//! Smith normal form over Euclidean domains, gcd-of-minors chains, invariant
//! factors and elementary divisors.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use crate::algebra::factor::{factor, factor_integer, FactorField};
use crate::algebra::poly::{exponent_suffix, Poly};
use crate::algebra::scalar::{gcd, EuclideanDomain, Field, IntegralDomain, Ring};
use crate::error::{Error, Result};
use crate::matrix::{char_matrix, det, for_each_minor, Mat};

/// Default size limit for the gcd-of-minors oracle.
pub const ORACLE_CAP: usize = 5;

/// `U·M·V = S` with `U`, `V` unimodular and `S` diagonal, `d_1 | d_2 | …`.
/// The inverses are tracked alongside so callers never invert λ-matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<R: EuclideanDomain> {
    pub u: Mat<R>,
    pub u_inv: Mat<R>,
    pub s: Mat<R>,
    pub v: Mat<R>,
    pub v_inv: Mat<R>,
    pub rank: usize,
}

impl<R: EuclideanDomain> SmithForm<R> {
    /// Diagonal entries `d_1 … d_min(rows, cols)`, zeros included.
    pub fn diagonal(&self) -> Vec<R> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s.get(i, i).clone())
            .collect()
    }

    /// Re-checks `U·M·V = S`, both inverse pairs, unit determinants and the
    /// divisibility chain.
    pub fn verify(&self, m: &Mat<R>) -> bool {
        let n_r = m.rows();
        let n_c = m.cols();
        let id_r = Mat::identity(m.domain(), n_r);
        let id_c = Mat::identity(m.domain(), n_c);
        if &(&self.u * m) * &self.v != self.s || &self.u * &self.u_inv != id_r || &self.v * &self.v_inv != id_c {
            return false;
        }
        let units = [&self.u, &self.v]
            .iter()
            .all(|t| det(t).map(|d| d.is_unit()).unwrap_or(false));
        if !units {
            return false;
        }
        let d = self.diagonal();
        let off_diagonal_zero = (0..n_r).all(|i| (0..n_c).all(|j| i == j || self.s.get(i, j).is_zero()));
        off_diagonal_zero
            && d.iter().all(|x| x.is_zero() || x.normalized() == *x)
            && d.windows(2).all(|w| divides(&w[0], &w[1]))
    }
}

fn divides<R: EuclideanDomain>(a: &R, b: &R) -> bool {
    if a.is_zero() {
        return b.is_zero();
    }
    b.div_rem(a).1.is_zero()
}

struct Reducer<R: EuclideanDomain> {
    a: Mat<R>,
    u: Mat<R>,
    u_inv: Mat<R>,
    v: Mat<R>,
    v_inv: Mat<R>,
}

impl<R: EuclideanDomain> Reducer<R> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap_rows(i, j);
            self.u.swap_rows(i, j);
            self.u_inv.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap_cols(i, j);
            self.v.swap_cols(i, j);
            self.v_inv.swap_rows(i, j);
        }
    }

    /// row_target += f · row_source
    fn add_row(&mut self, target: usize, source: usize, f: &R) {
        self.a.add_row_multiple(target, source, f);
        self.u.add_row_multiple(target, source, f);
        self.u_inv.add_col_multiple(source, target, &-f.clone());
    }

    /// col_target += f · col_source
    fn add_col(&mut self, target: usize, source: usize, f: &R) {
        self.a.add_col_multiple(target, source, f);
        self.v.add_col_multiple(target, source, f);
        self.v_inv.add_row_multiple(source, target, &-f.clone());
    }

    fn scale_row(&mut self, i: usize, unit: &R) {
        let inv = unit.unit_inverse().expect("scaling by a unit");
        self.a.scale_row(i, unit);
        self.u.scale_row(i, unit);
        self.u_inv.scale_col(i, &inv);
    }

    /// Minimal Euclidean size among nonzero entries of the trailing block,
    /// ties to the lowest (row, col).
    fn pivot_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(R::Size, usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let s = x.euclid_size();
                if best.as_ref().is_none_or(|(b, _, _)| s < *b) {
                    best = Some((s, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    /// Clears row and column `t` outside the pivot, leaving a pivot that
    /// divides every entry of the trailing block.
    fn reduce_at(&mut self, t: usize) {
        loop {
            let mut clean = true;
            for i in t + 1..self.a.rows() {
                if self.a.get(i, t).is_zero() {
                    continue;
                }
                let (q, _) = self.a.get(i, t).div_rem(self.a.get(t, t));
                self.add_row(i, t, &-q);
                if !self.a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..self.a.cols() {
                if self.a.get(t, j).is_zero() {
                    continue;
                }
                let (q, _) = self.a.get(t, j).div_rem(self.a.get(t, t));
                self.add_col(j, t, &-q);
                if !self.a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // a remainder survived: it is smaller than the pivot, move it in
                self.promote_smallest_in_cross(t);
                continue;
            }
            // pivot must divide the rest of the trailing block
            let pivot = self.a.get(t, t).clone();
            let offender = (t + 1..self.a.rows())
                .flat_map(|i| (t + 1..self.a.cols()).map(move |j| (i, j)))
                .find(|&(i, j)| !divides(&pivot, self.a.get(i, j)));
            match offender {
                Some((i, _)) => {
                    let one = pivot.one_like();
                    self.add_row(t, i, &one);
                }
                None => return,
            }
        }
    }

    fn promote_smallest_in_cross(&mut self, t: usize) {
        let mut best: Option<(R::Size, usize, usize)> = None;
        let cells = (t..self.a.rows())
            .map(|i| (i, t))
            .chain((t + 1..self.a.cols()).map(|j| (t, j)));
        for (i, j) in cells {
            let x = self.a.get(i, j);
            if x.is_zero() {
                continue;
            }
            let s = x.euclid_size();
            if best.as_ref().is_none_or(|(b, _, _)| s < *b) {
                best = Some((s, i, j));
            }
        }
        let (_, i, j) = best.expect("cross has a nonzero entry");
        self.swap_rows(t, i);
        self.swap_cols(t, j);
    }
}

/// Smith normal form by gcd-driven row and column reduction.
pub fn smith_form<R: EuclideanDomain>(m: &Mat<R>) -> SmithForm<R> {
    let d = m.domain();
    let mut red = Reducer {
        a: m.clone(),
        u: Mat::identity(d, m.rows()),
        u_inv: Mat::identity(d, m.rows()),
        v: Mat::identity(d, m.cols()),
        v_inv: Mat::identity(d, m.cols()),
    };
    let mut rank = 0;
    for t in 0..m.rows().min(m.cols()) {
        let Some((i, j)) = red.pivot_in_block(t) else {
            break;
        };
        red.swap_rows(t, i);
        red.swap_cols(t, j);
        red.reduce_at(t);
        let (_, unit) = red.a.get(t, t).normalize();
        let inv = unit.unit_inverse().expect("normalizing unit");
        red.scale_row(t, &inv);
        rank += 1;
    }
    SmithForm {
        u: red.u,
        u_inv: red.u_inv,
        s: red.a,
        v: red.v,
        v_inv: red.v_inv,
        rank,
    }
}

/// Kronecker's definition: `D_k` is the normalized gcd of all `k×k` minors,
/// for `k = 1 … min(rows, cols)`; zero once every minor vanishes.
///
/// Combinatorial; refuses matrices larger than `cap`.
pub fn gcd_minors_chain<R: EuclideanDomain>(m: &Mat<R>, cap: usize) -> Result<Vec<R>> {
    let size = m.rows().max(m.cols());
    if size > cap {
        return Err(Error::OracleCapExceeded { size, cap });
    }
    let zero = R::zero_in(m.domain());
    let mut chain = Vec::new();
    for k in 1..=m.rows().min(m.cols()) {
        let mut g = zero.clone();
        for_each_minor(m, k, |minor| {
            g = gcd(&g, &minor);
            !g.is_one()
        })?;
        chain.push(g);
    }
    Ok(chain)
}

/// Cumulative products `d_1 · … · d_k` of a Smith diagonal.
pub fn chain_from_diagonal<R: EuclideanDomain>(diag: &[R]) -> Vec<R> {
    let mut acc: Option<R> = None;
    diag.iter()
        .map(|d| {
            let next = match &acc {
                None => d.clone(),
                Some(a) => a.clone() * d.clone(),
            };
            acc = Some(next.clone());
            next
        })
        .collect()
}

/// `φ^e` with `φ` monic irreducible (or an unsplit residual when `certified` is false).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryDivisor<F: Field> {
    pub factor: Poly<F>,
    pub exponent: usize,
    pub certified: bool,
}

impl<F: Field> ElementaryDivisor<F> {
    pub fn poly(&self) -> Poly<F> {
        self.factor.power(self.exponent as u64)
    }

    pub fn degree(&self) -> usize {
        self.factor.degree().unwrap_or(0) * self.exponent
    }

    /// Root of a linear factor `λ − c`.
    pub fn linear_root(&self) -> Option<F> {
        (self.factor.degree() == Some(1)).then(|| -self.factor.coeff(0))
    }

    /// Canonical order: by factor (see [`factor_order`]), exponent descending.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        factor_order(&self.factor, &other.factor).then(other.exponent.cmp(&self.exponent))
    }

    /// Compact `(λ−2)³` style; `unicode = false` gives `(x-2)^3`.
    pub fn render(&self, unicode: bool) -> String {
        let var = if unicode { "λ" } else { "x" };
        let body = self.factor.render(var, unicode).replace(' ', "");
        let body = if body.contains(['+', '-', '−']) {
            format!("({body})")
        } else {
            body
        };
        format!("{body}{}", exponent_suffix(self.exponent, unicode))
    }
}

impl<F: Field> fmt::Display for ElementaryDivisor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

/// Order of irreducible factors in divisor lists and canonical block lists:
/// by degree; linear factors `λ − c` by the root `c` ascending, others by
/// coefficients from the constant term upward.
pub fn factor_order<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal if a.degree() == Some(1) => {
            let ra = -a.coeff(0).div(&a.coeff(1));
            let rb = -b.coeff(0).div(&b.coeff(1));
            ra.canonical_cmp(&rb)
        }
        Ordering::Equal => a.canonical_cmp(b),
        o => o,
    }
}

pub fn sort_divisors<F: Field>(divs: &mut [ElementaryDivisor<F>]) {
    divs.sort_by(|a, b| a.canonical_cmp(b));
}

/// Invariant ledger of `λI − A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorData<F: Field> {
    pub size: usize,
    pub rank: usize,
    /// `D_1 | D_2 | … | D_n`, monic.
    pub chain: Vec<Poly<F>>,
    /// `i_1 | i_2 | … | i_n`, monic, leading ones included.
    pub invariant_factors: Vec<Poly<F>>,
    /// Sorted canonically.
    pub elementary_divisors: Vec<ElementaryDivisor<F>>,
}

impl<F: Field> DivisorData<F> {
    pub fn is_certified(&self) -> bool {
        self.elementary_divisors.iter().all(|d| d.certified)
    }

    /// Invariant factors of positive degree.
    pub fn nontrivial_invariant_factors(&self) -> Vec<Poly<F>> {
        self.invariant_factors
            .iter()
            .filter(|p| p.degree().unwrap_or(0) > 0)
            .cloned()
            .collect()
    }

    pub fn characteristic_polynomial(&self) -> Poly<F> {
        self.chain.last().cloned().expect("nonempty matrix")
    }
}

/// Invariant factors `i_k = D_k / D_{k−1}` with `D_0 = 1`; stops at the first zero.
pub fn invariant_factors_from_chain<F: Field>(chain: &[Poly<F>]) -> Result<Vec<Poly<F>>> {
    let mut out = Vec::with_capacity(chain.len());
    for (k, dk) in chain.iter().enumerate() {
        if dk.is_zero() {
            break;
        }
        let prev = if k == 0 {
            Poly::one(dk.base_domain())
        } else {
            chain[k - 1].clone()
        };
        let q = dk.exact_div(&prev).ok_or(Error::NotADivisibilityChain(k))?;
        out.push(q);
    }
    Ok(out)
}

/// Elementary divisors from a gcd chain: for each irreducible `φ` of the last
/// nonzero `D_r`, the exponents `l ≥ l′ ≥ …` of `φ` in `D_r, D_{r−1}, …`
/// give the divisors `φ^{l − l′}, φ^{l′ − l″}, …`, zeros dropped.
pub fn elementary_divisors_from_chain<F: FactorField>(chain: &[Poly<F>]) -> Result<Vec<ElementaryDivisor<F>>> {
    let nonzero: Vec<Poly<F>> = chain.iter().take_while(|d| !d.is_zero()).cloned().collect();
    // validates D_{k−1} | D_k
    invariant_factors_from_chain(&nonzero)?;
    let Some(top) = nonzero.last() else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for f in factor(top)?.factors {
        let exps: Vec<usize> = nonzero.iter().map(|d| multiplicity(d, &f.poly)).collect();
        for k in 0..exps.len() {
            let below = if k == 0 { 0 } else { exps[k - 1] };
            if exps[k] < below {
                return Err(Error::NotADivisibilityChain(k));
            }
            let e = exps[k] - below;
            if e > 0 {
                out.push(ElementaryDivisor {
                    factor: f.poly.clone(),
                    exponent: e,
                    certified: f.certified,
                });
            }
        }
    }
    sort_divisors(&mut out);
    Ok(out)
}

fn multiplicity<F: Field>(f: &Poly<F>, p: &Poly<F>) -> usize {
    let mut g = f.clone();
    let mut m = 0;
    while let Some(q) = g.exact_div(p) {
        g = q;
        m += 1;
    }
    m
}

/// Elementary divisors of one invariant-factor list, factoring each member.
pub fn elementary_divisors_from_invariants<F: FactorField>(
    invariants: &[Poly<F>],
) -> Result<Vec<ElementaryDivisor<F>>> {
    let mut out = Vec::new();
    for i in invariants.iter().filter(|p| p.degree().unwrap_or(0) > 0) {
        for f in factor(i)?.factors {
            out.push(ElementaryDivisor {
                factor: f.poly,
                exponent: f.exponent,
                certified: f.certified,
            });
        }
    }
    sort_divisors(&mut out);
    Ok(out)
}

/// Full ledger of a λ-matrix via its Smith form.
pub fn divisor_data_of_lambda_matrix<F: FactorField>(m: &Mat<Poly<F>>) -> Result<(DivisorData<F>, SmithForm<Poly<F>>)> {
    let sf = smith_form(m);
    let diag = sf.diagonal();
    let chain = chain_from_diagonal(&diag);
    let invariant_factors: Vec<Poly<F>> = diag.into_iter().take(sf.rank).collect();
    let elementary_divisors = elementary_divisors_from_invariants(&invariant_factors)?;
    let data = DivisorData {
        size: m.rows(),
        rank: sf.rank,
        chain,
        invariant_factors,
        elementary_divisors,
    };
    Ok((data, sf))
}

/// Invariant ledger of a square matrix `A` over a field, from the Smith form of `λI − A`.
pub fn divisor_data<F: FactorField>(a: &Mat<F>) -> Result<DivisorData<F>> {
    Ok(divisor_data_of_lambda_matrix(&char_matrix(a)?)?.0)
}

/// Prime-power elementary divisors of an integer Smith diagonal (zeros skipped),
/// sorted by prime then exponent descending.
pub fn integer_elementary_divisors(diag: &[BigInt]) -> Vec<(BigInt, u32)> {
    let mut out: Vec<(BigInt, u32)> = diag
        .iter()
        .filter(|d| !Ring::is_zero(*d))
        .flat_map(factor_integer)
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    out
}
