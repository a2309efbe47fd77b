//! Dense exact matrices over a field, over ℤ, or over F\[λ\].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::poly::Poly;
use crate::algebra::scalar::{Field, IntegralDomain, Ring};
use crate::error::{Error, Result};

/// Row-major dense matrix; every entry lives in the same domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<R: Ring> {
    domain: R::Domain,
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Mat<R> {
    /// Checked constructor for external input: non-empty, rectangular.
    pub fn from_rows(domain: R::Domain, rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::EmptyMatrix);
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Mat {
            domain,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(domain: &R::Domain, rows: &[&[i64]]) -> Self {
        let v = rows
            .iter()
            .map(|row| row.iter().map(|&x| R::from_i64_in(domain, x)).collect())
            .collect();
        Mat::from_rows(domain.clone(), v).expect("well-formed literal matrix")
    }

    /// Zero-sized dimensions are permitted here for block assembly.
    pub fn from_fn(domain: &R::Domain, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            domain: domain.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn zeros(domain: &R::Domain, rows: usize, cols: usize) -> Self {
        Mat::from_fn(domain, rows, cols, |_, _| R::zero_in(domain))
    }

    pub fn identity(domain: &R::Domain, n: usize) -> Self {
        Mat::from_fn(domain, n, n, |i, j| {
            if i == j {
                R::one_in(domain)
            } else {
                R::zero_in(domain)
            }
        })
    }

    pub fn diagonal(domain: &R::Domain, entries: &[R]) -> Self {
        let n = entries.len();
        Mat::from_fn(domain, n, n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                R::zero_in(domain)
            }
        })
    }

    pub fn domain(&self) -> &R::Domain {
        &self.domain
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn from_cols(domain: &R::Domain, rows: usize, cols: &[Vec<R>]) -> Self {
        Mat::from_fn(domain, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(&self.domain, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<S: Ring>(&self, domain: &S::Domain, f: impl Fn(&R) -> S) -> Mat<S> {
        Mat {
            domain: domain.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(&self.domain, |x| x.clone() * c.clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[target] += factor · row[source]`
    pub fn add_row_multiple(&mut self, target: usize, source: usize, factor: &R) {
        for j in 0..self.cols {
            let v = self.get(target, j).clone() + factor.clone() * self.get(source, j).clone();
            self.set(target, j, v);
        }
    }

    /// `col[target] += factor · col[source]`
    pub fn add_col_multiple(&mut self, target: usize, source: usize, factor: &R) {
        for i in 0..self.rows {
            let v = self.get(i, target).clone() + self.get(i, source).clone() * factor.clone();
            self.set(i, target, v);
        }
    }

    pub fn scale_row(&mut self, i: usize, factor: &R) {
        for j in 0..self.cols {
            let v = self.get(i, j).clone() * factor.clone();
            self.set(i, j, v);
        }
    }

    pub fn scale_col(&mut self, j: usize, factor: &R) {
        for i in 0..self.rows {
            let v = self.get(i, j).clone() * factor.clone();
            self.set(i, j, v);
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Mat::from_fn(&self.domain, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    /// Deletes one row and one column.
    pub fn minor_matrix(&self, skip_row: usize, skip_col: usize) -> Self {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| i != skip_row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != skip_col).collect();
        self.submatrix(&rows, &cols)
    }

    pub fn block_diag(domain: &R::Domain, blocks: &[Mat<R>]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(domain, n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn hstack(&self, other: &Mat<R>) -> Self {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(&self.domain, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(R::zero_in(&self.domain), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> R {
        (0..self.rows.min(self.cols)).fold(R::zero_in(&self.domain), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Mat::identity(&self.domain, self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl<R: Ring> Mul for &Mat<R> {
    type Output = Mat<R>;
    fn mul(self, rhs: &Mat<R>) -> Mat<R> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out: Mat<R> = Mat::zeros(&self.domain, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j).clone() + a.clone() * rhs.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl<R: Ring> Add for &Mat<R> {
    type Output = Mat<R>;
    fn add(self, rhs: &Mat<R>) -> Mat<R> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(&self.domain, self.rows, self.cols, |i, j| {
            self.get(i, j).clone() + rhs.get(i, j).clone()
        })
    }
}

impl<R: Ring> Sub for &Mat<R> {
    type Output = Mat<R>;
    fn sub(self, rhs: &Mat<R>) -> Mat<R> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(&self.domain, self.rows, self.cols, |i, j| {
            self.get(i, j).clone() - rhs.get(i, j).clone()
        })
    }
}

impl<R: Ring> Neg for &Mat<R> {
    type Output = Mat<R>;
    fn neg(self) -> Mat<R> {
        self.map(&self.domain, |x| -x.clone())
    }
}

impl<R: Ring> fmt::Display for Mat<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                let c = &cells[i * self.cols + j];
                let pad = width - c.chars().count();
                write!(f, "{}{}{}", if j > 0 { " " } else { "" }, " ".repeat(pad), c)?;
            }
            f.write_str("]")?;
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Determinants, adjugates, minors

/// Fraction-free Bareiss determinant; every intermediate division is asserted exact.
pub fn det<R: IntegralDomain>(m: &Mat<R>) -> Result<R> {
    m.require_square()?;
    Ok(bareiss_det(m))
}

fn bareiss_det<R: IntegralDomain>(m: &Mat<R>) -> R {
    let n = m.rows;
    let domain = m.domain.clone();
    if n == 0 {
        return R::one_in(&domain);
    }
    let mut a = m.clone();
    let mut sign_flip = false;
    let mut prev = R::one_in(&domain);
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign_flip = !sign_flip;
                }
                None => return R::zero_in(&domain),
            }
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = pivot.clone() * a.get(i, j).clone() - a.get(i, k).clone() * a.get(k, j).clone();
                let q = num.exact_div(&prev).expect("Bareiss division must be exact");
                a.set(i, j, q);
            }
            a.set(i, k, R::zero_in(&domain));
        }
        prev = pivot;
    }
    let d = a.get(n - 1, n - 1).clone();
    if sign_flip {
        -d
    } else {
        d
    }
}

/// Transposed cofactor matrix: `M · adj(M) = det(M) · I`.
pub fn adjugate<R: IntegralDomain>(m: &Mat<R>) -> Result<Mat<R>> {
    m.require_square()?;
    let n = m.rows;
    if n == 1 {
        return Ok(Mat::identity(&m.domain, 1));
    }
    Ok(Mat::from_fn(&m.domain, n, n, |i, j| {
        let c = bareiss_det(&m.minor_matrix(j, i));
        if (i + j) % 2 == 1 {
            -c
        } else {
            c
        }
    }))
}

/// A k×k minor with its row and column index sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor<R: Ring> {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: R,
}

/// All k-subsets of `0..n` in lexicographic order.
pub fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // rightmost position that can still advance
        let Some(i) = (0..k).rev().find(|&i| idx[i] < i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Every k×k minor, rows outer and columns inner, both in lexicographic order.
pub fn k_minors<R: IntegralDomain>(m: &Mat<R>, k: usize) -> Result<Vec<Minor<R>>> {
    if k == 0 || k > m.rows.min(m.cols) {
        return Err(Error::MinorOutOfRange {
            k,
            rows: m.rows,
            cols: m.cols,
        });
    }
    let row_sets = index_subsets(m.rows, k);
    let col_sets = index_subsets(m.cols, k);
    let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
    for rs in &row_sets {
        for cs in &col_sets {
            out.push(Minor {
                rows: rs.clone(),
                cols: cs.clone(),
                value: bareiss_det(&m.submatrix(rs, cs)),
            });
        }
    }
    Ok(out)
}

/// Visits k×k minors lazily; the visitor returns `false` to stop early.
pub fn for_each_minor<R: IntegralDomain>(m: &Mat<R>, k: usize, mut visit: impl FnMut(R) -> bool) -> Result<()> {
    if k == 0 || k > m.rows.min(m.cols) {
        return Err(Error::MinorOutOfRange {
            k,
            rows: m.rows,
            cols: m.cols,
        });
    }
    let col_sets = index_subsets(m.cols, k);
    for rs in index_subsets(m.rows, k) {
        for cs in &col_sets {
            if !visit(bareiss_det(&m.submatrix(&rs, cs))) {
                return Ok(());
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Field-only elimination

/// Reduced row echelon form and its pivot columns.
pub fn rref<F: Field>(m: &Mat<F>) -> (Mat<F>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a.get(r, c).inv().unwrap();
        a.scale_row(r, &inv);
        for i in 0..a.rows {
            if i != r && !a.get(i, c).is_zero() {
                let f = -a.get(i, c).clone();
                a.add_row_multiple(i, r, &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<F: Field>(m: &Mat<F>) -> usize {
    rref(m).1.len()
}

/// Basis of the right nullspace `{v : M v = 0}`, one vector per free column.
pub fn nullspace<F: Field>(m: &Mat<F>) -> Vec<Vec<F>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero_in(&m.domain); m.cols];
            v[f] = F::one_in(&m.domain);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, f).clone();
            }
            v
        })
        .collect()
}

pub fn mat_inverse<F: Field>(m: &Mat<F>) -> Result<Mat<F>> {
    m.require_square()?;
    let n = m.rows;
    let aug = m.hstack(&Mat::identity(&m.domain, n));
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular {
            det: bareiss_det(m).to_string(),
        });
    }
    let inv = Mat::from_fn(&m.domain, n, n, |i, j| r.get(i, n + j).clone());
    debug_assert!((m * &inv).is_identity());
    Ok(inv)
}

/// Solves `M X = B` when M is invertible.
pub fn solve<F: Field>(m: &Mat<F>, b: &Mat<F>) -> Result<Mat<F>> {
    Ok(&mat_inverse(m)? * b)
}

// ---------------------------------------------------------------------------
// λ-matrices

/// The characteristic matrix `λI − A`.
pub fn char_matrix<F: Field>(a: &Mat<F>) -> Result<Mat<Poly<F>>> {
    a.require_square()?;
    let d = a.domain.clone();
    Ok(Mat::from_fn(&d, a.rows, a.cols, |i, j| {
        let c = Poly::constant(-a.get(i, j).clone());
        if i == j {
            c + Poly::x(&d)
        } else {
            c
        }
    }))
}

/// `det(λI − A)`.
pub fn char_poly<F: Field>(a: &Mat<F>) -> Result<Poly<F>> {
    det(&char_matrix(a)?)
}

/// Pencil matrix `λP + Q` over F\[λ\].
pub fn linear_matrix<F: Field>(p: &Mat<F>, q: &Mat<F>) -> Mat<Poly<F>> {
    let d = p.domain.clone();
    Mat::from_fn(&d, p.rows, p.cols, |i, j| {
        Poly::new(d.clone(), vec![q.get(i, j).clone(), p.get(i, j).clone()])
    })
}

/// Evaluates a polynomial matrix at a scalar.
pub fn eval_poly_mat<F: Field>(m: &Mat<Poly<F>>, at: &F) -> Mat<F> {
    m.map(&m.domain, |p| p.eval(at))
}

/// `f(A)` by Horner's rule.
pub fn poly_at_matrix<F: Field>(f: &Poly<F>, a: &Mat<F>) -> Mat<F> {
    let n = a.rows;
    let mut acc = Mat::zeros(&a.domain, n, n);
    for c in f.coeffs().iter().rev() {
        acc = &(&acc * a) + &Mat::identity(&a.domain, n).scale(c);
    }
    acc
}

/// `Σ A^k c_k` for a vector of polynomials `Σ λ^k c_k`; the F\[λ\]-module map onto F^n.
pub fn poly_vec_at_matrix<F: Field>(v: &[Poly<F>], a: &Mat<F>) -> Vec<F> {
    let n = a.rows;
    let max_deg = v.iter().filter_map(Poly::degree).max();
    let mut acc = vec![F::zero_in(&a.domain); n];
    let Some(max_deg) = max_deg else {
        return acc;
    };
    for k in (0..=max_deg).rev() {
        acc = a.mul_vec(&acc);
        for (i, p) in v.iter().enumerate() {
            acc[i] = acc[i].clone() + p.coeff(k);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::{Fp, Modulus};
    use crate::{qmat, qpoly, Q};

    fn fn23() -> Mat<Q> {
        qmat(&[&[1, -1, 0], &[-1, 2, 1], &[0, 1, 1]])
    }

    #[test]
    fn det_of_singular_symmetric_is_zero() {
        assert!(det(&fn23()).unwrap().is_zero());
        assert!(det(&Mat::<Q>::identity(&(), 4)).unwrap().is_one());
    }

    #[test]
    fn characteristic_determinant() {
        // det(A − xI) = −x³ + 4x² − 3x
        let a = fn23();
        let m = Mat::from_fn(&(), 3, 3, |i, j| {
            let c = Poly::constant(a.get(i, j).clone());
            if i == j {
                c - Poly::x(&())
            } else {
                c
            }
        });
        assert_eq!(det(&m).unwrap(), qpoly(&[0, -3, 4, -1]));
        assert_eq!(char_poly(&a).unwrap(), qpoly(&[0, 3, -4, 1]));
    }

    #[test]
    fn adjugate_entries_of_characteristic_matrix() {
        let a = fn23();
        let m = Mat::from_fn(&(), 3, 3, |i, j| {
            let c = Poly::constant(a.get(i, j).clone());
            if i == j {
                c - Poly::x(&())
            } else {
                c
            }
        });
        let adj = adjugate(&m).unwrap();
        // P11 = (1−x)(2−x) − 1, P12 = 1 − x, P13 = −1 (row-1 cofactors = adjugate column 1)
        assert_eq!(adj.get(0, 0), &(qpoly(&[1, -1]) * qpoly(&[2, -1]) - qpoly(&[1])));
        assert_eq!(adj.get(1, 0), &qpoly(&[1, -1]));
        assert_eq!(adj.get(2, 0), &qpoly(&[-1]));
        let prod = &m * &adj;
        let d = det(&m).unwrap();
        assert_eq!(prod, Mat::identity(&(), 3).scale(&d));
    }

    #[test]
    fn nullspace_of_shifted_symmetric() {
        let a = fn23();
        let shift = |s: i64| &a - &Mat::identity(&(), 3).scale(&Q::from_integer(s.into()));
        let v1 = nullspace(&shift(1));
        assert_eq!(v1.len(), 1);
        assert_eq!(v1[0], crate::qvec(&[1, 0, 1]));
        let v0 = nullspace(&shift(0));
        assert_eq!(v0[0], crate::qvec(&[-1, -1, 1]));
        let v3 = nullspace(&shift(3));
        assert_eq!(v3[0], crate::qvec(&[-1, 2, 1]));
        assert!(nullspace(&Mat::<Q>::identity(&(), 3)).is_empty());
    }

    #[test]
    fn two_minors() {
        let m = qmat(&[&[1, 2], &[3, 4]]);
        let minors = k_minors(&m, 2).unwrap();
        assert_eq!(minors.len(), 1);
        assert_eq!(minors[0].value, Q::from_integer((-2).into()));
        let id = Mat::<Q>::identity(&(), 3);
        let m2 = k_minors(&id, 2).unwrap();
        assert_eq!(m2.len(), 9);
        assert_eq!(m2.iter().filter(|m| m.value.is_one()).count(), 3);
        assert_eq!(m2.iter().filter(|m| m.value.is_zero()).count(), 6);
        let m1 = k_minors(&m, 1).unwrap();
        assert_eq!(
            m1.iter().map(|x| x.value.clone()).collect::<Vec<_>>(),
            m.entries().to_vec()
        );
        assert!(matches!(k_minors(&m, 3), Err(Error::MinorOutOfRange { .. })));
    }

    #[test]
    fn inverse_diagonal_and_singular() {
        let half = Q::new(1.into(), 2.into());
        let two = Q::from_integer(2.into());
        let m = Mat::diagonal(&(), &[two.clone(), half.clone()]);
        assert_eq!(mat_inverse(&m).unwrap(), Mat::diagonal(&(), &[half, two]));
        assert!(matches!(mat_inverse(&fn23()), Err(Error::Singular { .. })));
    }

    #[test]
    fn non_square_rejected() {
        let m = qmat(&[&[1, 2, 3]]);
        assert!(matches!(det(&m), Err(Error::NotSquare { rows: 1, cols: 3 })));
        assert!(adjugate(&m).is_err());
    }

    #[test]
    fn gf2_determinant_and_rank() {
        let m2 = Modulus::new(2).unwrap();
        let a = Mat::<Fp>::from_i64_rows(&m2, &[&[1, 1], &[1, 1]]);
        assert!(det(&a).unwrap().is_zero());
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(
            index_subsets(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(index_subsets(3, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn module_evaluation() {
        let a = fn23();
        // λ·e1 + 1·e2 ↦ A e1 + e2
        let v = vec![qpoly(&[0, 1]), qpoly(&[1]), qpoly(&[0])];
        assert_eq!(poly_vec_at_matrix(&v, &a), crate::qvec(&[1, 0, 0]));
    }
}
