//! Exact dense linear algebra over the rationals and graded pieces of ideals.
//!
//! Row reduction always scans columns left to right and takes the first
//! nonzero entry at or below the current row as pivot, so every result here
//! is reproducible.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{monomials_of_degree, Monomial, Poly};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::scalar::int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// `s * self + t * other`.
    pub fn combine(&self, s: &Scalar, other: &Matrix, t: &Scalar) -> Matrix {
        self.scale(s).add(&other.scale(t))
    }

    /// `Pᵀ · self · P`.
    pub fn congruence(&self, p: &Matrix) -> Matrix {
        p.transpose().mul(self).mul(p)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = Scalar::one() / &m[(r, c)];
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(i, j)] - &f * &m[(r, j)];
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self · x = 0}`, one vector per free column (free
    /// variable set to one, the others to zero).
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    /// A solution of `self · x = rhs` with every free variable set to zero,
    /// or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &piv;
                for j in c..n {
                    let v = &m[(i, j)] - &f * &m[(c, j)];
                    m[(i, j)] = v;
                }
            }
        }
        det
    }

    /// The quadratic form `xᵀ · self · x` as a polynomial.
    pub fn quadratic_form(&self) -> Poly {
        assert!(self.is_square());
        let n = self.rows;
        let mut p = Poly::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut e = vec![0; n];
                e[i] += 1;
                e[j] += 1;
                p.add_term(Monomial::new(e), self[(i, j)].clone());
            }
        }
        p
    }

    /// Symmetric matrix `M` with `xᵀ M x = q(x)` for a quadratic form `q`.
    pub fn from_quadratic_form(q: &Poly) -> Result<Matrix> {
        let n = q.nvars();
        let mut m = Matrix::zeros(n, n);
        let half = Scalar::new(1.into(), 2.into());
        for (mono, c) in q.terms() {
            if mono.degree() != 2 {
                return Err(Error::Input("not a quadratic form".into()));
            }
            let idx: Vec<usize> = mono
                .exponents()
                .iter()
                .enumerate()
                .flat_map(|(i, &e)| core::iter::repeat_n(i, e as usize))
                .collect();
            let (a, b) = (idx[0], idx[1]);
            if a == b {
                m[(a, a)] += c;
            } else {
                m[(a, b)] += c * &half;
                m[(b, a)] += c * &half;
            }
        }
        Ok(m)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}

/// A linear subspace of the degree-`d` forms in `n` variables.
///
/// The basis is kept in reduced row echelon form against the grevlex
/// descending monomial columns, so two spaces are equal iff their bases are
/// structurally equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormSpace {
    degree: u32,
    nvars: usize,
    basis: Vec<Poly>,
}

struct Columns {
    list: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl Columns {
    fn new(nvars: usize, degree: u32) -> Self {
        let list = monomials_of_degree(nvars, degree);
        let index = list.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Columns { list, index }
    }

    fn row(&self, p: &Poly) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.list.len()];
        for (m, c) in p.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    fn poly(&self, nvars: usize, row: &[Scalar]) -> Poly {
        let mut p = Poly::zero(nvars);
        for (m, c) in self.list.iter().zip(row) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

impl FormSpace {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        FormSpace {
            degree,
            nvars,
            basis: Vec::new(),
        }
    }

    /// Span of the given forms; each must be zero or homogeneous of `degree`.
    pub fn span(nvars: usize, degree: u32, forms: &[Poly]) -> Result<Self> {
        for (i, p) in forms.iter().enumerate() {
            if p.nvars() != nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    found: p.nvars(),
                });
            }
            if !p.is_zero() && (!p.is_homogeneous() || p.degree() != Some(degree)) {
                return Err(Error::NotHomogeneous { index: i });
            }
        }
        let cols = Columns::new(nvars, degree);
        let rows: Vec<Vec<Scalar>> = forms.iter().filter(|p| !p.is_zero()).map(|p| cols.row(p)).collect();
        Ok(Self::from_rows(nvars, degree, &cols, rows))
    }

    fn from_rows(nvars: usize, degree: u32, cols: &Columns, rows: Vec<Vec<Scalar>>) -> Self {
        if rows.is_empty() {
            return FormSpace::zero(nvars, degree);
        }
        let (r, pivots) = Matrix::from_rows(rows).rref();
        let basis = (0..pivots.len()).map(|i| cols.poly(nvars, r.row(i))).collect();
        FormSpace {
            degree,
            nvars,
            basis,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    fn check_compatible(&self, other: &FormSpace) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::Dimension {
                expected: self.degree as usize,
                found: other.degree as usize,
            });
        }
        if self.nvars != other.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &FormSpace) -> Result<FormSpace> {
        self.check_compatible(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        FormSpace::span(self.nvars, self.degree, &all)
    }

    pub fn contains_poly(&self, p: &Poly) -> Result<bool> {
        let single = FormSpace::span(self.nvars, self.degree, core::slice::from_ref(p))?;
        self.contains(&single)
    }

    /// Whether every element of `inner` lies in `self`.
    pub fn contains(&self, inner: &FormSpace) -> Result<bool> {
        self.check_compatible(inner)?;
        Ok(self.sum(inner)?.dim() == self.dim())
    }
}

/// Degree-`d` graded piece of the ideal generated by homogeneous forms: every
/// generator is multiplied by every monomial of complementary degree and the
/// products are row reduced.
pub fn ideal_degree_piece(nvars: usize, generators: &[Poly], d: u32) -> Result<FormSpace> {
    let cols = Columns::new(nvars, d);
    let mut rows = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        if g.nvars() != nvars {
            return Err(Error::Dimension {
                expected: nvars,
                found: g.nvars(),
            });
        }
        if g.is_zero() {
            continue;
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous { index: i });
        }
        let e = g.degree().expect("nonzero");
        if e > d {
            return Err(Error::Input(alloc::format!(
                "generator {i} has degree {e} above the requested degree {d}"
            )));
        }
        for m in monomials_of_degree(nvars, d - e) {
            let shifted = g.mul_truncated(&Poly::monomial(m, Scalar::one()), d);
            rows.push(cols.row(&shifted));
        }
    }
    Ok(FormSpace::from_rows(nvars, d, &cols, rows))
}

/// Whether `inner ⊆ outer` (exact row reduction).
pub fn subspace_contains(outer: &FormSpace, inner: &FormSpace) -> Result<bool> {
    outer.contains(inner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn p(nvars: usize, terms: &[(i64, &[u32])]) -> Poly {
        Poly::from_int_terms(nvars, terms)
    }

    #[test]
    fn monomial_ideal_piece() {
        let xy = p(2, &[(1, &[1, 1])]);
        let piece = ideal_degree_piece(2, &[xy], 3).unwrap();
        assert_eq!(piece.dim(), 2);
        let expect = FormSpace::span(2, 3, &[p(2, &[(1, &[2, 1])]), p(2, &[(1, &[1, 2])])]).unwrap();
        assert_eq!(piece, expect);
    }

    #[test]
    fn squares_piece() {
        let gens = [p(2, &[(1, &[2, 0])]), p(2, &[(1, &[0, 2])])];
        let piece = ideal_degree_piece(2, &gens, 2).unwrap();
        assert_eq!(piece.dim(), 2);
    }

    #[test]
    fn three_variable_piece_has_dimension_six() {
        // x^2 + y^2 and xy times x, y, z: six products, independent by hand
        // (leading terms x^3, x^2 y, x^2 z, x^2 y, ... reduce to six pivots).
        let gens = [p(3, &[(1, &[2, 0, 0]), (1, &[0, 2, 0])]), p(3, &[(1, &[1, 1, 0])])];
        let piece = ideal_degree_piece(3, &gens, 3).unwrap();
        assert_eq!(piece.dim(), 6);
    }

    #[test]
    fn non_homogeneous_generator_rejected() {
        let g = p(2, &[(1, &[2, 0]), (1, &[1, 0])]);
        assert_eq!(
            ideal_degree_piece(2, &[g], 3).unwrap_err(),
            Error::NotHomogeneous { index: 0 }
        );
    }

    #[test]
    fn containment_examples() {
        let outer = FormSpace::span(2, 2, &[p(2, &[(1, &[2, 0])]), p(2, &[(1, &[0, 2])])]).unwrap();
        let inner = FormSpace::span(2, 2, &[p(2, &[(1, &[2, 0]), (1, &[0, 2])])]).unwrap();
        assert!(subspace_contains(&outer, &inner).unwrap());

        let outer = FormSpace::span(2, 2, &[p(2, &[(1, &[2, 0])])]).unwrap();
        let inner = FormSpace::span(2, 2, &[p(2, &[(1, &[1, 1])])]).unwrap();
        assert!(!subspace_contains(&outer, &inner).unwrap());

        // x^3 + x^2 y = x * x^2 + y * x^2 lies in (x^2, xy)_3
        let ideal = ideal_degree_piece(2, &[p(2, &[(1, &[2, 0])]), p(2, &[(1, &[1, 1])])], 3).unwrap();
        let inner = FormSpace::span(2, 3, &[p(2, &[(1, &[3, 0]), (1, &[2, 1])])]).unwrap();
        assert!(subspace_contains(&ideal, &inner).unwrap());

        let other_degree = FormSpace::zero(2, 2);
        assert!(subspace_contains(&ideal, &other_degree).is_err());
    }

    #[test]
    fn matrix_basics() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.det(), int(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        let sing = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
        assert_eq!(sing.nullspace(), vec![vec![int(-2), int(1)]]);
        assert_eq!(sing.solve(&[int(1), int(2)]), Some(vec![int(1), int(0)]));
        assert_eq!(sing.solve(&[int(1), int(3)]), None);
    }

    #[test]
    fn quadratic_form_round_trip() {
        let m = Matrix::from_i64(&[&[1, 2, 0], &[2, 0, -1], &[0, -1, 3]]);
        let q = m.quadratic_form();
        assert_eq!(Matrix::from_quadratic_form(&q).unwrap(), m);
    }
}
