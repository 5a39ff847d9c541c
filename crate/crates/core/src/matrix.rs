//! Dense matrices over the rationals with exact elimination.
//!
//! All higher layers reduce to a handful of primitives here: reduced row
//! echelon form with leftmost-pivot selection, kernel and column-space bases
//! read off from it, exact linear solves, and inverses. Because RREF of a
//! matrix is uniquely determined by its row space, every basis produced here
//! is canonical: two matrices with the same kernel (or column space) yield
//! the same basis vectors in the same order, on every platform.

use crate::rational::{self, Rational};
use num_traits::{Signed, Zero};
use std::ops::{Index, IndexMut};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub struct Rref {
    pub mat: Mat,
    pub pivot_cols: Vec<usize>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(dim: usize, cols: &[Vec<Rational>]) -> Self {
        assert!(cols.iter().all(|v| v.len() == dim), "column length mismatch");
        Mat::from_fn(dim, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &other[(i, j)])
    }

    pub fn neg(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| -self[(i, j)].clone())
    }

    pub fn scale(&self, c: &Rational) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * c)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = rational::zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() && !self[(i, j)].is_zero() {
                        acc += &self[(i, j)] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "row mismatch in hcat");
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self[(i, j)].clone() } else { other[(i, j - self.cols)].clone() }
        })
    }

    /// Vertical concatenation, `self` on top.
    pub fn vcat(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "column mismatch in vcat");
        Mat::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows { self[(i, j)].clone() } else { other[(i - self.rows, j)].clone() }
        })
    }

    /// Reduced row echelon form. Pivot selection is fixed: scan columns left
    /// to right, take the first nonzero entry at or below the current row.
    /// That makes the output (and everything derived from it) deterministic.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(src) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, src);
            let inv = m[(row, col)].recip();
            m.scale_row(row, &inv);
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    m.sub_scaled_row(r, row, &factor);
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        Rref { mat: m, pivot_cols }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivot_cols.len()
    }

    /// Canonical basis of `{ v : self * v = 0 }`. One vector per free column,
    /// in increasing free-column order; the free coordinates across the basis
    /// form an identity pattern.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let Rref { mat, pivot_cols } = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivot_cols {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![rational::zero(); self.cols];
            v[free] = rational::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -mat[(r, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Canonical basis of the column space: the nonzero rows of
    /// `rref(transpose)`, returned as vectors of length `rows`.
    pub fn column_space_basis(&self) -> Vec<Vec<Rational>> {
        let Rref { mat, pivot_cols } = self.transpose().rref();
        (0..pivot_cols.len()).map(|i| mat.row(i).to_vec()).collect()
    }

    /// Exact solution of `self * x = rhs` with free variables set to zero;
    /// `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        let sols = self.solve_mat(&Mat::from_cols(self.rows, &[rhs.to_vec()]))?;
        Some(sols.col(0))
    }

    /// Column-wise solve of `self * X = rhs`.
    pub fn solve_mat(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows, "shape mismatch in solve");
        let Rref { mat, pivot_cols } = self.hcat(rhs).rref();
        // Any pivot landing in the rhs block means some column is inconsistent.
        if pivot_cols.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(self.cols, rhs.cols);
        for (r, &pc) in pivot_cols.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(pc, j)] = mat[(r, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve_mat(&Mat::identity(self.rows))?;
        if self.mul(&x) == Mat::identity(self.rows) { Some(x) } else { None }
    }

    /// Sylvester criterion via elimination without row exchanges: the k-th
    /// pivot equals the ratio of consecutive leading principal minors, so the
    /// matrix is positive definite iff every pivot stays positive. A zero or
    /// negative pivot is an immediate counterexample.
    pub fn is_positive_definite(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        let n = self.rows;
        let mut m = self.clone();
        for k in 0..n {
            let pivot = m[(k, k)].clone();
            if !pivot.is_positive() {
                return false;
            }
            for i in (k + 1)..n {
                if m[(i, k)].is_zero() {
                    continue;
                }
                let factor = &m[(i, k)] / &pivot;
                for j in k..n {
                    let delta = &factor * &m[(k, j)];
                    m[(i, j)] = &m[(i, j)] - &delta;
                }
            }
        }
        true
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Rational) {
        for j in 0..self.cols {
            if !self[(r, j)].is_zero() {
                self[(r, j)] = &self[(r, j)] * c;
            }
        }
    }

    /// `row[r] -= factor * row[src]`
    fn sub_scaled_row(&mut self, r: usize, src: usize, factor: &Rational) {
        for j in 0..self.cols {
            if !self[(src, j)].is_zero() {
                let delta = factor * &self[(src, j)];
                self[(r, j)] = &self[(r, j)] - &delta;
            }
        }
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}
