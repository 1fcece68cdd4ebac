use std::fmt;

use super::field::Field;
use super::vector::{Accumulator, SparseVec};

/// Column-major sparse matrix. Column `j` is the image of the `j`-th basis
/// vector, so composition and evaluation read naturally as maps.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: Vec<SparseVec<F>>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols: vec![SparseVec::zero(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix { rows: n, cols: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_columns(rows: usize, cols: Vec<SparseVec<F>>) -> Self {
        debug_assert!(cols.iter().all(|c| c.max_index().map_or(true, |m| m < rows)));
        Matrix { rows, cols }
    }

    /// Row-major dense input.
    pub fn from_rows(rows: &[Vec<F>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(r, c, |i, j| rows[i][j].clone())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(r, c, |i, j| F::from_i64(rows[i][j]))
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let cols = (0..cols)
            .map(|j| {
                let entries = (0..rows)
                    .filter_map(|i| {
                        let x = f(i, j);
                        (!x.is_zero()).then_some((i, x))
                    })
                    .collect();
                SparseVec::from_sorted(entries)
            })
            .collect();
        Matrix { rows, cols }
    }

    /// Builds column by column from a function producing sparse columns.
    pub fn from_col_fn(rows: usize, cols: usize, f: impl Fn(usize) -> SparseVec<F>) -> Self {
        Matrix { rows, cols: (0..cols).map(f).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &SparseVec<F> {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec<F>] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<SparseVec<F>> {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        self.cols[j].get(i)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.nnz()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        let mut out = vec![vec![F::zero(); self.cols()]; self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.iter() {
                out[i][j] = x.clone();
            }
        }
        out
    }

    /// Returns a copy with entry `(i, j)` replaced.
    pub fn with_entry(&self, i: usize, j: usize, x: F) -> Self {
        let mut m = self.clone();
        let c = &m.cols[j];
        let delta = x - c.get(i);
        m.cols[j] = c.add_scaled(&delta, &SparseVec::unit(i));
        m
    }

    pub fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut acc = Accumulator::new(self.rows);
        self.apply_into(v, &mut acc)
    }

    fn apply_into(&self, v: &SparseVec<F>, acc: &mut Accumulator<F>) -> SparseVec<F> {
        match v.nnz() {
            0 => SparseVec::zero(),
            1 => {
                let (j, x) = v.first().unwrap();
                self.cols[j].scale(x)
            }
            _ => {
                for (j, x) in v.iter() {
                    acc.add_scaled(x, &self.cols[j]);
                }
                acc.drain()
            }
        }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols(), other.rows, "compose: inner dimensions differ");
        let mut acc = Accumulator::new(self.rows);
        let cols = other.cols.iter().map(|c| self.apply_into(c, &mut acc)).collect();
        Matrix { rows: self.rows, cols }
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        self.lin_comb(&F::one(), other)
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        self.lin_comb(&-F::one(), other)
    }

    /// `self + c * other`
    pub fn lin_comb(&self, c: &F, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()), "shape mismatch");
        let cols = self.cols.iter().zip(&other.cols).map(|(a, b)| a.add_scaled(c, b)).collect();
        Matrix { rows: self.rows, cols }
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols.iter().map(|v| v.scale(c)).collect() }
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut cols: Vec<Vec<(usize, F)>> = vec![Vec::new(); self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.iter() {
                cols[i].push((j, x.clone()));
            }
        }
        Matrix {
            rows: self.cols(),
            cols: cols.into_iter().map(SparseVec::from_sorted).collect(),
        }
    }

    /// Kronecker product; basis vector `e_i ⊗ e_j` has index `i * dim_b + j`
    /// on both sides.
    pub fn kron(&self, other: &Matrix<F>) -> Matrix<F> {
        let rb = other.rows;
        let mut cols = Vec::with_capacity(self.cols() * other.cols());
        for a in &self.cols {
            for b in &other.cols {
                cols.push(a.kron(b, rb));
            }
        }
        Matrix { rows: self.rows * rb, cols }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix<F> {
        Matrix { rows: self.rows, cols: idx.iter().map(|&j| self.cols[j].clone()).collect() }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, other.rows);
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Matrix { rows: self.rows, cols }
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols(), other.cols());
        let off = self.rows;
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut e: Vec<(usize, F)> = a.entries().to_vec();
                e.extend(b.iter().map(|(i, x)| (i + off, x.clone())));
                SparseVec::from_sorted(e)
            })
            .collect();
        Matrix { rows: self.rows + other.rows, cols }
    }

    /// Index of the first column where the two matrices differ.
    pub fn first_difference(&self, other: &Matrix<F>) -> Option<usize> {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()), "shape mismatch");
        self.cols.iter().zip(&other.cols).position(|(a, b)| a != b)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols() && self.cols.iter().enumerate().all(|(j, c)| *c == SparseVec::unit(j))
    }

    /// Rank via the canonical echelon basis of the column space.
    pub fn rank(&self) -> usize {
        super::subspace::Subspace::span(self.rows, self.cols.iter().cloned()).dim()
    }

    /// Two-sided inverse, if the matrix is square and invertible.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        let n = self.rows;
        if self.cols() != n {
            return None;
        }
        let (r, pivots, rank) = super::rref(&self.hstack(&Matrix::identity(n)));
        if rank < n || pivots[..n] != (0..n).collect::<Vec<_>>()[..] {
            return None;
        }
        // rows of [I | A^-1]
        let dense = r.to_dense();
        Some(Matrix::from_fn(n, n, |i, j| dense[i][n + j].clone()))
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols.len())?;
        for (j, c) in self.cols.iter().enumerate().take(64) {
            let s: Vec<String> = c.entries().iter().map(|(i, x)| format!("{i}:{x:?}")).collect();
            writeln!(f, "  col {j}: [{}]", s.join(", "))?;
        }
        Ok(())
    }
}
