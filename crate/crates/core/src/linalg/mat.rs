use alloc::vec::Vec;

use super::vector::{Accumulator, SparseVec};
use super::LinalgError;
use crate::scalars::Field;

/// A sparse matrix stored by rows.
///
/// Linear maps are stored for row vectors acting on the left:
/// `v ↦ v · M`, so a map `K^s → K^t` is an `s × t` matrix and doing `A`
/// then `B` is the product `A · B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat<E> {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec<E>>,
}

impl<E: Clone + PartialEq> Mat<E> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: alloc::vec![SparseVec::zero(); rows] }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        Self { rows: n, cols: n, data: (0..n).map(|i| SparseVec::unit(field, i)).collect() }
    }

    pub fn diagonal<F: Field<Elem = E>>(field: &F, diag: Vec<E>) -> Self {
        let n = diag.len();
        let data = diag
            .into_iter()
            .enumerate()
            .map(|(i, v)| SparseVec::from_entries(field, alloc::vec![(i, v)]))
            .collect();
        Self { rows: n, cols: n, data }
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions add up.
    pub fn from_triples<F: Field<Elem = E>>(
        field: &F,
        rows: usize,
        cols: usize,
        triples: impl IntoIterator<Item = (usize, usize, E)>,
    ) -> Self {
        let mut buckets: Vec<Vec<(usize, E)>> = alloc::vec![Vec::new(); rows];
        for (r, c, v) in triples {
            assert!(r < rows && c < cols, "entry ({r}, {c}) outside {rows}x{cols}");
            buckets[r].push((c, v));
        }
        let data = buckets.into_iter().map(|b| SparseVec::from_entries(field, b)).collect();
        Self { rows, cols, data }
    }

    pub fn from_rows(cols: usize, data: Vec<SparseVec<E>>) -> Self {
        debug_assert!(data.iter().all(|r| r.support_end() <= cols));
        Self { rows: data.len(), cols, data }
    }

    /// A `1 × n` matrix.
    pub fn row_matrix(cols: usize, v: SparseVec<E>) -> Self {
        Self::from_rows(cols, alloc::vec![v])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec<E> {
        &self.data[i]
    }

    pub fn row_vecs(&self) -> &[SparseVec<E>] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&E> {
        self.data[i].get(j)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SparseVec::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Triples in row-major order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, &E)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, j, v)))
    }

    pub fn transpose<F: Field<Elem = E>>(&self, field: &F) -> Self {
        let triples = self.triples().map(|(i, j, v)| (j, i, v.clone()));
        Self::from_triples(field, self.cols, self.rows, triples)
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.scale(field, c)).collect(),
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.axpy(field, &field.one(), other)
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.axpy(field, &field.from_i64(-1), other)
    }

    /// `self + c * other`
    pub fn axpy<F: Field<Elem = E>>(&self, field: &F, c: &E, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.axpy(field, c, b)).collect(),
        }
    }

    /// Matrix product; panics on shape mismatch (see [`Mat::try_mul`]).
    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.try_mul(field, other).expect("matrix product shape")
    }

    pub fn try_mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut acc = Accumulator::new(other.cols);
        let data = self
            .data
            .iter()
            .map(|row| {
                for (k, a) in row.iter() {
                    acc.add_scaled(field, a, &other.data[k]);
                }
                acc.drain(field)
            })
            .collect();
        Ok(Self { rows: self.rows, cols: other.cols, data })
    }

    /// Row vector times matrix.
    pub fn apply_row<F: Field<Elem = E>>(&self, field: &F, v: &SparseVec<E>) -> SparseVec<E> {
        let mut acc = Accumulator::new(self.cols);
        self.apply_row_with(field, v, &mut acc)
    }

    pub(crate) fn apply_row_with<F: Field<Elem = E>>(
        &self,
        field: &F,
        v: &SparseVec<E>,
        acc: &mut Accumulator<E>,
    ) -> SparseVec<E> {
        debug_assert!(acc.len() >= self.cols);
        for (k, a) in v.iter() {
            acc.add_scaled(field, a, &self.data[k]);
        }
        acc.drain(field)
    }

    /// Kronecker product with `self` on the first (most significant) factor.
    pub fn kron<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for a_row in &self.data {
            for b_row in &other.data {
                let mut entries = Vec::with_capacity(a_row.nnz() * b_row.nnz());
                for (j, a) in a_row.iter() {
                    for (l, b) in b_row.iter() {
                        let v = field.mul(a, b);
                        if !field.is_zero(&v) {
                            entries.push((j * other.cols + l, v));
                        }
                    }
                }
                data.push(SparseVec::from_sorted(entries));
            }
        }
        Self { rows: self.rows * other.rows, cols: self.cols * other.cols, data }
    }

    /// Row-major flattening of an `r × c` matrix into a vector of length `r·c`.
    pub fn flatten(&self) -> SparseVec<E> {
        let cols = self.cols;
        let entries = self
            .data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i * cols + j, v.clone())))
            .collect();
        SparseVec::from_sorted(entries)
    }

    /// Inverse of [`Mat::flatten`].
    pub fn unflatten(v: &SparseVec<E>, rows: usize, cols: usize) -> Self {
        assert!(v.support_end() <= rows * cols, "vector longer than {rows}x{cols}");
        let mut data: Vec<Vec<(usize, E)>> = alloc::vec![Vec::new(); rows];
        for (k, x) in v.iter() {
            data[k / cols].push((k % cols, x.clone()));
        }
        Self { rows, cols, data: data.into_iter().map(SparseVec::from_sorted).collect() }
    }

    /// Inverse of a square matrix by elimination on `[M | I]`.
    pub fn inverse<F: Field<Elem = E>>(&self, field: &F) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let augmented: Vec<SparseVec<E>> = self
            .data
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut e: Vec<(usize, E)> = r.entries().to_vec();
                e.push((n + i, field.one()));
                SparseVec::from_sorted(e)
            })
            .collect();
        let space = super::rref(field, &Mat::from_rows(2 * n, augmented));
        if space.dim() != n || space.pivots().iter().any(|&p| p >= n) {
            return None;
        }
        Some(Mat::from_rows(n, space.basis().iter().map(|r| r.slice(n..2 * n)).collect()))
    }
}
