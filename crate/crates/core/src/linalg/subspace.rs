use alloc::vec::Vec;

use super::mat::Mat;
use super::vector::{Accumulator, SparseVec};
use super::LinalgError;
use crate::scalars::Field;

const NO_ROW: u32 = u32::MAX;

/// Incremental reduced row echelon form.
///
/// Rows are kept fully reduced at all times: each has a leading 1 in its
/// pivot column and every pivot column is zero in every other row, so
/// reducing a vector is a single pass over its support.
pub struct EchelonBuilder<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<SparseVec<F::Elem>>,
    pivots: Vec<usize>,
    row_of: Vec<u32>,
    acc: Option<Accumulator<F::Elem>>,
}

impl<F: Field> EchelonBuilder<F> {
    pub fn new(field: &F, ambient: usize) -> Self {
        Self {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
            row_of: alloc::vec![NO_ROW; ambient],
            acc: None,
        }
    }

    pub fn from_subspace(field: &F, space: &Subspace<F::Elem>) -> Self {
        let mut b = Self::new(field, space.ambient);
        for (row, &p) in space.basis.iter().zip(&space.pivots) {
            b.row_of[p] = b.rows.len() as u32;
            b.rows.push(row.clone());
            b.pivots.push(p);
        }
        b
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// `v` minus its projection onto the current span along the pivot
    /// coordinates. Zero iff `v` is in the span.
    pub fn reduce(&mut self, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        debug_assert!(v.support_end() <= self.ambient, "vector outside ambient space");
        if !v.iter().any(|(c, _)| self.row_of[c] != NO_ROW) {
            return v.clone();
        }
        let field = &self.field;
        let acc = self.acc.get_or_insert_with(|| Accumulator::new(self.ambient));
        for (c, x) in v.iter() {
            acc.add(field, c, x);
        }
        for (c, x) in v.iter() {
            let r = self.row_of[c];
            if r != NO_ROW {
                acc.add_scaled(field, &field.neg(x), &self.rows[r as usize]);
            }
        }
        acc.drain(field)
    }

    pub fn contains(&mut self, v: &SparseVec<F::Elem>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &SparseVec<F::Elem>) -> bool {
        let r = self.reduce(v);
        self.insert_reduced(r)
    }

    fn insert_reduced(&mut self, r: SparseVec<F::Elem>) -> bool {
        let Some((p, lead)) = r.leading() else {
            return false;
        };
        let field = &self.field;
        let inv = field.inv(lead).expect("leading entry is nonzero");
        let r = r.scale(field, &inv);
        for row in self.rows.iter_mut() {
            if let Some(x) = row.get(p) {
                let c = field.neg(x);
                *row = row.axpy(field, &c, &r);
            }
        }
        self.row_of[p] = self.rows.len() as u32;
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn finish(self) -> Subspace<F::Elem> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let mut rows: Vec<Option<SparseVec<F::Elem>>> = self.rows.into_iter().map(Some).collect();
        let basis = order.iter().map(|&i| rows[i].take().expect("each row once")).collect();
        let pivots = order.iter().map(|&i| self.pivots[i]).collect();
        Subspace { ambient: self.ambient, basis, pivots }
    }

    /// A snapshot of the current span without consuming the builder.
    pub fn to_subspace(&self) -> Subspace<F::Elem> {
        let mut pairs: Vec<(usize, SparseVec<F::Elem>)> =
            self.pivots.iter().copied().zip(self.rows.iter().cloned()).collect();
        pairs.sort_by_key(|p| p.0);
        let (pivots, basis) = pairs.into_iter().unzip();
        Subspace { ambient: self.ambient, basis, pivots }
    }
}

/// A subspace of `K^ambient` stored as its reduced row echelon basis.
///
/// The representation is canonical, so `==` decides equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<E> {
    ambient: usize,
    basis: Vec<SparseVec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full<F: Field<Elem = E>>(field: &F, ambient: usize) -> Self {
        Self {
            ambient,
            basis: (0..ambient).map(|i| SparseVec::unit(field, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of `vectors`. Cheaper vectors are eliminated first; the result
    /// does not depend on the order.
    pub fn span<F: Field<Elem = E>>(field: &F, ambient: usize, vectors: &[SparseVec<E>]) -> Self {
        let mut order: Vec<(usize, usize, usize)> = vectors
            .iter()
            .enumerate()
            .map(|(i, v)| (v.nnz(), v.cost(field), i))
            .collect();
        order.sort_unstable();
        let mut b = EchelonBuilder::new(field, ambient);
        for (_, _, i) in order {
            if b.is_full() {
                break;
            }
            b.insert(&vectors[i]);
        }
        b.finish()
    }

    /// The span spanned by the unit vectors at `indices`.
    pub fn coordinate<F: Field<Elem = E>>(field: &F, ambient: usize, indices: &[usize]) -> Self {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        Self {
            ambient,
            basis: idx.iter().map(|&i| SparseVec::unit(field, i)).collect(),
            pivots: idx,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[SparseVec<E>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; their unit vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.dim());
        let mut k = 0;
        for c in 0..self.ambient {
            if k < self.pivots.len() && self.pivots[k] == c {
                k += 1;
            } else {
                out.push(c);
            }
        }
        out
    }

    pub fn basis_matrix(&self) -> Mat<E> {
        Mat::from_rows(self.ambient, self.basis.clone())
    }

    /// Remainder of `v` after eliminating the pivot coordinates.
    pub fn reduce<F: Field<Elem = E>>(&self, field: &F, v: &SparseVec<E>) -> SparseVec<E> {
        let mut out = v.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if let Some(x) = v.get(p) {
                out = out.axpy(field, &field.neg(x), row);
            }
        }
        out
    }

    pub fn contains<F: Field<Elem = E>>(&self, field: &F, v: &SparseVec<E>) -> bool {
        self.reduce(field, v).is_zero()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates<F: Field<Elem = E>>(&self, field: &F, v: &SparseVec<E>) -> Option<SparseVec<E>> {
        if !self.contains(field, v) {
            return None;
        }
        let entries = self
            .pivots
            .iter()
            .enumerate()
            .filter_map(|(k, &p)| v.get(p).map(|x| (k, x.clone())))
            .collect();
        Some(SparseVec::from_sorted(entries))
    }

    pub fn is_subspace_of<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(field, v))
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn sum<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let (big, small) = if self.dim() >= other.dim() { (self, other) } else { (other, self) };
        let mut b = EchelonBuilder::from_subspace(field, big);
        for v in &small.basis {
            b.insert(v);
        }
        Ok(b.finish())
    }

    /// Zassenhaus: reduce the rows `[a | a]` and `[b | 0]`; the rows whose
    /// left half vanishes carry a basis of the intersection on the right.
    pub fn intersect<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut b = EchelonBuilder::new(field, 2 * n);
        for v in &self.basis {
            let mut e = v.entries().to_vec();
            e.extend(v.shifted(n).into_entries());
            b.insert(&SparseVec::from_sorted(e));
        }
        for v in &other.basis {
            b.insert(v);
        }
        let stacked = b.finish();
        let rows: Vec<SparseVec<E>> = stacked
            .basis
            .iter()
            .zip(&stacked.pivots)
            .filter(|(_, &p)| p >= n)
            .map(|(r, _)| r.slice(n..2 * n))
            .collect();
        let out = Self::span(field, n, &rows);
        debug_assert_eq!(
            out.dim() + self.sum(field, other).map(|s| s.dim()).unwrap_or(0),
            self.dim() + other.dim(),
            "dimension law for sum and intersection"
        );
        Ok(out)
    }

    pub fn equals(&self, other: &Self) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    /// Image of the subspace under `v ↦ v · m`.
    pub fn image<F: Field<Elem = E>>(&self, field: &F, m: &Mat<E>) -> Result<Self, LinalgError> {
        if m.rows() != self.ambient {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient, found: m.rows() });
        }
        let images: Vec<SparseVec<E>> = self.basis.iter().map(|v| m.apply_row(field, v)).collect();
        Ok(Self::span(field, m.cols(), &images))
    }

    /// Whether `v · m` stays in the subspace for every basis vector `v`.
    pub fn is_stable_under<F: Field<Elem = E>>(&self, field: &F, m: &Mat<E>) -> bool {
        m.rows() == self.ambient
            && m.cols() == self.ambient
            && self.basis.iter().all(|v| self.contains(field, &m.apply_row(field, v)))
    }
}

/// Row space of `m` in canonical form.
pub fn rref<F: Field>(field: &F, m: &Mat<F::Elem>) -> Subspace<F::Elem> {
    Subspace::span(field, m.cols(), m.row_vecs())
}

/// Right null space `{x : m x = 0}`, as a subspace of `K^cols`.
pub fn kernel<F: Field>(field: &F, m: &Mat<F::Elem>) -> Subspace<F::Elem> {
    let r = rref(field, m);
    let free = r.free_columns();
    let minus_one = field.from_i64(-1);
    // column j of the echelon form, read off row by row
    let mut cols: Vec<Vec<(usize, F::Elem)>> = alloc::vec![Vec::new(); m.cols()];
    for (row, &p) in r.basis().iter().zip(r.pivots()) {
        for (j, x) in row.iter() {
            if j != p {
                cols[j].push((p, field.mul(&minus_one, x)));
            }
        }
    }
    let vectors: Vec<SparseVec<F::Elem>> = free
        .iter()
        .map(|&j| {
            let mut e = core::mem::take(&mut cols[j]);
            e.push((j, field.one()));
            SparseVec::from_entries(field, e)
        })
        .collect();
    let k = Subspace::span(field, m.cols(), &vectors);
    debug_assert_eq!(k.dim() + r.dim(), m.cols(), "rank-nullity");
    k
}

/// Left null space `{v : v m = 0}`, as a subspace of `K^rows`.
pub fn left_kernel<F: Field>(field: &F, m: &Mat<F::Elem>) -> Subspace<F::Elem> {
    kernel(field, &m.transpose(field))
}
