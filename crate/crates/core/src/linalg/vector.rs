use alloc::vec::Vec;

use crate::scalars::Field;

/// A sparse vector: `(index, value)` pairs with strictly increasing indices
/// and no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec<E> {
    entries: Vec<(usize, E)>,
}

impl<E: Clone + PartialEq> SparseVec<E> {
    pub fn zero() -> Self {
        Self { entries: Vec::new() }
    }

    /// Canonicalizes arbitrary entries: sorts, sums duplicates, drops zeros.
    pub fn from_entries<F: Field<Elem = E>>(field: &F, mut raw: Vec<(usize, E)>) -> Self {
        raw.sort_by_key(|e| e.0);
        let mut entries: Vec<(usize, E)> = Vec::with_capacity(raw.len());
        for (i, v) in raw {
            match entries.last_mut() {
                Some(last) if last.0 == i => last.1 = field.add(&last.1, &v),
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|e| !field.is_zero(&e.1));
        Self { entries }
    }

    /// Wraps entries already in canonical form.
    pub(crate) fn from_sorted(entries: Vec<(usize, E)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        Self { entries }
    }

    pub fn unit<F: Field<Elem = E>>(field: &F, index: usize) -> Self {
        Self { entries: alloc::vec![(index, field.one())] }
    }

    pub fn entries(&self) -> &[(usize, E)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, E)> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &E)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&E> {
        self.entries
            .binary_search_by_key(&index, |e| e.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &E)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    /// Largest stored index plus one, or 0.
    pub fn support_end(&self) -> usize {
        self.entries.last().map_or(0, |e| e.0 + 1)
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        if field.is_zero(c) {
            return Self::zero();
        }
        if field.is_one(c) {
            return self.clone();
        }
        Self {
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, field.mul(v, c)))
                .filter(|e| !field.is_zero(&e.1))
                .collect(),
        }
    }

    pub fn neg<F: Field<Elem = E>>(&self, field: &F) -> Self {
        Self { entries: self.entries.iter().map(|(i, v)| (*i, field.neg(v))).collect() }
    }

    /// `self + c * other`
    pub fn axpy<F: Field<Elem = E>>(&self, field: &F, c: &E, other: &Self) -> Self {
        if field.is_zero(c) || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, field.mul(c, &b[j].1)));
                j += 1;
            } else {
                let v = field.add(&a[i].1, &field.mul(c, &b[j].1));
                if !field.is_zero(&v) {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        Self { entries: out }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.axpy(field, &field.one(), other)
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.axpy(field, &field.from_i64(-1), other)
    }

    pub fn dot<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> E {
        let mut acc = field.zero();
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    acc = field.add(&acc, &field.mul(&a[i].1, &b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Keeps entries with index in `range`, shifted down by `range.start`.
    pub fn slice(&self, range: core::ops::Range<usize>) -> Self {
        let lo = self.entries.partition_point(|e| e.0 < range.start);
        let hi = self.entries.partition_point(|e| e.0 < range.end);
        Self {
            entries: self.entries[lo..hi]
                .iter()
                .map(|(i, v)| (i - range.start, v.clone()))
                .collect(),
        }
    }

    /// Adds `offset` to every index.
    pub fn shifted(&self, offset: usize) -> Self {
        Self { entries: self.entries.iter().map(|(i, v)| (i + offset, v.clone())).collect() }
    }

    /// Sum of per-entry costs, used to order elimination.
    pub fn cost<F: Field<Elem = E>>(&self, field: &F) -> usize {
        self.entries.iter().map(|(_, v)| field.cost(v)).sum()
    }
}

/// Dense scratch space for accumulating sparse linear combinations.
pub(crate) struct Accumulator<E> {
    slots: Vec<Option<E>>,
    touched: Vec<usize>,
}

impl<E: Clone + PartialEq> Accumulator<E> {
    pub(crate) fn new(len: usize) -> Self {
        Self { slots: alloc::vec![None; len], touched: Vec::new() }
    }

    pub(crate) fn len(&self) -> usize {
        self.slots.len()
    }

    pub(crate) fn add<F: Field<Elem = E>>(&mut self, field: &F, index: usize, value: &E) {
        match &mut self.slots[index] {
            Some(v) => *v = field.add(v, value),
            slot @ None => {
                *slot = Some(value.clone());
                self.touched.push(index);
            }
        }
    }

    /// `acc += c * row`
    pub(crate) fn add_scaled<F: Field<Elem = E>>(&mut self, field: &F, c: &E, row: &SparseVec<E>) {
        if field.is_one(c) {
            for (i, v) in row.iter() {
                self.add(field, i, v);
            }
        } else {
            for (i, v) in row.iter() {
                self.add(field, i, &field.mul(c, v));
            }
        }
    }

    /// Empties the accumulator into a canonical sparse vector.
    pub(crate) fn drain<F: Field<Elem = E>>(&mut self, field: &F) -> SparseVec<E> {
        self.touched.sort_unstable();
        let mut entries = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            if let Some(v) = self.slots[i].take() {
                if !field.is_zero(&v) {
                    entries.push((i, v));
                }
            }
        }
        self.touched.clear();
        SparseVec { entries }
    }
}
