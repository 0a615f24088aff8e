//! Partitions, the dominant weight sets `π_f`, type C dominance, and two
//! combinatorial oracles: the Weyl dimension formula and oscillating
//! tableaux counts.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::SchurWeylError;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, SchurWeylError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(SchurWeylError::NotAPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect();
        Self { parts }
    }

    /// The dominant weight `(λ_1, …, λ_m)`, padded with zeros.
    pub fn weight(&self, m: usize) -> Result<Vec<i64>, SchurWeylError> {
        if self.len() > m {
            return Err(SchurWeylError::TooManyRows { rows: self.len(), m });
        }
        let mut w: Vec<i64> = self.parts.iter().map(|&p| p as i64).collect();
        w.resize(m, 0);
        Ok(w)
    }

    /// All partitions of `k` with at most `rows` parts, in reverse
    /// lexicographic order (`(k)` first).
    pub fn all_of(k: usize, rows: usize) -> Vec<Self> {
        fn go(rest: usize, max: usize, rows: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if rows == 0 {
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, rows - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(k, k, rows, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions obtained by adding or removing one box, keeping at most
    /// `rows` rows.
    fn neighbours(&self, rows: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let cur = self.parts.get(i).copied().unwrap_or(0);
            let above = if i == 0 { usize::MAX } else { self.parts[i - 1] };
            if cur < above && i < rows {
                let mut p = self.parts.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                out.push(Self { parts: p });
            }
            let below = self.parts.get(i + 1).copied().unwrap_or(0);
            if i < self.len() && cur > below {
                let mut p = self.parts.clone();
                p[i] -= 1;
                if p[i] == 0 {
                    p.pop();
                }
                out.push(Self { parts: p });
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// `π_f = {λ ⊢ n - 2f - 2r : ℓ(λ) ≤ m, 0 ≤ r ≤ ⌊n/2⌋ - f}` for fixed `(n, f, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSet {
    pub n: usize,
    pub f: usize,
    pub m: usize,
    /// Largest partitions first.
    pub members: Vec<Partition>,
}

impl WeightSet {
    pub fn contains(&self, lambda: &Partition) -> bool {
        self.members.contains(lambda)
    }

    /// Membership for a weight vector of length `m`.
    pub fn contains_weight(&self, w: &[i64]) -> bool {
        self.members.iter().any(|p| p.weight(self.m).map(|v| v == w).unwrap_or(false))
    }
}

pub fn pi_f(n: usize, f: usize, m: usize) -> Result<WeightSet, SchurWeylError> {
    if 2 * f > n {
        return Err(SchurWeylError::LayerOutOfRange { f, max: n / 2 });
    }
    let members = (0..=(n / 2 - f)).flat_map(|r| Partition::all_of(n - 2 * f - 2 * r, m)).collect();
    Ok(WeightSet { n, f, m, members })
}

/// Type C dominance `a ≤ b`: `b - a` is a nonnegative integer combination
/// of `ε_i - ε_{i+1}` and `2ε_m`.
///
/// Panics if the lengths differ.
pub fn dominance_leq(a: &[i64], b: &[i64]) -> bool {
    assert_eq!(a.len(), b.len(), "weights of different rank");
    // coefficient of ε_i - ε_{i+1} is the partial sum up to i; the last
    // coordinate sum must be an even nonnegative multiple of 2ε_m
    let mut partial = 0;
    for (i, (x, y)) in a.iter().zip(b).enumerate() {
        partial += y - x;
        if i + 1 < a.len() && partial < 0 {
            return false;
        }
    }
    partial >= 0 && partial % 2 == 0
}

/// Dimension of the simple `Sp_{2m}` module of highest weight `λ`.
pub fn weyl_dim(lambda: &Partition, m: usize) -> Result<u64, SchurWeylError> {
    let w = lambda.weight(m)?;
    let rho: Vec<i64> = (0..m).map(|i| (m - i) as i64).collect();
    let l: Vec<i64> = w.iter().zip(&rho).map(|(a, r)| a + r).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m {
        num *= l[i];
        den *= rho[i];
        for j in i + 1..m {
            num *= (l[i] - l[j]) * (l[i] + l[j]);
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
        }
    }
    let value = BigRational::new(num, den);
    debug_assert!(value.is_integer());
    Ok(value.to_integer().to_u64().expect("dimension fits in u64"))
}

/// Number of walks `∅ → … → λ` of length `n` in Young's lattice where each
/// step adds or removes one box and no shape exceeds `m` rows.
pub fn osc_mult(lambda: &Partition, n: usize, m: usize) -> Result<u64, SchurWeylError> {
    if lambda.len() > m {
        return Err(SchurWeylError::TooManyRows { rows: lambda.len(), m });
    }
    let mut layer: BTreeMap<Partition, u64> = BTreeMap::new();
    layer.insert(Partition::empty(), 1);
    for _ in 0..n {
        let mut next = BTreeMap::new();
        for (p, c) in &layer {
            for q in p.neighbours(m) {
                *next.entry(q).or_insert(0) += c;
            }
        }
        layer = next;
    }
    Ok(layer.get(lambda).copied().unwrap_or(0))
}
