//! Matrix algebras, ideals and commutants, with `d × d` matrices flattened
//! row-major into vectors of length `d²`.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::mat::Mat;
use super::subspace::{kernel, EchelonBuilder, Subspace};
use super::vector::{Accumulator, SparseVec};
use super::LinalgError;
use crate::scalars::Field;

/// Beyond this matrix size, elimination over `Q(q)` is refused.
pub const GENERIC_SIZE_LIMIT: usize = 4000;

pub(crate) fn check_size<F: Field>(field: &F, d: usize) -> Result<(), LinalgError> {
    if d > GENERIC_SIZE_LIMIT && field.spec().is_generic_rational() {
        return Err(LinalgError::TooLarge { dim: d, limit: GENERIC_SIZE_LIMIT });
    }
    Ok(())
}

fn common_size<E: Clone + PartialEq>(mats: &[Mat<E>], d: Option<usize>) -> Result<usize, LinalgError> {
    let d = match d.or_else(|| mats.first().map(Mat::rows)) {
        Some(d) => d,
        None => return Err(LinalgError::NoGenerators),
    };
    for m in mats {
        if !m.is_square() {
            return Err(LinalgError::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        if m.rows() != d {
            return Err(LinalgError::DimensionMismatch { expected: d, found: m.rows() });
        }
    }
    Ok(d)
}

/// The `d × d` matrices whose flattenings form the basis of `space`.
pub fn basis_matrices<E: Clone + PartialEq>(space: &Subspace<E>, d: usize) -> Vec<Mat<E>> {
    assert_eq!(space.ambient_dim(), d * d, "subspace does not live in d x d matrices");
    space.basis().iter().map(|v| Mat::unflatten(v, d, d)).collect()
}

/// Saturates `seeds` under right multiplication (and optionally left
/// multiplication) by `gens`, breadth first.
fn saturate<F: Field>(
    field: &F,
    d: usize,
    seeds: Vec<Mat<F::Elem>>,
    right: &[Mat<F::Elem>],
    left: &[Mat<F::Elem>],
) -> Subspace<F::Elem> {
    let mut space = EchelonBuilder::new(field, d * d);
    let mut queue = VecDeque::new();
    for s in seeds {
        if space.insert(&s.flatten()) {
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        if space.is_full() {
            break;
        }
        let products = right.iter().map(|g| x.mul(field, g)).chain(left.iter().map(|g| g.mul(field, &x)));
        for y in products {
            if space.insert(&y.flatten()) {
                queue.push_back(y);
            }
        }
    }
    space.finish()
}

/// The algebra generated by `gens` (and the identity if requested), as a
/// subspace of flattened `d × d` matrices.
///
/// Words are explored breadth first by length, each new independent word
/// multiplied on the right by every generator.
pub fn algebra_closure<F: Field>(
    field: &F,
    gens: &[Mat<F::Elem>],
    include_identity: bool,
) -> Result<Subspace<F::Elem>, LinalgError> {
    algebra_closure_sized(field, None, gens, include_identity)
}

/// As [`algebra_closure`], for an explicit size `d` (needed when `gens` is empty).
pub fn algebra_closure_sized<F: Field>(
    field: &F,
    d: Option<usize>,
    gens: &[Mat<F::Elem>],
    include_identity: bool,
) -> Result<Subspace<F::Elem>, LinalgError> {
    let d = common_size(gens, d)?;
    check_size(field, d)?;
    let mut seeds = Vec::new();
    if include_identity {
        seeds.push(Mat::identity(field, d));
    }
    seeds.extend(gens.iter().cloned());
    Ok(saturate(field, d, seeds, gens, &[]))
}

/// Two-sided ideal generated by `g` inside `algebra` (which must be unital),
/// as the span of all `a · g · b` over basis elements `a`, `b`.
pub fn two_sided_ideal<F: Field>(
    field: &F,
    algebra: &Subspace<F::Elem>,
    d: usize,
    g: &Mat<F::Elem>,
) -> Result<Subspace<F::Elem>, LinalgError> {
    common_size(core::slice::from_ref(g), Some(d))?;
    check_size(field, d)?;
    if !algebra.contains(field, &g.flatten()) {
        return Err(LinalgError::NotInAlgebra);
    }
    let basis = basis_matrices(algebra, d);
    let left: Vec<SparseVec<F::Elem>> = basis.iter().map(|a| a.mul(field, g).flatten()).collect();
    let left = Subspace::span(field, d * d, &left);
    let mut out = EchelonBuilder::new(field, d * d);
    for l in basis_matrices(&left, d) {
        for b in &basis {
            out.insert(&l.mul(field, b).flatten());
        }
    }
    Ok(out.finish())
}

/// Two-sided ideal generated by `g` in the unital algebra generated by
/// `gens`: the smallest subspace containing `g` that is closed under left
/// and right multiplication by every generator.
///
/// Equal to [`two_sided_ideal`] over the closure of `gens`, at a fraction of
/// the cost.
pub fn ideal_by_generators<F: Field>(
    field: &F,
    gens: &[Mat<F::Elem>],
    g: &Mat<F::Elem>,
) -> Result<Subspace<F::Elem>, LinalgError> {
    let d = common_size(gens, Some(g.rows()))?;
    common_size(core::slice::from_ref(g), Some(d))?;
    check_size(field, d)?;
    Ok(saturate(field, d, alloc::vec![g.clone()], gens, gens))
}

/// All `X` with `X · G = G · X` for every generator, as flattened matrices.
pub fn commutant<F: Field>(
    field: &F,
    d: usize,
    gens: &[Mat<F::Elem>],
) -> Result<Subspace<F::Elem>, LinalgError> {
    if !gens.is_empty() {
        common_size(gens, Some(d))?;
    }
    check_size(field, d)?;
    let pairs: Vec<(&Mat<F::Elem>, &Mat<F::Elem>)> = gens.iter().map(|g| (g, g)).collect();
    Ok(solve_intertwining(field, d, d, &pairs))
}

/// All `p × q` matrices `X` with `A_k · X = X · B_k` for every pair, flattened.
///
/// With `A_k` the action on a module `M` and `B_k` the action on `N` (row
/// vectors), these are the module maps `M → N`.
pub fn intertwiners<F: Field>(
    field: &F,
    a: &[Mat<F::Elem>],
    b: &[Mat<F::Elem>],
) -> Result<Subspace<F::Elem>, LinalgError> {
    if a.len() != b.len() {
        return Err(LinalgError::DimensionMismatch { expected: a.len(), found: b.len() });
    }
    let (Some(a0), Some(b0)) = (a.first(), b.first()) else {
        return Err(LinalgError::NoGenerators);
    };
    let p = common_size(a, Some(a0.rows()))?;
    let q = common_size(b, Some(b0.rows()))?;
    check_size(field, p.max(q))?;
    let pairs: Vec<(&Mat<F::Elem>, &Mat<F::Elem>)> = a.iter().zip(b).collect();
    Ok(solve_intertwining(field, p, q, &pairs))
}

/// Diagonal pairs are used first to rule out unknowns `X[i][j]` with
/// `A_ii ≠ B_jj`; the remaining unknowns are found by a kernel computation.
fn solve_intertwining<F: Field>(
    field: &F,
    p: usize,
    q: usize,
    pairs: &[(&Mat<F::Elem>, &Mat<F::Elem>)],
) -> Subspace<F::Elem> {
    let (diagonal, general): (Vec<_>, Vec<_>) =
        pairs.iter().partition(|(a, b)| is_diagonal(a) && is_diagonal(b));
    let zero = field.zero();
    let diag_entry = |g: &Mat<F::Elem>, i: usize| g.get(i, i).cloned().unwrap_or_else(|| zero.clone());
    let mut index = alloc::vec![usize::MAX; p * q];
    let mut unknowns = Vec::new();
    for i in 0..p {
        for j in 0..q {
            if diagonal.iter().all(|(a, b)| diag_entry(a, i) == diag_entry(b, j)) {
                index[i * q + j] = unknowns.len();
                unknowns.push(i * q + j);
            }
        }
    }
    // (A X - X B)[i][k] = sum_j A[i][j] X[j][k] - sum_j X[i][j] B[j][k]
    let mut equations = Vec::new();
    let mut acc = Accumulator::new(unknowns.len());
    for (a, b) in general {
        let bt = b.transpose(field);
        for i in 0..p {
            for k in 0..q {
                for (j, x) in a.row(i).iter() {
                    let u = index[j * q + k];
                    if u != usize::MAX {
                        acc.add(field, u, x);
                    }
                }
                for (j, x) in bt.row(k).iter() {
                    let u = index[i * q + j];
                    if u != usize::MAX {
                        acc.add(field, u, &field.neg(x));
                    }
                }
                let eq = acc.drain(field);
                if !eq.is_zero() {
                    equations.push(eq);
                }
            }
        }
    }
    let solutions = kernel(field, &Mat::from_rows(unknowns.len(), equations));
    let vectors: Vec<SparseVec<F::Elem>> = solutions
        .basis()
        .iter()
        .map(|s| SparseVec::from_entries(field, s.iter().map(|(u, x)| (unknowns[u], x.clone())).collect()))
        .collect();
    Subspace::span(field, p * q, &vectors)
}

/// The vectors of `space` killed by every operator: `{v ∈ space : v · G = 0}`.
pub fn common_annihilator<F: Field>(
    field: &F,
    space: &Subspace<F::Elem>,
    operators: &[Mat<F::Elem>],
) -> Result<Subspace<F::Elem>, LinalgError> {
    let d = space.ambient_dim();
    for g in operators {
        if g.rows() != d {
            return Err(LinalgError::DimensionMismatch { expected: d, found: g.rows() });
        }
    }
    let width: usize = operators.iter().map(Mat::cols).sum();
    // row k: the images of the k-th basis vector under all operators, side by side
    let rows: Vec<SparseVec<F::Elem>> = space
        .basis()
        .iter()
        .map(|v| {
            let mut entries = Vec::new();
            let mut offset = 0;
            for g in operators {
                entries.extend(g.apply_row(field, v).shifted(offset).into_entries());
                offset += g.cols();
            }
            SparseVec::from_sorted(entries)
        })
        .collect();
    let coeffs = kernel(field, &Mat::from_rows(width, rows).transpose(field));
    let basis = space.basis_matrix();
    let vectors: Vec<SparseVec<F::Elem>> = coeffs.basis().iter().map(|c| basis.apply_row(field, c)).collect();
    Ok(Subspace::span(field, d, &vectors))
}

fn is_diagonal<E: Clone + PartialEq>(m: &Mat<E>) -> bool {
    m.is_square() && m.triples().all(|(i, j, _)| i == j)
}

/// Span of `{v · M}` over basis vectors `v` of `vectors` and basis matrices
/// `M` of `operators`.
pub fn module_span<F: Field>(
    field: &F,
    vectors: &Subspace<F::Elem>,
    operators: &Subspace<F::Elem>,
) -> Result<Subspace<F::Elem>, LinalgError> {
    let d = vectors.ambient_dim();
    if operators.ambient_dim() != d * d {
        return Err(LinalgError::DimensionMismatch { expected: d * d, found: operators.ambient_dim() });
    }
    check_size(field, d)?;
    let mut out = EchelonBuilder::new(field, d);
    for m in basis_matrices(operators, d) {
        for v in vectors.basis() {
            if out.is_full() {
                return Ok(out.finish());
            }
            out.insert(&m.apply_row(field, v));
        }
    }
    Ok(out.finish())
}

/// The smallest subspace containing `start` and stable under `v ↦ v · G`
/// for every operator `G`.
pub fn orbit_span<F: Field>(
    field: &F,
    start: &Subspace<F::Elem>,
    operators: &[Mat<F::Elem>],
) -> Result<Subspace<F::Elem>, LinalgError> {
    let d = start.ambient_dim();
    common_size(operators, Some(d))?;
    let mut out = EchelonBuilder::from_subspace(field, start);
    let mut queue: VecDeque<SparseVec<F::Elem>> = start.basis().iter().cloned().collect();
    let mut acc = Accumulator::new(d);
    while let Some(v) = queue.pop_front() {
        if out.is_full() {
            break;
        }
        for g in operators {
            let w = g.apply_row_with(field, &v, &mut acc);
            if out.insert(&w) {
                queue.push_back(w);
            }
        }
    }
    Ok(out.finish())
}

/// The largest subspace of `space` mapped into itself by every operator.
///
/// Shrinks `space` to `{v : v · G ∈ space for all G}` until it stops changing.
pub fn largest_stable_subspace<F: Field>(
    field: &F,
    space: &Subspace<F::Elem>,
    operators: &[Mat<F::Elem>],
) -> Result<Subspace<F::Elem>, LinalgError> {
    let d = space.ambient_dim();
    common_size(operators, Some(d))?;
    let mut current = space.clone();
    loop {
        // row k: the residues mod `current` of the k-th basis vector's images
        let rows: Vec<SparseVec<F::Elem>> = current
            .basis()
            .iter()
            .map(|v| {
                let mut entries = Vec::new();
                for (k, g) in operators.iter().enumerate() {
                    let r = current.reduce(field, &g.apply_row(field, v));
                    entries.extend(r.shifted(k * d).into_entries());
                }
                SparseVec::from_sorted(entries)
            })
            .collect();
        let coeffs = kernel(field, &Mat::from_rows(d * operators.len(), rows).transpose(field));
        if coeffs.dim() == current.dim() {
            return Ok(current);
        }
        let basis = current.basis_matrix();
        let vectors: Vec<SparseVec<F::Elem>> = coeffs.basis().iter().map(|c| basis.apply_row(field, c)).collect();
        current = Subspace::span(field, d, &vectors);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{GenericField, RationalField};

    fn swap<F: Field>(f: &F) -> Mat<F::Elem> {
        // the flip on K^2 ⊗ K^2
        Mat::from_triples(f, 4, 4, (0..2).flat_map(|i| (0..2).map(move |j| (2 * i + j, 2 * j + i))).map(|(a, b)| (a, b, f.one())))
    }

    #[test]
    fn closure_examples() {
        let f = GenericField::new();
        let id = Mat::identity(&f, 3);
        assert_eq!(algebra_closure(&f, &[id.clone()], false).unwrap().dim(), 1);
        assert_eq!(algebra_closure(&f, &[swap(&f)], true).unwrap().dim(), 2);
        // a nilpotent Jordan block generates a 3-dim algebra with identity
        let n = Mat::from_triples(&f, 3, 3, alloc::vec![(0, 1, f.one()), (1, 2, f.one())]);
        assert_eq!(algebra_closure(&f, &[n.clone()], true).unwrap().dim(), 3);
        assert_eq!(algebra_closure(&f, &[n], false).unwrap().dim(), 2);
        assert!(algebra_closure(&f, &[], true).is_err());
        assert_eq!(algebra_closure_sized(&f, Some(3), &[], true).unwrap().dim(), 1);
    }

    #[test]
    fn closure_is_idempotent() {
        let f = RationalField::new(2, 1).unwrap();
        let a = Mat::from_triples(&f, 3, 3, alloc::vec![(0, 1, f.one()), (2, 0, f.q())]);
        let b = Mat::from_triples(&f, 3, 3, alloc::vec![(1, 1, f.from_i64(3))]);
        let c = algebra_closure(&f, &[a, b], true).unwrap();
        let again = algebra_closure(&f, &basis_matrices(&c, 3), true).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn ideals_agree() {
        let f = GenericField::new();
        let gens = [swap(&f), Mat::from_triples(&f, 4, 4, alloc::vec![(0, 3, f.one())])];
        let alg = algebra_closure(&f, &gens, true).unwrap();
        let g = gens[1].clone();
        let a = two_sided_ideal(&f, &alg, 4, &g).unwrap();
        let b = ideal_by_generators(&f, &gens, &g).unwrap();
        assert_eq!(a, b);
        assert_eq!(two_sided_ideal(&f, &alg, 4, &Mat::identity(&f, 4)).unwrap(), alg);
        assert!(two_sided_ideal(&f, &alg, 4, &Mat::zeros(4, 4)).unwrap().is_zero());
        let outside = Mat::from_triples(&f, 4, 4, alloc::vec![(1, 2, f.one())]);
        assert!(matches!(two_sided_ideal(&f, &alg, 4, &outside), Err(LinalgError::NotInAlgebra)));
    }

    #[test]
    fn commutant_examples() {
        let f = GenericField::new();
        assert!(commutant(&f, 3, &[]).unwrap().is_full());
        assert!(commutant(&f, 3, &[Mat::identity(&f, 3)]).unwrap().is_full());
        // commutant of the flip: symmetric and antisymmetric blocks, 3^2 + 1^2
        assert_eq!(commutant(&f, 4, &[swap(&f)]).unwrap().dim(), 10);
        let k = Mat::diagonal(&f, alloc::vec![f.q(), f.q(), f.q_pow(-1)]);
        assert_eq!(commutant(&f, 3, &[k]).unwrap().dim(), 5);
    }

    #[test]
    fn intertwiners_between_modules() {
        let f = GenericField::new();
        // K^2 with the flip, and the sign line: maps are multiples of (1, -1)
        let flip = Mat::from_triples(&f, 2, 2, alloc::vec![(0, 1, f.one()), (1, 0, f.one())]);
        let sign = Mat::diagonal(&f, alloc::vec![f.from_i64(-1)]);
        let maps = intertwiners(&f, &[flip.clone()], &[sign]).unwrap();
        assert_eq!(maps.dim(), 1);
        let trivial = Mat::identity(&f, 1);
        assert_eq!(intertwiners(&f, &[flip], &[trivial]).unwrap().dim(), 1);
    }

    #[test]
    fn stable_subspaces() {
        let f = GenericField::new();
        // shift e0 -> e1 -> e2 -> 0: stable subspaces are spans of tails
        let n = Mat::from_triples(&f, 3, 3, alloc::vec![(0, 1, f.one()), (1, 2, f.one())]);
        let s = Subspace::coordinate(&f, 3, &[0, 2]);
        assert_eq!(largest_stable_subspace(&f, &s, &[n.clone()]).unwrap(), Subspace::coordinate(&f, 3, &[2]));
        let all = Subspace::full(&f, 3);
        assert_eq!(largest_stable_subspace(&f, &all, &[n]).unwrap(), all);
    }

    #[test]
    fn annihilators() {
        let f = GenericField::new();
        let n = Mat::from_triples(&f, 3, 3, alloc::vec![(0, 1, f.one()), (1, 2, f.one())]);
        let all = Subspace::full(&f, 3);
        let killed = common_annihilator(&f, &all, &[n.clone()]).unwrap();
        assert_eq!(killed, Subspace::coordinate(&f, 3, &[2]));
        let sq = n.mul(&f, &n);
        assert_eq!(common_annihilator(&f, &all, &[sq]).unwrap().dim(), 2);
        assert_eq!(common_annihilator(&f, &all, &[]).unwrap(), all);
    }

    #[test]
    fn spans() {
        let f = GenericField::new();
        let all = Subspace::full(&f, 4);
        let ops = algebra_closure(&f, &[Mat::identity(&f, 4)], false).unwrap();
        assert_eq!(module_span(&f, &all, &ops).unwrap(), all);
        assert!(module_span(&f, &all, &Subspace::zero(16)).unwrap().is_zero());
        let e0 = Subspace::span(&f, 4, &[SparseVec::unit(&f, 1)]);
        assert_eq!(orbit_span(&f, &e0, &[swap(&f)]).unwrap().dim(), 2);
    }
}
