//! Schur–Weyl duality between the BMW algebra image and the symplectic
//! quantum group on `V^{⊗n}`: the ideals `J_f` and submodules
//! `W_f = V^{⊗n} J_f`, truncation to the weight sets `π_f`, maximal vectors,
//! harmonic tensors, and the surjectivity of the induced maps on
//! `V^{⊗n} / W_f`.

mod engine;
mod partition;

pub use engine::{CacheKey, DualityReport, Engine, NoCache, SubspaceCache, ZCandidate, ZVector};
pub use partition::{dominance_leq, osc_mult, pi_f, weyl_dim, Partition, WeightSet};

use alloc::vec::Vec;

use crate::linalg::LinalgError;
use crate::rep::RepError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchurWeylError {
    #[error("{0:?} is not a partition")]
    NotAPartition(Vec<usize>),
    #[error("partition has {rows} rows, more than m = {m}")]
    TooManyRows { rows: usize, m: usize },
    #[error("weight has length {found}, expected m = {m}")]
    WeightLength { found: usize, m: usize },
    #[error("partition of {size} given where {expected} boxes are needed")]
    WrongSize { size: usize, expected: usize },
    #[error("layer f = {f} out of range (at most {max})")]
    LayerOutOfRange { f: usize, max: usize },
    #[error("subspace is not stable under the quantum group")]
    NotStable,
    #[error("no candidate gives a nonzero maximal vector")]
    NotConstructed,
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{module_span, two_sided_ideal, Subspace};
    use crate::rep::RepContext;
    use crate::scalars::{GenericField, ModPField};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn layers_for_m2_n3() {
        let f = GenericField::new();
        let ctx = RepContext::new(&f, 2, 3).unwrap();
        let e = Engine::new(&ctx);
        assert_eq!(e.algebra().unwrap().dim(), 14);
        assert_eq!(e.ideal(1).unwrap().dim(), 9);
        assert_eq!(e.bmw_module(1).unwrap().dim(), 12);
        assert_eq!(e.bmw_module(2).unwrap().dim(), 0);
        assert!(e.image_sum_check(1).unwrap());
        assert!(e.image_sum_check(0).unwrap());
        let full = Subspace::full(&f, 64);
        assert_eq!(e.truncation(1, &full).unwrap(), *e.bmw_module(1).unwrap());
        assert_eq!(e.truncation(0, &full).unwrap(), full);
        assert_eq!(e.harmonic_tensors(0).unwrap().dim(), 52);
        assert_eq!(e.harmonic_tensors(1).unwrap().dim(), 12);
        for layer in 0..=1 {
            assert_eq!(e.harmonic_tensors(layer).unwrap(), e.harmonic_tensors_from_ideal(layer).unwrap());
        }
    }

    #[test]
    fn module_and_ideal_agree_with_definitions() {
        let f = ModPField::new(7).unwrap();
        let ctx = RepContext::new(&f, 2, 3).unwrap();
        let e = Engine::new(&ctx);
        let alg = e.algebra().unwrap();
        let g = e.ideal_generator(1);
        assert_eq!(two_sided_ideal(&f, &alg, 64, &g).unwrap(), *e.ideal(1).unwrap());
        let w = module_span(&f, &Subspace::full(&f, 64), &e.ideal(1).unwrap()).unwrap();
        assert_eq!(w, *e.bmw_module(1).unwrap());
    }

    #[test]
    fn maximal_vectors_and_z() {
        let f = GenericField::new();
        let ctx = RepContext::new(&f, 2, 3).unwrap();
        let e = Engine::new(&ctx);
        assert_eq!(e.maximal_vectors(&[1, 0]).unwrap().dim(), 3);
        assert_eq!(e.maximal_vectors(&[2, 1]).unwrap().dim(), 2);
        assert_eq!(e.maximal_vectors(&[3, 0]).unwrap().dim(), 1);
        let z = e.z_vector(1, &p(&[1]), None).unwrap();
        assert_eq!(z.candidate, ZCandidate::Identity);
        assert_eq!(e.cyclic_bmw_span(&z.vector).unwrap(), e.maximal_vectors(&[1, 0]).unwrap());
        for lambda in [p(&[3]), p(&[2, 1])] {
            let z = e.z_vector(0, &lambda, None).unwrap();
            let w = lambda.weight(2).unwrap();
            assert_eq!(e.cyclic_bmw_span(&z.vector).unwrap(), e.maximal_vectors(&w).unwrap(), "{lambda}");
        }
        assert_eq!(e.z_vector(0, &p(&[2, 1]), None).unwrap().candidate, ZCandidate::ColumnReading);
        assert!(e.z_vector(0, &p(&[1]), None).is_err());
    }

    #[test]
    fn z_for_a_column() {
        let f = GenericField::new();
        let ctx = RepContext::new(&f, 2, 2).unwrap();
        let e = Engine::new(&ctx);
        let z = e.z_vector(0, &p(&[1, 1]), None).unwrap();
        assert!(e.is_maximal(&z.vector, &[1, 1]));
        assert_eq!(z.vector.nnz(), 2);
    }

    #[test]
    fn normalized_alpha() {
        let f = GenericField::new();
        let ctx = RepContext::new(&f, 2, 4).unwrap();
        let e = Engine::new(&ctx);
        let contraction = ctx.cap().kron(&f, ctx.cap());
        let u0 = e.normalized_alpha_power(2);
        let value = contraction.apply_row(&f, &u0);
        assert_eq!(value, crate::linalg::SparseVec::unit(&f, 0));
    }

    #[test]
    fn reports() {
        let f = GenericField::new();
        for (m, n, dq, dc) in [(2, 2, 15, 2), (2, 3, 52, 5), (1, 3, 4, 1), (1, 2, 3, 1)] {
            let ctx = RepContext::new(&f, m, n).unwrap();
            let r = Engine::new(&ctx).duality_report(1).unwrap();
            assert_eq!((r.dim_quotient, r.dim_commutant_quotient, r.dim_image_phi_f), (dq, dc, dc), "{r:?}");
            assert!(r.surjective && r.truncation_match && r.hom_vanishing, "{r:?}");
            assert_eq!(r.dim_w + r.dim_quotient, r.dim_total);
        }
    }

    #[test]
    fn multiplicities_match_oracle() {
        let f = GenericField::new();
        let ctx = RepContext::new(&f, 2, 3).unwrap();
        let e = Engine::new(&ctx);
        let mults = e.multiplicities().unwrap();
        let sum_sq: usize = mults.iter().map(|(_, k)| k * k).sum();
        assert_eq!(sum_sq, 14);
        for (lambda, k) in mults {
            assert_eq!(k as u64, osc_mult(&lambda, 3, 2).unwrap(), "{lambda}");
        }
    }
}
