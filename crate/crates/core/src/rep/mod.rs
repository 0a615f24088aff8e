//! The type C representation data on `V = K^{2m}`: the crossing `β'`, the
//! contraction `γ'`, cup and cap, the functor from tangles to matrices, and
//! the quantum group action on `V^{⊗n}`.

mod context;
mod eval;
mod relations;

pub use context::{RepContext, UqAction};
pub use eval::Shift;
pub use relations::{bmw_relations, tangle_relations, uq_relations, RelationCheck};

use crate::linalg::LinalgError;
use crate::scalars::ScalarError;
use crate::tangles::TangleError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("the rank m must be at least 1")]
    InvalidRank,
    #[error("calibration failed: {0}")]
    Calibration(&'static str),
    #[error("expected a {}→{} tangle, found {}→{}", .expected.0, .expected.1, .found.0, .found.1)]
    Arity { expected: (usize, usize), found: (usize, usize) },
    #[error("expected a {}x{} matrix, found {}x{}", .expected.0, .expected.1, .found.0, .found.1)]
    MatrixShape { expected: (usize, usize), found: (usize, usize) },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Tangle(#[from] TangleError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rref, Mat, SparseVec};
    use crate::scalars::{Field, GenericField, ModPField, RationalField};
    use crate::tangles::parse;

    #[test]
    fn alpha_for_rank_one() {
        let f = GenericField::new();
        let ctx = RepContext::new(&f, 1, 2).unwrap();
        let expected = SparseVec::from_entries(&f, alloc::vec![(1, f.q_pow(-1)), (2, f.neg(&f.q()))]);
        assert_eq!(*ctx.alpha(), expected);
        let image = ctx.gamma().apply_row(&f, ctx.alpha());
        assert_eq!(image, ctx.alpha().scale(&f, &f.parse("-q^2 - q^-2").unwrap()));
    }

    #[test]
    fn gamma_has_rank_one() {
        let f = GenericField::new();
        for m in 1..=3 {
            let ctx = RepContext::new(&f, m, 2).unwrap();
            assert_eq!(rref(&f, ctx.gamma()).dim(), 1, "m = {m}");
        }
    }

    #[test]
    fn form_and_involution() {
        let f = GenericField::new();
        let ctx = RepContext::new(&f, 3, 1).unwrap();
        for i in 0..6 {
            assert_eq!(ctx.rho()[ctx.prime(i)], -ctx.rho()[i]);
            assert_eq!(ctx.eps()[ctx.prime(i)], -ctx.eps()[i]);
            for j in 0..6 {
                assert_eq!(ctx.form(i, j), -ctx.form(j, i));
            }
        }
        assert_eq!(ctx.form(0, 5), 1);
        assert_eq!(ctx.form(0, 1), 0);
    }

    #[test]
    fn calibration_passes_on_every_field() {
        for m in 1..=3 {
            RepContext::new(&GenericField::new(), m, 2).unwrap();
            RepContext::new(&ModPField::new(5).unwrap(), m, 2).unwrap();
            RepContext::new(&RationalField::new(2, 1).unwrap(), m, 2).unwrap();
        }
        assert!(matches!(RepContext::new(&GenericField::new(), 0, 2), Err(RepError::InvalidRank)));
    }

    #[test]
    fn closed_loop_and_inverse_crossing() {
        let f = GenericField::new();
        let ctx = RepContext::new(&f, 1, 2).unwrap();
        let x = ctx.eval(&parse("A ; U").unwrap()).unwrap();
        assert_eq!(x, Mat::diagonal(&f, alloc::vec![f.parse("-q^2-q^-2").unwrap()]));
        let ctx2 = RepContext::new(&f, 2, 2).unwrap();
        assert_eq!(ctx2.eval(&parse("X ; Xi").unwrap()).unwrap(), Mat::identity(&f, 16));
        assert!(ctx2.eval_endo(&parse("X * I").unwrap()).is_err());
    }

    #[test]
    fn weights() {
        let f = GenericField::new();
        let ctx = RepContext::new(&f, 1, 2).unwrap();
        assert_eq!(ctx.weight_space(&[0]).dim(), 2);
        assert_eq!(ctx.weight_space(&[2]).dim(), 1);
        let ctx = RepContext::new(&f, 2, 3).unwrap();
        assert_eq!(ctx.weight_space(&[3, 0]).basis()[0], SparseVec::unit(&f, 0));
        let total: usize = (-3..=3)
            .flat_map(|a| (-3..=3).map(move |b| [a, b]))
            .map(|w| ctx.weight_space(&w).dim())
            .sum();
        assert_eq!(total, 64);
        assert_eq!(ctx.digits(ctx.index_of(&[3, 1, 2])), alloc::vec![3, 1, 2]);
    }

    #[test]
    fn relation_suites_small() {
        let f = GenericField::new();
        let ctx = RepContext::new(&f, 2, 3).unwrap();
        for c in bmw_relations(&ctx) {
            assert!(c.holds(), "{c:?}");
        }
        for c in tangle_relations(&ctx).unwrap() {
            assert!(c.holds(), "{c:?}");
        }
        for c in uq_relations(&ctx) {
            assert!(c.holds(), "{c:?}");
        }
    }

    #[test]
    fn shifts_are_inverse() {
        let f = GenericField::new();
        let ctx = RepContext::new(&f, 1, 2).unwrap();
        let m = ctx.eval(&parse("X").unwrap()).unwrap();
        // X in H(1, 1 + 1) is not possible; use H(2, 1 + 1) with t = 1
        let up = ctx.hom_shift(&m, Shift::Up, 2, 1, 1).unwrap();
        assert_eq!((up.rows(), up.cols()), (8, 2));
        assert_eq!(ctx.hom_shift(&up, Shift::Down, 2, 1, 1).unwrap(), m);
        let id = Mat::identity(&f, 2);
        assert_eq!(ctx.hom_shift(&id, Shift::Up, 1, 1, 0).unwrap(), id);
        assert!(ctx.hom_shift(&id, Shift::Up, 1, 1, 1).is_err());
    }
}
