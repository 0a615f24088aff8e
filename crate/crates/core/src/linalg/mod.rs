//! Sparse exact linear algebra over any [`Field`](crate::scalars::Field).

mod algebra;
mod mat;
pub mod serial;
mod subspace;
mod vector;

pub use algebra::{
    algebra_closure, algebra_closure_sized, basis_matrices, common_annihilator, commutant,
    ideal_by_generators, intertwiners, largest_stable_subspace, module_span, orbit_span, two_sided_ideal,
    GENERIC_SIZE_LIMIT,
};
pub use mat::Mat;
pub use subspace::{kernel, left_kernel, rref, EchelonBuilder, Subspace};
pub use vector::SparseVec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspaces live in different ambient spaces ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("no generators given and no size to infer")]
    NoGenerators,
    #[error("ideal generator does not lie in the algebra")]
    NotInAlgebra,
    #[error("{dim}x{dim} matrices over Q(q) exceed the limit of {limit}; use a specialized field (modp:P or zeta:A/B)")]
    TooLarge { dim: usize, limit: usize },
    #[error("decode error at line {line}: {msg}")]
    Decode { line: usize, msg: alloc::string::String },
}
