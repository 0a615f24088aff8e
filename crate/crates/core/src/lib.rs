//! Exact computations with the Birman-Murakami-Wenzl algebra acting on
//! tensor powers of the natural module of the symplectic quantum group.
//!
//! The crate is `no_std` (it needs `alloc`). Layers, bottom up:
//!
//! - [`scalars`]: `Q(q)`, `F_p(q)` and rational specializations of `q`.
//! - [`linalg`]: sparse exact matrices, echelon subspaces, kernels, algebra
//!   closures, ideals and commutants.
//! - [`tangles`]: framed tangle expressions, their text syntax and the
//!   standard constructions (nested caps and cups, duals, BMW words).
//! - [`rep`]: the symplectic representation data, the tangle evaluation
//!   functor and the quantum group action on `V^{⊗n}`.
//! - [`schur_weyl`]: ideal images, truncation, maximal vectors, harmonic
//!   tensors and surjectivity reports.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod linalg;
pub mod rep;
pub mod scalars;
pub mod schur_weyl;
pub mod tangles;
