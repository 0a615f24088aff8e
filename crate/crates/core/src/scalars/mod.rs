//! Exact coefficient fields: `Q(q)`, `F_p(q)` and `Q` with `q` specialized
//! to a rational that is not a root of unity.

mod field;
mod laurent;
mod ratfunc;
mod ring;
mod scalar;
mod syntax;

pub use field::{
    Field, FieldSpec, FieldTask, GenericField, GenericScalar, ModPField, RatFuncField, RationalField,
};
pub use laurent::LaurentPoly;
pub use ratfunc::RatFunc;
pub use ring::{BaseRing, Integers, PrimeField};
pub use scalar::Scalar;
pub use syntax::parse_scalar;
pub(crate) use syntax::ScalarParser;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields ({0} vs {1})")]
    MixedFields(FieldSpec, FieldSpec),
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("q = {num}/{den} is zero or a root of unity")]
    RootOfUnity { num: i64, den: i64 },
    #[error("unrecognized field descriptor {0:?} (expected generic, modp:P or zeta:A/B)")]
    BadFieldSpec(alloc::string::String),
    #[error("denominator vanishes under specialization")]
    Specialization,
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: &'static str },
}

/// The BMW parameter `r = -q^(2m+1)` of the symplectic specialization.
pub fn bmw_r<F: Field>(field: &F, m: usize) -> F::Elem {
    field.neg(&field.q_pow(2 * m as i64 + 1))
}

/// The closed-loop value `x = 1 + (r - r^-1)/(q - q^-1)` with `r = -q^(2m+1)`.
pub fn loop_value<F: Field>(field: &F, m: usize) -> F::Elem {
    assert!(m >= 1, "rank must be positive");
    let r = bmw_r(field, m);
    let r_inv = field.inv(&r).expect("r is a unit");
    let q_diff = field.sub(&field.q(), &field.q_pow(-1));
    let ratio = field
        .div(&field.sub(&r, &r_inv), &q_diff)
        .expect("q - q^-1 is invertible when q is not a root of unity");
    field.add(&field.one(), &ratio)
}
