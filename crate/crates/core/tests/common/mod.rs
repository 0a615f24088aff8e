//! Shared generators for the integration tests.
#![allow(dead_code)]

use bmw_core::scalars::{
    Field, FieldSpec, GenericField, GenericScalar, ModPField, RationalField,
};
use bmw_core::tangles::TangleExpr;
use proptest::prelude::*;

/// Sparse Laurent polynomial as `(coefficient, exponent)` pairs.
pub type Poly = Vec<(i64, i64)>;

pub fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-4i64..=4, -3i64..=3), 0..4)
}

pub fn eval_poly<F: Field>(f: &F, p: &Poly) -> F::Elem {
    p.iter().fold(f.zero(), |acc, &(c, e)| f.add(&acc, &f.mul(&f.from_i64(c), &f.q_pow(e))))
}

/// `num / den`, or just `num` when `den` vanishes in `f`.
pub fn element<F: Field>(f: &F, num: &Poly, den: &Poly) -> F::Elem {
    let n = eval_poly(f, num);
    match f.inv(&eval_poly(f, den)) {
        Some(d) => f.mul(&n, &d),
        None => n,
    }
}

pub fn generic_scalar() -> impl Strategy<Value = GenericScalar> {
    (poly(), poly()).prop_map(|(n, d)| element(&GenericField::new(), &n, &d))
}

/// The field descriptors every field-independence check runs over.
pub fn all_field_specs() -> Vec<FieldSpec> {
    ["generic", "modp:5", "modp:7", "zeta:2", "zeta:3", "zeta:5/3"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

pub fn specialized_fields() -> (ModPField, ModPField, RationalField, RationalField, RationalField) {
    (
        ModPField::new(5).unwrap(),
        ModPField::new(7).unwrap(),
        RationalField::new(2, 1).unwrap(),
        RationalField::new(3, 1).unwrap(),
        RationalField::new(5, 3).unwrap(),
    )
}

fn leaf() -> impl Strategy<Value = TangleExpr> {
    prop_oneof![
        Just(TangleExpr::id()),
        Just(TangleExpr::cross()),
        Just(TangleExpr::cross_inv()),
        Just(TangleExpr::cup()),
        Just(TangleExpr::cap()),
        (2usize..=3).prop_map(TangleExpr::identity),
    ]
}

/// `a ; b`, padding the narrower side with identity strands.
pub fn compose_padded(a: TangleExpr, b: TangleExpr) -> TangleExpr {
    let (out, inp) = (a.dst(), b.src());
    let (a, b) = match out.cmp(&inp) {
        std::cmp::Ordering::Equal => (a, b),
        std::cmp::Ordering::Greater => (a, b.tensor(TangleExpr::identity(out - inp))),
        std::cmp::Ordering::Less => (a.tensor(TangleExpr::identity(inp - out)), b),
    };
    a.compose(b).expect("padded arities agree")
}

/// Well-typed tangle expressions mixing every node kind.
pub fn tangle() -> impl Strategy<Value = TangleExpr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            3 => (inner.clone(), inner.clone()).prop_map(|(a, b)| a.tensor(b)),
            4 => (inner.clone(), inner.clone()).prop_map(|(a, b)| compose_padded(a, b)),
            1 => (generic_scalar(), inner.clone()).prop_map(|(c, a)| TangleExpr::scale(c, a)),
            1 => (inner, generic_scalar()).prop_map(|(a, c)| {
                let b = TangleExpr::scale(c, a.clone());
                TangleExpr::sum(vec![a, b]).unwrap()
            }),
        ]
    })
}

/// Tangles whose every subexpression has at most `max_points` boundary points.
pub fn small_tangle(max_points: usize) -> impl Strategy<Value = TangleExpr> {
    tangle().prop_filter("too many boundary points", move |e| e.width() <= max_points)
}
