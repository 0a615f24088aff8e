mod common;

use std::collections::BTreeSet;

use bmw_core::linalg::Subspace;
use bmw_core::rep::RepContext;
use bmw_core::scalars::{Field, FieldTask, ModPField};
use bmw_core::schur_weyl::{dominance_leq, osc_mult, pi_f, weyl_dim, Engine, Partition};
use proptest::prelude::*;

proptest! {
    #[test]
    fn conjugation_is_an_involution(mut parts in prop::collection::vec(1usize..6, 0..6)) {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(parts).unwrap();
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }
}

#[test]
fn weight_sets_are_nested_and_exhaustive() {
    for m in 1..=3 {
        for n in 1..=5 {
            for f in 0..n / 2 {
                let big = pi_f(n, f, m).unwrap();
                for lambda in &pi_f(n, f + 1, m).unwrap().members {
                    assert!(big.contains(lambda));
                }
            }
            if (2 * m).pow(n as u32) <= 1296 {
                let ctx = RepContext::new(&ModPField::new(5).unwrap(), m, n).unwrap();
                let dominant: BTreeSet<Vec<i64>> = (0..ctx.dim())
                    .map(|i| ctx.weight(i))
                    .filter(|w| w.windows(2).all(|p| p[0] >= p[1]) && w.iter().all(|&x| x >= 0))
                    .collect();
                let listed: BTreeSet<Vec<i64>> = pi_f(n, 0, m).unwrap().members.iter().map(|p| p.weight(m).unwrap()).collect();
                assert_eq!(dominant, listed, "(m, n) = ({m}, {n})");
            }
        }
    }
}

#[test]
fn larger_layers_never_dominate_smaller_ones() {
    for m in 1..=3 {
        for n in 0..=7 {
            for a in 0..=n / 2 {
                for b in a + 1..=n / 2 {
                    for lambda in Partition::all_of(n - 2 * a, m) {
                        for mu in Partition::all_of(n - 2 * b, m) {
                            assert!(!dominance_leq(&lambda.weight(m).unwrap(), &mu.weight(m).unwrap()), "{lambda} <= {mu}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn oracle_dimension_count() {
    for m in 1..=3 {
        for n in 0..=6 {
            let total: u64 = pi_f(n, 0, m)
                .unwrap()
                .members
                .iter()
                .map(|l| osc_mult(l, n, m).unwrap() * weyl_dim(l, m).unwrap())
                .sum();
            assert_eq!(total, (2 * m as u64).pow(n as u32));
        }
    }
}

fn double_factorial(n: usize) -> usize {
    (1..=n).map(|k| 2 * k - 1).product()
}

/// Structural identities at one `(m, n)`, checked on one field.
struct GridInvariants {
    m: usize,
    n: usize,
}

impl FieldTask for GridInvariants {
    type Output = ();

    fn run<F: Field>(self, field: &F) {
        let (m, n) = (self.m, self.n);
        let ctx = RepContext::new(field, m, n).unwrap();
        let e = Engine::new(&ctx);
        let alg = e.algebra().unwrap().dim();
        if m >= n {
            assert_eq!(alg, double_factorial(n), "(m, n) = ({m}, {n})");
        } else if n >= 3 {
            assert!(alg < double_factorial(n), "(m, n) = ({m}, {n})");
        }
        for f in 0..=n / 2 {
            let w = e.bmw_module(f).unwrap();
            assert_eq!(e.truncation(f, &w).unwrap(), *w);
            assert_eq!(e.truncation(f, &Subspace::full(field, ctx.dim())).unwrap(), *w);
            assert!(e.image_sum_check(f).unwrap());
            let next = e.bmw_module(f + 1).unwrap();
            let ht = e.harmonic_tensors(f).unwrap();
            assert_eq!(ht.dim(), w.dim() - next.dim());
            assert_eq!(ht, e.harmonic_tensors_from_ideal(f).unwrap());
            for lambda in pi_f(n, f, m).unwrap().members {
                let weight = lambda.weight(m).unwrap();
                let max = e.maximal_vectors(&weight).unwrap();
                if lambda.size() == n - 2 * f {
                    if let Ok(z) = e.z_vector(f, &lambda, None) {
                        assert_eq!(e.cyclic_bmw_span(&z.vector).unwrap(), max, "{lambda} at ({m},{n},{f})");
                    }
                    for c in bmw_core::schur_weyl::ZCandidate::ALL {
                        let v = e.z_candidate(f, &lambda, c).unwrap();
                        let span = e.cyclic_bmw_span(&v).unwrap();
                        if e.is_maximal(&v, &weight) {
                            assert!(span.is_subspace_of(field, &max));
                        }
                    }
                }
            }
            if f >= 1 {
                let r = e.duality_report(f).unwrap();
                assert!(r.surjective && r.truncation_match && r.hom_vanishing, "{r:?}");
                assert_eq!(r.dim_w + r.dim_quotient, r.dim_total);
            }
        }
        for (lambda, k) in e.multiplicities().unwrap() {
            assert_eq!(k as u64, osc_mult(&lambda, n, m).unwrap(), "{lambda} at ({m}, {n})");
        }
    }
}

#[test]
fn grid_invariants_generic() {
    for (m, n) in [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3)] {
        "generic".parse::<bmw_core::scalars::FieldSpec>().unwrap().dispatch(GridInvariants { m, n }).unwrap();
    }
}

#[test]
fn grid_invariants_specialized() {
    for spec in ["modp:7", "zeta:3"] {
        let spec: bmw_core::scalars::FieldSpec = spec.parse().unwrap();
        for (m, n) in [(1, 4), (2, 3), (3, 2), (3, 3)] {
            spec.dispatch(GridInvariants { m, n }).unwrap();
        }
    }
}
