//! End-to-end acceptance checks. Runs as a plain binary and prints one
//! PASS/FAIL line per criterion; exits nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use bmw_core::linalg::{algebra_closure, Mat, Subspace};
use bmw_core::rep::{bmw_relations, tangle_relations, uq_relations, RepContext, Shift};
use bmw_core::scalars::{Field, FieldSpec, FieldTask, GenericField};
use bmw_core::schur_weyl::{pi_f, Engine};
use bmw_core::tangles::{parse, TangleError, TangleExpr};
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, TestRng, TestRunner, RngAlgorithm};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

const RELATION_GRID: [(usize, usize); 9] = [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)];
const LAYER_GRID: [(usize, usize, usize); 4] = [(1, 2, 1), (1, 3, 1), (2, 2, 1), (2, 3, 1)];

fn bmw_relation_suite() -> Outcome {
    let f = GenericField::new();
    let mut instances = 0;
    for (m, n) in RELATION_GRID {
        let ctx = RepContext::new(&f, m, n).map_err(|e| e.to_string())?;
        for c in bmw_relations(&ctx) {
            ensure(c.holds(), || format!("{} fails at (m, n) = ({m}, {n})", c.family))?;
            instances += c.instances;
        }
    }
    Ok(format!("{instances} identities"))
}

fn tangle_relation_suite() -> Outcome {
    let f = GenericField::new();
    let mut instances = 0;
    for (m, n) in RELATION_GRID {
        let ctx = RepContext::new(&f, m, n).map_err(|e| e.to_string())?;
        for c in tangle_relations(&ctx).map_err(|e| e.to_string())? {
            ensure(c.holds(), || format!("{} fails at m = {m}", c.family))?;
            instances += c.instances;
        }
    }
    Ok(format!("{instances} identities"))
}

/// A deterministic dense-ish test matrix with entries in `Z[q, q^-1]`.
fn sample_matrix<F: Field>(f: &F, rows: usize, cols: usize, seed: usize) -> Mat<F::Elem> {
    let mut triples = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let h = (i * 31 + j * 17 + seed * 7) % 11;
            if h < 5 {
                let c = f.mul(&f.from_i64(h as i64 - 2), &f.q_pow((i + j) as i64 % 3 - 1));
                triples.push((i, j, c));
            }
        }
    }
    Mat::from_triples(f, rows, cols, triples)
}

fn bending_maps_are_inverse() -> Outcome {
    let f = GenericField::new();
    let mut count = 0;
    for m in 1..=2 {
        let ctx = RepContext::new(&f, m, 1).map_err(|e| e.to_string())?;
        let d = ctx.d();
        for n in 0..=4usize {
            for s in 0..=4 - n {
                for t in 0..=4 - n - s {
                    let pow = |k: usize| d.pow(k as u32);
                    let a = sample_matrix(&f, pow(n), pow(s + t), count);
                    let up = ctx.hom_shift(&a, Shift::Up, n, s, t).map_err(|e| e.to_string())?;
                    let back = ctx.hom_shift(&up, Shift::Down, n, s, t).map_err(|e| e.to_string())?;
                    ensure(back == a, || format!("down after up differs at m={m}, (n,s,t)=({n},{s},{t})"))?;
                    let b = sample_matrix(&f, pow(n + t), pow(s), count + 1);
                    let down = ctx.hom_shift(&b, Shift::Down, n, s, t).map_err(|e| e.to_string())?;
                    let again = ctx.hom_shift(&down, Shift::Up, n, s, t).map_err(|e| e.to_string())?;
                    ensure(again == b, || format!("up after down differs at m={m}, (n,s,t)=({n},{s},{t})"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} (m, n, s, t) cases"))
}

fn uq_commutation_and_alpha() -> Outcome {
    let f = GenericField::new();
    let mut instances = 0;
    for (m, n) in RELATION_GRID {
        let ctx = RepContext::new(&f, m, n).map_err(|e| e.to_string())?;
        for c in uq_relations(&ctx) {
            ensure(c.holds(), || format!("{} fails at (m, n) = ({m}, {n})", c.family))?;
            instances += c.instances;
        }
    }
    Ok(format!("{instances} identities"))
}

fn closure_dim<F: Field>(f: &F, m: usize, n: usize) -> Result<usize, String> {
    let ctx = RepContext::new(f, m, n).map_err(|e| e.to_string())?;
    Ok(algebra_closure(f, &ctx.bmw_generator_list(), true).map_err(|e| e.to_string())?.dim())
}

fn faithfulness_dimensions() -> Outcome {
    let f = GenericField::new();
    let d22 = closure_dim(&f, 2, 2)?;
    ensure(d22 == 3, || format!("(2,2): {d22}, expected 3"))?;
    let d33 = closure_dim(&f, 3, 3)?;
    ensure(d33 == 15, || format!("(3,3): {d33}, expected 15"))?;
    let d23 = closure_dim(&f, 2, 3)?;
    ensure(d23 == 14, || format!("(2,3): {d23}, expected 14"))?;
    Ok(format!("(2,2) = {d22}, (3,3) = {d33}, (2,3) = {d23} < 15"))
}

fn truncation_equals_layer() -> Outcome {
    let f = GenericField::new();
    let expected = [1, 4, 1, 12];
    for ((m, n, fl), want) in LAYER_GRID.into_iter().zip(expected) {
        let ctx = RepContext::new(&f, m, n).map_err(|e| e.to_string())?;
        let e = Engine::new(&ctx);
        let w = e.bmw_module(fl).map_err(|e| e.to_string())?;
        let t = e.truncation(fl, &Subspace::full(&f, ctx.dim())).map_err(|e| e.to_string())?;
        ensure(t == *w, || format!("truncation differs from W at ({m},{n},{fl})"))?;
        ensure(w.dim() == want, || format!("dim W at ({m},{n},{fl}) is {}, expected {want}", w.dim()))?;
        let tw = e.truncation(fl, &w).map_err(|e| e.to_string())?;
        ensure(tw == *w, || format!("truncating W changes it at ({m},{n},{fl})"))?;
    }
    Ok("dims 1, 4, 1, 12".into())
}

fn image_sums_and_maximal_vectors() -> Outcome {
    let f = GenericField::new();
    let mut checked = 0;
    for (m, n, fl) in LAYER_GRID {
        let ctx = RepContext::new(&f, m, n).map_err(|e| e.to_string())?;
        let e = Engine::new(&ctx);
        ensure(e.image_sum_check(fl).map_err(|e| e.to_string())?, || format!("image sum differs at ({m},{n},{fl})"))?;
        for lambda in pi_f(n, fl, m).map_err(|e| e.to_string())?.members {
            if lambda.size() != n - 2 * fl {
                continue;
            }
            let z = e.z_vector(fl, &lambda, None).map_err(|e| format!("z for {lambda} at ({m},{n},{fl}): {e}"))?;
            let span = e.cyclic_bmw_span(&z.vector).map_err(|e| e.to_string())?;
            let max = e.maximal_vectors(&lambda.weight(m).unwrap()).map_err(|e| e.to_string())?;
            ensure(span == max, || format!("cyclic span differs from maximal vectors for {lambda} at ({m},{n},{fl})"))?;
            if (m, n, fl) == (2, 3, 1) {
                ensure(max.dim() == 3, || format!("maximal vectors of weight (1) at (2,3,1) have dim {}", max.dim()))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} weights"))
}

fn harmonic_layers() -> Outcome {
    let f = GenericField::new();
    let mut grid: Vec<(usize, usize, usize)> = LAYER_GRID.to_vec();
    grid.push((2, 3, 0));
    for (m, n, fl) in grid {
        let ctx = RepContext::new(&f, m, n).map_err(|e| e.to_string())?;
        let e = Engine::new(&ctx);
        let ht = e.harmonic_tensors(fl).map_err(|e| e.to_string())?.dim();
        let w = e.bmw_module(fl).map_err(|e| e.to_string())?.dim();
        let next = e.bmw_module(fl + 1).map_err(|e| e.to_string())?.dim();
        ensure(ht == w - next, || format!("dim HT = {ht} but {w} - {next} at ({m},{n},{fl})"))?;
        if (m, n, fl) == (2, 3, 0) {
            ensure(ht == 52, || format!("dim HT at (2,3,0) is {ht}, expected 52"))?;
        }
    }
    Ok("including 52 = 64 - 12 at (2,3,0)".into())
}

fn hom_vanishing() -> Outcome {
    let f = GenericField::new();
    for (m, n, fl) in LAYER_GRID {
        let ctx = RepContext::new(&f, m, n).map_err(|e| e.to_string())?;
        let r = Engine::new(&ctx).duality_report(fl).map_err(|e| e.to_string())?;
        ensure(r.hom_vanishing, || format!("nonzero intertwiner at ({m},{n},{fl})"))?;
    }
    Ok("4 points".into())
}

fn surjectivity() -> Outcome {
    let f = GenericField::new();
    let expected = [(1, 1), (1, 1), (2, 2), (5, 5)];
    for ((m, n, fl), want) in LAYER_GRID.into_iter().zip(expected) {
        let ctx = RepContext::new(&f, m, n).map_err(|e| e.to_string())?;
        let r = Engine::new(&ctx).duality_report(fl).map_err(|e| e.to_string())?;
        let got = (r.dim_image_phi_f, r.dim_commutant_quotient);
        ensure(r.surjective && got == want, || format!("({m},{n},{fl}): (image, commutant) = {got:?}, expected {want:?}"))?;
    }
    Ok("(1,1) (1,1) (2,2) (5,5)".into())
}

/// Every dimension from the layer checks at one grid point.
struct LayerDims {
    m: usize,
    n: usize,
    f: usize,
    with_report: bool,
}

impl FieldTask for LayerDims {
    type Output = Result<Vec<usize>, String>;

    fn run<F: Field>(self, field: &F) -> Self::Output {
        let (m, n, fl) = (self.m, self.n, self.f);
        let ctx = RepContext::new(field, m, n).map_err(|e| e.to_string())?;
        let e = Engine::new(&ctx);
        let err = |e: bmw_core::schur_weyl::SchurWeylError| e.to_string();
        let w = e.bmw_module(fl).map_err(err)?;
        let t = e.truncation(fl, &Subspace::full(field, ctx.dim())).map_err(err)?;
        ensure(t == *w, || format!("truncation differs from W at ({m},{n},{fl}) over {}", field.spec()))?;
        let mut dims = vec![w.dim(), t.dim()];
        for layer in 0..=n / 2 {
            let ht = e.harmonic_tensors(layer).map_err(err)?.dim();
            let here = e.bmw_module(layer).map_err(err)?.dim();
            let next = e.bmw_module(layer + 1).map_err(err)?.dim();
            ensure(ht == here - next, || format!("HT identity fails at ({m},{n},{layer}) over {}", field.spec()))?;
            dims.extend([ht, here]);
        }
        if self.with_report {
            let r = e.duality_report(fl).map_err(err)?;
            ensure(r.surjective && r.truncation_match && r.hom_vanishing, || format!("verdicts fail at ({m},{n},{fl}) over {}", field.spec()))?;
            dims.extend([
                r.dim_algebra,
                r.dim_ideal,
                r.dim_w,
                r.dim_quotient,
                r.dim_ht,
                r.dim_image_phi_f,
                r.dim_commutant_quotient,
            ]);
            for lambda in pi_f(n, fl, m).map_err(err)?.members {
                let max = e.maximal_vectors(&lambda.weight(m).unwrap()).map_err(err)?;
                dims.push(max.dim());
            }
        }
        Ok(dims)
    }
}

fn field_independence() -> Outcome {
    let specs = common::all_field_specs();
    let mut points = 0;
    for (m, n, fl) in LAYER_GRID {
        let mut reference: Option<(FieldSpec, Vec<usize>)> = None;
        for spec in &specs {
            let dims = spec.dispatch(LayerDims { m, n, f: fl, with_report: true }).map_err(|e| e.to_string())??;
            match &reference {
                None => reference = Some((*spec, dims)),
                Some((first, want)) => ensure(*want == dims, || format!("({m},{n},{fl}): {first} gives {want:?}, {spec} gives {dims:?}"))?,
            }
            points += 1;
        }
    }
    // the larger point, on specialized fields only
    for fl in 1..=2 {
        let mut reference: Option<Vec<usize>> = None;
        for spec in specs.iter().filter(|s| !s.is_generic_rational()) {
            let dims = spec.dispatch(LayerDims { m: 2, n: 4, f: fl, with_report: false }).map_err(|e| e.to_string())??;
            match &reference {
                None => reference = Some(dims),
                Some(want) => ensure(*want == dims, || format!("(2,4,{fl}): {want:?} vs {dims:?} over {spec}"))?,
            }
            points += 1;
        }
    }
    Ok(format!("{points} (point, field) pairs over {} fields", specs.len()))
}

fn parser_round_trip() -> Outcome {
    let mut runner = TestRunner::new_with_rng(Config::default(), TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let strategy = common::tangle();
    for k in 0..200 {
        let e: TangleExpr = strategy.new_tree(&mut runner).map_err(|e| e.to_string())?.current();
        let text = e.to_string();
        let back = parse(&text).map_err(|err| format!("case {k}: {text:?} does not parse: {err}"))?;
        ensure(back == e, || format!("case {k}: {text:?} reparses differently"))?;
    }
    let bad = ["U ; X", "X ; A", "I * X ; X", "A * A ; U", "(X ; U) * I ; X", "X + I^2 ; U * I", "I - X"];
    for text in bad {
        match parse(text) {
            Err(err @ TangleError::Arity { pos: Some(_), .. }) | Err(err @ TangleError::SumArity { .. }) => {
                ensure(err.position().is_some(), || format!("{text:?}: error without position"))?;
            }
            other => return Err(format!("{text:?}: expected an arity error, got {other:?}")),
        }
    }
    Ok(format!("200 random expressions, {} arity errors", bad.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("BMW relations on V^n", bmw_relation_suite),
        ("tangle relations under the functor", tangle_relation_suite),
        ("bending maps are mutually inverse", bending_maps_are_inverse),
        ("quantum group commutes, alpha trivial", uq_commutation_and_alpha),
        ("closure dimensions (faithfulness)", faithfulness_dimensions),
        ("truncation equals W_f", truncation_equals_layer),
        ("image sums and maximal vectors", image_sums_and_maximal_vectors),
        ("harmonic layer dimensions", harmonic_layers),
        ("no maps from W_f to the quotient", hom_vanishing),
        ("surjectivity onto the commutant", surjectivity),
        ("field independence", field_independence),
        ("parser round trip and arity positions", parser_round_trip),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail}; {secs:.1}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
