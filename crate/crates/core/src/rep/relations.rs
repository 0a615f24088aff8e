//! Relation suites: the BMW presentation, the tangle relations under the
//! functor, and compatibility with the quantum group.

use alloc::vec::Vec;

use super::{RepContext, RepError};
use crate::linalg::Mat;
use crate::scalars::Field;
use crate::tangles::{dual, kinks, parse, TangleExpr};

/// Outcome of one family of identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub family: &'static str,
    pub instances: usize,
    pub failures: usize,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    out: Vec<RelationCheck>,
}

impl Tally {
    fn record(&mut self, family: &'static str, ok: bool) {
        match self.out.iter_mut().find(|c| c.family == family) {
            Some(c) => {
                c.instances += 1;
                c.failures += usize::from(!ok);
            }
            None => self.out.push(RelationCheck { family, instances: 1, failures: usize::from(!ok) }),
        }
    }

    /// Registers a family with no instances at this size.
    fn touch(&mut self, family: &'static str) {
        if !self.out.iter().any(|c| c.family == family) {
            self.out.push(RelationCheck { family, instances: 0, failures: 0 });
        }
    }
}

fn prod<F: Field>(f: &F, ms: &[&Mat<F::Elem>]) -> Mat<F::Elem> {
    let mut acc = ms[0].clone();
    for m in &ms[1..] {
        acc = acc.mul(f, m);
    }
    acc
}

/// The defining relations of the BMW algebra for `T_i ↦ β'_i`, `E_i ↦ γ'_i`
/// on `V^{⊗n}` with `r = -q^{2m+1}`, as exact matrix identities.
pub fn bmw_relations<F: Field>(ctx: &RepContext<F>) -> Vec<RelationCheck> {
    const FAMILIES: [&str; 10] = [
        "invertibility",
        "skein",
        "idempotent",
        "braid",
        "far commutation",
        "far commutation with E",
        "E E E",
        "T T E",
        "untwisting",
        "E T E",
    ];
    let f = ctx.field();
    let n = ctx.n();
    let mut t = Tally { out: Vec::new() };
    for fam in FAMILIES {
        t.touch(fam);
    }
    if n < 2 {
        return t.out;
    }
    let id = Mat::identity(f, ctx.dim());
    let x = ctx.x();
    let r = ctx.r();
    let r_inv = f.inv(&r).expect("r is a unit");
    let q_diff = f.sub(&f.q(), &f.q_pow(-1));
    let tt: Vec<&Mat<F::Elem>> = (1..n).map(|i| ctx.beta_i(i)).collect();
    let ee: Vec<&Mat<F::Elem>> = (1..n).map(|i| ctx.gamma_i(i)).collect();
    let d = ctx.d();
    let tinv: Vec<Mat<F::Elem>> = (1..n)
        .map(|i| {
            let l = Mat::identity(f, d.pow((i - 1) as u32));
            let rr = Mat::identity(f, d.pow((n - 1 - i) as u32));
            l.kron(f, ctx.beta_inv()).kron(f, &rr)
        })
        .collect();
    for i in 0..n - 1 {
        let (ti, ei) = (tt[i], ee[i]);
        t.record("invertibility", ti.mul(f, &tinv[i]) == id && tinv[i].mul(f, ti) == id);
        t.record("skein", ti.sub(f, &tinv[i]) == id.sub(f, ei).scale(f, &q_diff));
        t.record("idempotent", ei.mul(f, ei) == ei.scale(f, &x));
        let scaled = ei.scale(f, &r_inv);
        t.record("untwisting", ei.mul(f, ti) == scaled && ti.mul(f, ei) == scaled);
    }
    for i in 0..n.saturating_sub(2) {
        let (ti, tj, ei, ej) = (tt[i], tt[i + 1], ee[i], ee[i + 1]);
        t.record("braid", prod(f, &[ti, tj, ti]) == prod(f, &[tj, ti, tj]));
        t.record("E E E", prod(f, &[ei, ej, ei]) == *ei && prod(f, &[ej, ei, ej]) == *ej);
        t.record(
            "T T E",
            prod(f, &[ti, tj, ei]) == ej.mul(f, ei) && prod(f, &[tj, ti, ej]) == ei.mul(f, ej),
        );
        t.record(
            "E T E",
            prod(f, &[ei, tj, ei]) == ei.scale(f, &r) && prod(f, &[ej, ti, ej]) == ej.scale(f, &r),
        );
    }
    for i in 0..n - 1 {
        for j in i + 2..n - 1 {
            t.record("far commutation", tt[i].mul(f, tt[j]) == tt[j].mul(f, tt[i]));
            t.record(
                "far commutation with E",
                ee[i].mul(f, ee[j]) == ee[j].mul(f, ee[i])
                    && tt[i].mul(f, ee[j]) == ee[j].mul(f, tt[i])
                    && ee[i].mul(f, tt[j]) == tt[j].mul(f, ee[i]),
            );
        }
    }
    t.out
}

/// Largest intermediate dimension evaluated by the pivotality samples.
const PIVOTALITY_LIMIT: f64 = 5000.0;

/// Skein relation, closed loop, Reidemeister II and III, the kink pair,
/// the zig-zag identities and pivotality, evaluated by the functor.
///
/// Pivotality samples whose double dual is too wide for `V` are skipped.
pub fn tangle_relations<F: Field>(ctx: &RepContext<F>) -> Result<Vec<RelationCheck>, RepError> {
    let f = ctx.field();
    let mut t = Tally { out: Vec::new() };
    let ev = |text: &str| -> Result<Mat<F::Elem>, RepError> { ctx.eval(&parse(text)?) };
    let same = |a: &str, b: &str| -> Result<bool, RepError> { Ok(ev(a)? == ev(b)?) };

    t.record("skein", same("X - Xi", "[q - q^-1].(I^2 - U ; A)")?);
    let loop_value = ev("A ; U")?;
    t.record("closed loop", loop_value == Mat::diagonal(f, alloc::vec![ctx.x()]));
    t.record("Reidemeister II", same("X ; Xi", "I^2")? && same("Xi ; X", "I^2")?);
    t.record(
        "Reidemeister III",
        same("X * I ; I * X ; X * I", "I * X ; X * I ; I * X")?
            && same("Xi * I ; I * Xi ; Xi * I", "I * Xi ; Xi * I ; I * Xi")?,
    );
    let id = Mat::identity(f, ctx.d());
    let r = ctx.r();
    let r_inv = f.inv(&r).expect("r is a unit");
    let [k1, k2] = kinks();
    let (a, b) = (ctx.eval(&k1)?, ctx.eval(&k2)?);
    let (plus, minus) = (id.scale(f, &r), id.scale(f, &r_inv));
    t.record("kink pair", (a == plus && b == minus) || (a == minus && b == plus));
    t.record("zig-zag", same("A * I ; I * U", "I")? && same("I * A ; U * I", "I")?);
    let samples = ["I", "X", "Xi", "A", "U", "X ; U", "A ; X", "I * A", "U * I", "X * I ; I * Xi"];
    t.touch("pivotality");
    for s in samples {
        let e = parse(s)?;
        let dd = dual(&dual(&e));
        // double duals get wide quickly; skip the ones too large to evaluate here
        if (ctx.d() as f64).powi(dd.width() as i32) > PIVOTALITY_LIMIT {
            continue;
        }
        t.record("pivotality", ctx.eval(&dd)? == ctx.eval(&e)?);
    }
    let d = dual(&TangleExpr::id());
    t.record("dual of identity", ctx.eval(&d)? == id);
    Ok(t.out)
}

/// Every quantum group generator commutes with every `β'_i` and `γ'_i`,
/// `α` spans a trivial module, the `K_i` are diagonal, and
/// `[E_i, F_j] = δ_ij (K_i - K_i^{-1}) / (q_i - q_i^{-1})` holds.
pub fn uq_relations<F: Field>(ctx: &RepContext<F>) -> Vec<RelationCheck> {
    let f = ctx.field();
    let uq = ctx.uq();
    let mut t = Tally { out: Vec::new() };
    t.touch("commutes with BMW generators");
    for g in uq.all() {
        for b in ctx.bmw_generator_list() {
            t.record("commutes with BMW generators", g.mul(f, &b) == b.mul(f, &g));
        }
    }
    let two = ctx.uq_action(2);
    let alpha = ctx.alpha();
    for g in two.e.iter().chain(&two.f) {
        t.record("alpha is killed by E and F", g.apply_row(f, alpha).is_zero());
    }
    for g in &two.k {
        t.record("alpha is fixed by K", g.apply_row(f, alpha) == *alpha);
    }
    for k in uq.k.iter().chain(&uq.k_inv) {
        t.record("K is diagonal", k.triples().all(|(i, j, _)| i == j));
    }
    let m = ctx.m();
    for i in 0..m {
        for j in 0..m {
            // row convention reverses products: [E, F] becomes F E - E F
            let lhs = uq.f[j].mul(f, &uq.e[i]).sub(f, &uq.e[i].mul(f, &uq.f[j]));
            let expected = if i == j {
                let di = if i + 1 == m { 2 } else { 1 };
                let denom = f.sub(&f.q_pow(di), &f.q_pow(-di));
                let c = f.inv(&denom).expect("q is not a root of unity");
                uq.k[i].sub(f, &uq.k_inv[i]).scale(f, &c)
            } else {
                Mat::zeros(ctx.dim(), ctx.dim())
            };
            t.record("E F commutator", lhs == expected);
        }
    }
    t.out
}
