//! Per-point work. A job is one `(m, n, field)`; jobs run on the rayon pool
//! and come back in grid order.

use std::time::Instant;

use bmw_core::rep::{bmw_relations, tangle_relations, uq_relations, RepContext};
use bmw_core::scalars::{Field, FieldSpec, FieldTask};
use bmw_core::schur_weyl::{DualityReport, Engine, SubspaceCache};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::Suite;
use crate::output::Row;

#[derive(Clone, Debug, Serialize)]
pub struct DimsRow {
    pub m: usize,
    pub n: usize,
    pub f: usize,
    pub field: String,
    pub dim_total: usize,
    #[serde(rename = "dim_W")]
    pub dim_w: usize,
    pub dim_quotient: usize,
    #[serde(rename = "dim_HT")]
    pub dim_ht: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityRow {
    pub m: usize,
    pub n: usize,
    pub f: usize,
    pub field: String,
    pub dim_total: usize,
    pub dim_algebra: usize,
    pub dim_ideal: usize,
    #[serde(rename = "dim_W")]
    pub dim_w: usize,
    pub dim_quotient: usize,
    #[serde(rename = "dim_HT")]
    pub dim_ht: usize,
    pub dim_image_phi_f: usize,
    pub dim_commutant_quotient: usize,
    pub surjective: bool,
    pub truncation_match: bool,
    pub hom_vanishing: bool,
}

impl From<DualityReport> for DualityRow {
    fn from(r: DualityReport) -> Self {
        Self {
            m: r.m,
            n: r.n,
            f: r.f,
            field: r.field.to_string(),
            dim_total: r.dim_total,
            dim_algebra: r.dim_algebra,
            dim_ideal: r.dim_ideal,
            dim_w: r.dim_w,
            dim_quotient: r.dim_quotient,
            dim_ht: r.dim_ht,
            dim_image_phi_f: r.dim_image_phi_f,
            dim_commutant_quotient: r.dim_commutant_quotient,
            surjective: r.surjective,
            truncation_match: r.truncation_match,
            hom_vanishing: r.hom_vanishing,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub suite: &'static str,
    pub m: usize,
    pub n: usize,
    pub field: String,
    pub family: &'static str,
    pub instances: usize,
    pub failures: usize,
    pub holds: bool,
}

/// What to compute at one point, for any field.
pub trait PointWork: Sync {
    type Row: Row + Send;
    fn compute<F: Field>(&self, engine: &Engine<'_, F>) -> Result<Vec<Self::Row>, String>;
}

/// Layers reported at a point: the requested one, or all of `lo..=n/2`.
fn layers(f: Option<usize>, lo: usize, n: usize) -> Vec<usize> {
    match f {
        Some(f) => vec![f],
        None => (lo..=n / 2).collect(),
    }
}

pub struct Dims {
    pub f: Option<usize>,
}

impl PointWork for Dims {
    type Row = DimsRow;

    fn compute<F: Field>(&self, e: &Engine<'_, F>) -> Result<Vec<DimsRow>, String> {
        let ctx = e.ctx();
        let mut rows = Vec::new();
        for f in layers(self.f, 0, ctx.n()) {
            let dim_w = e.bmw_module(f).map_err(|err| err.to_string())?.dim();
            // past the last layer W_f is zero and so is its harmonic part
            let dim_ht = if 2 * f > ctx.n() { 0 } else { e.harmonic_tensors(f).map_err(|err| err.to_string())?.dim() };
            rows.push(DimsRow {
                m: ctx.m(),
                n: ctx.n(),
                f,
                field: ctx.field().spec().to_string(),
                dim_total: ctx.dim(),
                dim_w,
                dim_quotient: ctx.dim() - dim_w,
                dim_ht,
            });
        }
        Ok(rows)
    }
}

pub struct Duality {
    pub f: Option<usize>,
}

impl PointWork for Duality {
    type Row = DualityRow;

    fn compute<F: Field>(&self, e: &Engine<'_, F>) -> Result<Vec<DualityRow>, String> {
        layers(self.f, 1, e.ctx().n())
            .into_iter()
            .map(|f| e.duality_report(f).map(DualityRow::from).map_err(|err| err.to_string()))
            .collect()
    }
}

pub struct Check {
    pub suite: Suite,
}

impl PointWork for Check {
    type Row = CheckRow;

    fn compute<F: Field>(&self, e: &Engine<'_, F>) -> Result<Vec<CheckRow>, String> {
        let ctx = e.ctx();
        let checks = match self.suite {
            Suite::Relations => bmw_relations(ctx),
            Suite::Tangle => tangle_relations(ctx).map_err(|err| err.to_string())?,
            Suite::UqCommute => uq_relations(ctx),
        };
        Ok(checks
            .into_iter()
            .map(|c| CheckRow {
                suite: self.suite.name(),
                m: ctx.m(),
                n: ctx.n(),
                field: ctx.field().spec().to_string(),
                family: c.family,
                instances: c.instances,
                failures: c.failures,
                holds: c.holds(),
            })
            .collect())
    }
}

struct Task<'w, W> {
    work: &'w W,
    m: usize,
    n: usize,
    cache: &'w dyn SubspaceCache,
}

impl<W: PointWork> FieldTask for Task<'_, W> {
    type Output = Result<(Vec<W::Row>, usize), String>;

    fn run<F: Field>(self, field: &F) -> Self::Output {
        let ctx = RepContext::new(field, self.m, self.n).map_err(|e| e.to_string())?;
        let engine = Engine::with_cache(&ctx, self.cache);
        let rows = self.work.compute(&engine)?;
        Ok((rows, engine.cache_hits()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct JobStats {
    pub m: usize,
    pub n: usize,
    pub field: String,
    pub seconds: f64,
    pub cache_hits: usize,
}

pub struct JobOutcome<R> {
    pub m: usize,
    pub n: usize,
    pub field: FieldSpec,
    pub result: Result<Vec<R>, String>,
    pub stats: JobStats,
}

pub fn run_jobs<W: PointWork>(
    work: &W,
    jobs: &[(usize, usize, FieldSpec)],
    cache: &dyn SubspaceCache,
) -> Vec<JobOutcome<W::Row>> {
    jobs.par_iter()
        .map(|&(m, n, field)| {
            let start = Instant::now();
            let out = field.dispatch(Task { work, m, n, cache }).map_err(|e| e.to_string()).and_then(|r| r);
            let (result, hits) = match out {
                Ok((rows, hits)) => (Ok(rows), hits),
                Err(e) => (Err(e), 0),
            };
            let stats = JobStats { m, n, field: field.to_string(), seconds: start.elapsed().as_secs_f64(), cache_hits: hits };
            JobOutcome { m, n, field, result, stats }
        })
        .collect()
}
