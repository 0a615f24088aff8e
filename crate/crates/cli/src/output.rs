//! Report envelope and its JSON, CSV and table renderings.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use crate::args::OutFormat;
use crate::config::JobConfig;
use crate::jobs::{CheckRow, DimsRow, DualityRow, JobStats};

pub const SCHEMA_VERSION: u32 = 1;

/// `(m, n, f)`, the field name, and named dimensions.
pub type PointDims = ((usize, usize, usize), String, Vec<(&'static str, usize)>);

/// A result row with a fixed column order.
pub trait Row: Serialize {
    fn header() -> &'static [&'static str];
    fn cells(&self) -> Vec<String>;

    /// `(m, n, f)` and the field-independent dimensions, for cross-field
    /// comparison. Rows without any are not compared.
    fn dims(&self) -> Option<PointDims> {
        None
    }
}

impl Row for DimsRow {
    fn header() -> &'static [&'static str] {
        &["m", "n", "f", "field", "dim_total", "dim_W", "dim_quotient", "dim_HT"]
    }

    fn cells(&self) -> Vec<String> {
        let r = self;
        vec![
            r.m.to_string(),
            r.n.to_string(),
            r.f.to_string(),
            r.field.clone(),
            r.dim_total.to_string(),
            r.dim_w.to_string(),
            r.dim_quotient.to_string(),
            r.dim_ht.to_string(),
        ]
    }

    fn dims(&self) -> Option<PointDims> {
        let d = vec![("dim_W", self.dim_w), ("dim_quotient", self.dim_quotient), ("dim_HT", self.dim_ht)];
        Some(((self.m, self.n, self.f), self.field.clone(), d))
    }
}

impl Row for DualityRow {
    fn header() -> &'static [&'static str] {
        &[
            "m",
            "n",
            "f",
            "field",
            "dim_total",
            "dim_algebra",
            "dim_ideal",
            "dim_W",
            "dim_quotient",
            "dim_HT",
            "dim_image_phi_f",
            "dim_commutant_quotient",
            "surjective",
            "truncation_match",
            "hom_vanishing",
        ]
    }

    fn cells(&self) -> Vec<String> {
        let r = self;
        vec![
            r.m.to_string(),
            r.n.to_string(),
            r.f.to_string(),
            r.field.clone(),
            r.dim_total.to_string(),
            r.dim_algebra.to_string(),
            r.dim_ideal.to_string(),
            r.dim_w.to_string(),
            r.dim_quotient.to_string(),
            r.dim_ht.to_string(),
            r.dim_image_phi_f.to_string(),
            r.dim_commutant_quotient.to_string(),
            r.surjective.to_string(),
            r.truncation_match.to_string(),
            r.hom_vanishing.to_string(),
        ]
    }

    fn dims(&self) -> Option<PointDims> {
        let d = vec![
            ("dim_algebra", self.dim_algebra),
            ("dim_ideal", self.dim_ideal),
            ("dim_W", self.dim_w),
            ("dim_quotient", self.dim_quotient),
            ("dim_HT", self.dim_ht),
            ("dim_image_phi_f", self.dim_image_phi_f),
            ("dim_commutant_quotient", self.dim_commutant_quotient),
        ];
        Some(((self.m, self.n, self.f), self.field.clone(), d))
    }
}

impl Row for CheckRow {
    fn header() -> &'static [&'static str] {
        &["suite", "m", "n", "field", "family", "instances", "failures", "holds"]
    }

    fn cells(&self) -> Vec<String> {
        let r = self;
        vec![
            r.suite.to_string(),
            r.m.to_string(),
            r.n.to_string(),
            r.field.clone(),
            r.family.to_string(),
            r.instances.to_string(),
            r.failures.to_string(),
            r.holds.to_string(),
        ]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FieldValue {
    pub field: String,
    pub value: usize,
}

/// One quantity that differs between fields at one point.
#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub m: usize,
    pub n: usize,
    pub f: usize,
    pub quantity: &'static str,
    pub values: Vec<FieldValue>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Consistency {
    pub fields_agree: bool,
    pub mismatches: Vec<Mismatch>,
}

/// Compares every field-independent dimension across fields.
pub fn consistency<R: Row>(rows: &[R]) -> Consistency {
    let mut by_point: BTreeMap<(usize, usize, usize), BTreeMap<&'static str, Vec<FieldValue>>> = BTreeMap::new();
    for (point, field, dims) in rows.iter().filter_map(Row::dims) {
        let entry = by_point.entry(point).or_default();
        for (name, value) in dims {
            entry.entry(name).or_default().push(FieldValue { field: field.clone(), value });
        }
    }
    let mut mismatches = Vec::new();
    for ((m, n, f), quantities) in by_point {
        for (quantity, values) in quantities {
            if values.windows(2).any(|w| w[0].value != w[1].value) {
                mismatches.push(Mismatch { m, n, f, quantity, values });
            }
        }
    }
    Consistency { fields_agree: mismatches.is_empty(), mismatches }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunStats {
    pub wall_seconds: f64,
    pub cache_hits: usize,
    pub warnings: Vec<String>,
    pub jobs: Vec<JobStats>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Envelope<R> {
    pub schema_version: u32,
    pub tool: &'static str,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub config: JobConfig,
    pub results: Vec<R>,
    pub consistency: Consistency,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub run: Option<RunStats>,
}

impl<R: Row> Envelope<R> {
    pub fn render(&self, format: OutFormat, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<()> {
        match format {
            OutFormat::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)?;
                return Ok(());
            }
            OutFormat::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(R::header())?;
                for r in &self.results {
                    w.write_record(r.cells())?;
                }
                w.flush()?;
            }
            OutFormat::Table => {
                let body: Vec<Vec<String>> = self.results.iter().map(Row::cells).collect();
                write_table(out, R::header(), &body)?;
            }
        }
        // outside JSON the side information goes to stderr
        for m in &self.consistency.mismatches {
            let values: Vec<String> = m.values.iter().map(|v| format!("{}={}", v.field, v.value)).collect();
            writeln!(err, "mismatch at (m,n,f)=({},{},{}) in {}: {}", m.m, m.n, m.f, m.quantity, values.join(" "))?;
        }
        for note in &self.notes {
            writeln!(err, "note: {note}")?;
        }
        if let Some(run) = &self.run {
            writeln!(err, "{} jobs in {:.2}s, {} cache hits", run.jobs.len(), run.wall_seconds, run.cache_hits)?;
        }
        Ok(())
    }
}

pub fn write_table(out: &mut dyn Write, header: &[&str], body: &[Vec<String>]) -> std::io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| -> String {
        let padded: Vec<String> = cells.zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        padded.join("  ")
    };
    writeln!(out, "{}", line(&mut header.iter().copied()))?;
    for row in body {
        writeln!(out, "{}", line(&mut row.iter().map(String::as_str)))?;
    }
    Ok(())
}
