//! The `bmw` command-line tool: tangle evaluation, relation suites,
//! dimension tables and duality verdicts over grids of `(m, n)` and several
//! coefficient fields, with an on-disk subspace cache.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 for usage or configuration errors.

pub mod args;
pub mod cache;
pub mod config;
pub mod jobs;
pub mod output;

use std::io::Write;
use std::time::Instant;

use bmw_core::rep::RepContext;
use bmw_core::scalars::{Field, FieldTask};
use bmw_core::schur_weyl::{NoCache, SubspaceCache};
use bmw_core::tangles::{parse, TangleError, TangleExpr};
use serde::Serialize;

use args::{Cli, Command, EvalArgs, GridArgs, OutFormat};
use cache::FileCache;
use config::{JobConfig, GENERIC_GUARD};
use jobs::{run_jobs, PointWork};
use output::{consistency, write_table, Envelope, Row, RunStats, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_FAILED,
        }
    }
}

/// Runs one invocation, writing results to `out` and diagnostics to `err`,
/// and returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Eval(a) => eval(&a, out),
        Command::Check(a) => {
            let suite = a.suite;
            grid_command("check", &a.grid, &jobs::Check { suite }, out, err)
        }
        Command::Dims(a) => grid_command("dims", &a, &jobs::Dims { f: a.f }, out, err),
        Command::Duality(a) => {
            if a.f == Some(0) {
                Err(CliError::Usage("duality needs f >= 1".into()))
            } else {
                grid_command("duality", &a, &jobs::Duality { f: a.f }, out, err)
            }
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn grid_command<W: PointWork>(
    command: &'static str,
    args: &GridArgs,
    work: &W,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError>
where
    W::Row: RowVerdict,
{
    let config = JobConfig::from_args(args)?;
    if command == "duality" {
        if let Some(f) = config.f {
            if let Some(&(_, n)) = config.points.iter().find(|&&(_, n)| 2 * f > n) {
                return Err(CliError::Usage(format!("duality needs 2f <= n, got f = {f}, n = {n}")));
            }
        }
    }
    let file_cache = match &args.cache {
        Some(dir) => Some(
            FileCache::open(dir).map_err(|e| CliError::Usage(format!("cannot use cache dir {}: {e}", dir.display())))?,
        ),
        None => None,
    };
    let cache: &dyn SubspaceCache = match &file_cache {
        Some(c) => c,
        None => &NoCache,
    };

    let mut notes = Vec::new();
    let mut refused = false;
    let mut jobs_list = Vec::new();
    for &(m, n) in &config.points {
        for &field in &config.fields {
            if config.refused(m, n, field) {
                refused = true;
                notes.push(format!(
                    "refused (m,n)=({m},{n}) over {field}: (2m)^n exceeds {GENERIC_GUARD}; pass --force-generic to run it"
                ));
            } else {
                jobs_list.push((m, n, field));
            }
        }
    }

    let start = Instant::now();
    let outcomes = run_jobs(work, &jobs_list, cache);
    let mut results = Vec::new();
    let mut failed = false;
    let mut stats = Vec::new();
    for o in outcomes {
        match o.result {
            Ok(rows) => results.extend(rows),
            Err(e) => {
                failed = true;
                notes.push(format!("(m,n)=({},{}) over {} failed: {e}", o.m, o.n, o.field));
            }
        }
        stats.push(o.stats);
    }
    for r in &results {
        if !r.passed() {
            failed = true;
        }
        if let Some(note) = r.remark() {
            notes.push(note);
        }
    }
    let consistency = consistency(&results);
    failed |= !consistency.fields_agree;

    let run = (!args.deterministic).then(|| RunStats {
        wall_seconds: start.elapsed().as_secs_f64(),
        cache_hits: stats.iter().map(|s| s.cache_hits).sum(),
        warnings: file_cache.as_ref().map(FileCache::warnings).unwrap_or_default(),
        jobs: stats,
    });
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION,
        tool: env!("CARGO_PKG_NAME"),
        tool_version: env!("CARGO_PKG_VERSION"),
        command,
        config,
        results,
        consistency,
        notes,
        run,
    };
    envelope.render(args.out, out, err)?;
    Ok(if failed {
        EXIT_FAILED
    } else if refused {
        EXIT_USAGE
    } else {
        EXIT_OK
    })
}

/// Whether a row passes, plus observations that do not decide the exit code.
trait RowVerdict: Row {
    fn passed(&self) -> bool {
        true
    }

    fn remark(&self) -> Option<String> {
        None
    }
}

impl RowVerdict for jobs::DimsRow {}

impl RowVerdict for jobs::CheckRow {
    fn passed(&self) -> bool {
        self.holds
    }
}

impl RowVerdict for jobs::DualityRow {
    fn passed(&self) -> bool {
        self.surjective
    }

    fn remark(&self) -> Option<String> {
        let at = format!("(m,n,f)=({},{},{}) over {}", self.m, self.n, self.f, self.field);
        match (self.truncation_match, self.hom_vanishing) {
            (true, true) => None,
            (false, _) => Some(format!("{at}: truncation does not reproduce W_f")),
            (true, false) => Some(format!("{at}: nonzero module maps from W_f to the quotient")),
        }
    }
}

#[derive(Serialize)]
struct EvalOutput {
    m: usize,
    field: String,
    expr: String,
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, String)>,
}

struct EvalTask<'e> {
    m: usize,
    expr: &'e TangleExpr,
}

impl FieldTask for EvalTask<'_> {
    type Output = Result<(usize, usize, Vec<(usize, usize, String)>), String>;

    fn run<F: Field>(self, field: &F) -> Self::Output {
        let ctx = RepContext::new(field, self.m, 1).map_err(|e| e.to_string())?;
        let mat = ctx.eval(self.expr).map_err(|e| e.to_string())?;
        let mut entries: Vec<_> = mat.triples().map(|(i, j, v)| (i, j, field.to_text(v))).collect();
        entries.sort_by_key(|&(i, j, _)| (i, j));
        Ok((mat.rows(), mat.cols(), entries))
    }
}

/// Largest matrix printed densely by `eval`.
const DENSE_LIMIT: usize = 16;

fn eval(a: &EvalArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.m == 0 {
        return Err(CliError::Usage("m must be at least 1".into()));
    }
    let expr = parse(&a.expr).map_err(|e| CliError::Usage(describe_parse_error(&a.expr, &e)))?;
    let (rows, cols, entries) = a
        .field
        .dispatch(EvalTask { m: a.m, expr: &expr })
        .map_err(|e| CliError::Usage(e.to_string()))?
        .map_err(CliError::Usage)?;
    match a.out {
        OutFormat::Json => {
            let o = EvalOutput { m: a.m, field: a.field.to_string(), expr: expr.to_string(), rows, cols, entries };
            serde_json::to_writer_pretty(&mut *out, &o).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        OutFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["row", "col", "value"]).map_err(std::io::Error::from)?;
            for (i, j, v) in &entries {
                w.write_record([i.to_string(), j.to_string(), v.clone()]).map_err(std::io::Error::from)?;
            }
            w.flush()?;
        }
        OutFormat::Table if rows <= DENSE_LIMIT && cols <= DENSE_LIMIT => {
            let mut dense = vec![vec![String::from("0"); cols]; rows];
            for (i, j, v) in entries {
                dense[i][j] = v;
            }
            let width = dense.iter().flatten().map(String::len).max().unwrap_or(1);
            writeln!(out, "{rows}x{cols} over {}", a.field)?;
            for row in dense {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                writeln!(out, "[ {} ]", cells.join("  "))?;
            }
        }
        OutFormat::Table => {
            writeln!(out, "{rows}x{cols} over {}, {} nonzero entries", a.field, entries.len())?;
            let body: Vec<Vec<String>> =
                entries.into_iter().map(|(i, j, v)| vec![i.to_string(), j.to_string(), v]).collect();
            write_table(out, &["row", "col", "value"], &body)?;
        }
    }
    Ok(EXIT_OK)
}

fn describe_parse_error(text: &str, e: &TangleError) -> String {
    match e.position() {
        Some(p) => format!("{e}\n  {text}\n  {:>width$}", "^", width = p + 1),
        None => e.to_string(),
    }
}
