//! Validated job configuration.

use bmw_core::scalars::FieldSpec;
use serde::Serialize;

use crate::args::GridArgs;
use crate::CliError;

/// Largest `(2m)^n` run over `Q(q)` without `--force-generic`.
pub const GENERIC_GUARD: u64 = 1296;

#[derive(Clone, Debug, Serialize)]
pub struct JobConfig {
    pub points: Vec<(usize, usize)>,
    pub f: Option<usize>,
    #[serde(serialize_with = "field_names")]
    pub fields: Vec<FieldSpec>,
    pub force_generic: bool,
    pub cache: bool,
}

fn field_names<S: serde::Serializer>(fields: &[FieldSpec], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(fields.iter().map(ToString::to_string))
}

fn parse_range(text: &str, what: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("bad {what} range {text:?}; expected a..b or a single number"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let v = text.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

/// Parses `"m1..m2,n1..n2"` into the list of points, `m` outermost.
pub fn parse_grid(text: &str) -> Result<Vec<(usize, usize)>, CliError> {
    let (ms, ns) = text
        .split_once(',')
        .ok_or_else(|| CliError::Usage(format!("bad grid {text:?}; expected \"m1..m2,n1..n2\"")))?;
    let (m1, m2) = parse_range(ms, "m")?;
    let (n1, n2) = parse_range(ns, "n")?;
    Ok((m1..=m2).flat_map(|m| (n1..=n2).map(move |n| (m, n))).collect())
}

impl JobConfig {
    pub fn from_args(args: &GridArgs) -> Result<Self, CliError> {
        let points = match (&args.grid, args.m, args.n) {
            (Some(g), _, _) => parse_grid(g)?,
            (None, Some(m), Some(n)) => vec![(m, n)],
            _ => return Err(CliError::Usage("give --m and --n, or --grid".into())),
        };
        for &(m, n) in &points {
            if m == 0 {
                return Err(CliError::Usage("m must be at least 1".into()));
            }
            if n < 2 {
                return Err(CliError::Usage(format!("n = {n} is below 2")));
            }
            if let Some(f) = args.f {
                if f > n / 2 + 1 {
                    return Err(CliError::Usage(format!("f = {f} exceeds {} for n = {n}", n / 2 + 1)));
                }
            }
        }
        let mut fields = args.fields.clone();
        if fields.is_empty() {
            fields.push(FieldSpec::GenericQ0);
        }
        let mut seen = Vec::new();
        fields.retain(|f| {
            let fresh = !seen.contains(f);
            seen.push(*f);
            fresh
        });
        Ok(Self { points, f: args.f, fields, force_generic: args.force_generic, cache: args.cache.is_some() })
    }

    /// Whether the size guard refuses `(m, n)` over `field`.
    pub fn refused(&self, m: usize, n: usize, field: FieldSpec) -> bool {
        field.is_generic_rational()
            && !self.force_generic
            && (2 * m as u64).checked_pow(n as u32).is_none_or(|size| size > GENERIC_GUARD)
    }
}
