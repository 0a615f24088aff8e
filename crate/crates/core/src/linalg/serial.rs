//! Deterministic text encoding of subspaces and matrices.
//!
//! ```text
//! subspace 1 <field> <ambient> <dim>
//! <col>:<scalar> <col>:<scalar> ...      one line per basis row
//! ```
//!
//! Scalars use the canonical scalar syntax, so equal inputs give identical
//! bytes. Matrices use the same layout with a `matrix` header and
//! `<rows> <cols>`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::mat::Mat;
use super::subspace::Subspace;
use super::vector::SparseVec;
use super::LinalgError;
use crate::scalars::{Field, FieldSpec};

const VERSION: u32 = 1;

fn write_row<F: Field>(field: &F, out: &mut String, v: &SparseVec<F::Elem>) {
    let mut first = true;
    for (c, x) in v.iter() {
        if !first {
            out.push(' ');
        }
        first = false;
        let _ = write!(out, "{c}:{}", field.to_text(x).replace(' ', ""));
    }
    out.push('\n');
}

fn bad(line: usize, msg: impl Into<String>) -> LinalgError {
    LinalgError::Decode { line, msg: msg.into() }
}

fn read_row<F: Field>(field: &F, line_no: usize, line: &str, width: usize) -> Result<SparseVec<F::Elem>, LinalgError> {
    let mut entries = Vec::new();
    for tok in line.split_whitespace() {
        let (c, x) = tok.split_once(':').ok_or_else(|| bad(line_no, "expected col:value"))?;
        let c: usize = c.parse().map_err(|_| bad(line_no, "bad column index"))?;
        if c >= width {
            return Err(bad(line_no, "column index out of range"));
        }
        let x = field.parse(x).map_err(|e| bad(line_no, format!("{e}")))?;
        if entries.last().is_some_and(|&(p, _)| p >= c) || field.is_zero(&x) {
            return Err(bad(line_no, "row is not in canonical form"));
        }
        entries.push((c, x));
    }
    Ok(SparseVec::from_sorted(entries))
}

fn header<'a>(
    lines: &mut impl Iterator<Item = &'a str>,
    kind: &str,
    spec: FieldSpec,
) -> Result<(usize, usize), LinalgError> {
    let head = lines.next().ok_or_else(|| bad(1, "empty input"))?;
    let parts: Vec<&str> = head.split_whitespace().collect();
    if parts.len() != 5 || parts[0] != kind {
        return Err(bad(1, format!("expected `{kind} <version> <field> <a> <b>`")));
    }
    if parts[1] != format!("{VERSION}") {
        return Err(bad(1, "unsupported version"));
    }
    if parts[2] != format!("{spec}") {
        return Err(bad(1, format!("field {} does not match {spec}", parts[2])));
    }
    let a = parts[3].parse().map_err(|_| bad(1, "bad size"))?;
    let b = parts[4].parse().map_err(|_| bad(1, "bad size"))?;
    Ok((a, b))
}

pub fn encode_subspace<F: Field>(field: &F, s: &Subspace<F::Elem>) -> String {
    let mut out = format!("subspace {VERSION} {} {} {}\n", field.spec(), s.ambient_dim(), s.dim());
    for v in s.basis() {
        write_row(field, &mut out, v);
    }
    out
}

/// Inverse of [`encode_subspace`]; the rows must already be in reduced
/// echelon form, which is re-verified.
pub fn decode_subspace<F: Field>(field: &F, text: &str) -> Result<Subspace<F::Elem>, LinalgError> {
    let mut lines = text.lines();
    let (ambient, dim) = header(&mut lines, "subspace", field.spec())?;
    let mut rows = Vec::with_capacity(dim);
    for (k, line) in lines.enumerate() {
        rows.push(read_row(field, k + 2, line, ambient)?);
    }
    if rows.len() != dim {
        return Err(bad(rows.len() + 1, "row count does not match header"));
    }
    let s = Subspace::span(field, ambient, &rows);
    if s.basis() != rows.as_slice() {
        return Err(bad(0, "rows are not a reduced echelon basis"));
    }
    Ok(s)
}

pub fn encode_mat<F: Field>(field: &F, m: &Mat<F::Elem>) -> String {
    let mut out = format!("matrix {VERSION} {} {} {}\n", field.spec(), m.rows(), m.cols());
    for v in m.row_vecs() {
        write_row(field, &mut out, v);
    }
    out
}

pub fn decode_mat<F: Field>(field: &F, text: &str) -> Result<Mat<F::Elem>, LinalgError> {
    let mut lines = text.lines();
    let (rows, cols) = header(&mut lines, "matrix", field.spec())?;
    let data = lines
        .enumerate()
        .map(|(k, line)| read_row(field, k + 2, line, cols))
        .collect::<Result<Vec<_>, _>>()?;
    if data.len() != rows {
        return Err(bad(data.len() + 1, "row count does not match header"));
    }
    Ok(Mat::from_rows(cols, data))
}
