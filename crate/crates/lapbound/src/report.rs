//! Tabular output of catalog results.
//!
//! Column order is fixed: `graph_id, n, m, bound_id, param, applicable, lhs,
//! rhs, margin, verdict, predicted_equality, agreement`. Reals are written
//! as shortest round-trip decimals; missing values are empty cells in CSV
//! and `null` in JSON.

use std::io::Write;

use lapbound_core::{BoundResult, Graph, Param};
use serde::Serialize;

use crate::error::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A bound parameter as it appears in reports: `k` stays an integer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    K(u32),
    Alpha(f64),
}

impl ParamValue {
    pub fn of(p: Param) -> Option<Self> {
        match p {
            Param::None => None,
            Param::Alpha(a) => Some(Self::Alpha(a)),
            Param::K(k) => Some(Self::K(k)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub bound_id: &'static str,
    pub param: Option<ParamValue>,
    pub applicable: bool,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub margin: Option<f64>,
    pub verdict: &'static str,
    pub predicted_equality: bool,
    pub agreement: bool,
}

impl Row {
    pub fn new(graph_id: &str, g: &Graph, r: &BoundResult) -> Self {
        Self {
            graph_id: graph_id.to_string(),
            n: g.n(),
            m: g.m(),
            bound_id: r.bound.as_str(),
            param: ParamValue::of(r.param),
            applicable: r.applicable,
            lhs: r.lhs,
            rhs: r.rhs,
            margin: r.margin,
            verdict: r.verdict.as_str(),
            predicted_equality: r.predicted_equality,
            agreement: r.agreement,
        }
    }
}

pub fn rows(graph_id: &str, g: &Graph, results: &[BoundResult]) -> Vec<Row> {
    results.iter().map(|r| Row::new(graph_id, g, r)).collect()
}

/// Writes any serializable records as CSV (with header) or a JSON array.
pub fn write_records<T: Serialize>(
    records: &[T],
    format: Format,
    out: &mut dyn Write,
) -> Result<(), HarnessError> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, records)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Header-only CSV is not produced for an empty table; emit it explicitly.
pub const CSV_HEADER: &str =
    "graph_id,n,m,bound_id,param,applicable,lhs,rhs,margin,verdict,predicted_equality,agreement";

pub fn write_rows(rows: &[Row], format: Format, out: &mut dyn Write) -> Result<(), HarnessError> {
    if rows.is_empty() && format == Format::Csv {
        writeln!(out, "{CSV_HEADER}")?;
        return Ok(());
    }
    write_records(rows, format, out)
}
