use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context};
use clap::ValueEnum;
use fibpart_core::{BigInt, ValueTable};
use serde::Serialize;

/// How rows and scalars are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Space-separated rows.
    Pretty,
    /// `t,i,value` lines, no header.
    Csv,
    /// One object with `kind`, `max_row` and `entries`.
    Json,
    /// `n a(n)` lines, rows read left to right, `n` from 1.
    Bfile,
}

#[derive(Serialize)]
struct JsonEntry {
    t: usize,
    i: usize,
    value: String,
}

#[derive(Serialize)]
struct JsonRows<'a> {
    kind: &'a str,
    max_row: i64,
    entries: Vec<JsonEntry>,
}

/// Renders ragged rows whose entries are indexed from 0.
pub fn render_rows(
    kind: &str,
    rows: &[Vec<BigInt>],
    format: OutputFormat,
) -> anyhow::Result<String> {
    let mut out = String::new();
    match format {
        OutputFormat::Pretty => {
            for row in rows {
                let line: Vec<String> = row.iter().map(BigInt::to_string).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(Vec::new());
            for (t, row) in rows.iter().enumerate() {
                for (i, v) in row.iter().enumerate() {
                    w.write_record([t.to_string(), i.to_string(), v.to_string()])?;
                }
            }
            out = String::from_utf8(w.into_inner()?)?;
        }
        OutputFormat::Json => {
            let entries = rows
                .iter()
                .enumerate()
                .flat_map(|(t, row)| {
                    row.iter().enumerate().map(move |(i, v)| JsonEntry {
                        t,
                        i,
                        value: v.to_string(),
                    })
                })
                .collect();
            let doc = JsonRows {
                kind,
                max_row: rows.len() as i64 - 1,
                entries,
            };
            out = serde_json::to_string_pretty(&doc)?;
            out.push('\n');
        }
        OutputFormat::Bfile => {
            for (n, v) in rows.iter().flatten().enumerate() {
                writeln!(out, "{} {v}", n + 1)?;
            }
        }
    }
    Ok(out)
}

/// Renders every stored row of a triangle.
pub fn render_triangle(tbl: &ValueTable, format: OutputFormat) -> anyhow::Result<String> {
    let rows: Vec<Vec<BigInt>> = tbl.rows().map(|(_, row)| row.to_vec()).collect();
    render_rows(&tbl.kind().to_string(), &rows, format)
}

/// Renders a single value `a(n)`.
pub fn render_scalar(
    kind: &str,
    n: u64,
    value: &BigInt,
    format: OutputFormat,
) -> anyhow::Result<String> {
    Ok(match format {
        OutputFormat::Pretty => format!("{value}\n"),
        OutputFormat::Csv => format!("{n},{value}\n"),
        OutputFormat::Bfile => format!("{n} {value}\n"),
        OutputFormat::Json => {
            let doc = serde_json::json!({ "kind": kind, "n": n, "value": value.to_string() });
            format!("{}\n", serde_json::to_string_pretty(&doc)?)
        }
    })
}

/// Reads `t,i,value` lines back into rows. Entries must arrive in row-major
/// order without gaps.
pub fn parse_csv(text: &str) -> anyhow::Result<Vec<Vec<BigInt>>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(text.as_bytes());
    for (line, record) in reader.records().enumerate() {
        let record = record?;
        let [t, i, v] = [0, 1, 2].map(|k| record.get(k).unwrap_or_default());
        let t: usize = t
            .parse()
            .with_context(|| format!("line {}: bad row index", line + 1))?;
        let i: usize = i
            .parse()
            .with_context(|| format!("line {}: bad entry index", line + 1))?;
        let v: BigInt = v
            .parse()
            .map_err(|e| anyhow!("line {}: bad value: {e}", line + 1))?;
        if t == rows.len() {
            rows.push(Vec::new());
        }
        let last = rows.len().checked_sub(1);
        match rows.last_mut() {
            Some(row) if last == Some(t) && row.len() == i => row.push(v),
            _ => bail!("line {}: entry ({i},{t}) out of order", line + 1),
        }
    }
    Ok(rows)
}
