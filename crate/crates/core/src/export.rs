//! Text encodings of triangles.
//!
//! * CSV: one line per row, `n,T(n,0),...,T(n,n)`.
//! * OEIS b-file: one `index value` line per entry, read by rows, with a
//!   configurable starting index.
//! * JSON: an array of rows, each an array of decimal strings.
//!
//! Values are always written as decimal strings so nothing is lost to
//! floating point in downstream tools.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::triangles::{Row, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    BFile,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "bfile" | "b-file" => Ok(Format::BFile),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format `{s}`"))),
        }
    }
}

/// One triangle entry with its value as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub value: String,
}

impl OutputRecord {
    pub fn parse_value(&self) -> Result<BigInt> {
        parse_int(&self.value)
    }
}

pub fn records(triangle: &Triangle) -> Vec<OutputRecord> {
    triangle
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(n, row)| {
            row.iter().enumerate().map(move |(k, v)| OutputRecord {
                family: triangle.family(),
                n,
                k,
                value: v.to_string(),
            })
        })
        .collect()
}

pub fn encode(triangle: &Triangle, format: Format, bfile_offset: u64) -> String {
    match format {
        Format::Csv => to_csv(triangle.rows()),
        Format::BFile => to_bfile(triangle.rows(), bfile_offset),
        Format::Json => to_json(triangle.rows()),
    }
}

pub fn to_csv(rows: &[Row]) -> String {
    let mut out = String::new();
    for (n, row) in rows.iter().enumerate() {
        write!(out, "{n}").unwrap();
        for v in row {
            write!(out, ",{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn to_bfile(rows: &[Row], offset: u64) -> String {
    let mut out = String::new();
    for (i, v) in rows.iter().flatten().enumerate() {
        writeln!(out, "{} {v}", offset + i as u64).unwrap();
    }
    out
}

pub fn to_json(rows: &[Row]) -> String {
    let value = Value::Array(
        rows.iter()
            .map(|row| Value::Array(row.iter().map(|v| Value::String(v.to_string())).collect()))
            .collect(),
    );
    let mut out = serde_json::to_string(&value).expect("string arrays always serialize");
    out.push('\n');
    out
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim().parse().map_err(|_| Error::Parse(format!("`{s}` is not an integer")))
}

fn check_shape(rows: &[Row]) -> Result<()> {
    match rows.iter().enumerate().find(|(n, r)| r.len() != n + 1) {
        Some((n, r)) => Err(Error::Parse(format!("row {n} has {} entries", r.len()))),
        None => Ok(()),
    }
}

pub fn from_csv(text: &str) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().filter(|l| !l.trim().is_empty()).enumerate() {
        let mut fields = line.split(',');
        let n: usize = fields
            .next()
            .and_then(|f| f.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("line {}: missing row index", i + 1)))?;
        if n != i {
            return Err(Error::Parse(format!("line {}: expected row {i}, found {n}", i + 1)));
        }
        rows.push(fields.map(parse_int).collect::<Result<Row>>()?);
    }
    check_shape(&rows)?;
    Ok(rows)
}

/// Reads `index value` lines (comments starting with `#` are skipped) and
/// refolds them into rows of length 1, 2, 3, ...
pub fn from_bfile(text: &str, offset: u64) -> Result<Vec<Row>> {
    let mut rows: Vec<Row> = Vec::new();
    let lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    for (expected, line) in (offset..).zip(lines) {
        let (index, value) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::Parse(format!("malformed b-file line `{line}`")))?;
        let index: u64 = index.parse().map_err(|_| Error::Parse(format!("bad index `{index}`")))?;
        if index != expected {
            return Err(Error::Parse(format!("expected index {expected}, found {index}")));
        }
        let value = parse_int(value)?;
        let n = rows.len();
        match rows.last_mut() {
            Some(row) if row.len() < n => row.push(value),
            _ => rows.push(vec![value]),
        }
    }
    check_shape(&rows)?;
    Ok(rows)
}

pub fn from_json(text: &str) -> Result<Vec<Row>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let bad = || Error::Parse("expected an array of arrays of decimal strings".into());
    let rows = value
        .as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|v| v.as_str().ok_or_else(bad).and_then(parse_int))
                .collect::<Result<Row>>()
        })
        .collect::<Result<Vec<Row>>>()?;
    check_shape(&rows)?;
    Ok(rows)
}

pub fn decode(text: &str, format: Format, bfile_offset: u64) -> Result<Vec<Row>> {
    match format {
        Format::Csv => from_csv(text),
        Format::BFile => from_bfile(text, bfile_offset),
        Format::Json => from_json(text),
    }
}
