//! The `.bm` matroid file format.
//!
//! ```text
//! # optional comment lines anywhere
//! rank R
//! size N
//! name X        (optional, before D)
//! D
//! <R bit rows of width N-R>
//! ```

use std::fmt;

use matx_core::{BinaryMatroid, BitMatrix};

/// Parse failure with 1-based line and column.
#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        message: message.into(),
    }
}

/// Parses `.bm` text into a matroid with labels 1..size.
pub fn parse_matroid(text: &str) -> Result<BinaryMatroid, ParseError> {
    let mut rank: Option<usize> = None;
    let mut size: Option<usize> = None;
    let mut name: Option<String> = None;
    let mut rows: Vec<String> = Vec::new();
    let mut in_d = false;
    let mut d_line = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if in_d {
            if let Some(pos) = line.find(|c| c != '0' && c != '1') {
                return Err(err(lineno, pos + 1, format!("invalid bit row `{line}`")));
            }
            rows.push(line.to_owned());
            continue;
        }
        if let Some(v) = line.strip_prefix("rank ") {
            rank = Some(v.trim().parse().map_err(|_| {
                err(lineno, 6, format!("invalid rank `{}`", v.trim()))
            })?);
        } else if let Some(v) = line.strip_prefix("size ") {
            size = Some(v.trim().parse().map_err(|_| {
                err(lineno, 6, format!("invalid size `{}`", v.trim()))
            })?);
        } else if let Some(v) = line.strip_prefix("name ") {
            name = Some(v.trim().to_owned());
        } else if line == "D" {
            if rank.is_none() || size.is_none() {
                return Err(err(lineno, 1, "D section before rank and size"));
            }
            in_d = true;
            d_line = lineno;
        } else {
            return Err(err(lineno, 1, format!("unrecognized line `{line}`")));
        }
    }

    let rank = rank.ok_or_else(|| err(1, 1, "missing `rank R` line"))?;
    let size = size.ok_or_else(|| err(1, 1, "missing `size N` line"))?;
    if !in_d {
        return Err(err(1, 1, "missing `D` section"));
    }
    if rows.len() != rank {
        return Err(err(
            d_line,
            1,
            format!("D has {} rows, rank is {rank}", rows.len()),
        ));
    }
    if size < rank {
        return Err(err(1, 1, format!("size {size} is smaller than rank {rank}")));
    }
    let width = size - rank;
    for (i, row) in rows.iter().enumerate() {
        if row.len() != width {
            return Err(err(
                d_line + 1 + i,
                row.len().min(width) + 1,
                format!("row width {} differs from size - rank = {width}", row.len()),
            ));
        }
    }
    let refs: Vec<&str> = rows.iter().map(String::as_str).collect();
    let d = if width == 0 {
        BitMatrix::new(0, vec![matx_core::BitVec::zero(0); rank])
            .map_err(|e| err(d_line, 1, e.to_string()))?
    } else {
        BitMatrix::parse_rows(&refs).map_err(|e| err(d_line, 1, e.to_string()))?
    };
    BinaryMatroid::new(rank, size, d, name.as_deref()).map_err(|e| err(d_line, 1, e.to_string()))
}

/// Canonical emission: rank, size, optional name, then the D rows.
pub fn emit_matroid(m: &BinaryMatroid) -> String {
    let mut out = String::new();
    out.push_str(&format!("rank {}\n", m.rank()));
    out.push_str(&format!("size {}\n", m.size()));
    if let Some(name) = m.name() {
        out.push_str(&format!("name {name}\n"));
    }
    out.push_str("D\n");
    for row in m.d().rows() {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out
}
