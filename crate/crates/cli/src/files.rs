//! Text formats for generator matrices and extension columns.
//!
//! Both formats start with a three-number header followed by rows of
//! symbols, one row per line. Everything after `#` on a line is ignored, as
//! are blank lines.
//!
//! ```text
//! # Hamming [7,4,3]
//! 2 7 4
//! 1 0 0 0 1 1 0
//! 0 1 0 0 1 0 1
//! 0 0 1 0 0 1 1
//! 0 0 0 1 1 1 1
//! ```
//!
//! A code file has header `q n k` and k rows of n symbols; a column file has
//! header `q m k` and k rows of m symbols (the matrix X appended to G).

use std::fmt::Write as _;
use std::path::Path;

use lincode_core::{ExtensionMatrix, FieldElement, FieldSpec, GeneratorMatrix};

use crate::error::CliError;

/// Numbered, comment-stripped, non-blank lines.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty())
}

fn parse_numbers(line_no: usize, line: &str) -> Result<Vec<u32>, CliError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| CliError::parse(line_no, format!("expected a non-negative integer, found {tok:?}")))
        })
        .collect()
}

/// Header triple and the rows below it, each checked for `width` entries.
fn parse_grid(text: &str, width_of: impl Fn([u32; 3]) -> (usize, usize)) -> Result<([u32; 3], Vec<Vec<u32>>), CliError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or_else(|| CliError::parse(1, "missing header line"))?;
    let header = parse_numbers(line_no, header)?;
    let header: [u32; 3] = header
        .try_into()
        .map_err(|h: Vec<u32>| CliError::parse(line_no, format!("header needs 3 numbers, found {}", h.len())))?;
    let (width, height) = width_of(header);

    let mut rows = Vec::with_capacity(height);
    let mut last_line = line_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if rows.len() == height {
            return Err(CliError::parse(line_no, format!("more than the {height} rows announced in the header")));
        }
        let row = parse_numbers(line_no, line)?;
        if row.len() != width {
            return Err(CliError::parse(line_no, format!("expected {width} symbols, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() < height {
        return Err(CliError::parse(
            last_line,
            format!("expected {height} rows, found {}", rows.len()),
        ));
    }
    Ok((header, rows))
}

/// Parses a generator matrix in the code file format.
pub fn parse_code(text: &str) -> Result<GeneratorMatrix, CliError> {
    let ([q, n, k], rows) = parse_grid(text, |[_, n, k]| (n as usize, k as usize))?;
    let field = FieldSpec::new(q)?;
    if k == 0 || n < k {
        return Err(lincode_core::Error::InvalidDimensions { n: n as usize, k: k as usize }.into());
    }
    Ok(GeneratorMatrix::from_symbols(field, &rows)?)
}

pub fn read_code(path: &Path) -> Result<GeneratorMatrix, CliError> {
    parse_code(&read(path)?)
}

/// Parses extension columns; returns the field order and the matrix.
pub fn parse_columns(text: &str) -> Result<(u32, ExtensionMatrix), CliError> {
    let ([q, m, k], rows) = parse_grid(text, |[_, m, k]| (m as usize, k as usize))?;
    let field = FieldSpec::new(q)?;
    if m == 0 || k == 0 {
        return Err(CliError::parse(1, "column files need m ≥ 1 and k ≥ 1"));
    }
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|&s| field.element(s)).collect::<Result<Vec<FieldElement>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok((q, ExtensionMatrix::from_rows(&rows)?))
}

pub fn read_columns(path: &Path) -> Result<(u32, ExtensionMatrix), CliError> {
    parse_columns(&read(path)?)
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn write_rows(out: &mut String, rows: &[Vec<FieldElement>]) {
    for row in rows {
        let symbols: Vec<String> = row.iter().map(|x| x.index().to_string()).collect();
        let _ = writeln!(out, "{}", symbols.join(" "));
    }
}

/// Serializes `g` in the code file format.
pub fn format_code(g: &GeneratorMatrix) -> String {
    let mut out = format!("{} {} {}\n", g.field().order(), g.n(), g.k());
    write_rows(&mut out, g.rows());
    out
}

/// Serializes X in the column file format.
pub fn format_columns(q: u32, x: &ExtensionMatrix) -> String {
    let mut out = format!("{} {} {}\n", q, x.m(), x.k());
    write_rows(&mut out, &x.rows());
    out
}
