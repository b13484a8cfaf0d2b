//! Comma-separated text for matrices, vectors and datasets.
//!
//! One row per line; cells are decimals or the tokens `-inf` / `inf` (any
//! letter case on input, lowercase on output). A leading `# m n` line
//! declares the shape; any other line starting with `#` is a comment.
//! Blank lines are ignored. Positions in errors are 1-based line and cell
//! numbers.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::ext::ExtReal;
use crate::matrix::{MpMatrix, MpVector};
use crate::regression::Dataset;

struct Row<'a> {
    line: usize,
    cells: Vec<&'a str>,
}

struct Table<'a> {
    header: Option<(usize, Vec<usize>)>,
    rows: Vec<Row<'a>>,
}

fn parse_err(row: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        row,
        column,
        message: message.into(),
    }
}

fn split(text: &str) -> Table<'_> {
    let mut header = None;
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() {
            continue;
        }
        if let Some(rest) = t.strip_prefix('#') {
            if header.is_none() && rows.is_empty() {
                let dims: Option<Vec<usize>> =
                    rest.split_whitespace().map(|w| w.parse().ok()).collect();
                if let Some(dims) = dims.filter(|d| (1..=2).contains(&d.len())) {
                    header = Some((line, dims));
                }
            }
            continue;
        }
        rows.push(Row {
            line,
            cells: t.split(',').map(str::trim).collect(),
        });
    }
    Table { header, rows }
}

fn cell(row: &Row, c: usize) -> Result<ExtReal> {
    row.cells[c]
        .parse::<ExtReal>()
        .map_err(|msg| parse_err(row.line, c + 1, msg))
}

fn rectangular(table: &Table) -> Result<usize> {
    let first = table
        .rows
        .first()
        .ok_or_else(|| parse_err(1, 1, "no data rows"))?;
    let width = first.cells.len();
    for row in &table.rows {
        if row.cells.len() != width {
            return Err(parse_err(
                row.line,
                row.cells.len().min(width) + 1,
                format!("row has {} cells, expected {width}", row.cells.len()),
            ));
        }
    }
    Ok(width)
}

/// Parses a matrix. A `# m n` header, when present, must match the data.
pub fn parse_matrix(text: &str) -> Result<MpMatrix> {
    let table = split(text);
    let cols = rectangular(&table)?;
    let rows = table.rows.len();
    if let Some((line, dims)) = &table.header {
        if dims.as_slice() != [rows, cols] {
            return Err(parse_err(
                *line,
                1,
                format!("header declares {dims:?}, data is {rows} x {cols}"),
            ));
        }
    }
    let mut data = Vec::with_capacity(rows * cols);
    for row in &table.rows {
        for c in 0..cols {
            data.push(cell(row, c)?);
        }
    }
    MpMatrix::new(rows, cols, data)
}

/// Parses a vector written either as one row or as one value per line.
/// A header may be `# n`, `# n 1` or `# 1 n`.
pub fn parse_vector(text: &str) -> Result<MpVector> {
    let table = split(text);
    let width = rectangular(&table)?;
    let values: Vec<ExtReal> = if table.rows.len() == 1 {
        (0..width)
            .map(|c| cell(&table.rows[0], c))
            .collect::<Result<_>>()?
    } else if width == 1 {
        table
            .rows
            .iter()
            .map(|r| cell(r, 0))
            .collect::<Result<_>>()?
    } else {
        let row = &table.rows[0];
        return Err(parse_err(
            row.line,
            2,
            "a vector must be a single row or a single column",
        ));
    };
    if let Some((line, dims)) = &table.header {
        let n = values.len();
        let ok = matches!(dims.as_slice(), [d] if *d == n)
            || matches!(dims.as_slice(), [a, b] if (*a, *b) == (n, 1) || (*a, *b) == (1, n));
        if !ok {
            return Err(parse_err(
                *line,
                1,
                format!("header declares {dims:?}, vector has {n} entries"),
            ));
        }
    }
    Ok(MpVector::new(values))
}

/// Parses a dataset: `n` input columns, then the target column. A first line
/// whose cells are all non-numeric is taken as a column-name header. All
/// values must be finite.
pub fn parse_dataset(text: &str) -> Result<Dataset> {
    let mut table = split(text);
    if let Some(first) = table.rows.first() {
        if first.cells.iter().all(|c| c.parse::<ExtReal>().is_err()) {
            table.rows.remove(0);
        }
    }
    let width = rectangular(&table)?;
    if width < 2 {
        return Err(parse_err(
            table.rows[0].line,
            1,
            "a dataset needs at least one input column and a target column",
        ));
    }
    let mut inputs = Vec::with_capacity(table.rows.len() * (width - 1));
    let mut targets = Vec::with_capacity(table.rows.len());
    for row in &table.rows {
        for c in 0..width {
            let v = cell(row, c)?;
            if !v.is_finite() {
                return Err(parse_err(row.line, c + 1, "dataset values must be finite"));
            }
            if c + 1 == width {
                targets.push(v.value());
            } else {
                inputs.push(v.value());
            }
        }
    }
    Dataset::from_flat(width - 1, inputs, targets)
}

/// Writes a matrix with its `# m n` header.
pub fn write_matrix(a: &MpMatrix) -> String {
    let mut out = format!("# {} {}\n", a.rows(), a.cols());
    for i in 0..a.rows() {
        push_row(&mut out, a.row(i).iter().copied());
    }
    out
}

/// Writes a vector one value per line, with a `# n 1` header.
pub fn write_vector(v: &MpVector) -> String {
    let mut out = format!("# {} 1\n", v.len());
    for x in v.iter() {
        let _ = writeln!(out, "{x}");
    }
    out
}

/// Writes a dataset with an `x1,…,xn,f` header.
pub fn write_dataset(data: &Dataset) -> String {
    let mut out = String::new();
    for d in 1..=data.dim() {
        let _ = write!(out, "x{d},");
    }
    out.push_str("f\n");
    for (x, f) in data.points().zip(data.targets()) {
        push_row(&mut out, x.iter().chain([f]).map(|&v| ExtReal::from_f64(v)));
    }
    out
}

/// Writes rows of plain numbers under a header line.
pub fn write_table<R: AsRef<[f64]>>(header: &[&str], rows: &[R]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        push_row(&mut out, r.as_ref().iter().map(|&v| ExtReal::from_f64(v)));
    }
    out
}

fn push_row(out: &mut String, cells: impl Iterator<Item = ExtReal>) {
    for (k, v) in cells.enumerate() {
        if k > 0 {
            out.push(',');
        }
        let _ = write!(out, "{v}");
    }
    out.push('\n');
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_worked_matrix() {
        let a = parse_matrix("0,5,2\n4,1,0\n0,1,0").unwrap();
        assert_eq!(
            a,
            MpMatrix::from_rows(&[[0.0, 5.0, 2.0], [4.0, 1.0, 0.0], [0.0, 1.0, 0.0]]).unwrap()
        );
    }

    #[test]
    fn single_bottom_cell() {
        let a = parse_matrix("-inf").unwrap();
        assert_eq!((a.rows(), a.cols()), (1, 1));
        assert!(a.get(0, 0).is_bottom());
    }

    #[test]
    fn bad_cell_position() {
        assert_eq!(
            parse_matrix("1,x").unwrap_err(),
            Error::Parse {
                row: 1,
                column: 2,
                message: "not a number: \"x\"".into()
            }
        );
        let err = parse_matrix("# 2 2\n1,2\n# note\n3,nan\n").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    row: 4,
                    column: 2,
                    ..
                }
            ),
            "{err}"
        );
    }

    #[test]
    fn header_and_comments() {
        let a = parse_matrix("# 2 3\n# a comment\n1, -INF, 2\n\n3,Inf,-Inf\n").unwrap();
        assert_eq!((a.rows(), a.cols()), (2, 3));
        assert!(a.get(1, 1).is_top());
        assert!(matches!(
            parse_matrix("# 3 3\n1,2,3\n"),
            Err(Error::Parse { row: 1, .. })
        ));
        assert!(matches!(
            parse_matrix("1,2\n3\n"),
            Err(Error::Parse {
                row: 2,
                column: 2,
                ..
            })
        ));
        assert!(matches!(
            parse_matrix("1,,2"),
            Err(Error::Parse {
                row: 1,
                column: 2,
                ..
            })
        ));
        assert!(parse_matrix("# only a comment\n").is_err());
    }

    #[test]
    fn matrix_round_trip() {
        let a = MpMatrix::from_rows(&[[0.1, f64::NEG_INFINITY], [1e300, -2.5e-310]]).unwrap();
        let text = write_matrix(&a);
        assert!(text.starts_with("# 2 2\n"));
        assert_eq!(parse_matrix(&text).unwrap(), a);
    }

    #[test]
    fn vector_shapes() {
        let v = MpVector::from_f64(&[3.0, 1.0, f64::NEG_INFINITY]).unwrap();
        assert_eq!(parse_vector("3,1,-inf").unwrap(), v);
        assert_eq!(parse_vector("3\n1\n-inf\n").unwrap(), v);
        assert_eq!(parse_vector(&write_vector(&v)).unwrap(), v);
        assert_eq!(parse_vector("# 3\n3,1,-inf").unwrap(), v);
        assert!(parse_vector("# 4\n3,1,-inf").is_err());
        assert!(parse_vector("1,2\n3,4").is_err());
    }

    #[test]
    fn dataset_with_and_without_header() {
        let d = parse_dataset("x,y,f\n0,1,2\n3,4,5\n").unwrap();
        assert_eq!((d.dim(), d.len()), (2, 2));
        assert_eq!(d.point(1), &[3.0, 4.0]);
        assert_eq!(d.targets(), &[2.0, 5.0]);
        assert_eq!(parse_dataset("0,1,2\n3,4,5").unwrap(), d);
        assert_eq!(parse_dataset(&write_dataset(&d)).unwrap(), d);
        assert!(matches!(
            parse_dataset("0,inf\n"),
            Err(Error::Parse {
                row: 1,
                column: 2,
                ..
            })
        ));
        assert!(parse_dataset("1\n2\n").is_err());
        assert!(parse_dataset("x,f\n").is_err());
    }
}
