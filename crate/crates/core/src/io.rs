//! Matrix text format.
//!
//! ```text
//! 2 3
//! 4 -inf 1/2
//! * 0 -2.5
//! ```
//!
//! The first line holds `rows cols`; the remaining tokens are the entries in
//! row-major order, separated by any whitespace. `ε` is accepted as `-inf` or
//! `*` and always printed as `-inf`. Finite entries may be integers, exact
//! decimals or `p/q` fractions. Text after `#` on a line is ignored.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokens(input: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    for (ln, raw) in input.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut offset = 0;
        for piece in content.split_whitespace() {
            let start = content[offset..].find(piece).unwrap() + offset;
            offset = start + piece.len();
            out.push(Token {
                text: piece,
                line: ln + 1,
                column: content[..start].chars().count() + 1,
            });
        }
    }
    out
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses a matrix in the text format.
pub fn parse_matrix(input: &str) -> Result<Matrix> {
    let toks = tokens(input);
    if toks.len() < 2 {
        let (line, column) = toks.first().map_or((1, 1), |t| (t.line, t.column));
        return Err(parse_error(line, column, "expected header `rows cols`"));
    }
    let dim = |t: &Token| -> Result<usize> {
        t.text
            .parse::<usize>()
            .ok()
            .filter(|&v| v > 0)
            .ok_or_else(|| parse_error(t.line, t.column, format!("invalid dimension `{}`", t.text)))
    };
    let rows = dim(&toks[0])?;
    let cols = dim(&toks[1])?;
    if toks[1].line != toks[0].line {
        return Err(parse_error(toks[1].line, toks[1].column, "header must be `rows cols` on one line"));
    }
    let body = &toks[2..];
    let expected = rows * cols;
    if body.len() > expected {
        let t = &body[expected];
        return Err(parse_error(
            t.line,
            t.column,
            format!("unexpected extra entry `{}`; header declares {rows}x{cols}", t.text),
        ));
    }
    if body.len() < expected {
        let (line, column) = body
            .last()
            .or(toks.get(1))
            .map_or((1, 1), |t| (t.line, t.column + t.text.chars().count()));
        return Err(parse_error(
            line,
            column,
            format!("expected {expected} entries for {rows}x{cols}, found {}", body.len()),
        ));
    }
    let data = body
        .iter()
        .map(|t| t.text.parse::<Scalar>().map_err(|m| parse_error(t.line, t.column, m)))
        .collect::<Result<Vec<_>>>()?;
    Matrix::new(rows, cols, data)
}

/// Parses the compact inline form `"8 3; 3 8"` (rows separated by `;`).
pub fn parse_inline(input: &str) -> Result<Matrix> {
    let rows = input
        .split(';')
        .enumerate()
        .map(|(r, row)| {
            row.split_whitespace()
                .map(|tok| tok.parse::<Scalar>().map_err(|m| parse_error(r + 1, 1, m)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

/// Inline matrix literal for tests and examples. Panics on malformed input.
pub fn mat(input: &str) -> Matrix {
    parse_inline(input).unwrap_or_else(|e| panic!("bad matrix literal `{input}`: {e}"))
}

/// Formats a vector on one line in the scalar text format.
pub fn format_vector(v: &[Scalar]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}
