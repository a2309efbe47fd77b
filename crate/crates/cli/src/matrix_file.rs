//! Plain-text matrix files.
//!
//! ```text
//! FIELD Q            # or: FIELD GF 7
//! ROWS 2 COLS 2
//! 1/2 0
//! 0 -3/4
//! ```
//!
//! `#` starts a comment, blank lines are ignored, and `−` (U+2212) is
//! accepted as a minus sign.

use std::fmt;
use std::str::FromStr;

use elemdiv::algebra::Ring;
use elemdiv::{Fp, FpMat, Int, Mat, Modulus, QMat, Q};
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(Modulus),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("Q"),
            FieldSpec::Prime(m) => write!(f, "GF {}", m.get()),
        }
    }
}

/// A parsed matrix over whichever field its header names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMat {
    Rational(QMat),
    Prime(FpMat),
}

impl AnyMat {
    pub fn field(&self) -> FieldSpec {
        match self {
            AnyMat::Rational(_) => FieldSpec::Rational,
            AnyMat::Prime(m) => FieldSpec::Prime(*m.domain()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// A token with its 1-based line and column.
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn content_lines(text: &str) -> Vec<(usize, Vec<Token<'_>>)> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start: Option<usize> = None;
        for (pos, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &body[s..pos],
                        line: idx + 1,
                        column: body[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push((idx + 1, tokens));
        }
    }
    out
}

fn parse_int(tok: &Token<'_>, text: &str) -> Result<Int, ParseError> {
    let normalized = text.replace('−', "-");
    Int::from_str(&normalized).map_err(|_| err(tok.line, tok.column, format!("invalid integer `{}`", tok.text)))
}

fn parse_rational(tok: &Token<'_>) -> Result<Q, ParseError> {
    match tok.text.split_once('/') {
        None => Ok(Q::from_integer(parse_int(tok, tok.text)?)),
        Some((n, d)) => {
            let num = parse_int(tok, n)?;
            let den = parse_int(tok, d)?;
            if Zero::is_zero(&den) {
                return Err(err(tok.line, tok.column, format!("zero denominator in `{}`", tok.text)));
            }
            Ok(Q::new(num, den))
        }
    }
}

/// A single `a` or `a/b` value, as accepted in matrix files.
pub fn parse_rational_str(text: &str) -> Result<Q, String> {
    let tok = Token {
        text: text.trim(),
        line: 1,
        column: 1,
    };
    parse_rational(&tok).map_err(|e| e.message)
}

fn parse_residue(tok: &Token<'_>, m: Modulus) -> Result<Fp, ParseError> {
    if tok.text.contains('/') {
        return Err(err(
            tok.line,
            tok.column,
            format!("GF({}) entries must be integers, got `{}`", m.get(), tok.text),
        ));
    }
    let v = parse_int(tok, tok.text)?;
    let p = Int::from(m.get());
    let mut r = v % &p;
    if Signed::is_negative(&r) {
        r += &p;
    }
    Ok(Fp::from_u64(r.to_u64().expect("residue below modulus"), m))
}

fn parse_usize(tok: &Token<'_>) -> Result<usize, ParseError> {
    tok.text.parse().map_err(|_| {
        err(
            tok.line,
            tok.column,
            format!("expected a nonnegative count, got `{}`", tok.text),
        )
    })
}

fn expect_keyword(tok: Option<&Token<'_>>, keyword: &str, line: usize) -> Result<(), ParseError> {
    match tok {
        Some(t) if t.text == keyword => Ok(()),
        Some(t) => Err(err(t.line, t.column, format!("expected `{keyword}`, got `{}`", t.text))),
        None => Err(err(line, 1, format!("expected `{keyword}`"))),
    }
}

pub fn parse_matrix(text: &str) -> Result<AnyMat, ParseError> {
    let lines = content_lines(text);
    let mut it = lines.iter();
    let Some((l1, header)) = it.next() else {
        return Err(err(1, 1, "empty input: expected `FIELD Q` or `FIELD GF <p>`"));
    };
    expect_keyword(header.first(), "FIELD", *l1)?;
    let field = match header.get(1).map(|t| t.text) {
        Some("Q") if header.len() == 2 => FieldSpec::Rational,
        Some("GF") if header.len() == 3 => {
            let t = &header[2];
            let p: u64 = t
                .text
                .parse()
                .map_err(|_| err(t.line, t.column, format!("invalid modulus `{}`", t.text)))?;
            let m = Modulus::new(p).map_err(|e| err(t.line, t.column, e.to_string()))?;
            FieldSpec::Prime(m)
        }
        _ => return Err(err(*l1, 1, "malformed header: expected `FIELD Q` or `FIELD GF <p>`")),
    };
    let Some((l2, dims)) = it.next() else {
        return Err(err(l1 + 1, 1, "expected `ROWS <r> COLS <c>`"));
    };
    expect_keyword(dims.first(), "ROWS", *l2)?;
    expect_keyword(dims.get(2), "COLS", *l2)?;
    if dims.len() != 4 {
        return Err(err(*l2, 1, "malformed dimensions: expected `ROWS <r> COLS <c>`"));
    }
    let rows = parse_usize(&dims[1])?;
    let cols = parse_usize(&dims[3])?;
    if rows == 0 || cols == 0 {
        return Err(err(*l2, 1, "matrix dimensions must be positive"));
    }
    let body: Vec<&(usize, Vec<Token<'_>>)> = it.collect();
    if body.len() != rows {
        let line = body.get(rows).map(|(l, _)| *l).unwrap_or(l2 + body.len() + 1);
        return Err(err(line, 1, format!("expected {rows} rows, found {}", body.len())));
    }
    for (line, toks) in &body {
        if toks.len() != cols {
            return Err(err(*line, 1, format!("expected {cols} entries, found {}", toks.len())));
        }
    }
    match field {
        FieldSpec::Rational => {
            let data = body
                .iter()
                .map(|(_, toks)| toks.iter().map(parse_rational).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            Ok(AnyMat::Rational(Mat::from_rows((), data).expect("rectangular")))
        }
        FieldSpec::Prime(m) => {
            let data = body
                .iter()
                .map(|(_, toks)| toks.iter().map(|t| parse_residue(t, m)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            Ok(AnyMat::Prime(Mat::from_rows(m, data).expect("rectangular")))
        }
    }
}

fn print_rows<R: Ring>(out: &mut String, m: &Mat<R>) {
    out.push_str(&format!("ROWS {} COLS {}\n", m.rows(), m.cols()));
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

/// Canonical text form; `parse_matrix(&print_matrix(m)) == m`.
pub fn print_matrix(m: &AnyMat) -> String {
    let mut out = format!("FIELD {}\n", m.field());
    match m {
        AnyMat::Rational(q) => print_rows(&mut out, q),
        AnyMat::Prime(f) => print_rows(&mut out, f),
    }
    out
}
