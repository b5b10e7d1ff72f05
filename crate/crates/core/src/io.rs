//! Text formats: sequence files and function CSV.
//!
//! A sequence file is line based:
//!
//! ```text
//! # comment
//! period 1
//! 0 1/12
//! 1/3 0
//! 1/2 1/12
//! ```
//!
//! The first non-blank line gives the period, every further line a center
//! and a radius. Numbers are exact rationals `a/b` or integers.
//!
//! Functions are written as CSV with header `t,value` and one row per
//! canonical corner, optionally followed by decimal columns.

use thiserror::Error;

use crate::error::Error;
use crate::pwl::PiecewiseLinear;
use crate::rational::{format_rational, parse_rational, to_decimal, Rational};
use crate::seq::{PeriodicSequence, Point};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// `line` is 1-based; 0 refers to the input as a whole.
    #[error("{}: {message}", location(*line))]
    Syntax { line: usize, message: String },
    #[error("invalid sequence: {0}")]
    Invalid(#[from] Error),
}

fn location(line: usize) -> String {
    if line == 0 {
        "end of input".to_string()
    } else {
        format!("line {line}")
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

fn number(line: usize, tok: &str) -> Result<Rational, ParseError> {
    parse_rational(tok).ok_or_else(|| syntax(line, format!("not an exact rational: {tok:?}")))
}

pub fn parse_sequence(text: &str) -> Result<PeriodicSequence, ParseError> {
    let mut period: Option<Rational> = None;
    let mut points = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match (&period, toks.as_slice()) {
            (None, ["period", p]) => period = Some(number(line_no, p)?),
            (None, _) => return Err(syntax(line_no, "expected `period <rational>`")),
            (Some(_), [c, r]) => points.push(Point::new(number(line_no, c)?, number(line_no, r)?)),
            (Some(_), _) => return Err(syntax(line_no, "expected `<center> <radius>`")),
        }
    }
    let period = period.ok_or_else(|| syntax(0, "missing `period` line"))?;
    if points.is_empty() {
        return Err(syntax(0, "no points given"));
    }
    Ok(PeriodicSequence::new(period, points)?)
}

pub fn write_sequence(seq: &PeriodicSequence) -> String {
    let mut out = format!("period {}\n", format_rational(seq.period()));
    for p in seq.points() {
        out.push_str(&format!("{} {}\n", format_rational(&p.center), format_rational(&p.radius)));
    }
    out
}

/// Significant digits of the decimal columns.
pub const DECIMAL_DIGITS: usize = 12;

/// One row per canonical corner. With `decimals`, two more columns hold
/// `t` and the value rounded to [`DECIMAL_DIGITS`] significant digits.
pub fn pwl_to_csv(f: &PiecewiseLinear, decimals: bool) -> String {
    let mut out = String::from(if decimals { "t,value,t_decimal,value_decimal\n" } else { "t,value\n" });
    for c in f.corners() {
        out.push_str(&format_rational(&c.t));
        out.push(',');
        out.push_str(&format_rational(&c.v));
        if decimals {
            out.push(',');
            out.push_str(&to_decimal(&c.t, DECIMAL_DIGITS));
            out.push(',');
            out.push_str(&to_decimal(&c.v, DECIMAL_DIGITS));
        }
        out.push('\n');
    }
    out
}

/// Reads the exact columns of a CSV written by [`pwl_to_csv`].
pub fn pwl_from_csv(text: &str) -> Result<PiecewiseLinear, ParseError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    match lines.next() {
        Some((_, header)) if header.trim().starts_with("t,value") => {}
        _ => return Err(syntax(1, "expected header `t,value`")),
    }
    let mut rows = Vec::new();
    for (idx, line) in lines {
        let mut cols = line.split(',');
        let (Some(t), Some(v)) = (cols.next(), cols.next()) else {
            return Err(syntax(idx + 1, "expected at least two columns"));
        };
        rows.push((number(idx + 1, t)?, number(idx + 1, v)?));
    }
    let mut rows = rows.into_iter();
    let (t0, start) = rows.next().ok_or_else(|| syntax(2, "no rows"))?;
    if t0 != Rational::from_integer(0.into()) {
        return Err(syntax(2, "first row must be at t = 0"));
    }
    Ok(PiecewiseLinear::from_corners(start, rows)?)
}
