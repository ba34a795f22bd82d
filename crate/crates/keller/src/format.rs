//! Text forms: polynomials, rational matrices, map files and power-linear
//! spec files.
//!
//! Polynomials are written as an expanded sum of terms, e.g.
//! `x1 - 3/2*x2^2*x3 + 1`. Printing goes through the core `Display` impls,
//! which emit the canonical (descending graded-lex) order, so
//! `parse(print(p)) == p` and `print(parse(s))` is canonical.

use std::fmt::Write as _;

use keller_core::{DruzkowskiSpec, Monomial, PolyMap, Polynomial, Rational, RationalMatrix};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::CliError;

/// A parse failure. `line` is 1-based and 0 when the input is a single string.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }

    fn at_line(mut self, line: usize) -> Self {
        self.line = line;
        self
    }
}

type ParseResult<T> = Result<T, ParseError>;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    fn error(&self, what: &str) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("'{}'", c as char),
            None => "end of input".to_string(),
        };
        ParseError::new(
            0,
            format!("expected {what} at column {}, found {found}", self.pos + 1),
        )
    }
}

/// Parses `p`, `-p`, `p/q` or `-p/q`.
pub fn parse_rational(s: &str) -> ParseResult<Rational> {
    let mut c = Cursor::new(s);
    let negative = c.eat(b'-');
    let v = unsigned_rational(&mut c)?;
    if !c.at_end() {
        return Err(c.error("end of rational"));
    }
    Ok(if negative { -v } else { v })
}

fn unsigned_rational(c: &mut Cursor) -> ParseResult<Rational> {
    let num: BigInt = c
        .digits()
        .ok_or_else(|| c.error("integer"))?
        .parse()
        .unwrap();
    if c.eat(b'/') {
        let den: BigInt = c
            .digits()
            .ok_or_else(|| c.error("denominator"))?
            .parse()
            .unwrap();
        if den.is_zero() {
            return Err(ParseError::new(0, "zero denominator"));
        }
        Ok(Rational::new(num, den))
    } else {
        Ok(Rational::from_integer(num))
    }
}

/// Parses `x<i>` or `x<i>^<e>` into exponents (1-based index).
fn factor(c: &mut Cursor, exps: &mut [u32]) -> ParseResult<()> {
    if !c.eat(b'x') {
        return Err(c.error("variable"));
    }
    // no whitespace inside a variable name
    if !c.peek().is_some_and(|b| b.is_ascii_digit()) {
        return Err(c.error("variable index"));
    }
    let index: usize = c
        .digits()
        .unwrap()
        .parse()
        .map_err(|_| ParseError::new(0, "variable index too large"))?;
    if index == 0 || index > exps.len() {
        return Err(ParseError::new(
            0,
            format!(
                "variable x{index} out of range for {} variables",
                exps.len()
            ),
        ));
    }
    let e = if c.eat(b'^') {
        c.digits()
            .ok_or_else(|| c.error("exponent"))?
            .parse::<u32>()
            .map_err(|_| ParseError::new(0, "exponent too large"))?
    } else {
        1
    };
    exps[index - 1] = exps[index - 1]
        .checked_add(e)
        .ok_or_else(|| ParseError::new(0, "exponent too large"))?;
    Ok(())
}

fn term(c: &mut Cursor, nvars: usize) -> ParseResult<(Monomial, Rational)> {
    let mut exps = vec![0u32; nvars];
    c.skip_ws();
    let coef = if c.peek().is_some_and(|b| b.is_ascii_digit()) {
        let v = unsigned_rational(c)?;
        if !c.eat(b'*') {
            return Ok((Monomial::new(exps), v));
        }
        v
    } else {
        Rational::from_integer(1.into())
    };
    loop {
        factor(c, &mut exps)?;
        if !c.eat(b'*') {
            break;
        }
    }
    Ok((Monomial::new(exps), coef))
}

/// Parses the expanded sum-of-terms grammar in `nvars` variables.
/// Repeated monomials are summed; whitespace is free between tokens.
pub fn parse_polynomial(s: &str, nvars: usize) -> ParseResult<Polynomial> {
    let mut c = Cursor::new(s);
    if c.at_end() {
        return Err(ParseError::new(0, "empty polynomial"));
    }
    let mut p = Polynomial::zero(nvars);
    let mut negative = c.eat(b'-');
    loop {
        let (m, coef) = term(&mut c, nvars)?;
        let coef = if negative { -coef } else { coef };
        p = &p + &Polynomial::term(m, coef);
        if c.at_end() {
            return Ok(p);
        }
        negative = if c.eat(b'+') {
            false
        } else if c.eat(b'-') {
            true
        } else {
            return Err(c.error("'+' or '-'"));
        };
    }
}

/// Canonical text of a polynomial.
pub fn print_polynomial(p: &Polynomial) -> String {
    p.to_string()
}

/// Comma-separated rationals, as taken by `--point`.
pub fn parse_point(s: &str) -> ParseResult<Vec<Rational>> {
    s.split(',').map(|t| parse_rational(t.trim())).collect()
}

pub fn print_point(point: &[Rational]) -> String {
    point
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Meaningful lines with their 1-based line numbers. Blank lines and lines
/// starting with `#` are skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn header<'a>(line: (usize, &'a str), key: &str) -> ParseResult<&'a str> {
    let (no, text) = line;
    text.strip_prefix(key)
        .and_then(|r| r.trim_start().strip_prefix(':'))
        .map(str::trim)
        .ok_or_else(|| ParseError::new(no, format!("expected \"{key}: ...\"")))
}

fn parse_matrix_rows<'a, I>(lines: I) -> ParseResult<RationalMatrix>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let mut rows = Vec::new();
    let mut width = None;
    for (no, text) in lines {
        let row = text
            .split_whitespace()
            .map(parse_rational)
            .collect::<ParseResult<Vec<_>>>()
            .map_err(|e| e.at_line(no))?;
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(ParseError::new(
                    no,
                    format!("row has {} entries, expected {w}", row.len()),
                ))
            }
            Some(_) => {}
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ParseError::new(0, "empty matrix"));
    }
    RationalMatrix::from_rows(rows).map_err(|e| ParseError::new(0, e.to_string()))
}

/// One row per line, entries separated by whitespace.
pub fn parse_matrix(text: &str) -> ParseResult<RationalMatrix> {
    parse_matrix_rows(content_lines(text))
}

pub fn print_matrix(m: &RationalMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

/// `nvars: <n>` followed by `F1: ...` through `Fn: ...` in order.
pub fn parse_map(text: &str) -> ParseResult<PolyMap> {
    let mut lines = content_lines(text);
    let first = lines
        .next()
        .ok_or_else(|| ParseError::new(0, "empty map file"))?;
    let n: usize = header(first, "nvars")?
        .parse()
        .map_err(|_| ParseError::new(first.0, "nvars must be a positive integer"))?;
    if n == 0 {
        return Err(ParseError::new(first.0, "nvars must be a positive integer"));
    }
    let mut components = Vec::with_capacity(n);
    for i in 1..=n {
        let line = lines
            .next()
            .ok_or_else(|| ParseError::new(0, format!("missing component F{i}")))?;
        let body = header(line, &format!("F{i}"))?;
        components.push(parse_polynomial(body, n).map_err(|e| e.at_line(line.0))?);
    }
    if let Some((no, _)) = lines.next() {
        return Err(ParseError::new(
            no,
            "unexpected content after the last component",
        ));
    }
    PolyMap::new(components).map_err(|e| ParseError::new(0, e.to_string()))
}

pub fn print_map(f: &PolyMap) -> String {
    let mut out = format!("nvars: {}\n", f.nvars());
    for (i, c) in f.components().iter().enumerate() {
        writeln!(out, "F{}: {}", i + 1, c).unwrap();
    }
    out
}

/// `d: <d>` followed by the rows of `A`.
pub fn parse_spec(text: &str) -> ParseResult<DruzkowskiSpec> {
    let mut lines = content_lines(text);
    let first = lines
        .next()
        .ok_or_else(|| ParseError::new(0, "empty spec file"))?;
    let d: u32 = header(first, "d")?
        .parse()
        .map_err(|_| ParseError::new(first.0, "d must be a non-negative integer"))?;
    let a = parse_matrix_rows(lines)?;
    DruzkowskiSpec::new(a, d).map_err(|e| ParseError::new(0, e.to_string()))
}

pub fn print_spec(spec: &DruzkowskiSpec) -> String {
    format!("d: {}\n{}", spec.degree(), print_matrix(spec.matrix()))
}

pub(crate) fn read_file(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_map(path: &std::path::Path) -> Result<PolyMap, CliError> {
    parse_map(&read_file(path)?).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_spec(path: &std::path::Path) -> Result<DruzkowskiSpec, CliError> {
    parse_spec(&read_file(path)?).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn parses_canonical_example() {
        let p = parse_polynomial("x1 - 3/2*x2^2*x3 + 1", 3).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.coefficient(&Monomial::new(vec![0, 2, 1])), q(-3, 2));
        assert_eq!(p.constant_term(), q(1, 1));
        assert_eq!(parse_polynomial(&print_polynomial(&p), 3).unwrap(), p);
    }

    #[test]
    fn whitespace_and_repeats() {
        let a = parse_polynomial("  x1*x1 +x1^2-  2 * x2 ", 2).unwrap();
        let b = parse_polynomial("2*x1^2 - 2*x2", 2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cancelling_terms_give_zero() {
        assert!(parse_polynomial("x1 - x1", 1).unwrap().is_zero());
        assert!(parse_polynomial("0", 1).unwrap().is_zero());
        assert_eq!(print_polynomial(&Polynomial::zero(2)), "0");
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "", "x0", "x3", "(x1)", "x1 +", "2/0", "x1 x2", "x 1", "x1^", "3x1", "--x1",
        ] {
            assert!(parse_polynomial(bad, 2).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn map_file_round_trip() {
        let text = "nvars: 2\nF1: x2^3 + x1\nF2: x2\n";
        let f = parse_map(text).unwrap();
        assert_eq!(print_map(&f), text);
        assert_eq!(parse_map(text).unwrap(), f);
    }

    #[test]
    fn map_file_errors_carry_line_numbers() {
        let err = parse_map("nvars: 2\nF1: x1\nF2: x2 +\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = parse_map("nvars: 2\nF2: x1\nF1: x2\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(parse_map("nvars: 1\nF1: x1\nF2: x1\n").is_err());
        assert!(parse_map("nvars: 0\n").is_err());
    }

    #[test]
    fn spec_file_round_trip() {
        let text = "d: 3\n0 1 1\n0 0 1\n0 0 0\n";
        let spec = parse_spec(text).unwrap();
        assert_eq!(spec.degree(), 3);
        assert_eq!(print_spec(&spec), text);
        assert!(parse_spec("d: 3\n0 1\n0\n").is_err());
        assert!(parse_spec("d: 1\n0\n").is_err());
    }

    #[test]
    fn matrix_text() {
        let m = parse_matrix("1/2 -3\n0 4/6\n").unwrap();
        assert_eq!(m.get(1, 1), &q(2, 3));
        assert_eq!(print_matrix(&m), "1/2 -3\n0 2/3\n");
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("1, -2/3").unwrap(), vec![q(1, 1), q(-2, 3)]);
        assert_eq!(print_point(&[q(1, 1), q(-2, 3)]), "1,-2/3");
        assert!(parse_point("1,,2").is_err());
    }
}
