//! Plain-text sidigraph files and polynomial arguments.
//!
//! ```text
//! # comments and blank lines are ignored
//! sidigraph 3
//! 1 2 +
//! 2 3 -
//! 3 1 +
//! ```
//!
//! Vertices are numbered from 1 in files and from 0 in memory. LF and CRLF
//! line endings are both accepted.

use std::fmt::Write as _;

use num_bigint::BigInt;
use sidigraph_core::{Arc, IntPolynomial, Sidigraph, Sign};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number; 0 when the problem is the file as a whole.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("expected header `sidigraph <n>`")]
    BadHeader,
    #[error("missing header")]
    MissingHeader,
    #[error("expected `<tail> <head> <+|->`")]
    BadArcLine,
    #[error("bad vertex `{0}`")]
    BadVertex(String),
    #[error("vertex {vertex} out of range 1..={order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate arc {tail} -> {head}")]
    DuplicateArc { tail: usize, head: usize },
    #[error("bad sign token `{0}`, expected + or -")]
    BadSign(String),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub fn parse_sidigraph(text: &str) -> Result<Sidigraph, ParseError> {
    let mut order: Option<usize> = None;
    let mut seen = Vec::new();
    let mut arcs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let Some(n) = order else {
            match fields.as_slice() {
                ["sidigraph", n] => match n.parse::<usize>() {
                    Ok(n) if n > 0 => {
                        order = Some(n);
                        seen = vec![false; n * n];
                    }
                    _ => return Err(err(line_no, ParseErrorKind::BadHeader)),
                },
                _ => return Err(err(line_no, ParseErrorKind::BadHeader)),
            }
            continue;
        };
        let [tail, head, sign] = fields.as_slice() else {
            return Err(err(line_no, ParseErrorKind::BadArcLine));
        };
        let vertex = |token: &str| -> Result<usize, ParseError> {
            let v: usize = token
                .parse()
                .map_err(|_| err(line_no, ParseErrorKind::BadVertex(token.to_string())))?;
            if v == 0 || v > n {
                return Err(err(
                    line_no,
                    ParseErrorKind::VertexOutOfRange {
                        vertex: v,
                        order: n,
                    },
                ));
            }
            Ok(v - 1)
        };
        let (u, v) = (vertex(tail)?, vertex(head)?);
        let sign = match *sign {
            "+" => Sign::Positive,
            "-" => Sign::Negative,
            other => return Err(err(line_no, ParseErrorKind::BadSign(other.to_string()))),
        };
        if u == v {
            return Err(err(line_no, ParseErrorKind::SelfLoop(u + 1)));
        }
        if std::mem::replace(&mut seen[u * n + v], true) {
            return Err(err(
                line_no,
                ParseErrorKind::DuplicateArc {
                    tail: u + 1,
                    head: v + 1,
                },
            ));
        }
        arcs.push(Arc::new(u, v, sign));
    }
    let n = order.ok_or(err(0, ParseErrorKind::MissingHeader))?;
    // every structural error was caught above with its line number
    Ok(Sidigraph::new(n, arcs).expect("arcs validated while parsing"))
}

/// File text for `s`, arcs in canonical order, with optional leading
/// comment lines.
pub fn render_sidigraph(s: &Sidigraph, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "sidigraph {}", s.order());
    for a in s.arcs() {
        let _ = writeln!(out, "{} {} {}", a.tail + 1, a.head + 1, a.sign.symbol());
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PolynomialParseError {
    #[error("empty coefficient list")]
    Empty,
    #[error("bad integer `{0}`")]
    BadInteger(String),
}

/// Parses a leading-first list such as `"1 0 -3 2 0"` (commas also
/// accepted as separators).
pub fn parse_polynomial(text: &str) -> Result<IntPolynomial, PolynomialParseError> {
    let coeffs = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<BigInt>()
                .map_err(|_| PolynomialParseError::BadInteger(t.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.is_empty() {
        return Err(PolynomialParseError::Empty);
    }
    Ok(IntPolynomial::new(coeffs.into_iter().rev().collect()))
}

/// Leading-first coefficients as decimal strings.
pub fn coefficient_strings(p: &IntPolynomial) -> Vec<String> {
    p.leading_first().iter().map(ToString::to_string).collect()
}
