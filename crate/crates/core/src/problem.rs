//! Plain-text problem files.
//!
//! ```text
//! m K
//! a1 a2 b        (m constraint lines, a1*x1 + a2*x2 <= b)
//! nonneg 0|1
//! c1 c2          (K objective gradient lines)
//! ```
//!
//! Numbers are decimals or fractions `p/q`. Blank lines and `#` comments are
//! skipped. Writing uses the shortest round-trip decimal form, so a parse of
//! the output reproduces the exact values.

use std::fmt;

use crate::cone::ObjectiveBundle;
use crate::geom::Vec2;
use crate::polytope::{HalfPlane, Polygon};
use crate::Error;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

/// A parsed problem instance: constraints, nonnegativity flag, gradients.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemFile {
    pub constraints: Vec<HalfPlane>,
    pub nonneg: bool,
    pub gradients: Vec<Vec2>,
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let mut next = |what: &str| {
            lines.next().ok_or(ParseError {
                line: 0,
                message: format!("unexpected end of file, expected {what}"),
            })
        };

        let (ln, header) = next("header line `m K`")?;
        let mut it = header.split_whitespace();
        let m = parse_count(it.next(), ln, "m")?;
        let k = parse_count(it.next(), ln, "K")?;
        if it.next().is_some() {
            return Err(ParseError {
                line: ln,
                message: "header must be exactly `m K`".into(),
            });
        }

        let mut constraints = Vec::with_capacity(m);
        for i in 0..m {
            let (ln, line) = next(&format!("constraint {}", i + 1))?;
            let nums = parse_numbers(line, ln, 3)?;
            constraints.push(HalfPlane::new(nums[0], nums[1], nums[2]));
        }

        let (ln, flag) = next("`nonneg 0|1` line")?;
        let nonneg = match flag.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["nonneg", "0"] => false,
            ["nonneg", "1"] => true,
            _ => {
                return Err(ParseError {
                    line: ln,
                    message: format!("expected `nonneg 0|1`, found `{flag}`"),
                })
            }
        };

        let mut gradients = Vec::with_capacity(k);
        for i in 0..k {
            let (ln, line) = next(&format!("gradient {}", i + 1))?;
            let nums = parse_numbers(line, ln, 2)?;
            gradients.push(Vec2::new(nums[0], nums[1]));
        }
        if let Some((ln, extra)) = lines.next() {
            return Err(ParseError {
                line: ln,
                message: format!("unexpected trailing content `{extra}`"),
            });
        }
        Ok(ProblemFile {
            constraints,
            nonneg,
            gradients,
        })
    }

    pub fn polygon(&self, eps: f64) -> Result<Polygon, Error> {
        Polygon::from_halfplanes(&self.constraints, self.nonneg, eps)
    }

    pub fn bundle(&self) -> Result<ObjectiveBundle, Error> {
        ObjectiveBundle::new(self.gradients.clone())
    }

    /// Replace the gradients, keeping the feasible region.
    pub fn with_gradients(&self, gradients: Vec<Vec2>) -> ProblemFile {
        ProblemFile {
            constraints: self.constraints.clone(),
            nonneg: self.nonneg,
            gradients,
        }
    }
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.constraints.len(), self.gradients.len())?;
        for c in &self.constraints {
            writeln!(f, "{} {} {}", c.a1, c.a2, c.b)?;
        }
        writeln!(f, "nonneg {}", if self.nonneg { 1 } else { 0 })?;
        for g in &self.gradients {
            writeln!(f, "{} {}", g.x, g.y)?;
        }
        Ok(())
    }
}

fn parse_count(tok: Option<&str>, line: usize, name: &str) -> Result<usize, ParseError> {
    tok.and_then(|t| t.parse::<usize>().ok())
        .filter(|&v| v >= 1)
        .ok_or(ParseError {
            line,
            message: format!("`{name}` must be a positive integer"),
        })
}

fn parse_numbers(line: &str, ln: usize, expected: usize) -> Result<Vec<f64>, ParseError> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != expected {
        return Err(ParseError {
            line: ln,
            message: format!("expected {expected} numbers, found {}", toks.len()),
        });
    }
    toks.iter().map(|t| parse_number(t, ln)).collect()
}

fn parse_number(tok: &str, line: usize) -> Result<f64, ParseError> {
    let bad = |message: String| ParseError { line, message };
    let value = if let Some((p, q)) = tok.split_once('/') {
        let p: f64 = p
            .parse()
            .map_err(|_| bad(format!("bad numerator in `{tok}`")))?;
        let q: f64 = q
            .parse()
            .map_err(|_| bad(format!("bad denominator in `{tok}`")))?;
        if q == 0.0 {
            return Err(bad(format!("zero denominator in `{tok}`")));
        }
        p / q
    } else {
        tok.parse()
            .map_err(|_| bad(format!("`{tok}` is not a number")))?
    };
    if !f64::is_finite(value) {
        return Err(bad(format!("`{tok}` is not finite")));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{ninegon_constraints, ninegon_gradients};

    const NINEGON: &str = "\
9 6
1 -1 3
2 -1 9
2 1 19
1 2 20
0 1 8
-1 1 6
-1 0 0
-2 -1 -4
-1 -3 -7
nonneg 1
4/3 -1
4/3 -2
5/4 -3/4
6 0
1 -2
1 4
";

    #[test]
    fn parses_reference_instance() {
        let pf = ProblemFile::parse(NINEGON).unwrap();
        assert_eq!(pf.constraints, ninegon_constraints());
        assert!(pf.nonneg);
        assert_eq!(pf.gradients, ninegon_gradients());
        assert_eq!(pf.polygon(crate::DEFAULT_EPSILON).unwrap().vertex_count(), 9);
    }

    #[test]
    fn round_trip_is_lossless() {
        let pf = ProblemFile::parse(NINEGON).unwrap();
        let reparsed = ProblemFile::parse(&pf.to_string()).unwrap();
        assert_eq!(pf, reparsed);
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# instance\n\n1 2\n1 1 1\n\nnonneg 1\n# objectives\n1 0\n0 1\n";
        let pf = ProblemFile::parse(text).unwrap();
        assert_eq!(pf.constraints.len(), 1);
        assert_eq!(pf.gradients.len(), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = ProblemFile::parse("1 2\n1 oops 1\nnonneg 1\n1 0\n0 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("oops"));

        let e = ProblemFile::parse("1 2\n1 1 1\nmaybe\n1 0\n0 1\n").unwrap_err();
        assert_eq!(e.line, 3);

        let e = ProblemFile::parse("1 2\n1 1 1\nnonneg 1\n1 0\n0 1\nleftover\n").unwrap_err();
        assert_eq!(e.line, 6);

        let e = ProblemFile::parse("1 1/0 3\n").unwrap_err();
        assert_eq!(e.line, 1);
    }
}
