//! Line-oriented text formats.
//!
//! ```text
//! quiver 3          seed 2            polygon 6
//! 1 -> 2            1 -> 2            arc 1 0 2
//! 2 -> 3            1 -> 1'           arc 2 2 4
//! 3 -> 1            2' -> 2           arc 3 0 4
//! ```
//!
//! Blank lines and everything after `#` are ignored. Repeated arrow lines add
//! multiplicity.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::quiver::{Quiver, Seed};
use crate::triangulation::{Chord, Triangulation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Quiver(Quiver),
    Seed(Seed),
    Polygon(Triangulation),
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_count(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| perr(line, format!("expected a non-negative integer, got {tok:?}")))
}

// A vertex token: `7` (mutable) or `7'` (frozen).
fn parse_endpoint(tok: &str, line: usize) -> Result<(usize, bool)> {
    match tok.strip_suffix('\'') {
        Some(v) => Ok((parse_count(v, line)?, true)),
        None => Ok((parse_count(tok, line)?, false)),
    }
}

fn header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<(usize, &'a str, usize)> {
    let (ln, first) = lines.next().ok_or_else(|| perr(1, "empty input"))?;
    let mut toks = first.split_whitespace();
    let kind = toks.next().unwrap_or("");
    let size = toks
        .next()
        .ok_or_else(|| perr(ln, format!("missing size after {kind:?}")))?;
    let size = parse_count(size, ln)?;
    if toks.next().is_some() {
        return Err(perr(ln, "trailing tokens in header"));
    }
    Ok((ln, kind, size))
}

/// Parses any of the three formats, dispatching on the header keyword.
pub fn parse_document(text: &str) -> Result<Document> {
    let mut lines = content_lines(text);
    let (ln, kind, size) = header(&mut lines)?;
    match kind {
        "quiver" | "seed" => {
            let frozen_allowed = kind == "seed";
            let mut b = vec![0i32; size * size];
            let mut c = vec![0i32; size * size];
            for (ln, l) in lines {
                let (a, bt) = l
                    .split_once("->")
                    .ok_or_else(|| perr(ln, format!("expected `a -> b`, got {l:?}")))?;
                let (x, xf) = parse_endpoint(a.trim(), ln)?;
                let (y, yf) = parse_endpoint(bt.trim(), ln)?;
                for v in [x, y] {
                    if v == 0 || v > size {
                        return Err(perr(ln, format!("vertex {v} is out of range 1..={size}")));
                    }
                }
                match (xf, yf) {
                    (false, false) => {
                        if x == y {
                            return Err(perr(ln, format!("loop at vertex {x}")));
                        }
                        if b[(y - 1) * size + (x - 1)] > 0 {
                            return Err(perr(ln, format!("oriented 2-cycle between {x} and {y}")));
                        }
                        b[(x - 1) * size + (y - 1)] += 1;
                        b[(y - 1) * size + (x - 1)] -= 1;
                    }
                    (true, true) => return Err(perr(ln, "arrows between frozen vertices are not allowed")),
                    _ if !frozen_allowed => return Err(perr(ln, "frozen vertices need a `seed` header")),
                    // x' -> y
                    (true, false) => c[(x - 1) * size + (y - 1)] += 1,
                    // x -> y'
                    (false, true) => c[(y - 1) * size + (x - 1)] -= 1,
                }
            }
            let q = Quiver::from_matrix(size, b).map_err(|e| perr(ln, e.to_string()))?;
            if frozen_allowed {
                Ok(Document::Seed(Seed::from_parts(q, c)?))
            } else {
                Ok(Document::Quiver(q))
            }
        }
        "polygon" => {
            let mut slots: Vec<Option<Chord>> = vec![None; size.saturating_sub(3)];
            for (ln, l) in lines {
                let toks: Vec<&str> = l.split_whitespace().collect();
                let ["arc", label, u, v] = toks[..] else {
                    return Err(perr(ln, format!("expected `arc <label> <u> <v>`, got {l:?}")));
                };
                let label = parse_count(label, ln)?;
                let (u, v) = (parse_count(u, ln)?, parse_count(v, ln)?);
                if label == 0 || label > slots.len() {
                    return Err(perr(
                        ln,
                        format!("arc label {label} is out of range 1..={}", slots.len()),
                    ));
                }
                if slots[label - 1].is_some() {
                    return Err(perr(ln, format!("arc label {label} is used twice")));
                }
                slots[label - 1] = Some(Chord::new(u, v));
            }
            let mut arcs = Vec::with_capacity(slots.len());
            for (i, s) in slots.into_iter().enumerate() {
                arcs.push(s.ok_or_else(|| perr(ln, format!("arc {} is missing", i + 1)))?);
            }
            Ok(Document::Polygon(Triangulation::new(size, arcs)?))
        }
        other => Err(perr(
            ln,
            format!("unknown header {other:?}; expected quiver, seed or polygon"),
        )),
    }
}

pub fn parse_quiver(text: &str) -> Result<Quiver> {
    match parse_document(text)? {
        Document::Quiver(q) => Ok(q),
        _ => Err(perr(1, "expected a `quiver` document")),
    }
}

pub fn parse_seed(text: &str) -> Result<Seed> {
    match parse_document(text)? {
        Document::Seed(s) => Ok(s),
        _ => Err(perr(1, "expected a `seed` document")),
    }
}

pub fn parse_triangulation(text: &str) -> Result<Triangulation> {
    match parse_document(text)? {
        Document::Polygon(t) => Ok(t),
        _ => Err(perr(1, "expected a `polygon` document")),
    }
}

fn push_arrows(out: &mut String, q: &Quiver) {
    for (a, b, mult) in q.arrows() {
        for _ in 0..mult {
            let _ = writeln!(out, "{a} -> {b}");
        }
    }
}

pub fn format_quiver(q: &Quiver) -> String {
    let mut out = format!("quiver {}\n", q.n());
    push_arrows(&mut out, q);
    out
}

pub fn format_seed(s: &Seed) -> String {
    let n = s.n();
    let mut out = format!("seed {n}\n");
    push_arrows(&mut out, s.quiver());
    for i in 1..=n {
        for j in 1..=n {
            let c = s.c(j, i);
            for _ in 0..c.unsigned_abs() {
                if c > 0 {
                    let _ = writeln!(out, "{j}' -> {i}");
                } else {
                    let _ = writeln!(out, "{i} -> {j}'");
                }
            }
        }
    }
    out
}

pub fn format_triangulation(t: &Triangulation) -> String {
    let mut out = format!("polygon {}\n", t.m());
    for (i, c) in t.arcs().iter().enumerate() {
        let _ = writeln!(out, "arc {} {} {}", i + 1, c.0, c.1);
    }
    out
}

pub fn format_document(d: &Document) -> String {
    match d {
        Document::Quiver(q) => format_quiver(q),
        Document::Seed(s) => format_seed(s),
        Document::Polygon(t) => format_triangulation(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quiver_round_trip() {
        let text = "# a 3-cycle\nquiver 3\n\n1 -> 2\n2 -> 3  # back\n3 -> 1\n";
        let q = parse_quiver(text).unwrap();
        assert_eq!(q, Quiver::from_arrows(3, &[(1, 2), (2, 3), (3, 1)]).unwrap());
        assert_eq!(parse_quiver(&format_quiver(&q)).unwrap(), q);
    }

    #[test]
    fn multiplicities() {
        let q = parse_quiver("quiver 2\n1 -> 2\n1 -> 2\n").unwrap();
        assert_eq!(q.b(1, 2), 2);
        assert_eq!(format_quiver(&q), "quiver 2\n1 -> 2\n1 -> 2\n");
    }

    #[test]
    fn seed_round_trip() {
        let q = Quiver::from_arrows(2, &[(1, 2)]).unwrap();
        let s = Seed::framed(&q).mutate(1).unwrap();
        let text = format_seed(&s);
        assert_eq!(text, "seed 2\n2 -> 1\n1' -> 1\n2 -> 2'\n");
        assert_eq!(parse_seed(&text).unwrap(), s);
    }

    #[test]
    fn polygon_round_trip() {
        let text = "polygon 6\narc 2 2 4\narc 1 0 2\narc 3 4 0\n";
        let t = parse_triangulation(text).unwrap();
        assert_eq!(t.arc(3), Chord(0, 4));
        assert_eq!(parse_triangulation(&format_triangulation(&t)).unwrap(), t);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse_document(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_document("graph 3"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_document("quiver 2\n1 => 2"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_document("quiver 2\n1 -> 3"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_document("quiver 2\n1 -> 1'"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_document("quiver 2\n1 -> 1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_document("quiver 2\n1 -> 2\n2 -> 1"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_document("quiver x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_document("polygon 5\narc 1 0 2\narc 1 0 3"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_document("polygon 5\narc 1 0 2"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn invalid_structures_are_not_parse_errors() {
        assert!(matches!(
            parse_document("polygon 6\narc 1 0 3\narc 2 1 4\narc 3 0 4"),
            Err(Error::Structure(_))
        ));
    }
}
