//! Plain-text ideal files.
//!
//! ```text
//! # comment
//! ring: x y z
//! ideal: x^3, x^2*y, x*z
//! ideal: [0 3 0], y^0*z^3
//! ```
//!
//! A generator is a product of variables with optional `^k` exponents
//! (`*` between factors is optional, `1` is the unit monomial) or an exponent
//! vector in brackets. Several `ideal:` lines accumulate.

use std::fmt;

use thiserror::Error;

use crate::monomial::{Exponent, MonomialIdeal, Multidegree};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SourceFormat {
    MonomialString,
    ExponentVector,
}

#[derive(Clone, Debug)]
pub struct IdealDocument {
    pub variables: Vec<String>,
    /// Minimal generators in canonical order.
    pub generators: Vec<Multidegree>,
    pub source_format: SourceFormat,
    /// Raw generators removed as duplicates or multiples of others.
    pub dropped: usize,
}

impl PartialEq for IdealDocument {
    fn eq(&self, other: &Self) -> bool {
        self.variables == other.variables
            && self.generators == other.generators
            && self.source_format == other.source_format
    }
}

impl IdealDocument {
    pub fn new(variables: Vec<String>, ideal: &MonomialIdeal) -> Self {
        IdealDocument {
            variables,
            generators: ideal.generators().to_vec(),
            source_format: SourceFormat::MonomialString,
            dropped: 0,
        }
    }

    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.generators.iter().cloned(), self.variables.len())
            .expect("generators match the ring")
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
    ParseError { line, column, message: message.into() }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_ideal(text: &str) -> Result<IdealDocument, ParseError> {
    let mut variables: Option<Vec<String>> = None;
    let mut raw: Vec<Multidegree> = Vec::new();
    let mut source_format = None;
    let mut saw_ideal = false;

    for (lineno, full) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = full.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let Some((key, rest)) = line.split_once(':') else {
            let col = line.len() - line.trim_start().len() + 1;
            return Err(err(line_no, col, "expected `ring:` or `ideal:`"));
        };
        let rest_col = key.len() + 2;
        match key.trim() {
            "ring" => {
                if variables.is_some() {
                    return Err(err(line_no, 1, "duplicate `ring:` line"));
                }
                let mut names: Vec<String> = Vec::new();
                for (col, tok) in tokens(rest, rest_col) {
                    if !is_ident(tok) {
                        return Err(err(line_no, col, format!("invalid variable name `{tok}`")));
                    }
                    if names.iter().any(|n| n == tok) {
                        return Err(err(line_no, col, format!("duplicate variable `{tok}`")));
                    }
                    names.push(tok.to_string());
                }
                if names.is_empty() {
                    return Err(err(line_no, rest_col, "ring needs at least one variable"));
                }
                variables = Some(names);
            }
            "ideal" => {
                let Some(names) = &variables else {
                    return Err(err(line_no, 1, "`ideal:` before `ring:`"));
                };
                saw_ideal = true;
                for (col, item) in split_generators(rest, rest_col) {
                    let (m, fmt) = parse_generator(item, names, line_no, col)?;
                    source_format.get_or_insert(fmt);
                    raw.push(m);
                }
            }
            other => {
                return Err(err(line_no, 1, format!("unknown section `{other}`")));
            }
        }
    }
    let Some(variables) = variables else {
        return Err(err(1, 1, "missing `ring:` line"));
    };
    if !saw_ideal {
        return Err(err(text.lines().count().max(1), 1, "missing `ideal:` line"));
    }
    let count = raw.len();
    let ideal = MonomialIdeal::minimalize(raw, variables.len()).expect("lengths checked while parsing");
    Ok(IdealDocument {
        variables,
        dropped: count - ideal.num_generators(),
        generators: ideal.generators().to_vec(),
        source_format: source_format.unwrap_or(SourceFormat::MonomialString),
    })
}

// whitespace-separated tokens with their 1-based columns
fn tokens(s: &str, offset: usize) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        if c.is_whitespace() {
            if let Some(b) = start.take() {
                out.push((offset + b, &s[b..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(b) = start {
        out.push((offset + b, &s[b..]));
    }
    out.into_iter()
}

// top-level comma split, ignoring commas inside brackets
fn split_generators(s: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut begin = 0;
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push((begin, &s[begin..i]));
                begin = i + 1;
            }
            _ => {}
        }
    }
    out.push((begin, &s[begin..]));
    out.into_iter()
        .filter_map(|(b, piece)| {
            let trimmed = piece.trim_start();
            let lead = piece.len() - trimmed.len();
            let trimmed = trimmed.trim_end();
            (!trimmed.is_empty()).then_some((offset + b + lead, trimmed))
        })
        .collect()
}

fn parse_generator(
    item: &str,
    names: &[String],
    line: usize,
    col: usize,
) -> Result<(Multidegree, SourceFormat), ParseError> {
    let n = names.len();
    if let Some(body) = item.strip_prefix('[') {
        let Some(body) = body.strip_suffix(']') else {
            return Err(err(line, col + item.len(), "missing `]`"));
        };
        let mut exps = Vec::new();
        for (c, tok) in tokens(&body.replace(',', " "), col + 1) {
            exps.push(parse_exponent(tok, line, c)?);
        }
        if exps.len() != n {
            return Err(err(line, col, format!("expected {n} exponents, found {}", exps.len())));
        }
        return Ok((Multidegree::new(exps), SourceFormat::ExponentVector));
    }

    let mut exps = vec![0 as Exponent; n];
    let bytes = item.as_bytes();
    let mut pos = 0;
    let mut factors = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        if c.is_whitespace() || (c == '*' && factors > 0) {
            pos += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let end = scan_digits(bytes, pos);
            if &item[pos..end] != "1" {
                return Err(err(line, col + pos, "coefficients other than 1 are not allowed"));
            }
            pos = end;
            factors += 1;
            continue;
        }
        let rest = &item[pos..];
        let Some(var) = (0..n)
            .filter(|&v| rest.starts_with(names[v].as_str()))
            .max_by_key(|&v| names[v].len())
        else {
            let end = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len())
                .max(1);
            return Err(err(line, col + pos, format!("unknown variable `{}`", &rest[..end])));
        };
        pos += names[var].len();
        let mut e: Exponent = 1;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let start = pos;
            if pos < bytes.len() && bytes[pos] == b'-' {
                return Err(err(line, col + pos, "negative exponent"));
            }
            let end = scan_digits(bytes, pos);
            if end == start {
                return Err(err(line, col + pos, "expected an exponent after `^`"));
            }
            e = parse_exponent(&item[start..end], line, col + start)?;
            pos = end;
        }
        exps[var] = exps[var]
            .checked_add(e)
            .ok_or_else(|| err(line, col + pos, "exponent too large"))?;
        factors += 1;
    }
    if factors == 0 {
        return Err(err(line, col, "empty generator"));
    }
    Ok((Multidegree::new(exps), SourceFormat::MonomialString))
}

fn scan_digits(bytes: &[u8], mut pos: usize) -> usize {
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    pos
}

fn parse_exponent(tok: &str, line: usize, col: usize) -> Result<Exponent, ParseError> {
    if tok.starts_with('-') {
        return Err(err(line, col, "negative exponent"));
    }
    tok.parse::<Exponent>().map_err(|_| err(line, col, format!("invalid exponent `{tok}`")))
}

/// `x^3*y`, or `1` for the zero vector.
pub fn format_monomial(m: &Multidegree, names: &[String]) -> String {
    let parts: Vec<String> = m
        .as_slice()
        .iter()
        .zip(names)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, name)| if e == 1 { name.clone() } else { format!("{name}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn format_vector(m: &Multidegree) -> String {
    let parts: Vec<String> = m.as_slice().iter().map(|e| e.to_string()).collect();
    format!("[{}]", parts.join(" "))
}

impl fmt::Display for IdealDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring: {}", self.variables.join(" "))?;
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| match self.source_format {
                SourceFormat::MonomialString => format_monomial(g, &self.variables),
                SourceFormat::ExponentVector => format_vector(g),
            })
            .collect();
        if gens.is_empty() {
            writeln!(f, "ideal:")
        } else {
            writeln!(f, "ideal: {}", gens.join(", "))
        }
    }
}

/// `x1 … xn`, or `x y z t` style single letters for small rings.
pub fn default_variable_names(n: usize) -> Vec<String> {
    const LETTERS: [&str; 4] = ["x", "y", "z", "t"];
    if n <= LETTERS.len() {
        LETTERS[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::tests::md;
    use proptest::prelude::*;

    #[test]
    fn parses_staircase() {
        let d = parse_ideal("ring: x y z\nideal: x^3, x^2*y, x*z, y^3, z^3").unwrap();
        assert_eq!(d.variables, vec!["x", "y", "z"]);
        assert_eq!(d.generators.len(), 5);
        let mut vecs = d.generators.clone();
        vecs.sort_by(|a, b| b.cmp(a));
        assert_eq!(
            vecs,
            vec![md(&[3, 0, 0]), md(&[2, 1, 0]), md(&[1, 0, 1]), md(&[0, 3, 0]), md(&[0, 0, 3])]
        );
        assert_eq!(d.dropped, 0);
    }

    #[test]
    fn vectors_are_minimalized() {
        let d = parse_ideal("ring: x y\nideal: [1 1], [2 1]").unwrap();
        assert_eq!(d.generators, vec![md(&[1, 1])]);
        assert_eq!(d.dropped, 1);
        assert_eq!(d.source_format, SourceFormat::ExponentVector);
    }

    #[test]
    fn syntax_errors() {
        let e = parse_ideal("ideal: x^2").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        let e = parse_ideal("ring: x y\nideal: x^2*w").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("unknown variable `w`"), "{e}");
        assert_eq!(e.column, 12);
        let e = parse_ideal("ring: x y\nideal: x^-2").unwrap_err();
        assert!(e.message.contains("negative"));
        let e = parse_ideal("ring: x y\nideal: [1 -1]").unwrap_err();
        assert!(e.message.contains("negative"));
        assert!(parse_ideal("ring: x y\nideal: [1 1 1]").is_err());
        assert!(parse_ideal("ring: x x\nideal: x").is_err());
        assert!(parse_ideal("ring: x y\n").is_err());
        assert!(parse_ideal("ring: x y\nideal: 3*x").is_err());
    }

    #[test]
    fn optional_stars_comments_and_longest_match() {
        let d = parse_ideal("# header\nring: x x1 y\nideal: x1^2x y # trailing\nideal: 1*x").unwrap();
        assert_eq!(d.generators, vec![md(&[1, 0, 0])]);
        let d = parse_ideal("ring: x x1 y\nideal: x1^2 x y, y^2").unwrap();
        assert_eq!(d.generators, vec![md(&[1, 2, 1]), md(&[0, 0, 2])]);
        let d = parse_ideal("ring: x y\nideal:").unwrap();
        assert!(d.generators.is_empty());
        let d = parse_ideal("ring: x y\nideal: 1").unwrap();
        assert!(d.ideal().is_unit());
    }

    #[test]
    fn formatting() {
        let names = default_variable_names(4);
        assert_eq!(format_monomial(&md(&[2, 3, 0, 1]), &names), "x^2*y^3*t");
        assert_eq!(format_monomial(&md(&[0, 0, 0, 0]), &names), "1");
        assert_eq!(default_variable_names(5)[4], "x5");
    }

    proptest! {
        #[test]
        fn round_trip(
            gens in prop::collection::vec(prop::collection::vec(0u32..6, 3), 0..6),
            vector_form in any::<bool>(),
            names in prop::sample::select(vec![vec!["x", "y", "z"], vec!["a1", "a", "b_2"], vec!["x1", "x10", "x2"]]),
        ) {
            let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
            let ideal = MonomialIdeal::minimalize(gens.into_iter().map(Multidegree::new), 3).unwrap();
            let mut doc = IdealDocument::new(names, &ideal);
            if vector_form && !doc.generators.is_empty() {
                doc.source_format = SourceFormat::ExponentVector;
            }
            let back = parse_ideal(&doc.to_string()).unwrap();
            prop_assert_eq!(back, doc);
        }
    }
}
