//! Line-oriented input documents.
//!
//! ```text
//! # a degree sequence, one "out in" pair per vertex
//! seq
//! 2 1
//! 3 2
//! ```
//!
//! ```text
//! # a digraph on n vertices, one "u v" arc per line, labels 1..=n
//! digraph 3
//! 1 2
//! 2 3
//! ```
//!
//! Blank lines and `#` comments are ignored anywhere.

use splitkit::{Digraph, IntegerPairSequence, SeqError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputDocument {
    Sequence(Vec<(i64, i64)>),
    Digraph(Digraph),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input is empty")]
    Empty,
    #[error("line {0}: expected `seq` or `digraph N` header")]
    BadHeader(usize),
    #[error("line {line}: expected two integers, found `{text}`")]
    BadPair { line: usize, text: String },
    #[error("line {line}: vertex label {label} outside 1..={n}")]
    LabelOutOfRange { line: usize, label: i64, n: usize },
    #[error("line {line}: {reason}")]
    BadArc { line: usize, reason: String },
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_pair(line: usize, text: &str) -> Result<(i64, i64), ParseError> {
    let bad = || ParseError::BadPair { line, text: text.to_string() };
    let mut it = text.split_whitespace();
    let a = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let b = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn parse(text: &str) -> Result<InputDocument, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(ParseError::Empty)?;
    let mut words = header.split_whitespace();
    match (words.next(), words.next(), words.next()) {
        (Some("seq"), None, None) => {
            let pairs = lines.map(|(line, l)| parse_pair(line, l)).collect::<Result<_, _>>()?;
            Ok(InputDocument::Sequence(pairs))
        }
        (Some("digraph"), Some(n), None) => {
            let n: usize = n.parse().map_err(|_| ParseError::BadHeader(header_line))?;
            let mut arcs = Vec::new();
            for (line, l) in lines {
                let (u, v) = parse_pair(line, l)?;
                let label = |x: i64| {
                    if (1..=n as i64).contains(&x) {
                        Ok(x as usize - 1)
                    } else {
                        Err(ParseError::LabelOutOfRange { line, label: x, n })
                    }
                };
                let arc = (label(u)?, label(v)?);
                if arc.0 == arc.1 {
                    return Err(ParseError::BadArc { line, reason: format!("self-loop at {u}") });
                }
                if arcs.contains(&arc) {
                    return Err(ParseError::BadArc { line, reason: format!("duplicate arc {u} {v}") });
                }
                arcs.push(arc);
            }
            let g = Digraph::new(n, arcs).expect("arcs checked above");
            Ok(InputDocument::Digraph(g))
        }
        _ => Err(ParseError::BadHeader(header_line)),
    }
}

impl InputDocument {
    /// The degree sequence the analyses run on.
    pub fn sequence(&self) -> Result<IntegerPairSequence, SeqError> {
        match self {
            InputDocument::Sequence(pairs) => IntegerPairSequence::from_signed(pairs),
            InputDocument::Digraph(g) => Ok(splitkit::degree_sequence(g)),
        }
    }

    pub fn digraph(&self) -> Option<&Digraph> {
        match self {
            InputDocument::Digraph(g) => Some(g),
            InputDocument::Sequence(_) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sequences() {
        let doc = parse("# example\nseq\n2 1\n 3 2 # trailing\n\n4 2\n").unwrap();
        assert_eq!(doc, InputDocument::Sequence(vec![(2, 1), (3, 2), (4, 2)]));
        assert_eq!(parse("seq\n"), Ok(InputDocument::Sequence(vec![])));
        assert_eq!(parse("seq\n0 -1\n"), Ok(InputDocument::Sequence(vec![(0, -1)])));
    }

    #[test]
    fn parses_digraphs() {
        let doc = parse("digraph 3\n1 2\n2 3\n").unwrap();
        let g = doc.digraph().unwrap();
        assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.vertex_count(), 3);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse(""), Err(ParseError::Empty));
        assert_eq!(parse("# only\n"), Err(ParseError::Empty));
        assert_eq!(parse("sequence\n"), Err(ParseError::BadHeader(1)));
        assert_eq!(parse("digraph x\n"), Err(ParseError::BadHeader(1)));
        assert!(matches!(parse("seq\n1\n"), Err(ParseError::BadPair { line: 2, .. })));
        assert!(matches!(parse("seq\n1 2 3\n"), Err(ParseError::BadPair { line: 2, .. })));
        assert!(matches!(parse("digraph 2\n1 3\n"), Err(ParseError::LabelOutOfRange { label: 3, .. })));
        assert!(matches!(parse("digraph 2\n0 1\n"), Err(ParseError::LabelOutOfRange { label: 0, .. })));
        assert!(matches!(parse("digraph 2\n1 1\n"), Err(ParseError::BadArc { .. })));
        assert!(matches!(parse("digraph 2\n1 2\n1 2\n"), Err(ParseError::BadArc { .. })));
    }

    #[test]
    fn sequence_validation_is_deferred() {
        let doc = parse("seq\n5 0\n").unwrap();
        assert_eq!(doc.sequence(), Err(SeqError::OutOfRange(0)));
    }
}
