//! The line-oriented presentation file format.
//!
//! ```text
//! letters: a b
//! rel: a a = b b
//! rel: a b = b a       # u = v = w expands to every pair
//! pseudolength: unit   # or `weights a=1 b=2`, or `inversions a b`
//! ```

use std::fmt::Write as _;

use crate::completeness::PseudoLength;
use crate::error::{ParseError, ParseErrorKind};
use crate::presentation::Presentation;
use crate::word::{is_valid_letter_name, Alphabet, PositiveWord, EMPTY_TOKEN};

/// A parsed file: the presentation plus an optional pseudolength line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub presentation: Presentation,
    pub pseudolength: Option<PseudoLength>,
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

/// Whitespace-separated tokens of `s` with their 1-based columns, offset by `base`.
fn tokens(s: &str, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in s.char_indices().enumerate() {
        if ch.is_whitespace() {
            if let Some((c0, b0)) = start.take() {
                out.push((base + c0, &s[b0..byte]));
            }
        } else if start.is_none() {
            start = Some((col, byte));
        }
    }
    if let Some((c0, b0)) = start {
        out.push((base + c0, &s[b0..]));
    }
    out
}

struct Line<'a> {
    number: usize,
    keyword: &'a str,
    body: &'a str,
    body_col: usize,
}

pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    parse_document(text).map(|d| d.presentation)
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let number = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let lead = content.chars().take_while(|c| c.is_whitespace()).count();
        let trimmed = content.trim_start();
        if trimmed.trim_end().is_empty() {
            continue;
        }
        let Some(colon) = trimmed.find(':') else {
            return Err(err(number, lead + 1, ParseErrorKind::Syntax("expected `<keyword>:`".into())));
        };
        let keyword = &trimmed[..colon];
        if !matches!(keyword, "letters" | "rel" | "pseudolength") {
            return Err(err(
                number,
                lead + 1,
                ParseErrorKind::Syntax(format!("unknown keyword `{keyword}`")),
            ));
        }
        let body_col = lead + keyword.chars().count() + 2;
        lines.push(Line { number, keyword, body: &trimmed[colon + 1..], body_col });
    }

    let mut names: Vec<(usize, usize, &str)> = Vec::new();
    for l in lines.iter().filter(|l| l.keyword == "letters") {
        for (col, tok) in tokens(l.body, l.body_col) {
            if !is_valid_letter_name(tok) {
                return Err(err(l.number, col, ParseErrorKind::InvalidLetter(tok.into())));
            }
            if names.iter().any(|(_, _, n)| *n == tok) {
                return Err(err(l.number, col, ParseErrorKind::DuplicateLetter(tok.into())));
            }
            names.push((l.number, col, tok));
        }
    }
    if !lines.iter().any(|l| l.keyword == "letters") {
        return Err(err(1, 1, ParseErrorKind::Syntax("missing `letters:` line".into())));
    }
    let alphabet = Alphabet::new(names.iter().map(|(_, _, n)| n.to_string()))
        .expect("letter names were validated");

    let mut pairs = Vec::new();
    let mut pseudolength = None;
    for l in &lines {
        match l.keyword {
            "rel" => {
                let mut sides = Vec::new();
                let mut offset = 0usize;
                for part in l.body.split('=') {
                    let col = l.body_col + offset;
                    offset += part.chars().count() + 1;
                    let toks = tokens(part, col);
                    if toks.is_empty() {
                        return Err(err(l.number, col, ParseErrorKind::EmptySide));
                    }
                    let mut word = Vec::with_capacity(toks.len());
                    for (c, tok) in toks {
                        if tok == EMPTY_TOKEN {
                            return Err(err(l.number, c, ParseErrorKind::EmptySide));
                        }
                        let letter = alphabet
                            .lookup(tok)
                            .ok_or_else(|| err(l.number, c, ParseErrorKind::UnknownLetter(tok.into())))?;
                        word.push(letter);
                    }
                    sides.push((col, PositiveWord(word)));
                }
                if sides.len() < 2 {
                    return Err(err(l.number, l.body_col, ParseErrorKind::Syntax("expected `=`".into())));
                }
                for i in 0..sides.len() {
                    for j in i + 1..sides.len() {
                        if sides[i].1 == sides[j].1 {
                            return Err(err(l.number, sides[j].0, ParseErrorKind::TrivialRelation));
                        }
                        pairs.push((sides[i].1.clone(), sides[j].1.clone()));
                    }
                }
            }
            "pseudolength" => {
                if pseudolength.is_some() {
                    return Err(err(
                        l.number,
                        1,
                        ParseErrorKind::Syntax("pseudolength given twice".into()),
                    ));
                }
                let pl = PseudoLength::parse(&alphabet, l.body)
                    .map_err(|m| err(l.number, l.body_col, ParseErrorKind::PseudoLength(m)))?;
                pseudolength = Some(pl);
            }
            _ => {}
        }
    }
    let presentation = Presentation::new(alphabet, pairs).expect("relations were validated");
    Ok(Document { presentation, pseudolength })
}

/// Writes a presentation in the file format; `parse_document` reads it back unchanged.
pub fn serialize(p: &Presentation, pl: Option<&PseudoLength>) -> String {
    let al = p.alphabet();
    let mut out = String::new();
    let _ = writeln!(out, "letters: {}", al.names().join(" "));
    for r in p.relations() {
        let _ = writeln!(out, "rel: {} = {}", al.display_positive(r.lhs()), al.display_positive(r.rhs()));
    }
    if let Some(pl) = pl {
        let _ = writeln!(out, "pseudolength: {}", pl.to_text(al));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aabb() {
        let p = parse_presentation("letters: a b\nrel: a a = b b\nrel: a b = b a").unwrap();
        assert_eq!(p.alphabet().len(), 2);
        assert_eq!(p.relations().len(), 2);
        assert_eq!(p.relations()[1].id, 1);
    }

    #[test]
    fn relation_free() {
        let p = parse_presentation("letters: a\n").unwrap();
        assert!(p.relations().is_empty());
    }

    #[test]
    fn empty_side() {
        let e = parse_presentation("letters: a\nrel: a = ").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::EmptySide);
        assert_eq!((e.line, e.column), (2, 9));
        let e = parse_presentation("letters: a\nrel:  = a").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::EmptySide);
    }

    #[test]
    fn unknown_letter_position() {
        let e = parse_presentation("letters: a b\n  rel: a b = c a\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownLetter("c".into()));
        assert_eq!((e.line, e.column), (2, 14));
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_presentation("letter: a").unwrap_err().kind, ParseErrorKind::Syntax(_)));
        assert!(matches!(parse_presentation("letters: a\nrel: a a").unwrap_err().kind, ParseErrorKind::Syntax(_)));
        assert!(matches!(parse_presentation("rel: a = a a").unwrap_err().kind, ParseErrorKind::Syntax(_)));
        assert!(matches!(parse_presentation("letters: a a").unwrap_err().kind, ParseErrorKind::DuplicateLetter(_)));
        assert!(matches!(parse_presentation("letters: a^b").unwrap_err().kind, ParseErrorKind::InvalidLetter(_)));
    }

    #[test]
    fn chains_and_comments() {
        let p = parse_presentation("# header\nletters: a b c   # three\nrel: a b = b c = c a\n").unwrap();
        assert_eq!(p.relations().len(), 3);
    }

    #[test]
    fn pseudolength_line() {
        let d = parse_document("letters: a b\nrel: a b a = b b\npseudolength: weights a=1 b=2\n").unwrap();
        assert!(matches!(d.pseudolength, Some(PseudoLength::AdditiveWeights(_))));
        let e = parse_document("letters: a\npseudolength: weights b=1").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::PseudoLength(_)));
    }

    #[test]
    fn round_trip() {
        let d = parse_document("letters: s2 s1\nrel: s2 s1 s2 = s1 s2 s1\npseudolength: inversions s1 s2\n").unwrap();
        let text = serialize(&d.presentation, d.pseudolength.as_ref());
        assert_eq!(parse_document(&text).unwrap(), d);
    }
}
