//! Word reversing: single steps, exhaustive search, memoized grid reversing,
//! alternating reduction and the product-splitting check.

mod alternating;
mod grid;
mod search;
mod split;
mod trace;

pub use alternating::{alternating_reduce, AlternatingOptions};
pub use grid::{GridLimits, GridReverser};
pub use search::{
    reverse_exhaustive, reverse_search, reverses_to_empty, Decision, Fraction, FractionShape,
    SearchOptions, SearchOutcome, Strategy, Terminal,
};
pub use split::{split_check, SplitWitness};
pub use trace::ReversingTrace;

use crate::presentation::{Orientation, Presentation};
use crate::word::{SignedLetter, SignedWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Right,
    Left,
}

impl Direction {
    pub fn tag(self) -> &'static str {
        match self {
            Direction::Right => "r",
            Direction::Left => "l",
        }
    }

    pub fn other(self) -> Self {
        match self {
            Direction::Right => Direction::Left,
            Direction::Left => Direction::Right,
        }
    }
}

/// Where an extended step rewrites: inside a positive or a negative factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// `s^-1 s -> ε` (right) or `s s^-1 -> ε` (left).
    Delete,
    /// Closes a cell with a relation, read in the given orientation.
    Relation { rel_id: usize, orientation: Orientation },
    /// Replaces the first side of a relation by the second inside a
    /// positive factor, or the inverse of one by the inverse of the other.
    Extended { rel_id: usize, orientation: Orientation, side: Side },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReversingStep {
    pub direction: Direction,
    pub position: usize,
    pub kind: StepKind,
}

/// Search limits. All three must be positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Longest reversing sequence explored.
    pub max_branch_steps: usize,
    pub max_word_len: usize,
    pub max_visited: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_branch_steps: 10_000, max_word_len: 256, max_visited: 1_000_000 }
    }
}

impl Budget {
    pub fn new(max_branch_steps: usize, max_word_len: usize, max_visited: usize) -> Option<Self> {
        (max_branch_steps > 0 && max_word_len > 0 && max_visited > 0)
            .then_some(Budget { max_branch_steps, max_word_len, max_visited })
    }
}

fn splice(w: &SignedWord, pos: usize, remove: usize, insert: impl IntoIterator<Item = SignedLetter>) -> SignedWord {
    let items = w.as_slice();
    let mut out = Vec::with_capacity(items.len() + 4);
    out.extend_from_slice(&items[..pos]);
    out.extend(insert);
    out.extend_from_slice(&items[pos + remove..]);
    SignedWord(out)
}

/// All plain right steps, ordered by position, deletion first, then relation
/// id and orientation.
pub fn step_right(p: &Presentation, w: &SignedWord) -> Vec<(ReversingStep, SignedWord)> {
    let mut out = Vec::new();
    for pos in 0..w.len().saturating_sub(1) {
        right_steps_at(p, w, pos, &mut out);
    }
    out
}

/// Mirror of [`step_right`] on factors `s t^-1`.
pub fn step_left(p: &Presentation, w: &SignedWord) -> Vec<(ReversingStep, SignedWord)> {
    let mut out = Vec::new();
    for pos in 0..w.len().saturating_sub(1) {
        left_steps_at(p, w, pos, &mut out);
    }
    out
}

pub fn steps(p: &Presentation, w: &SignedWord, dir: Direction) -> Vec<(ReversingStep, SignedWord)> {
    match dir {
        Direction::Right => step_right(p, w),
        Direction::Left => step_left(p, w),
    }
}

/// True if `w[pos..pos+2]` is a factor that `dir` reversing acts on.
pub(crate) fn is_factor(w: &SignedWord, pos: usize, dir: Direction) -> bool {
    let items = w.as_slice();
    if pos + 1 >= items.len() {
        return false;
    }
    match dir {
        Direction::Right => !items[pos].positive && items[pos + 1].positive,
        Direction::Left => items[pos].positive && !items[pos + 1].positive,
    }
}

/// True if the factor at `pos` can never be reversed.
pub(crate) fn is_dead_factor(p: &Presentation, w: &SignedWord, pos: usize, dir: Direction) -> bool {
    let items = w.as_slice();
    let (s, t) = (items[pos].letter, items[pos + 1].letter);
    s != t
        && match dir {
            Direction::Right => p.right_complements(s, t).is_empty(),
            Direction::Left => p.left_complements(s, t).is_empty(),
        }
}

pub(crate) fn steps_at(
    p: &Presentation,
    w: &SignedWord,
    pos: usize,
    dir: Direction,
    out: &mut Vec<(ReversingStep, SignedWord)>,
) {
    match dir {
        Direction::Right => right_steps_at(p, w, pos, out),
        Direction::Left => left_steps_at(p, w, pos, out),
    }
}

fn right_steps_at(p: &Presentation, w: &SignedWord, pos: usize, out: &mut Vec<(ReversingStep, SignedWord)>) {
    if !is_factor(w, pos, Direction::Right) {
        return;
    }
    let items = w.as_slice();
    let (s, t) = (items[pos].letter, items[pos + 1].letter);
    if s == t {
        let step = ReversingStep { direction: Direction::Right, position: pos, kind: StepKind::Delete };
        out.push((step, splice(w, pos, 2, [])));
    }
    for c in p.right_complements(s, t) {
        let step = ReversingStep {
            direction: Direction::Right,
            position: pos,
            kind: StepKind::Relation { rel_id: c.rel_id, orientation: c.orientation },
        };
        let insert = c.num.iter().map(|&l| SignedLetter::pos(l)).chain(c.den.iter().rev().map(|&l| SignedLetter::neg(l)));
        out.push((step, splice(w, pos, 2, insert)));
    }
}

fn left_steps_at(p: &Presentation, w: &SignedWord, pos: usize, out: &mut Vec<(ReversingStep, SignedWord)>) {
    if !is_factor(w, pos, Direction::Left) {
        return;
    }
    let items = w.as_slice();
    let (s, t) = (items[pos].letter, items[pos + 1].letter);
    if s == t {
        let step = ReversingStep { direction: Direction::Left, position: pos, kind: StepKind::Delete };
        out.push((step, splice(w, pos, 2, [])));
    }
    for c in p.left_complements(s, t) {
        let step = ReversingStep {
            direction: Direction::Left,
            position: pos,
            kind: StepKind::Relation { rel_id: c.rel_id, orientation: c.orientation },
        };
        let insert = c.num.iter().rev().map(|&l| SignedLetter::neg(l)).chain(c.den.iter().map(|&l| SignedLetter::pos(l)));
        out.push((step, splice(w, pos, 2, insert)));
    }
}

/// Extended steps: a relation applied inside a positive or negative factor.
/// They are tagged with `dir` but do not depend on it.
pub fn extended_steps(p: &Presentation, w: &SignedWord, dir: Direction) -> Vec<(ReversingStep, SignedWord)> {
    let items = w.as_slice();
    let mut out = Vec::new();
    for pos in 0..items.len() {
        for rel in p.relations() {
            for o in [Orientation::LhsFirst, Orientation::RhsFirst] {
                let (x, y) = rel.sides(o);
                if pos + x.len() > items.len() {
                    continue;
                }
                let window = &items[pos..pos + x.len()];
                if window.iter().zip(x.iter()).all(|(a, &b)| a.positive && a.letter == b) {
                    let step = ReversingStep {
                        direction: dir,
                        position: pos,
                        kind: StepKind::Extended { rel_id: rel.id, orientation: o, side: Side::Positive },
                    };
                    out.push((step, splice(w, pos, x.len(), y.iter().map(|&l| SignedLetter::pos(l)))));
                }
                if window.iter().zip(x.iter().rev()).all(|(a, &b)| !a.positive && a.letter == b) {
                    let step = ReversingStep {
                        direction: dir,
                        position: pos,
                        kind: StepKind::Extended { rel_id: rel.id, orientation: o, side: Side::Negative },
                    };
                    out.push((step, splice(w, pos, x.len(), y.iter().rev().map(|&l| SignedLetter::neg(l)))));
                }
            }
        }
    }
    out
}

/// Applies one recorded step, checking that it is legal at its position.
pub fn apply_step(p: &Presentation, w: &SignedWord, step: &ReversingStep) -> Result<SignedWord, String> {
    let items = w.as_slice();
    let pos = step.position;
    match step.kind {
        StepKind::Delete | StepKind::Relation { .. } => {
            if !is_factor(w, pos, step.direction) {
                return Err(format!("no reversible factor at position {pos}"));
            }
            let (s, t) = (items[pos].letter, items[pos + 1].letter);
            match step.kind {
                StepKind::Delete => {
                    if s != t {
                        return Err("deletion needs equal letters".into());
                    }
                    Ok(splice(w, pos, 2, []))
                }
                StepKind::Relation { rel_id, orientation } => {
                    let rel = p.relation(rel_id).ok_or_else(|| format!("no relation {rel_id}"))?;
                    let (x, y) = rel.sides(orientation);
                    let (x, y) = (x.as_slice(), y.as_slice());
                    match step.direction {
                        Direction::Right => {
                            if x[0] != s || y[0] != t {
                                return Err(format!("relation {rel_id} does not start with the factor letters"));
                            }
                            let insert = x[1..]
                                .iter()
                                .map(|&l| SignedLetter::pos(l))
                                .chain(y[1..].iter().rev().map(|&l| SignedLetter::neg(l)));
                            Ok(splice(w, pos, 2, insert))
                        }
                        Direction::Left => {
                            if x[x.len() - 1] != s || y[y.len() - 1] != t {
                                return Err(format!("relation {rel_id} does not end with the factor letters"));
                            }
                            let insert = x[..x.len() - 1]
                                .iter()
                                .rev()
                                .map(|&l| SignedLetter::neg(l))
                                .chain(y[..y.len() - 1].iter().map(|&l| SignedLetter::pos(l)));
                            Ok(splice(w, pos, 2, insert))
                        }
                    }
                }
                StepKind::Extended { .. } => unreachable!(),
            }
        }
        StepKind::Extended { rel_id, orientation, side } => {
            let rel = p.relation(rel_id).ok_or_else(|| format!("no relation {rel_id}"))?;
            let (x, y) = rel.sides(orientation);
            if pos + x.len() > items.len() {
                return Err("extended step runs past the end of the word".into());
            }
            let window = &items[pos..pos + x.len()];
            match side {
                Side::Positive => {
                    if !window.iter().zip(x.iter()).all(|(a, &b)| a.positive && a.letter == b) {
                        return Err("positive factor does not match relation side".into());
                    }
                    Ok(splice(w, pos, x.len(), y.iter().map(|&l| SignedLetter::pos(l))))
                }
                Side::Negative => {
                    if !window.iter().zip(x.iter().rev()).all(|(a, &b)| !a.positive && a.letter == b) {
                        return Err("negative factor does not match relation side".into());
                    }
                    Ok(splice(w, pos, x.len(), y.iter().rev().map(|&l| SignedLetter::neg(l))))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_presentation;

    fn aabb() -> Presentation {
        parse_presentation("letters: a b\nrel: a a = b b\nrel: a b = b a").unwrap()
    }

    fn show(p: &Presentation, w: &SignedWord) -> String {
        p.alphabet().display_signed(w).to_string()
    }

    #[test]
    fn right_successors() {
        let p = aabb();
        let w = p.alphabet().parse_signed("a^-1 b a b^-1").unwrap();
        let succ: Vec<String> = step_right(&p, &w).iter().map(|(_, x)| show(&p, x)).collect();
        assert_eq!(succ, vec!["a b^-1 a b^-1", "b a^-1 a b^-1"]);
        let pos = p.alphabet().parse_signed("a b a").unwrap();
        assert!(step_right(&p, &pos).is_empty());
    }

    #[test]
    fn left_successors() {
        let p = aabb();
        let w = p.alphabet().parse_signed("a^-1 b a b^-1").unwrap();
        let succ: Vec<String> = step_left(&p, &w).iter().map(|(_, x)| show(&p, x)).collect();
        assert!(succ.contains(&"a^-1 b b^-1 a".to_string()));
        let neg = p.alphabet().parse_signed("a^-1 b^-1").unwrap();
        assert!(step_left(&p, &neg).is_empty());
        let del = p.alphabet().parse_signed("a a^-1").unwrap();
        assert!(step_left(&p, &del).iter().any(|(_, x)| x.is_empty()));
    }

    #[test]
    fn deletion_only() {
        let p = parse_presentation("letters: a b").unwrap();
        let w = p.alphabet().parse_signed("b^-1 b").unwrap();
        let succ = step_right(&p, &w);
        assert_eq!(succ.len(), 1);
        assert!(succ[0].1.is_empty());
    }

    #[test]
    fn apply_matches_enumeration() {
        let p = aabb();
        let w = p.alphabet().parse_signed("a^-1 b a b^-1 b^-1 a").unwrap();
        for dir in [Direction::Right, Direction::Left] {
            for (step, next) in steps(&p, &w, dir).into_iter().chain(extended_steps(&p, &w, dir)) {
                assert_eq!(apply_step(&p, &w, &step).unwrap(), next);
            }
        }
    }

    #[test]
    fn extended_rewrites() {
        let p = aabb();
        let w = p.alphabet().parse_signed("a a b^-1").unwrap();
        let succ: Vec<String> = extended_steps(&p, &w, Direction::Right).iter().map(|(_, x)| show(&p, x)).collect();
        assert!(succ.contains(&"b b b^-1".to_string()));
        let w = p.alphabet().parse_signed("b^-1 a^-1").unwrap();
        let succ: Vec<String> = extended_steps(&p, &w, Direction::Left).iter().map(|(_, x)| show(&p, x)).collect();
        assert_eq!(succ, vec!["a^-1 b^-1"]);
    }
}
