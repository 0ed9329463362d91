//! Splitting a reversing of a product `w1 w2` into three sub-reversings.
//!
//! Letters are tagged by origin: 1 for letters of `w1` and of cells between
//! two such letters, 2 likewise for `w2`, 0 for everything else. The word
//! always reads (tag 1)(tag 0)(tag 2), so the tag-1 cells form a reversing
//! of `w1`, the tag-2 cells a reversing of `w2`, and the mixed cells a
//! reversing of `u0^-1 v0` in between.

use super::{apply_step, Direction, ReversingStep, ReversingTrace, StepKind};
use crate::error::TraceError;
use crate::presentation::Presentation;
use crate::word::{PositiveWord, SignedLetter, SignedWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitWitness {
    pub u1: PositiveWord,
    pub u2: PositiveWord,
    pub v1: PositiveWord,
    pub v2: PositiveWord,
    pub u0: PositiveWord,
    pub v0: PositiveWord,
    /// `w1 -> v1 u0^-1`
    pub first: ReversingTrace,
    /// `w2 -> v0 u1^-1`
    pub second: ReversingTrace,
    /// `u0^-1 v0 -> v2 u2^-1`
    pub middle: ReversingTrace,
}

impl SplitWitness {
    pub fn step_counts(&self) -> (usize, usize, usize) {
        (self.first.len(), self.second.len(), self.middle.len())
    }
}

#[derive(Clone, Copy)]
struct Item {
    letter: SignedLetter,
    id: usize,
    tag: u8,
}

fn letters(items: &[Item]) -> SignedWord {
    SignedWord(items.iter().map(|x| x.letter).collect())
}

/// A projected sub-word that the steps of one class are replayed on.
struct Projection {
    items: Vec<Item>,
    trace: ReversingTrace,
}

impl Projection {
    fn new(items: Vec<Item>) -> Self {
        let start = letters(&items);
        Projection { items, trace: ReversingTrace::new(start) }
    }

    fn apply(&mut self, p: &Presentation, index: usize, step: &ReversingStep, a: usize, b: usize, out: &[Item]) -> Result<(), TraceError> {
        let pos = self
            .items
            .windows(2)
            .position(|w| w[0].id == a && w[1].id == b)
            .ok_or_else(|| TraceError::InvalidStep { index, reason: "factor letters are not adjacent in the projection".into() })?;
        let local = ReversingStep { position: pos, ..*step };
        let before = letters(&self.items);
        let after = apply_step(p, &before, &local).map_err(|reason| TraceError::InvalidStep { index, reason })?;
        self.items.splice(pos..pos + 2, out.iter().copied());
        debug_assert_eq!(letters(&self.items), after);
        self.trace.steps.push((local, after));
        Ok(())
    }
}

/// Decomposes a right reversing `w1 w2 -> v u^-1` recorded in `trace`.
pub fn split_check(
    p: &Presentation,
    w1: &SignedWord,
    w2: &SignedWord,
    trace: &ReversingTrace,
) -> Result<SplitWitness, TraceError> {
    if trace.start != w1.concat(w2) {
        return Err(TraceError::InvalidStep { index: 0, reason: "trace does not start at w1 w2".into() });
    }
    trace.replay(p)?;
    let (v, u) = trace
        .end()
        .as_right_fraction()
        .ok_or_else(|| TraceError::InvalidStep { index: trace.len(), reason: "trace does not end on a fraction".into() })?;

    let mut next_id = 0usize;
    let mut fresh = |letter: SignedLetter, tag: u8| {
        next_id += 1;
        Item { letter, id: next_id - 1, tag }
    };
    let mut word: Vec<Item> = Vec::with_capacity(w1.len() + w2.len());
    for &l in w1.iter() {
        word.push(fresh(l, 1));
    }
    for &l in w2.iter() {
        word.push(fresh(l, 2));
    }
    let mut first = Projection::new(word.iter().copied().filter(|x| x.tag == 1).collect());
    let mut second = Projection::new(word.iter().copied().filter(|x| x.tag == 2).collect());
    let mut middle_steps: Vec<(usize, ReversingStep, usize, usize, Vec<Item>)> = Vec::new();

    for (index, (step, _)) in trace.steps.iter().enumerate() {
        if step.direction != Direction::Right || matches!(step.kind, StepKind::Extended { .. }) {
            return Err(TraceError::InvalidStep { index, reason: "only plain right steps can be split".into() });
        }
        let pos = step.position;
        let (a, b) = (word[pos], word[pos + 1]);
        let tag = if a.tag == b.tag && a.tag != 0 { a.tag } else { 0 };
        let replaced = apply_step(p, &letters(&word), step).map_err(|reason| TraceError::InvalidStep { index, reason })?;
        let added = replaced.len() + 2 - word.len();
        let out: Vec<Item> = replaced.as_slice()[pos..pos + added].iter().map(|&l| fresh(l, tag)).collect();
        word.splice(pos..pos + 2, out.iter().copied());
        match tag {
            1 => first.apply(p, index, step, a.id, b.id, &out)?,
            2 => second.apply(p, index, step, a.id, b.id, &out)?,
            _ => middle_steps.push((index, *step, a.id, b.id, out)),
        }
    }

    // Tag-1 letters consumed by mixed cells stay at the right end of the
    // first projection, tag-2 ones at the left end of the second.
    let p1 = first.items.clone();
    let p2 = second.items.clone();

    let p1_word = letters(&p1);
    let (v1, u0) = p1_word
        .as_right_fraction()
        .ok_or_else(|| TraceError::InvalidStep { index: trace.len(), reason: "first factor does not end on a fraction".into() })?;
    let p2_word = letters(&p2);
    let (v0, u1) = p2_word
        .as_right_fraction()
        .ok_or_else(|| TraceError::InvalidStep { index: trace.len(), reason: "second factor does not end on a fraction".into() })?;

    let mut middle = Projection::new(
        p1.iter().copied().filter(|x| !x.letter.positive).chain(p2.iter().copied().filter(|x| x.letter.positive)).collect(),
    );
    for (index, step, a, b, out) in &middle_steps {
        middle.apply(p, *index, step, *a, *b, out)?;
    }
    let (v2, u2) = middle
        .trace
        .end()
        .as_right_fraction()
        .ok_or_else(|| TraceError::InvalidStep { index: trace.len(), reason: "middle part does not end on a fraction".into() })?;

    if v1.concat(&v2) != v || u1.concat(&u2) != u {
        return Err(TraceError::InvalidStep { index: trace.len(), reason: "decomposition does not rebuild the terminal".into() });
    }
    Ok(SplitWitness { u1, u2, v1, v2, u0, v0, first: first.trace, second: second.trace, middle: middle.trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{reverse_exhaustive, Budget};
    use crate::parse::parse_presentation;

    #[test]
    fn aabb_example() {
        let p = parse_presentation("letters: a b\nrel: a a = b b\nrel: a b = b a").unwrap();
        let al = p.alphabet();
        let w1 = al.parse_signed("a^-1").unwrap();
        let w2 = al.parse_signed("b a b^-1").unwrap();
        let out = reverse_exhaustive(&p, &w1.concat(&w2), Direction::Right, &Budget::default());
        let t = out
            .terminals
            .iter()
            .find(|t| al.display_positive(&t.fraction.num).to_string() == "b" && t.steps == 2)
            .unwrap();
        let s = split_check(&p, &w1, &w2, &t.trace).unwrap();
        assert_eq!(al.display_positive(&s.u0).to_string(), "a");
        assert!(s.v1.is_empty());
        assert_eq!(al.display_positive(&s.v0).to_string(), "b a");
        assert_eq!(al.display_positive(&s.u1).to_string(), "b");
        assert_eq!(s.step_counts(), (0, 0, 2));
    }

    #[test]
    fn empty_prefix() {
        let p = parse_presentation("letters: a b\nrel: a b = b a").unwrap();
        let al = p.alphabet();
        let w2 = al.parse_signed("a^-1 b").unwrap();
        let out = reverse_exhaustive(&p, &w2, Direction::Right, &Budget::default());
        let s = split_check(&p, &SignedWord::empty(), &w2, &out.terminals[0].trace).unwrap();
        assert!(s.v1.is_empty() && s.u0.is_empty() && s.u2.is_empty());
        assert_eq!(s.step_counts(), (0, 1, 0));
    }

    #[test]
    fn positive_word() {
        let p = parse_presentation("letters: a b").unwrap();
        let al = p.alphabet();
        let (w1, w2) = (al.parse_signed("a b").unwrap(), al.parse_signed("a").unwrap());
        let s = split_check(&p, &w1, &w2, &ReversingTrace::new(w1.concat(&w2))).unwrap();
        assert_eq!(s.v1.concat(&s.v2).len(), 3);
        assert!(s.u1.is_empty() && s.u2.is_empty() && s.u0.is_empty());
    }
}
