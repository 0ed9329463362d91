//! Memoized set-valued right reversing of `u^-1 v`.
//!
//! The terminal set of `u^-1 t v2` is assembled from the terminals of
//! `u^-1 t` followed by those of `u1^-1 v2`, and the terminal set of
//! `(s u2)^-1 t` from those of `s^-1 t` and `u2^-1 x1`. Sharing the cells
//! through a cache makes deciding many pairs over one presentation cheap.
//!
//! Emptiness only needs the terminals with empty numerator, `u^-1 v ⇝
//! w^-1`. Their denominators compose the same way and stay few even when
//! the full terminal sets do not, so they get their own cache.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use crate::presentation::Presentation;
use crate::word::PositiveWord;

/// `(num, den)` pairs: `u^-1 v` reverses to `num · den^-1`.
pub type TerminalSet = Rc<Vec<(PositiveWord, PositiveWord)>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridLimits {
    pub max_word_len: usize,
    pub max_depth: usize,
    /// The cache is dropped between queries once it grows past this many
    /// entries; a single query that outgrows it gives up.
    pub max_cache: usize,
    /// Largest terminal set kept for one cell.
    pub max_terminals: usize,
}

impl Default for GridLimits {
    fn default() -> Self {
        GridLimits { max_word_len: 256, max_depth: 512, max_cache: 2_000_000, max_terminals: 20_000 }
    }
}

impl GridLimits {
    /// Word length and cache size taken from a search budget.
    pub fn from_budget(b: &crate::engine::Budget) -> Self {
        GridLimits { max_word_len: b.max_word_len, max_cache: b.max_visited.max(1024), ..GridLimits::default() }
    }
}

pub struct GridReverser<'a> {
    p: &'a Presentation,
    limits: GridLimits,
    cache: HashMap<(PositiveWord, PositiveWord), TerminalSet>,
    in_progress: HashSet<(PositiveWord, PositiveWord)>,
    absorbed: HashMap<(PositiveWord, PositiveWord), Rc<Vec<PositiveWord>>>,
    absorbing: HashSet<(PositiveWord, PositiveWord)>,
    depth: usize,
}

impl<'a> GridReverser<'a> {
    pub fn new(p: &'a Presentation, limits: GridLimits) -> Self {
        GridReverser {
            p,
            limits,
            cache: HashMap::new(),
            in_progress: HashSet::new(),
            absorbed: HashMap::new(),
            absorbing: HashSet::new(),
            depth: 0,
        }
    }

    /// All terminals of `u^-1 v`, or `None` if a limit was hit or some
    /// reversing sequence loops.
    pub fn terminals(&mut self, u: &PositiveWord, v: &PositiveWord) -> Option<TerminalSet> {
        if self.depth == 0 && self.cache.len() > self.limits.max_cache {
            self.cache.clear();
        }
        self.compute(u.as_slice(), v.as_slice())
    }

    /// `Some(true)` iff `u^-1 v` reverses to the empty word.
    pub fn reverses_to_empty(&mut self, u: &PositiveWord, v: &PositiveWord) -> Option<bool> {
        self.denominators(u, v).map(|set| set.iter().any(|w| w.is_empty()))
    }

    /// Every `w` with `u^-1 v ⇝ w^-1`, sorted.
    pub fn denominators(&mut self, u: &PositiveWord, v: &PositiveWord) -> Option<Rc<Vec<PositiveWord>>> {
        if self.depth == 0 && self.cache.len() + self.absorbed.len() > self.limits.max_cache {
            self.cache.clear();
            self.absorbed.clear();
        }
        self.absorb(u.as_slice(), v.as_slice())
    }

    fn absorb(&mut self, u: &[crate::word::Letter], v: &[crate::word::Letter]) -> Option<Rc<Vec<PositiveWord>>> {
        if v.is_empty() {
            return Some(Rc::new(vec![PositiveWord(u.to_vec())]));
        }
        if u.is_empty() {
            return Some(Rc::new(Vec::new()));
        }
        if u.len() > self.limits.max_word_len || v.len() > self.limits.max_word_len {
            return None;
        }
        let key = (PositiveWord(u.to_vec()), PositiveWord(v.to_vec()));
        if let Some(hit) = self.absorbed.get(&key) {
            return Some(hit.clone());
        }
        if self.cache.len() + self.absorbed.len() > self.limits.max_cache {
            return None;
        }
        if self.depth >= self.limits.max_depth || !self.absorbing.insert(key.clone()) {
            return None;
        }
        self.depth += 1;
        let result = self.expand_absorb(u, v);
        self.depth -= 1;
        self.absorbing.remove(&key);
        let set = Rc::new(result?);
        self.absorbed.insert(key, set.clone());
        Some(set)
    }

    fn expand_absorb(&mut self, u: &[crate::word::Letter], v: &[crate::word::Letter]) -> Option<Vec<PositiveWord>> {
        let mut out = Vec::new();
        if v.len() > 1 {
            let first = self.absorb(u, &v[..1])?;
            for u1 in first.iter() {
                out.extend(self.absorb(u1.as_slice(), &v[1..])?.iter().cloned());
            }
        } else {
            let (s, t) = (u[0], v[0]);
            let mut cells: Vec<(PositiveWord, PositiveWord)> = Vec::new();
            if s == t {
                cells.push((PositiveWord::empty(), PositiveWord::empty()));
            }
            cells.extend(self.p.right_complements(s, t).iter().map(|c| (c.num.clone(), c.den.clone())));
            for (x1, s1) in cells {
                for w in self.absorb(&u[1..], x1.as_slice())?.iter() {
                    out.push(s1.concat(w));
                }
            }
        }
        out.sort();
        out.dedup();
        (out.len() <= self.limits.max_terminals).then_some(out)
    }

    fn compute(&mut self, u: &[crate::word::Letter], v: &[crate::word::Letter]) -> Option<TerminalSet> {
        if u.is_empty() {
            return Some(Rc::new(vec![(PositiveWord(v.to_vec()), PositiveWord::empty())]));
        }
        if v.is_empty() {
            return Some(Rc::new(vec![(PositiveWord::empty(), PositiveWord(u.to_vec()))]));
        }
        if u.len() > self.limits.max_word_len || v.len() > self.limits.max_word_len {
            return None;
        }
        let key = (PositiveWord(u.to_vec()), PositiveWord(v.to_vec()));
        if let Some(hit) = self.cache.get(&key) {
            return Some(hit.clone());
        }
        if self.cache.len() > self.limits.max_cache {
            return None;
        }
        if self.depth >= self.limits.max_depth || !self.in_progress.insert(key.clone()) {
            return None;
        }
        self.depth += 1;
        let result = self.expand(u, v);
        self.depth -= 1;
        self.in_progress.remove(&key);
        let set = Rc::new(result?);
        self.cache.insert(key, set.clone());
        Some(set)
    }

    fn expand(&mut self, u: &[crate::word::Letter], v: &[crate::word::Letter]) -> Option<Vec<(PositiveWord, PositiveWord)>> {
        let mut out = Vec::new();
        if u.len() == 1 && v.len() == 1 {
            if u[0] == v[0] {
                out.push((PositiveWord::empty(), PositiveWord::empty()));
            }
            for c in self.p.right_complements(u[0], v[0]) {
                out.push((c.num.clone(), c.den.clone()));
            }
        } else if v.len() > 1 {
            let first = self.compute(u, &v[..1])?;
            for (x, u1) in first.iter() {
                let rest = self.compute(u1.as_slice(), &v[1..])?;
                for (y, u2) in rest.iter() {
                    out.push((x.concat(y), u2.clone()));
                }
                if out.len() > self.limits.max_terminals {
                    return None;
                }
            }
        } else {
            let first = self.compute(&u[..1], v)?;
            for (x1, s1) in first.iter() {
                let rest = self.compute(&u[1..], x1.as_slice())?;
                for (x2, u2) in rest.iter() {
                    out.push((x2.clone(), s1.concat(u2)));
                }
                if out.len() > self.limits.max_terminals {
                    return None;
                }
            }
        }
        out.sort();
        out.dedup();
        (out.len() <= self.limits.max_terminals).then_some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{reverse_exhaustive, Budget, Direction};
    use crate::parse::parse_presentation;
    use crate::word::SignedWord;

    #[test]
    fn matches_exhaustive_search() {
        let p = parse_presentation("letters: a b c\nrel: a a = b b = c c\nrel: a b = b c = c a\nrel: a c = b a = c b").unwrap();
        let al = p.alphabet();
        let mut grid = GridReverser::new(&p, GridLimits::default());
        for (u, v) in [("a b", "c a"), ("a a b", "b c"), ("c", "a b c a"), ("a", "a"), ("b a c", "c b b")] {
            let (u, v) = (al.parse_positive(u).unwrap(), al.parse_positive(v).unwrap());
            let got: Vec<_> = grid.terminals(&u, &v).unwrap().iter().cloned().collect();
            let out = reverse_exhaustive(&p, &SignedWord::left_fraction(&u, &v), Direction::Right, &Budget::default());
            let want: Vec<_> = out.fractions().into_iter().collect();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn denominators_match_terminals() {
        let p = parse_presentation("letters: a b c\nrel: a a = b b = c c\nrel: a b = b c = c a\nrel: a c = b a = c b").unwrap();
        let al = p.alphabet();
        let mut grid = GridReverser::new(&p, GridLimits::default());
        for (u, v) in [("a b", "c a"), ("a a b", "b c"), ("c a b", "a"), ("a", "a"), ("b a c", "c b b")] {
            let (u, v) = (al.parse_positive(u).unwrap(), al.parse_positive(v).unwrap());
            let want: Vec<_> = grid.terminals(&u, &v).unwrap().iter().filter(|(x, _)| x.is_empty()).map(|(_, y)| y.clone()).collect();
            assert_eq!(*grid.denominators(&u, &v).unwrap(), want);
        }
    }

    #[test]
    fn loops_are_unknown() {
        let p = parse_presentation("letters: a b\nrel: b a = a a b").unwrap();
        let al = p.alphabet();
        let mut grid = GridReverser::new(&p, GridLimits::default());
        let (u, v) = (al.parse_positive("b").unwrap(), al.parse_positive("a b").unwrap());
        assert_eq!(grid.terminals(&u, &v), None);
    }
}
