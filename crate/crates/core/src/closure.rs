//! Closure of the alphabet under right reversing, and macro-step reversing
//! through the table of closure-word pairs.

use std::collections::{BTreeSet, HashMap};

use crate::engine::{reverse_search, Budget, Direction, GridLimits, GridReverser, SearchOptions};
use crate::presentation::Presentation;
use crate::word::{PositiveWord, SignedLetter, SignedWord};

pub const DEFAULT_MAX_WORDS: usize = 2_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureStatus {
    Closed,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureResult {
    pub words: BTreeSet<PositiveWord>,
    pub status: ClosureStatus,
    /// Pairs with no terminal at all.
    pub failed_pairs: BTreeSet<(PositiveWord, PositiveWord)>,
    /// Pairs whose reversing ran out of budget.
    pub budget_pairs: BTreeSet<(PositiveWord, PositiveWord)>,
    /// Set when the word count or word length limit stopped the iteration.
    pub word_limit_hit: bool,
    /// Largest minimal step count over all table entries.
    pub max_pair_steps: usize,
    pub rounds: usize,
}

impl ClosureResult {
    pub fn is_closed(&self) -> bool {
        self.status == ClosureStatus::Closed
    }
}

/// One terminal of `u^-1 v` for closure words `u`, `v`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TableEntry {
    pub num: PositiveWord,
    pub den: PositiveWord,
    pub steps: usize,
}

/// Terminals of `u^-1 v` for all pairs of closure words, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McmTable {
    pub closed: bool,
    entries: HashMap<(PositiveWord, PositiveWord), Vec<TableEntry>>,
}

impl McmTable {
    pub fn get(&self, u: &PositiveWord, v: &PositiveWord) -> Option<&[TableEntry]> {
        self.entries.get(&(u.clone(), v.clone())).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(PositiveWord, PositiveWord), &Vec<TableEntry>)> {
        self.entries.iter()
    }
}

/// Round-synchronous fixed point: every round reverses the pairs that
/// involve a word found in the previous round. The table is filled, with
/// minimal step counts, only when the closure closes.
pub fn compute_closure(p: &Presentation, b: &Budget, max_words: usize) -> (ClosureResult, McmTable) {
    let mut words: BTreeSet<PositiveWord> = p.alphabet().letters().map(PositiveWord::letter).collect();
    words.insert(PositiveWord::empty());
    let mut frontier: BTreeSet<PositiveWord> = words.clone();
    let mut grid = GridReverser::new(p, GridLimits::from_budget(b));
    let mut failed_pairs = BTreeSet::new();
    let mut budget_pairs = BTreeSet::new();
    let mut word_limit_hit = false;
    let mut rounds = 0;

    while !word_limit_hit {
        rounds += 1;
        let mut found: BTreeSet<PositiveWord> = BTreeSet::new();
        'round: for u in &words {
            for v in &words {
                if !frontier.contains(u) && !frontier.contains(v) {
                    continue;
                }
                let Some(set) = grid.terminals(u, v) else {
                    budget_pairs.insert((u.clone(), v.clone()));
                    continue;
                };
                if set.is_empty() {
                    failed_pairs.insert((u.clone(), v.clone()));
                }
                for (num, den) in set.iter() {
                    for x in [num, den] {
                        if !words.contains(x) {
                            found.insert(x.clone());
                        }
                    }
                }
                if words.len() + found.len() > max_words {
                    word_limit_hit = true;
                    break 'round;
                }
            }
        }
        if !budget_pairs.is_empty() || found.is_empty() {
            break;
        }
        if found.iter().any(|w| w.len() > b.max_word_len) {
            word_limit_hit = true;
            break;
        }
        words.extend(found.iter().cloned());
        frontier = found;
    }

    let mut entries: HashMap<(PositiveWord, PositiveWord), Vec<TableEntry>> = HashMap::new();
    let mut max_pair_steps = 0;
    if budget_pairs.is_empty() && !word_limit_hit {
        let opts = SearchOptions::terminals_only();
        for u in &words {
            for v in &words {
                let out = reverse_search(p, &SignedWord::left_fraction(u, v), Direction::Right, b, &opts);
                if out.budget_exceeded {
                    budget_pairs.insert((u.clone(), v.clone()));
                }
                let mut row: Vec<TableEntry> = out
                    .terminals
                    .iter()
                    .map(|t| TableEntry { num: t.fraction.num.clone(), den: t.fraction.den.clone(), steps: t.steps })
                    .collect();
                row.sort();
                max_pair_steps = row.iter().map(|e| e.steps).fold(max_pair_steps, usize::max);
                entries.insert((u.clone(), v.clone()), row);
            }
        }
    }

    let closed = budget_pairs.is_empty() && !word_limit_hit;
    if !closed {
        entries.clear();
    }
    let status = if closed { ClosureStatus::Closed } else { ClosureStatus::BudgetExceeded };
    (
        ClosureResult { words, status, failed_pairs, budget_pairs, word_limit_hit, max_pair_steps, rounds },
        McmTable { closed, entries },
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrVerdict {
    Finite(ClosureResult),
    Unknown(ClosureResult),
}

impl FrVerdict {
    pub fn is_finite(&self) -> bool {
        matches!(self, FrVerdict::Finite(_))
    }

    pub fn result(&self) -> &ClosureResult {
        match self {
            FrVerdict::Finite(r) | FrVerdict::Unknown(r) => r,
        }
    }
}

/// Finiteness of the closure. An infinite closure shows up as `Unknown`.
pub fn check_fr(p: &Presentation, b: &Budget, max_words: usize) -> FrVerdict {
    let (res, _) = compute_closure(p, b, max_words);
    if res.is_closed() {
        FrVerdict::Finite(res)
    } else {
        FrVerdict::Unknown(res)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundedOutcome {
    Terminal {
        num: PositiveWord,
        den: PositiveWord,
        macro_steps: usize,
        /// Positive and negative letter counts of the input.
        p: usize,
        q: usize,
    },
    /// A looked-up pair has no terminal.
    Stuck { word: SignedWord, macro_steps: usize },
    Inapplicable(String),
}

/// Reverses `w` by table lookups on adjacent `u^-1 v` slots, always taking
/// the leftmost such factor and the least terminal. Each lookup removes one
/// (negative slot, positive slot) crossing, so at most `p·q` lookups occur.
pub fn bounded_reverse(p: &Presentation, table: &McmTable, w: &SignedWord) -> BoundedOutcome {
    if !table.closed {
        return BoundedOutcome::Inapplicable("table is not closed".into());
    }
    if let Some(x) = w.iter().find(|x| !p.alphabet().contains(x.letter)) {
        return BoundedOutcome::Inapplicable(format!("letter {} outside the alphabet", x.letter.index()));
    }
    let (pc, qc) = (w.positive_count(), w.negative_count());
    let mut slots: Vec<(PositiveWord, bool)> = w.iter().map(|x| (PositiveWord::letter(x.letter), x.positive)).collect();
    let mut macro_steps = 0;
    while let Some(i) = (0..slots.len().saturating_sub(1)).find(|&i| !slots[i].1 && slots[i + 1].1) {
        let (u, v) = (&slots[i].0, &slots[i + 1].0);
        let Some(row) = table.get(u, v) else {
            return BoundedOutcome::Inapplicable("pair missing from table".into());
        };
        let Some(e) = row.first() else {
            return BoundedOutcome::Stuck { word: slots_to_word(&slots), macro_steps };
        };
        let mut repl = Vec::with_capacity(2);
        if !e.num.is_empty() {
            repl.push((e.num.clone(), true));
        }
        if !e.den.is_empty() {
            repl.push((e.den.clone(), false));
        }
        slots.splice(i..i + 2, repl);
        macro_steps += 1;
    }
    let (num, den) = slots_to_word(&slots).as_right_fraction().expect("no crossing left");
    BoundedOutcome::Terminal { num, den, macro_steps, p: pc, q: qc }
}

fn slots_to_word(slots: &[(PositiveWord, bool)]) -> SignedWord {
    let mut out = Vec::new();
    for (w, positive) in slots {
        if *positive {
            out.extend(w.iter().map(|&l| SignedLetter::pos(l)));
        } else {
            out.extend(w.iter().rev().map(|&l| SignedLetter::neg(l)));
        }
    }
    SignedWord(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_presentation;

    #[test]
    fn aabb_closure() {
        let p = parse_presentation("letters: a b\nrel: a a = b b\nrel: a b = b a").unwrap();
        let (res, table) = compute_closure(&p, &Budget::default(), DEFAULT_MAX_WORDS);
        assert!(res.is_closed());
        let names: Vec<String> = res.words.iter().map(|w| p.alphabet().display_positive(w).to_string()).collect();
        assert_eq!(names, vec!["1", "a", "b"]);
        assert_eq!(table.len(), 9);
    }

    #[test]
    fn free_closure() {
        let p = parse_presentation("letters: a b").unwrap();
        let (res, _) = compute_closure(&p, &Budget::default(), DEFAULT_MAX_WORDS);
        assert!(res.is_closed());
        assert_eq!(res.words.len(), 3);
        assert_eq!(res.failed_pairs.len(), 2);
    }

    #[test]
    fn bounded_examples() {
        let p = parse_presentation("letters: a b\nrel: a a = b b\nrel: a b = b a").unwrap();
        let (_, table) = compute_closure(&p, &Budget::default(), DEFAULT_MAX_WORDS);
        let al = p.alphabet();
        match bounded_reverse(&p, &table, &al.parse_signed("a^-1 b a b^-1").unwrap()) {
            BoundedOutcome::Terminal { macro_steps, p: pc, q, .. } => assert!(macro_steps <= pc * q),
            other => panic!("{other:?}"),
        }
        match bounded_reverse(&p, &table, &al.parse_signed("a b").unwrap()) {
            BoundedOutcome::Terminal { macro_steps, .. } => assert_eq!(macro_steps, 0),
            other => panic!("{other:?}"),
        }
        match bounded_reverse(&p, &table, &al.parse_signed("a^-1 b").unwrap()) {
            BoundedOutcome::Terminal { macro_steps, .. } => assert_eq!(macro_steps, 1),
            other => panic!("{other:?}"),
        }
    }
}
