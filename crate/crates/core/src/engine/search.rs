use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{extended_steps, is_dead_factor, is_factor, steps, steps_at, Budget, Direction, ReversingStep, ReversingTrace};
use crate::presentation::Presentation;
use crate::word::{PositiveWord, SignedWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Every reversible factor is expanded.
    Full,
    /// Only the leftmost reversible factor is expanded. Steps on distinct
    /// factors commute, so the terminals and their minimal step counts are
    /// the same as with [`Strategy::Full`]; stuck words may differ.
    Leftmost,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub strategy: Strategy,
    /// Also take extended steps (relations applied inside positive or negative factors).
    pub extended: bool,
    /// Treat a word with a factor that has no rule as stuck right away.
    pub prune_dead: bool,
    /// Stop as soon as the empty word is reached.
    pub stop_at_empty: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { strategy: Strategy::Full, extended: false, prune_dead: false, stop_at_empty: false }
    }
}

impl SearchOptions {
    /// Cheapest settings that still find every terminal.
    pub fn terminals_only() -> Self {
        SearchOptions { strategy: Strategy::Leftmost, extended: false, prune_dead: true, stop_at_empty: false }
    }

    /// Settings for deciding whether the empty word is reachable.
    pub fn reach_empty() -> Self {
        SearchOptions { stop_at_empty: true, ..Self::terminals_only() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FractionShape {
    /// `num · den^-1`
    Right,
    /// `den^-1 · num`
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction {
    pub num: PositiveWord,
    pub den: PositiveWord,
    pub shape: FractionShape,
}

impl Fraction {
    pub fn right(num: PositiveWord, den: PositiveWord) -> Self {
        Fraction { num, den, shape: FractionShape::Right }
    }

    pub fn left(den: PositiveWord, num: PositiveWord) -> Self {
        Fraction { num, den, shape: FractionShape::Left }
    }

    pub fn is_empty(&self) -> bool {
        self.num.is_empty() && self.den.is_empty()
    }

    pub fn to_word(&self) -> SignedWord {
        match self.shape {
            FractionShape::Right => SignedWord::right_fraction(&self.num, &self.den),
            FractionShape::Left => SignedWord::left_fraction(&self.den, &self.num),
        }
    }

    fn of(w: &SignedWord, dir: Direction) -> Option<Self> {
        match dir {
            Direction::Right => w.as_right_fraction().map(|(v, u)| Fraction::right(v, u)),
            Direction::Left => w.as_left_fraction().map(|(u, v)| Fraction::left(u, v)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Terminal {
    pub fraction: Fraction,
    /// Length of the shortest reversing sequence found.
    pub steps: usize,
    pub trace: ReversingTrace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub direction: Direction,
    /// In order of discovery, so by nondecreasing step count.
    pub terminals: Vec<Terminal>,
    pub stuck: Vec<SignedWord>,
    pub budget_exceeded: bool,
    pub visited_count: usize,
}

impl SearchOutcome {
    pub fn fractions(&self) -> BTreeSet<(PositiveWord, PositiveWord)> {
        self.terminals
            .iter()
            .map(|t| (t.fraction.num.clone(), t.fraction.den.clone()))
            .collect()
    }

    pub fn empty_terminal(&self) -> Option<&Terminal> {
        self.terminals.iter().find(|t| t.fraction.is_empty())
    }

    pub fn max_steps(&self) -> usize {
        self.terminals.iter().map(|t| t.steps).max().unwrap_or(0)
    }
}

/// Breadth-first search over all plain reversing sequences from `w`.
pub fn reverse_exhaustive(p: &Presentation, w: &SignedWord, dir: Direction, b: &Budget) -> SearchOutcome {
    reverse_search(p, w, dir, b, &SearchOptions::default())
}

struct Node {
    word: SignedWord,
    parent: usize,
    step: Option<ReversingStep>,
    depth: usize,
}

const ROOT: usize = usize::MAX;

pub fn reverse_search(
    p: &Presentation,
    w: &SignedWord,
    dir: Direction,
    b: &Budget,
    opts: &SearchOptions,
) -> SearchOutcome {
    let mut nodes = vec![Node { word: w.clone(), parent: ROOT, step: None, depth: 0 }];
    let mut index: HashMap<SignedWord, usize> = HashMap::new();
    index.insert(w.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    let mut terminal_nodes = Vec::new();
    let mut stuck_nodes = Vec::new();
    let mut budget_exceeded = w.len() > b.max_word_len;
    let mut succ = Vec::new();

    'search: while let Some(i) = queue.pop_front() {
        let word = nodes[i].word.clone();
        let depth = nodes[i].depth;
        let first_factor = (0..word.len().saturating_sub(1)).find(|&k| is_factor(&word, k, dir));
        let terminal = first_factor.is_none();
        if terminal {
            terminal_nodes.push(i);
            if opts.stop_at_empty && word.is_empty() {
                break;
            }
            if !opts.extended {
                continue;
            }
        }
        if !terminal && opts.prune_dead {
            let dead = match opts.strategy {
                Strategy::Leftmost => is_dead_factor(p, &word, first_factor.unwrap(), dir),
                Strategy::Full => (0..word.len() - 1).any(|k| is_factor(&word, k, dir) && is_dead_factor(p, &word, k, dir)),
            };
            if dead {
                stuck_nodes.push(i);
                continue;
            }
        }
        succ.clear();
        match (opts.strategy, first_factor) {
            (Strategy::Leftmost, Some(k)) => steps_at(p, &word, k, dir, &mut succ),
            (Strategy::Full, Some(_)) => succ.extend(steps(p, &word, dir)),
            (_, None) => {}
        }
        if opts.extended {
            succ.extend(extended_steps(p, &word, dir));
        }
        if succ.is_empty() {
            if !terminal {
                stuck_nodes.push(i);
            }
            continue;
        }
        if depth >= b.max_branch_steps {
            budget_exceeded = true;
            continue;
        }
        for (step, next) in succ.drain(..) {
            if next.len() > b.max_word_len {
                budget_exceeded = true;
                continue;
            }
            if index.contains_key(&next) {
                continue;
            }
            if nodes.len() >= b.max_visited {
                budget_exceeded = true;
                break 'search;
            }
            index.insert(next.clone(), nodes.len());
            queue.push_back(nodes.len());
            nodes.push(Node { word: next, parent: i, step: Some(step), depth: depth + 1 });
        }
    }

    let terminals = terminal_nodes
        .into_iter()
        .map(|i| Terminal {
            fraction: Fraction::of(&nodes[i].word, dir).expect("terminal words are fractions"),
            steps: nodes[i].depth,
            trace: trace_to(&nodes, i),
        })
        .collect();
    SearchOutcome {
        direction: dir,
        terminals,
        stuck: stuck_nodes.into_iter().map(|i| nodes[i].word.clone()).collect(),
        budget_exceeded,
        visited_count: nodes.len(),
    }
}

fn trace_to(nodes: &[Node], mut i: usize) -> ReversingTrace {
    let mut steps = Vec::with_capacity(nodes[i].depth);
    while nodes[i].parent != ROOT {
        steps.push((nodes[i].step.expect("non-root nodes carry a step"), nodes[i].word.clone()));
        i = nodes[i].parent;
    }
    steps.reverse();
    ReversingTrace { start: nodes[i].word.clone(), steps }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(ReversingTrace),
    No,
    Unknown,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::No)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Decision::Unknown)
    }
}

/// Whether `u^-1 v` (right) or `u v^-1` (left) reverses to the empty word.
pub fn reverses_to_empty(p: &Presentation, u: &PositiveWord, v: &PositiveWord, dir: Direction, b: &Budget) -> Decision {
    let start = match dir {
        Direction::Right => SignedWord::left_fraction(u, v),
        Direction::Left => SignedWord::right_fraction(u, v),
    };
    decide_empty(p, &start, dir, b)
}

pub(crate) fn decide_empty(p: &Presentation, start: &SignedWord, dir: Direction, b: &Budget) -> Decision {
    let out = reverse_search(p, start, dir, b, &SearchOptions::reach_empty());
    if let Some(t) = out.empty_terminal() {
        Decision::Yes(t.trace.clone())
    } else if out.budget_exceeded {
        Decision::Unknown
    } else {
        Decision::No
    }
}
