//! Brute-force congruence oracle: breadth-first closure of a word under
//! two-way application of the relations in every context.
//!
//! Independent of the reversing engine; used to cross-check it.

use std::collections::{HashMap, VecDeque};

use crate::presentation::Presentation;
use crate::word::PositiveWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_len: usize,
    pub max_states: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_len: 16, max_states: 200_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    /// A derivation `u = w0, w1, ..., v`, one relation application per step.
    Yes(Vec<PositiveWord>),
    /// The reachable set was exhausted. `class_exhausted` is set when no
    /// word was dropped for being longer than `max_len`, in which case the
    /// answer is a definitive no.
    NoWithinBound { class_exhausted: bool },
    Unknown,
}

impl OracleVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, OracleVerdict::Yes(_))
    }

    /// `Some(answer)` when the verdict is definitive.
    pub fn definitive(&self) -> Option<bool> {
        match self {
            OracleVerdict::Yes(_) => Some(true),
            OracleVerdict::NoWithinBound { class_exhausted: true } => Some(false),
            _ => None,
        }
    }
}

/// Words reachable from `w` by one relation application.
pub fn neighbours(p: &Presentation, w: &PositiveWord) -> Vec<PositiveWord> {
    let s = w.as_slice();
    let mut out = Vec::new();
    for rel in p.relations() {
        for (x, y) in [(rel.lhs(), rel.rhs()), (rel.rhs(), rel.lhs())] {
            let (x, y) = (x.as_slice(), y.as_slice());
            if x.len() > s.len() {
                continue;
            }
            for pos in 0..=s.len() - x.len() {
                if &s[pos..pos + x.len()] == x {
                    let mut n = Vec::with_capacity(s.len() - x.len() + y.len());
                    n.extend_from_slice(&s[..pos]);
                    n.extend_from_slice(y);
                    n.extend_from_slice(&s[pos + x.len()..]);
                    out.push(PositiveWord(n));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleClass {
    /// Members in discovery order.
    pub words: Vec<PositiveWord>,
    /// No member was dropped for length.
    pub complete: bool,
    /// The state cap stopped the search.
    pub capped: bool,
}

struct Explorer {
    parent: HashMap<PositiveWord, Option<PositiveWord>>,
    order: Vec<PositiveWord>,
    pruned: bool,
    capped: bool,
}

fn explore(p: &Presentation, u: &PositiveWord, cfg: &OracleConfig, target: Option<&PositiveWord>) -> (Explorer, bool) {
    let mut ex = Explorer { parent: HashMap::new(), order: Vec::new(), pruned: false, capped: false };
    ex.parent.insert(u.clone(), None);
    ex.order.push(u.clone());
    if target == Some(u) {
        return (ex, true);
    }
    let mut queue = VecDeque::from([u.clone()]);
    while let Some(w) = queue.pop_front() {
        for n in neighbours(p, &w) {
            if ex.parent.contains_key(&n) {
                continue;
            }
            if n.len() > cfg.max_len {
                ex.pruned = true;
                continue;
            }
            if ex.parent.len() >= cfg.max_states {
                ex.capped = true;
                return (ex, false);
            }
            ex.parent.insert(n.clone(), Some(w.clone()));
            ex.order.push(n.clone());
            if target == Some(&n) {
                return (ex, true);
            }
            queue.push_back(n);
        }
    }
    (ex, false)
}

pub fn oracle_equiv(p: &Presentation, u: &PositiveWord, v: &PositiveWord, cfg: &OracleConfig) -> OracleVerdict {
    let (ex, hit) = explore(p, u, cfg, Some(v));
    if hit {
        let mut path = vec![v.clone()];
        let mut cur = v.clone();
        while let Some(Some(prev)) = ex.parent.get(&cur) {
            path.push(prev.clone());
            cur = prev.clone();
        }
        path.reverse();
        OracleVerdict::Yes(path)
    } else if ex.capped {
        OracleVerdict::Unknown
    } else {
        OracleVerdict::NoWithinBound { class_exhausted: !ex.pruned }
    }
}

/// The congruence class of `u`, as far as the bounds allow.
pub fn oracle_class(p: &Presentation, u: &PositiveWord, cfg: &OracleConfig) -> OracleClass {
    let (ex, _) = explore(p, u, cfg, None);
    OracleClass { complete: !ex.pruned && !ex.capped, capped: ex.capped, words: ex.order }
}

/// Checks that consecutive words of a derivation differ by one relation.
pub fn check_derivation(p: &Presentation, path: &[PositiveWord]) -> bool {
    path.windows(2).all(|w| neighbours(p, &w[0]).contains(&w[1]))
}
