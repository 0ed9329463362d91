//! Reduction to the empty word by interleaving right and left reversing.

use std::collections::{HashMap, VecDeque};

use super::{extended_steps, steps, Budget, Decision, Direction, ReversingStep, ReversingTrace};
use crate::presentation::Presentation;
use crate::word::SignedWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlternatingOptions {
    /// Maximal number of switches between right and left phases.
    pub max_alternations: usize,
    /// Allow extended steps inside each phase.
    pub extended: bool,
}

impl Default for AlternatingOptions {
    fn default() -> Self {
        AlternatingOptions { max_alternations: 4, extended: true }
    }
}

type State = (SignedWord, Direction, usize);

/// Breadth-first search for a path from `w` to the empty word through
/// phases of right and left reversing. A `No` only means that nothing was
/// found within the alternation bound.
pub fn alternating_reduce(p: &Presentation, w: &SignedWord, b: &Budget, opts: &AlternatingOptions) -> Decision {
    struct Node {
        state: State,
        parent: usize,
        step: Option<ReversingStep>,
        depth: usize,
    }
    const ROOT: usize = usize::MAX;

    if w.is_empty() {
        return Decision::Yes(ReversingTrace::new(w.clone()));
    }
    let mut nodes: Vec<Node> = Vec::new();
    let mut seen: HashMap<State, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for dir in [Direction::Right, Direction::Left] {
        let st = (w.clone(), dir, 0);
        seen.insert(st.clone(), nodes.len());
        queue.push_back(nodes.len());
        nodes.push(Node { state: st, parent: ROOT, step: None, depth: 0 });
    }
    let mut budget_exceeded = w.len() > b.max_word_len;
    let mut found = None;

    'search: while let Some(i) = queue.pop_front() {
        let (word, dir, switches) = nodes[i].state.clone();
        let depth = nodes[i].depth;
        let mut succ: Vec<(Option<ReversingStep>, State)> = steps(p, &word, dir)
            .into_iter()
            .map(|(s, nw)| (Some(s), (nw, dir, switches)))
            .collect();
        if opts.extended {
            succ.extend(extended_steps(p, &word, dir).into_iter().map(|(s, nw)| (Some(s), (nw, dir, switches))));
        }
        if switches < opts.max_alternations {
            succ.push((None, (word.clone(), dir.other(), switches + 1)));
        }
        if depth >= b.max_branch_steps && succ.iter().any(|(s, _)| s.is_some()) {
            budget_exceeded = true;
            succ.retain(|(s, _)| s.is_none());
        }
        for (step, st) in succ {
            if st.0.len() > b.max_word_len {
                budget_exceeded = true;
                continue;
            }
            if seen.contains_key(&st) {
                continue;
            }
            if nodes.len() >= b.max_visited {
                budget_exceeded = true;
                break 'search;
            }
            let done = st.0.is_empty();
            let d = depth + usize::from(step.is_some());
            seen.insert(st.clone(), nodes.len());
            queue.push_back(nodes.len());
            nodes.push(Node { state: st, parent: i, step, depth: d });
            if done {
                found = Some(nodes.len() - 1);
                break 'search;
            }
        }
    }

    match found {
        Some(mut i) => {
            let mut steps_rev = Vec::new();
            while nodes[i].parent != ROOT {
                if let Some(s) = nodes[i].step {
                    steps_rev.push((s, nodes[i].state.0.clone()));
                }
                i = nodes[i].parent;
            }
            steps_rev.reverse();
            Decision::Yes(ReversingTrace { start: w.clone(), steps: steps_rev })
        }
        None if budget_exceeded => Decision::Unknown,
        None => Decision::No,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_presentation;

    #[test]
    fn free_reduction() {
        let p = parse_presentation("letters: a b").unwrap();
        let w = p.alphabet().parse_signed("a a^-1 b b^-1").unwrap();
        match alternating_reduce(&p, &w, &Budget::default(), &AlternatingOptions::default()) {
            Decision::Yes(t) => {
                t.replay(&p).unwrap();
                assert!(t.steps.iter().all(|(s, _)| s.direction == Direction::Left));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn lone_letter() {
        let p = parse_presentation("letters: a b\nrel: a b = b a").unwrap();
        let w = p.alphabet().parse_signed("a").unwrap();
        assert!(alternating_reduce(&p, &w, &Budget::default(), &AlternatingOptions::default()).is_no());
    }
}
