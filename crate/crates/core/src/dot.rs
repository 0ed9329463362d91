//! Reversing diagrams in Graphviz DOT.
//!
//! Positive letters are horizontal edges, negative letters vertical ones,
//! so the start word of a right reversing `u^-1 v` reads up `u` then right
//! along `v`. Every step closes one cell, listed as a `cell_<k>` subgraph;
//! deletions close a degenerate cell drawn as a dashed ε edge. Left traces
//! are transposed. Coordinates are given in `pos` for `neato -n`.

use std::fmt::Write as _;

use crate::engine::{Direction, ReversingTrace, StepKind};
use crate::presentation::Presentation;
use crate::word::{SignedLetter, SignedWord};

#[derive(Clone, Copy)]
struct Node {
    x: f64,
    y: f64,
}

struct Diagram {
    nodes: Vec<Node>,
    edges: Vec<String>,
    cells: Vec<Vec<usize>>,
}

impl Diagram {
    fn node(&mut self, x: f64, y: f64) -> usize {
        self.nodes.push(Node { x, y });
        self.nodes.len() - 1
    }

    fn letter_edge(&mut self, from: usize, to: usize, l: SignedLetter, label: &str) {
        let (a, b) = if l.positive { (from, to) } else { (to, from) };
        let orient = if l.positive { "h" } else { "v" };
        self.edges.push(format!("n{a} -> n{b} [label=\"{}\", class=\"{orient}\"];", escape(label)));
    }

    /// Lays `letters` from `a` to `b`: positive letters move along x,
    /// negative ones along y, with one corner between the two blocks.
    fn path(&mut self, a: usize, b: usize, letters: &[SignedLetter]) -> Vec<usize> {
        let (pa, pb) = (self.nodes[a], self.nodes[b]);
        let pos_first = letters.first().is_some_and(|l| l.positive);
        let split = letters.iter().take_while(|l| l.positive == pos_first).count();
        let corner = if split == letters.len() {
            pb
        } else if pos_first {
            Node { x: pb.x, y: pa.y }
        } else {
            Node { x: pa.x, y: pb.y }
        };
        let mut ids = vec![a];
        for i in 1..letters.len() {
            let (from, to, k, n) = if i <= split { (pa, corner, i, split) } else { (corner, pb, i - split, letters.len() - split) };
            let t = k as f64 / n as f64;
            ids.push(self.node(from.x + (to.x - from.x) * t, from.y + (to.y - from.y) * t));
        }
        ids.push(b);
        ids
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn removed(p: &Presentation, kind: StepKind) -> usize {
    match kind {
        StepKind::Delete | StepKind::Relation { .. } => 2,
        StepKind::Extended { rel_id, orientation, .. } => p.relation(rel_id).map_or(0, |r| r.sides(orientation).0.len()),
    }
}

/// DOT text for `trace`. Identical traces give identical output.
pub fn emit_dot(p: &Presentation, trace: &ReversingTrace) -> String {
    let al = p.alphabet();
    let mut d = Diagram { nodes: Vec::new(), edges: Vec::new(), cells: Vec::new() };
    let start: &SignedWord = &trace.start;
    let mut path = vec![d.node(0.0, 0.0)];
    let (mut x, mut y) = (0.0, 0.0);
    for &l in start.iter() {
        if l.positive {
            x += 1.0;
        } else {
            y += 1.0;
        }
        let n = d.node(x, y);
        d.letter_edge(*path.last().unwrap(), n, l, al.name(l.letter));
        path.push(n);
    }
    let mut word: Vec<SignedLetter> = start.iter().copied().collect();
    for (step, after) in &trace.steps {
        let pos = step.position;
        let k = removed(p, step.kind);
        let m = after.len() + k - word.len();
        let inserted = &after.as_slice()[pos..pos + m];
        let (a, b) = (path[pos], path[pos + k]);
        let mut cell: Vec<usize> = path[pos..=pos + k].to_vec();
        if m == 0 {
            d.edges.push(format!("n{a} -> n{b} [label=\"ε\", style=dashed, dir=none];"));
            path.drain(pos + 1..=pos + k);
        } else {
            let ids = d.path(a, b, inserted);
            for (i, &l) in inserted.iter().enumerate() {
                d.letter_edge(ids[i], ids[i + 1], l, al.name(l.letter));
            }
            cell.extend(ids[1..ids.len() - 1].iter().copied());
            path.splice(pos..=pos + k, ids);
        }
        d.cells.push(cell);
        word = after.iter().copied().collect();
    }
    let transpose = trace.steps.first().is_some_and(|(s, _)| s.direction == Direction::Left);
    let mut out = String::from("digraph reversing {\n  node [shape=point];\n");
    for (i, n) in d.nodes.iter().enumerate() {
        let (px, py) = if transpose { (n.y, n.x) } else { (n.x, n.y) };
        let _ = writeln!(out, "  n{i} [pos=\"{:.3},{:.3}!\"];", px * 72.0, py * 72.0);
    }
    for e in &d.edges {
        let _ = writeln!(out, "  {e}");
    }
    for (k, cell) in d.cells.iter().enumerate() {
        let names: Vec<String> = cell.iter().map(|n| format!("n{n}")).collect();
        let _ = writeln!(out, "  subgraph cell_{} {{ {}; }}", k + 1, names.join("; "));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{reverse_search, SearchOptions};
    use crate::parse::parse_presentation;

    #[test]
    fn positive_word_is_a_path() {
        let p = parse_presentation("letters: a b").unwrap();
        let t = ReversingTrace::new(p.alphabet().parse_signed("a b a").unwrap());
        let dot = emit_dot(&p, &t);
        assert_eq!(dot.matches("class=\"h\"").count(), 3);
        assert!(!dot.contains("cell_"));
        assert_eq!(dot, emit_dot(&p, &t));
    }

    #[test]
    fn cells_are_closed() {
        let p = parse_presentation("letters: a b\nrel: a a = b b\nrel: a b = b a").unwrap();
        let w = p.alphabet().parse_signed("a^-1 b a b^-1").unwrap();
        let out = reverse_search(&p, &w, Direction::Right, &Default::default(), &SearchOptions::default());
        let t = out.terminals.iter().find(|t| t.steps == 2).unwrap();
        let dot = emit_dot(&p, &t.trace);
        assert_eq!(dot.matches("subgraph cell_").count(), 2);
        assert!(dot.contains("style=dashed") || dot.matches("->").count() > 4);
    }
}
