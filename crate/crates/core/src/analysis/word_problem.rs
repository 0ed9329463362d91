use super::{Assumption, Hypotheses, TriVerdict, Verdict, Witness};
use crate::closure::{bounded_reverse, BoundedOutcome, McmTable};
use crate::engine::{
    reverse_search, reverses_to_empty, Budget, Decision, Direction, GridLimits, GridReverser, SearchOptions,
};
use crate::presentation::Presentation;
use crate::word::{PositiveWord, SignedWord};

/// Monoid word problem solver for one presentation. Reuses reversing
/// results across queries, so deciding many pairs is cheap.
pub struct MonoidWordProblem<'a> {
    p: &'a Presentation,
    hyp: Hypotheses,
    budget: Budget,
    grid: GridReverser<'a>,
    table: Option<&'a McmTable>,
}

impl<'a> MonoidWordProblem<'a> {
    pub fn new(p: &'a Presentation, hyp: Hypotheses, b: &Budget) -> Self {
        MonoidWordProblem { p, hyp, budget: *b, grid: GridReverser::new(p, GridLimits::from_budget(b)), table: None }
    }

    /// Uses table lookups when the table is closed and the presentation is
    /// right complemented, so that the least terminal is the only one.
    pub fn with_table(mut self, table: &'a McmTable) -> Self {
        if table.closed && self.p.syntactic_flags().is_r_complemented {
            self.table = Some(table);
        }
        self
    }

    pub fn uses_table(&self) -> bool {
        self.table.is_some()
    }

    /// Verdict without a witness.
    pub fn decide_value(&mut self, u: &PositiveWord, v: &PositiveWord) -> Verdict {
        if u == v {
            return Verdict::Yes;
        }
        if let Some(table) = self.table {
            return match bounded_reverse(self.p, table, &SignedWord::left_fraction(u, v)) {
                BoundedOutcome::Terminal { num, den, .. } => {
                    if num.is_empty() && den.is_empty() {
                        Verdict::Yes
                    } else {
                        Verdict::No
                    }
                }
                BoundedOutcome::Stuck { .. } => Verdict::No,
                BoundedOutcome::Inapplicable(_) => Verdict::Unknown,
            };
        }
        // The grid keeps whole terminal sets, which can outgrow its limits
        // on presentations with many relations per pair; the search only
        // looks for ε.
        match self.grid.reverses_to_empty(u, v) {
            Some(true) => Verdict::Yes,
            Some(false) => Verdict::No,
            None => match reverses_to_empty(self.p, u, v, Direction::Right, &self.budget) {
                Decision::Yes(_) => Verdict::Yes,
                Decision::No => Verdict::No,
                Decision::Unknown => Verdict::Unknown,
            },
        }
    }

    /// Verdict with a replayable reversing trace for `yes`.
    pub fn decide(&mut self, u: &PositiveWord, v: &PositiveWord) -> TriVerdict {
        let assumptions = vec![self.hyp.assume("r-complete")];
        match self.decide_value(u, v) {
            Verdict::Yes => {
                let witness = match reverses_to_empty(self.p, u, v, Direction::Right, &self.budget) {
                    Decision::Yes(t) => Some(Witness::Trace(t)),
                    _ => None,
                };
                TriVerdict::new(Verdict::Yes, witness, assumptions)
            }
            other => TriVerdict::new(other, None, assumptions),
        }
    }
}

/// `u ≡ v` in the monoid, decided by `u^-1 v ⇝ ε`. A `no` relies on right completeness.
pub fn monoid_word_problem(p: &Presentation, u: &PositiveWord, v: &PositiveWord, hyp: &Hypotheses, b: &Budget) -> TriVerdict {
    MonoidWordProblem::new(p, *hyp, b).decide(u, v)
}

fn group_assumptions(p: &Presentation, hyp: &Hypotheses) -> Vec<Assumption> {
    vec![
        hyp.assume("complete"),
        Assumption { name: "C", discharged: p.syntactic_flags().satisfies_c },
        hyp.assume("E_r"),
    ]
}

/// Double reversing: right reverse `w` to `v u^-1`, then test `u^-1 v ⇝ ε`.
pub fn group_word_problem(p: &Presentation, w: &SignedWord, hyp: &Hypotheses, b: &Budget) -> TriVerdict {
    let assumptions = group_assumptions(p, hyp);
    let phase1 = reverse_search(p, w, Direction::Right, b, &SearchOptions::terminals_only());
    let mut unknown = phase1.budget_exceeded;
    for t in &phase1.terminals {
        match reverses_to_empty(p, &t.fraction.den, &t.fraction.num, Direction::Right, b) {
            Decision::Yes(second) => {
                return TriVerdict::new(Verdict::Yes, Some(Witness::Traces(vec![t.trace.clone(), second])), assumptions);
            }
            Decision::No => {}
            Decision::Unknown => unknown = true,
        }
    }
    if unknown || phase1.terminals.is_empty() {
        TriVerdict::new(Verdict::Unknown, None, assumptions)
    } else {
        TriVerdict::new(Verdict::No, None, assumptions)
    }
}

/// Longest multiplier tried by [`fraction_equiv`].
const MULTIPLIER_LEN: usize = 3;

/// Equality of `w` and `w'` in the group, through the group word problem
/// of `w w'^-1`. For positive inputs also looks for a common right
/// multiplier `x` with `w x ≡ w' x`.
pub fn fraction_equiv(p: &Presentation, w: &SignedWord, w2: &SignedWord, hyp: &Hypotheses, b: &Budget) -> TriVerdict {
    let assumptions = vec![
        hyp.assume("r-complete"),
        Assumption { name: "C_r", discharged: p.syntactic_flags().satisfies_cr },
        hyp.assume("E_r"),
    ];
    if w == w2 {
        return TriVerdict::new(Verdict::Yes, Some(Witness::Note("identical words".into())), assumptions);
    }
    let base = group_word_problem(p, &w.concat(&w2.inverse()), hyp, b);
    if base.is_yes() || !(w.is_positive() && w2.is_positive()) {
        return TriVerdict { assumptions, ..base };
    }
    let u = PositiveWord(w.iter().map(|x| x.letter).collect());
    let v = PositiveWord(w2.iter().map(|x| x.letter).collect());
    let letters: Vec<_> = p.alphabet().letters().collect();
    let mut solver = MonoidWordProblem::new(p, *hyp, b);
    let mut layer = vec![PositiveWord::empty()];
    for _ in 0..=MULTIPLIER_LEN {
        for x in &layer {
            if solver.decide_value(&u.concat(x), &v.concat(x)) == Verdict::Yes {
                return TriVerdict::new(Verdict::Yes, Some(Witness::Word(x.clone())), assumptions);
            }
        }
        layer = layer
            .iter()
            .flat_map(|x| letters.iter().map(move |&l| x.concat(&PositiveWord::letter(l))))
            .collect();
    }
    TriVerdict { assumptions, ..base }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_presentation;

    #[test]
    fn b3_examples() {
        let p = parse_presentation("letters: s1 s2\nrel: s1 s2 s1 = s2 s1 s2").unwrap();
        let al = p.alphabet();
        let h = Hypotheses::complete();
        let b = Budget::default();
        let v = monoid_word_problem(&p, &al.parse_positive("s1 s2").unwrap(), &al.parse_positive("s2 s1").unwrap(), &h, &b);
        assert!(v.is_no());
        let w = al.parse_signed("s1 s2 s1 s2^-1 s1^-1 s2^-1").unwrap();
        let g = group_word_problem(&p, &w, &h, &b);
        assert!(g.is_yes());
        if let Some(Witness::Traces(ts)) = &g.witness {
            for t in ts {
                t.replay(&p).unwrap();
            }
        } else {
            panic!("missing witness");
        }
        assert!(group_word_problem(&p, &al.parse_signed("s1").unwrap(), &h, &b).is_no());
    }

    #[test]
    fn aabb_fractions() {
        let p = parse_presentation("letters: a b\nrel: a a = b b\nrel: a b = b a").unwrap();
        let al = p.alphabet();
        let h = Hypotheses::complete();
        let b = Budget::default();
        let x = al.parse_signed("b a^-1").unwrap();
        let y = al.parse_signed("a b^-1").unwrap();
        assert!(fraction_equiv(&p, &x, &y, &h, &b).is_yes());
        let a = al.parse_signed("a").unwrap();
        let bb = al.parse_signed("b").unwrap();
        assert!(fraction_equiv(&p, &a, &bb, &h, &b).is_no());
        assert!(fraction_equiv(&p, &x, &x, &h, &b).is_yes());
    }
}
