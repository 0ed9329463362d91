use std::collections::BTreeSet;

use super::{Assumption, Hypotheses, TriVerdict, Verdict, Witness};
use crate::closure::{compute_closure, DEFAULT_MAX_WORDS};
use crate::engine::{reverse_search, Budget, Direction, GridLimits, GridReverser, SearchOptions};
use crate::presentation::Presentation;
use crate::word::{PositiveWord, SignedWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErOutcome {
    pub verdict: TriVerdict,
    /// The candidate family that was tested, empty if none was available.
    pub family: Vec<PositiveWord>,
    /// First pair with no closing square, if the search finished.
    pub failing: Option<(PositiveWord, PositiveWord)>,
    pub from_seed: bool,
}

/// Condition E_r on a finite family `S'`: it contains every letter and for
/// all `u, v` in `S'` there are `u', v'` in `S'` with `(u v')^-1 (v u') ⇝ ε`.
/// The family is `seed` if given, else the closure of the letters.
pub fn check_er(p: &Presentation, seed: Option<&[PositiveWord]>, b: &Budget) -> ErOutcome {
    let unknown = |family: Vec<PositiveWord>, failing, from_seed, note: &str| ErOutcome {
        verdict: TriVerdict::new(Verdict::Unknown, Some(Witness::Note(note.into())), vec![]),
        family,
        failing,
        from_seed,
    };
    let (family, from_seed): (BTreeSet<PositiveWord>, bool) = match seed {
        Some(s) => (s.iter().cloned().collect(), true),
        None => {
            let (res, _) = compute_closure(p, b, DEFAULT_MAX_WORDS);
            if !res.is_closed() {
                return unknown(res.words.into_iter().collect(), None, false, "closure is not finite within budget");
            }
            (res.words, false)
        }
    };
    let family: Vec<PositiveWord> = family.into_iter().collect();
    if let Some(l) = p.alphabet().letters().find(|&l| !family.contains(&PositiveWord::letter(l))) {
        let note = format!("family misses the letter {}", p.alphabet().name(l));
        return unknown(family, None, from_seed, &note);
    }
    let mut grid = GridReverser::new(p, GridLimits::from_budget(b));
    let mut squares = Vec::new();
    for u in &family {
        for v in &family {
            match close_square(p, &mut grid, &family, u, v, b) {
                Some(sq) => squares.push(((u.clone(), v.clone()), sq)),
                None => return unknown(family.clone(), Some((u.clone(), v.clone())), from_seed, "no closing pair in the family"),
            }
        }
    }
    ErOutcome {
        verdict: TriVerdict::new(Verdict::Yes, Some(Witness::Squares(squares)), vec![]),
        family,
        failing: None,
        from_seed,
    }
}

/// Finds `(u', v')` in `family` with `(u v')^-1 (v u') ⇝ ε`. Terminals of
/// `u^-1 v` are tried first, then every pair.
fn close_square(
    p: &Presentation,
    grid: &mut GridReverser<'_>,
    family: &[PositiveWord],
    u: &PositiveWord,
    v: &PositiveWord,
    b: &Budget,
) -> Option<(PositiveWord, PositiveWord)> {
    let out = reverse_search(p, &SignedWord::left_fraction(u, v), Direction::Right, b, &SearchOptions::terminals_only());
    let mut tried = BTreeSet::new();
    for (v1, u1) in out.fractions() {
        if family.binary_search(&u1).is_ok() && family.binary_search(&v1).is_ok() {
            if grid.reverses_to_empty(&u.concat(&v1), &v.concat(&u1)) == Some(true) {
                return Some((u1, v1));
            }
            tried.insert((u1, v1));
        }
    }
    for u1 in family {
        for v1 in family {
            if tried.contains(&(u1.clone(), v1.clone())) {
                continue;
            }
            if grid.reverses_to_empty(&u.concat(v1), &v.concat(u1)) == Some(true) {
                return Some((u1.clone(), v1.clone()));
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LcmOutcome {
    /// The least common right multiple `u v' ≡ v u'`.
    Lcm {
        word: PositiveWord,
        v_complement: PositiveWord,
        u_complement: PositiveWord,
        assumptions: Vec<Assumption>,
    },
    /// Reversing got stuck: no common right multiple.
    NoCommonMultiple { assumptions: Vec<Assumption> },
    Inapplicable(String),
    Unknown,
}

/// Right lcm by deterministic reversing of `u^-1 v`.
pub fn lcm_right(p: &Presentation, u: &PositiveWord, v: &PositiveWord, hyp: &Hypotheses, b: &Budget) -> LcmOutcome {
    if !p.syntactic_flags().is_r_complemented {
        return LcmOutcome::Inapplicable("presentation is not right complemented".into());
    }
    let assumptions = vec![Assumption { name: "r-complemented", discharged: true }, hyp.assume("r-complete")];
    let out = reverse_search(p, &SignedWord::left_fraction(u, v), Direction::Right, b, &SearchOptions::terminals_only());
    if out.budget_exceeded {
        return LcmOutcome::Unknown;
    }
    match out.terminals.first() {
        Some(t) => LcmOutcome::Lcm {
            word: u.concat(&t.fraction.num),
            v_complement: t.fraction.num.clone(),
            u_complement: t.fraction.den.clone(),
            assumptions,
        },
        None => LcmOutcome::NoCommonMultiple { assumptions },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_presentation;

    #[test]
    fn er_examples() {
        let p = parse_presentation("letters: a b\nrel: a a = b b\nrel: a b = b a").unwrap();
        let r = check_er(&p, None, &Budget::default());
        assert!(r.verdict.is_yes());
        assert_eq!(r.family.len(), 3);
        if let Some(Witness::Squares(sq)) = &r.verdict.witness {
            assert_eq!(sq.len(), 9);
        } else {
            panic!("missing squares");
        }
        let free = parse_presentation("letters: a b").unwrap();
        let r = check_er(&free, None, &Budget::default());
        assert!(r.verdict.is_unknown());
        assert!(r.failing.is_some());
    }

    #[test]
    fn lcm_examples() {
        let p = parse_presentation("letters: s1 s2\nrel: s1 s2 s1 = s2 s1 s2").unwrap();
        let al = p.alphabet();
        let w = |s| al.parse_positive(s).unwrap();
        let h = Hypotheses::complete();
        match lcm_right(&p, &w("s1"), &w("s2"), &h, &Budget::default()) {
            LcmOutcome::Lcm { word, .. } => assert_eq!(word, w("s1 s2 s1")),
            other => panic!("{other:?}"),
        }
        match lcm_right(&p, &w("s1 s2"), &w("s1 s2"), &h, &Budget::default()) {
            LcmOutcome::Lcm { word, .. } => assert_eq!(word, w("s1 s2")),
            other => panic!("{other:?}"),
        }
        let free = parse_presentation("letters: a b").unwrap();
        let al = free.alphabet();
        let x = lcm_right(&free, &al.parse_positive("a").unwrap(), &al.parse_positive("b").unwrap(), &h, &Budget::default());
        assert!(matches!(x, LcmOutcome::NoCommonMultiple { .. }));
        let aabb = parse_presentation("letters: a b\nrel: a a = b b\nrel: a b = b a").unwrap();
        let al = aabb.alphabet();
        let x = lcm_right(&aabb, &al.parse_positive("a").unwrap(), &al.parse_positive("b").unwrap(), &h, &Budget::default());
        assert!(matches!(x, LcmOutcome::Inapplicable(_)));
    }
}
