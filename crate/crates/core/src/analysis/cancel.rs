use super::{Hypotheses, TriVerdict, Verdict, Witness};
use crate::engine::{reverses_to_empty, Budget, Decision, Direction};
use crate::presentation::Presentation;
use crate::word::PositiveWord;

/// Left cancellativity: every relation `s u = s v` must have `u^-1 v ⇝ ε`.
/// Valid for right complete presentations.
pub fn check_left_cancellative(p: &Presentation, hyp: &Hypotheses, b: &Budget) -> TriVerdict {
    let mut traces = Vec::new();
    let mut unknown = false;
    for rel in p.relations() {
        let (x, y) = (rel.lhs().as_slice(), rel.rhs().as_slice());
        if x[0] != y[0] {
            continue;
        }
        let (u, v) = (PositiveWord(x[1..].to_vec()), PositiveWord(y[1..].to_vec()));
        match reverses_to_empty(p, &u, &v, Direction::Right, b) {
            Decision::Yes(t) => traces.push(t),
            Decision::No => {
                return TriVerdict::new(Verdict::No, Some(Witness::Relation(rel.id)), vec![hyp.assume("r-complete")]);
            }
            Decision::Unknown => unknown = true,
        }
    }
    let assumptions = vec![hyp.assume("r-complete")];
    if unknown {
        TriVerdict::new(Verdict::Unknown, None, assumptions)
    } else if traces.is_empty() {
        TriVerdict::new(Verdict::Yes, Some(Witness::Note("no relation shares its first letter".into())), assumptions)
    } else {
        TriVerdict::new(Verdict::Yes, Some(Witness::Traces(traces)), assumptions)
    }
}

/// Right cancellativity, via left cancellativity of the mirror. Valid for
/// left complete presentations. Witness traces are over the mirror.
pub fn check_right_cancellative(p: &Presentation, hyp: &Hypotheses, b: &Budget) -> TriVerdict {
    let mirrored = Hypotheses { r_complete: hyp.l_complete, l_complete: hyp.r_complete, er: false };
    let mut v = check_left_cancellative(&p.mirror(), &mirrored, b);
    v.assumptions = vec![hyp.assume("l-complete")];
    if let Some(Witness::Note(_)) = v.witness {
        v.witness = Some(Witness::Note("no relation shares its last letter".into()));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_presentation;

    #[test]
    fn examples() {
        let lee = parse_presentation("letters: a b c\nrel: a b = a c").unwrap();
        let v = check_left_cancellative(&lee, &Hypotheses::default(), &Budget::default());
        assert!(v.is_no());
        assert_eq!(v.assumptions[0].name, "r-complete");
        assert!(!v.assumptions[0].discharged);
        let free = parse_presentation("letters: a b").unwrap();
        assert!(check_left_cancellative(&free, &Hypotheses::default(), &Budget::default()).is_yes());
        assert!(check_right_cancellative(&lee, &Hypotheses::default(), &Budget::default()).is_yes());
    }
}
