use super::cancel::{check_left_cancellative, check_right_cancellative};
use super::multiples::{check_er, ErOutcome};
use super::{Assumption, Hypotheses, TriVerdict, Verdict, Witness};
use crate::completeness::{
    check_complete, verify_pseudolength, CubeReport, CubeVerdict, HomogeneityCertificate, HomogeneitySide, PseudoLength,
};
use crate::engine::Budget;
use crate::presentation::{Presentation, SyntacticFlags};
use crate::word::PositiveWord;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OreDetails {
    pub flags: SyntacticFlags,
    pub certificate: Option<HomogeneityCertificate>,
    pub right: CubeReport,
    pub left: CubeReport,
    pub left_cancellative: TriVerdict,
    pub right_cancellative: TriVerdict,
    pub er: ErOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OreReport {
    pub embeds: TriVerdict,
    pub group_of_fractions: TriVerdict,
    pub details: OreDetails,
}

/// Embedding in a group of fractions. Completeness is established here by
/// the strong cube check on both sides, with `pl` (or unit length when it
/// applies) as the homogeneity certificate. Never answers `no`.
pub fn ore_report(p: &Presentation, pl: Option<&PseudoLength>, seed: Option<&[PositiveWord]>, b: &Budget) -> OreReport {
    let flags = p.syntactic_flags();
    let certificate = match pl {
        Some(pl) => verify_pseudolength(p, pl, HomogeneitySide::Both).ok(),
        None => verify_pseudolength(p, &PseudoLength::UnitLength, HomogeneitySide::Both).ok(),
    };
    let (right, left) = check_complete(p, certificate.as_ref(), b);
    let er = check_er(p, seed, b);
    let hyp = Hypotheses {
        r_complete: right.verdict == CubeVerdict::Complete,
        l_complete: left.verdict == CubeVerdict::Complete,
        er: er.verdict.is_yes(),
    };
    let left_cancellative = check_left_cancellative(p, &hyp, b);
    let right_cancellative = check_right_cancellative(p, &hyp, b);
    let cancellative = flags.satisfies_c
        || (left_cancellative.is_yes() && left_cancellative.unconditional() && right_cancellative.is_yes() && right_cancellative.unconditional());
    let assumptions = vec![hyp.assume("complete"), Assumption { name: "C", discharged: cancellative }, hyp.assume("E_r")];
    let all = assumptions.iter().all(|a| a.discharged);
    let embeds = if all {
        TriVerdict::new(Verdict::Yes, Some(Witness::Note("complete, cancellative and E_r".into())), assumptions.clone())
    } else {
        let missing: Vec<&str> = assumptions.iter().filter(|a| !a.discharged).map(|a| a.name).collect();
        TriVerdict::new(Verdict::Unknown, Some(Witness::Note(format!("not established: {}", missing.join(", ")))), assumptions.clone())
    };
    let group_of_fractions = if all {
        TriVerdict::new(Verdict::Yes, Some(Witness::Note("every element is a right fraction v u^-1".into())), assumptions)
    } else {
        TriVerdict::new(Verdict::Unknown, None, assumptions)
    };
    OreReport {
        embeds,
        group_of_fractions,
        details: OreDetails { flags, certificate, right, left, left_cancellative, right_cancellative, er },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_presentation;

    #[test]
    fn aabb_embeds() {
        let p = parse_presentation("letters: a b\nrel: a a = b b\nrel: a b = b a").unwrap();
        let r = ore_report(&p, None, None, &Budget::default());
        assert!(r.embeds.is_yes(), "{:?}", r.embeds);
        assert!(r.embeds.unconditional());
    }

    #[test]
    fn free_is_unknown() {
        let p = parse_presentation("letters: a b").unwrap();
        let r = ore_report(&p, None, None, &Budget::default());
        assert!(r.embeds.is_unknown());
    }
}
