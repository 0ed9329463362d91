//! Bundled example presentations with the properties expected of them.

use crate::analysis::{check_er, check_left_cancellative, ore_report, Hypotheses, Verdict};
use crate::closure::{compute_closure, DEFAULT_MAX_WORDS};
use crate::completeness::{check_complete, complete_presentation, verify_pseudolength, CompletionStatus, CubeVerdict, HomogeneitySide, PseudoLength};
use crate::engine::{reverse_exhaustive, Budget, Direction};
use crate::parse::{parse_document, Document};
use crate::word::PositiveWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    /// Both strong cube checks pass with a homogeneity certificate.
    Complete,
    SatisfiesC,
    /// The closure of the letters is finite.
    FiniteClosure,
    ClosureSize,
    LeftCancellative,
    Er,
    Embeds,
    /// Number of relations added by two-sided completion.
    CompletionAdds,
    /// Right reversing of the given word exhausts the default budget.
    Diverges(&'static str),
}

impl Property {
    pub fn key(&self) -> &'static str {
        match self {
            Property::Complete => "complete",
            Property::SatisfiesC => "condition_c",
            Property::FiniteClosure => "finite_closure",
            Property::ClosureSize => "closure_size",
            Property::LeftCancellative => "left_cancellative",
            Property::Er => "e_r",
            Property::Embeds => "embeds",
            Property::CompletionAdds => "completion_adds",
            Property::Diverges(_) => "diverges",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Verdict(Verdict),
    Count(usize),
    AtMost(usize),
}

impl Expected {
    pub fn render(&self) -> String {
        match self {
            Expected::Verdict(v) => v.as_str().to_string(),
            Expected::Count(n) => n.to_string(),
            Expected::AtMost(n) => format!("<= {n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claim {
    pub property: Property,
    pub expected: Expected,
    pub citation: &'static str,
    /// Known from outside the tool; reported but not re-verified.
    pub external: bool,
}

const fn claim(property: Property, expected: Expected, citation: &'static str) -> Claim {
    Claim { property, expected, citation, external: false }
}

const fn external(property: Property, expected: Expected, citation: &'static str) -> Claim {
    Claim { property, expected, citation, external: true }
}

const YES: Expected = Expected::Verdict(Verdict::Yes);
const NO: Expected = Expected::Verdict(Verdict::No);
const UNKNOWN: Expected = Expected::Verdict(Verdict::Unknown);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub source: &'static str,
    /// Family to test E_r on instead of the closure.
    pub seed: &'static [&'static str],
    pub claims: &'static [Claim],
}

impl CorpusEntry {
    pub fn document(&self) -> Document {
        parse_document(self.source).expect("bundled presentation parses")
    }

    pub fn seed_words(&self, doc: &Document) -> Option<Vec<PositiveWord>> {
        if self.seed.is_empty() {
            return None;
        }
        let al = doc.presentation.alphabet();
        Some(self.seed.iter().map(|s| al.parse_positive(s).expect("bundled seed parses")).collect())
    }
}

macro_rules! pres {
    ($name:literal) => {
        include_str!(concat!("../corpus/", $name, ".pres"))
    };
}

static ENTRIES: &[CorpusEntry] = &[
    CorpusEntry {
        name: "aabb",
        description: "a^2 = b^2, ab = ba",
        source: pres!("aabb"),
        seed: &[],
        claims: &[
            claim(Property::Complete, YES, "strong cube condition holds for the cyclic family with n = 2"),
            claim(Property::ClosureSize, Expected::Count(3), "closure of the letters is {1, a, b}"),
            claim(Property::Er, YES, "a and b have the common multiple a^2 = b^2 and ab = ba"),
            claim(Property::Embeds, YES, "complete, cancellative, E_r on its closure"),
        ],
    },
    CorpusEntry {
        name: "s3r3",
        description: "cyclic family with n = 3",
        source: pres!("s3r3"),
        seed: &[],
        claims: &[
            claim(Property::Complete, YES, "strong cube condition holds for the cyclic family"),
            claim(Property::FiniteClosure, YES, "closure is the letters and 1"),
            claim(Property::Embeds, YES, "complete, cancellative, E_r on its closure"),
        ],
    },
    CorpusEntry {
        name: "hako",
        description: "Sergiescu presentation of B3",
        source: pres!("hako"),
        seed: &[],
        claims: &[
            claim(Property::Complete, NO, "c^-1 a a^-1 d reverses to a^2 b^-2 and no relation c... = d... exists"),
            claim(Property::CompletionAdds, Expected::Count(2), "completion adds c a^2 = d b^2, then a^2 d = b^2 c"),
        ],
    },
    CorpusEntry {
        name: "hakp",
        description: "hako with c a^2 = d b^2",
        source: pres!("hakp"),
        seed: &[],
        claims: &[
            claim(Property::Complete, NO, "right complete but not left complete"),
            claim(Property::CompletionAdds, Expected::Count(1), "completion adds a^2 d = b^2 c"),
        ],
    },
    CorpusEntry {
        name: "hakq",
        description: "completed Sergiescu presentation",
        source: pres!("hakq"),
        seed: &["1", "a", "b", "c", "d", "a a", "a b", "b a", "b b", "a b a"],
        claims: &[
            claim(Property::Complete, YES, "both strong cube conditions hold"),
            claim(Property::SatisfiesC, YES, "no relation shares its first or last letter"),
            claim(Property::LeftCancellative, YES, "condition C"),
            claim(Property::Er, YES, "the family {1, a, b, c, d, a^2, ab, ba, b^2, aba}"),
            claim(Property::Embeds, YES, "group of fractions is the braid group B3"),
        ],
    },
    CorpusEntry {
        name: "heis",
        description: "Heisenberg monoid",
        source: pres!("heis"),
        seed: &[],
        claims: &[
            claim(Property::Complete, NO, "c^-1 b b^-1 a reverses to b a b^-1 and (c b a)^-1 (a b) does not reverse to 1"),
            claim(Property::CompletionAdds, Expected::Count(1), "completion adds c b a = a b"),
            claim(Property::FiniteClosure, UNKNOWN, "closure {1, a, b, c} with all a c^n is infinite"),
        ],
    },
    CorpusEntry {
        name: "heit",
        description: "completed Heisenberg presentation",
        source: pres!("heit"),
        seed: &[],
        claims: &[
            claim(Property::Complete, YES, "strong cube condition holds and the presentation is symmetric"),
            claim(Property::Er, UNKNOWN, "no finite family containing a and b satisfies E_r"),
            external(Property::Embeds, YES, "embeds in the Heisenberg group by Ore's theorem, not by E_r"),
        ],
    },
    CorpusEntry {
        name: "bkls",
        description: "band generators of B3 with a^2 = b^2",
        source: pres!("bkls"),
        seed: &[],
        claims: &[
            claim(Property::Complete, NO, "not right complete"),
            external(Property::CompletionAdds, Expected::AtMost(5), "said to complete to the cyclic family with n = 3; only holds up to cancellation"),
        ],
    },
    CorpusEntry {
        name: "b3",
        description: "braid monoid on three strands",
        source: pres!("b3"),
        seed: &[],
        claims: &[
            claim(Property::Complete, YES, "length preserving, strong cube condition on letters"),
            claim(Property::Er, YES, "closure is finite"),
            claim(Property::Embeds, YES, "Garside monoid"),
        ],
    },
    CorpusEntry {
        name: "b4",
        description: "braid monoid on four strands",
        source: pres!("b4"),
        seed: &[],
        claims: &[
            claim(Property::Complete, YES, "length preserving, strong cube condition on letters"),
            claim(Property::Embeds, YES, "Garside monoid"),
        ],
    },
    CorpusEntry {
        name: "bkl3",
        description: "band generator presentation of B3",
        source: pres!("bkl3"),
        seed: &[],
        claims: &[
            claim(Property::Complete, YES, "strong cube condition on letters"),
            claim(Property::Embeds, YES, "Garside monoid"),
        ],
    },
    CorpusEntry {
        name: "bs",
        description: "Baumslag-Solitar relation b a = a^2 b",
        source: pres!("bs"),
        seed: &[],
        claims: &[claim(Property::Diverges("b^-1 a b"), YES, "b^-1 a b reverses forever")],
    },
    CorpusEntry {
        name: "artin",
        description: "Artin monoid of a triangle with labels 3",
        source: pres!("artin"),
        seed: &[],
        claims: &[claim(Property::Diverges("a^-1 b c"), YES, "non-spherical type, reversing of a^-1 b c does not terminate")],
    },
    CorpusEntry {
        name: "nemb",
        description: "complete presentation whose monoid does not embed in its group",
        source: pres!("nemb"),
        seed: &[],
        claims: &[
            claim(Property::Complete, YES, "both strong cube conditions hold"),
            claim(Property::SatisfiesC, YES, "no relation shares its first or last letter"),
            claim(Property::Er, UNKNOWN, "c c' and d d' are equal in the group only"),
            external(Property::Embeds, NO, "c c' = d d' holds in the group but not in the monoid"),
        ],
    },
    CorpusEntry {
        name: "lee",
        description: "a b = a c",
        source: pres!("lee"),
        seed: &[],
        claims: &[claim(Property::LeftCancellative, NO, "b^-1 c is stuck; valid if right complete")],
    },
    CorpusEntry {
        name: "noet",
        description: "a b a = b^2 with weights a = 1, b = 2",
        source: pres!("noet"),
        seed: &[],
        claims: &[claim(Property::Complete, YES, "homogeneous for the weights a = 1, b = 2")],
    },
    CorpusEntry {
        name: "free2",
        description: "free monoid on two letters",
        source: pres!("free2"),
        seed: &[],
        claims: &[
            claim(Property::Complete, YES, "no relations"),
            claim(Property::ClosureSize, Expected::Count(3), "closure is {1, a, b}"),
            claim(Property::Er, UNKNOWN, "a and b have no common multiple"),
        ],
    },
];

pub fn entries() -> &'static [CorpusEntry] {
    ENTRIES
}

pub fn find(name: &str) -> Option<&'static CorpusEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimCheck {
    pub claim: Claim,
    pub observed: String,
    /// `None` for external claims.
    pub passed: Option<bool>,
}

fn verdict_of(flag: bool) -> Verdict {
    if flag {
        Verdict::Yes
    } else {
        Verdict::No
    }
}

fn compare(expected: Expected, observed: Expected) -> bool {
    match (expected, observed) {
        (Expected::AtMost(n), Expected::Count(m)) => m <= n,
        (e, o) => e == o,
    }
}

/// Re-derives every non-external claim of `entry`.
pub fn check_entry(entry: &CorpusEntry, b: &Budget) -> Vec<ClaimCheck> {
    let doc = entry.document();
    let p = &doc.presentation;
    let pl = doc.pseudolength.clone().unwrap_or(PseudoLength::UnitLength);
    let cert = verify_pseudolength(p, &pl, HomogeneitySide::Both).ok();
    let seed = entry.seed_words(&doc);
    entry
        .claims
        .iter()
        .map(|claim| {
            if claim.external {
                return ClaimCheck { claim: *claim, observed: "external".into(), passed: None };
            }
            let observed = match claim.property {
                Property::Complete => {
                    let (r, l) = check_complete(p, cert.as_ref(), b);
                    let v = match (r.verdict, l.verdict) {
                        (CubeVerdict::Complete, CubeVerdict::Complete) => Verdict::Yes,
                        (CubeVerdict::Incomplete, _) | (_, CubeVerdict::Incomplete) => Verdict::No,
                        _ => Verdict::Unknown,
                    };
                    Expected::Verdict(v)
                }
                Property::SatisfiesC => Expected::Verdict(verdict_of(p.syntactic_flags().satisfies_c)),
                Property::FiniteClosure => {
                    let (r, _) = compute_closure(p, b, DEFAULT_MAX_WORDS);
                    Expected::Verdict(if r.is_closed() { Verdict::Yes } else { Verdict::Unknown })
                }
                Property::ClosureSize => {
                    let (r, _) = compute_closure(p, b, DEFAULT_MAX_WORDS);
                    if r.is_closed() {
                        Expected::Count(r.words.len())
                    } else {
                        Expected::Verdict(Verdict::Unknown)
                    }
                }
                Property::LeftCancellative => {
                    let (r, l) = check_complete(p, cert.as_ref(), b);
                    let hyp = Hypotheses {
                        r_complete: r.verdict == CubeVerdict::Complete,
                        l_complete: l.verdict == CubeVerdict::Complete,
                        er: false,
                    };
                    Expected::Verdict(check_left_cancellative(p, &hyp, b).value)
                }
                Property::Er => Expected::Verdict(check_er(p, seed.as_deref(), b).verdict.value),
                Property::Embeds => Expected::Verdict(ore_report(p, Some(&pl), seed.as_deref(), b).embeds.value),
                Property::CompletionAdds => match complete_presentation(p, Some(&pl), crate::completeness::DEFAULT_MAX_ROUNDS, b) {
                    Ok(log) if log.status == CompletionStatus::Complete => Expected::Count(log.rounds.len()),
                    _ => Expected::Verdict(Verdict::Unknown),
                },
                Property::Diverges(word) => {
                    let w = p.alphabet().parse_signed(word).expect("bundled word parses");
                    Expected::Verdict(verdict_of(reverse_exhaustive(p, &w, Direction::Right, b).budget_exceeded))
                }
            };
            ClaimCheck { claim: *claim, observed: observed.render(), passed: Some(compare(claim.expected, observed)) }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::serialize;

    #[test]
    fn entries_parse_and_round_trip() {
        for e in entries() {
            let doc = e.document();
            let text = serialize(&doc.presentation, doc.pseudolength.as_ref());
            let again = parse_document(&text).unwrap();
            assert_eq!(again, doc, "{}", e.name);
            assert!(e.claims.iter().all(|c| !c.citation.is_empty()));
            let _ = e.seed_words(&doc);
        }
        assert!(find("hakq").is_some());
        assert!(find("nope").is_none());
    }
}
