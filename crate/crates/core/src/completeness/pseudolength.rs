//! Integer pseudolengths and homogeneity certificates.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::presentation::Presentation;
use crate::word::{Alphabet, Letter, PositiveWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PseudoLength {
    /// Plain word length.
    UnitLength,
    /// Sum of per-letter weights, each at least 1.
    AdditiveWeights(BTreeMap<Letter, u64>),
    /// Length plus the number of pairs `i < j` with `u_i = first`, `u_j = second`.
    LengthPlusInversions { first: Letter, second: Letter },
}

impl PseudoLength {
    pub fn eval(&self, w: &PositiveWord) -> u64 {
        match self {
            PseudoLength::UnitLength => w.len() as u64,
            PseudoLength::AdditiveWeights(m) => w.iter().map(|l| m.get(l).copied().unwrap_or(0)).sum(),
            PseudoLength::LengthPlusInversions { first, second } => {
                let mut seen_first = 0u64;
                let mut inversions = 0u64;
                for l in w {
                    if l == second {
                        inversions += seen_first;
                    }
                    if l == first {
                        seen_first += 1;
                    }
                }
                w.len() as u64 + inversions
            }
        }
    }

    /// Parses `unit`, `weights a=1 b=2` or `inversions a b`.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self, String> {
        let mut toks = text.split_whitespace();
        let head = toks.next().ok_or_else(|| "missing pseudolength kind".to_string())?;
        let letter = |name: &str| alphabet.lookup(name).ok_or_else(|| format!("unknown letter `{name}`"));
        match head {
            "unit" => match toks.next() {
                None => Ok(PseudoLength::UnitLength),
                Some(t) => Err(format!("unexpected token `{t}`")),
            },
            "weights" => {
                let mut m = BTreeMap::new();
                for tok in toks {
                    let (name, val) = tok
                        .split_once('=')
                        .ok_or_else(|| format!("expected <letter>=<int>, got `{tok}`"))?;
                    let v: u64 = val.parse().map_err(|_| format!("bad weight `{val}`"))?;
                    if m.insert(letter(name)?, v).is_some() {
                        return Err(format!("weight for `{name}` given twice"));
                    }
                }
                Ok(PseudoLength::AdditiveWeights(m))
            }
            "inversions" => {
                let a = toks.next().ok_or_else(|| "inversions needs two letters".to_string())?;
                let b = toks.next().ok_or_else(|| "inversions needs two letters".to_string())?;
                if let Some(t) = toks.next() {
                    return Err(format!("unexpected token `{t}`"));
                }
                Ok(PseudoLength::LengthPlusInversions { first: letter(a)?, second: letter(b)? })
            }
            other => Err(format!("unknown pseudolength kind `{other}`")),
        }
    }

    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        match self {
            PseudoLength::UnitLength => "unit".to_string(),
            PseudoLength::AdditiveWeights(m) => {
                let mut s = "weights".to_string();
                for (l, v) in m {
                    s.push_str(&format!(" {}={}", alphabet.name(*l), v));
                }
                s
            }
            PseudoLength::LengthPlusInversions { first, second } => {
                format!("inversions {} {}", alphabet.name(*first), alphabet.name(*second))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomogeneitySide {
    Right,
    Left,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneityCertificate {
    pub pl: PseudoLength,
    pub side: HomogeneitySide,
    /// `(rel_id, ℓ(lhs), ℓ(rhs))`
    pub checked_relations: Vec<(usize, u64, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomogeneityError {
    #[error("relation {rel_id} is not balanced: {reason}")]
    Violation { rel_id: usize, reason: String },
    #[error("no weight given for letter `{0}`")]
    MissingWeight(String),
    #[error("weight of letter `{0}` must be at least 1")]
    ZeroWeight(String),
}

impl HomogeneityError {
    pub fn rel_id(&self) -> Option<usize> {
        match self {
            HomogeneityError::Violation { rel_id, .. } => Some(*rel_id),
            _ => None,
        }
    }
}

fn count(w: &PositiveWord, l: Letter) -> usize {
    w.iter().filter(|&&x| x == l).count()
}

/// Checks that every relation preserves `pl`.
///
/// Every variant here satisfies `ℓ(su) > ℓ(u)` and `ℓ(us) > ℓ(u)`, so one
/// check covers both sides.
pub fn verify_pseudolength(
    p: &Presentation,
    pl: &PseudoLength,
    side: HomogeneitySide,
) -> Result<HomogeneityCertificate, HomogeneityError> {
    let alphabet = p.alphabet();
    if let PseudoLength::AdditiveWeights(m) = pl {
        for l in alphabet.letters() {
            match m.get(&l) {
                None => return Err(HomogeneityError::MissingWeight(alphabet.name(l).to_string())),
                Some(0) => return Err(HomogeneityError::ZeroWeight(alphabet.name(l).to_string())),
                Some(_) => {}
            }
        }
    }
    let mut checked = Vec::with_capacity(p.relations().len());
    for rel in p.relations() {
        let (x, y) = (pl.eval(rel.lhs()), pl.eval(rel.rhs()));
        if x != y {
            return Err(HomogeneityError::Violation {
                rel_id: rel.id,
                reason: format!("pseudolengths {x} and {y} differ"),
            });
        }
        if let PseudoLength::LengthPlusInversions { first, second } = pl {
            // Balanced counts make the cross-context inversion terms equal.
            for l in [*first, *second] {
                if count(rel.lhs(), l) != count(rel.rhs(), l) {
                    return Err(HomogeneityError::Violation {
                        rel_id: rel.id,
                        reason: format!("letter `{}` count differs", alphabet.name(l)),
                    });
                }
            }
        }
        checked.push((rel.id, x, y));
    }
    Ok(HomogeneityCertificate { pl: pl.clone(), side, checked_relations: checked })
}
