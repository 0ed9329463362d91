//! Cube conditions on letters and on arbitrary words.

use std::collections::{BTreeMap, BTreeSet};

use super::pseudolength::{verify_pseudolength, HomogeneityCertificate};
use crate::engine::{reverse_search, Budget, Direction, GridLimits, GridReverser, SearchOptions};
use crate::oracle::{oracle_class, oracle_equiv, OracleConfig, OracleVerdict};
use crate::presentation::Presentation;
use crate::word::{Letter, PositiveWord, SignedWord};

/// A failed strong cube check at letters `(s, t, r)`.
///
/// Right: `s^-1 r r^-1 t` reverses to `v u^-1` while `(s v)^-1 (t u)` does
/// not reverse to ε. Left: the mirror image, with `t r^-1 r s^-1` reversing
/// to `u^-1 v` on the left; the words are stored as they read in the
/// presentation itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    pub direction: Direction,
    pub s: Letter,
    pub t: Letter,
    pub r: Letter,
    pub v: PositiveWord,
    pub u: PositiveWord,
}

impl Obstruction {
    /// The relation whose addition repairs this obstruction.
    pub fn relation(&self) -> (PositiveWord, PositiveWord) {
        let (s, t) = (PositiveWord::letter(self.s), PositiveWord::letter(self.t));
        match self.direction {
            Direction::Right => (s.concat(&self.v), t.concat(&self.u)),
            Direction::Left => (self.v.concat(&s), self.u.concat(&t)),
        }
    }

    fn mirrored(&self) -> Self {
        Obstruction { direction: self.direction.other(), v: self.v.reversed(), u: self.u.reversed(), ..self.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TripleStatus {
    Ok,
    Obstructions(Vec<Obstruction>),
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubeVerdict {
    /// No obstruction, no unknown triple, and a valid homogeneity certificate.
    Complete,
    /// As `Complete` but without a certificate, so not a completeness proof.
    NoObstructionFound,
    Incomplete,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeReport {
    pub direction: Direction,
    pub triples: BTreeMap<(Letter, Letter, Letter), TripleStatus>,
    pub certified: bool,
    pub verdict: CubeVerdict,
}

impl CubeReport {
    /// Obstructions in triple order, then terminal order.
    pub fn obstructions(&self) -> impl Iterator<Item = &Obstruction> {
        self.triples.values().flat_map(|st| match st {
            TripleStatus::Obstructions(v) => v.as_slice(),
            _ => &[],
        })
    }

    pub fn first_obstruction(&self) -> Option<&Obstruction> {
        self.obstructions().next()
    }

    pub fn unknown_count(&self) -> usize {
        self.triples.values().filter(|s| matches!(s, TripleStatus::Unknown)).count()
    }

    pub fn ok_count(&self) -> usize {
        self.triples.values().filter(|s| matches!(s, TripleStatus::Ok)).count()
    }
}

fn certified(p: &Presentation, cert: Option<&HomogeneityCertificate>) -> bool {
    cert.is_some_and(|c| verify_pseudolength(p, &c.pl, c.side).is_ok())
}

fn right_triples(p: &Presentation, b: &Budget) -> BTreeMap<(Letter, Letter, Letter), TripleStatus> {
    let letters: Vec<Letter> = p.alphabet().letters().collect();
    let mut grid = GridReverser::new(p, GridLimits::from_budget(b));
    let mut out = BTreeMap::new();
    for &s in &letters {
        for &t in &letters {
            for &r in &letters {
                out.insert((s, t, r), strong_triple(&mut grid, s, t, r));
            }
        }
    }
    out
}

/// Terminals of `s^-1 r r^-1 t`, assembled from the cells `s^-1 r`,
/// `r^-1 t` and the middle `u1^-1 v2`. `None` when a cell is out of budget.
pub(super) fn triple_terminals(grid: &mut GridReverser<'_>, s: Letter, t: Letter, r: Letter) -> Option<BTreeSet<(PositiveWord, PositiveWord)>> {
    let (sw, tw, rw) = (PositiveWord::letter(s), PositiveWord::letter(t), PositiveWord::letter(r));
    let left = grid.terminals(&sw, &rw)?;
    let right = grid.terminals(&rw, &tw)?;
    let mut out = BTreeSet::new();
    for (v1, u1) in left.iter() {
        for (v2, u2) in right.iter() {
            for (x, y) in grid.terminals(u1, v2)?.iter() {
                out.insert((v1.concat(x), u2.concat(y)));
            }
        }
    }
    Some(out)
}

fn strong_triple(grid: &mut GridReverser<'_>, s: Letter, t: Letter, r: Letter) -> TripleStatus {
    let Some(terminals) = triple_terminals(grid, s, t, r) else {
        return TripleStatus::Unknown;
    };
    let (sw, tw) = (PositiveWord::letter(s), PositiveWord::letter(t));
    let mut obstructions = Vec::new();
    let mut unknown = false;
    for (v, u) in terminals {
        match grid.reverses_to_empty(&sw.concat(&v), &tw.concat(&u)) {
            Some(true) => {}
            Some(false) => obstructions.push(Obstruction { direction: Direction::Right, s, t, r, v, u }),
            None => unknown = true,
        }
    }
    if !obstructions.is_empty() {
        TripleStatus::Obstructions(obstructions)
    } else if unknown {
        TripleStatus::Unknown
    } else {
        TripleStatus::Ok
    }
}

fn verdict(triples: &BTreeMap<(Letter, Letter, Letter), TripleStatus>, certified: bool) -> CubeVerdict {
    if triples.values().any(|s| matches!(s, TripleStatus::Obstructions(_))) {
        CubeVerdict::Incomplete
    } else if triples.values().any(|s| matches!(s, TripleStatus::Unknown)) {
        CubeVerdict::Unknown
    } else if certified {
        CubeVerdict::Complete
    } else {
        CubeVerdict::NoObstructionFound
    }
}

/// Strong right cube condition on every ordered triple of letters.
pub fn check_strong_cube_letters(p: &Presentation, cert: Option<&HomogeneityCertificate>, b: &Budget) -> CubeReport {
    let triples = right_triples(p, b);
    let certified = certified(p, cert);
    CubeReport { direction: Direction::Right, verdict: verdict(&triples, certified), triples, certified }
}

/// Strong left cube condition, checked as the right condition on the mirror.
pub fn check_strong_cube_letters_left(p: &Presentation, cert: Option<&HomogeneityCertificate>, b: &Budget) -> CubeReport {
    let triples: BTreeMap<_, _> = right_triples(&p.mirror(), b)
        .into_iter()
        .map(|(k, st)| {
            let st = match st {
                TripleStatus::Obstructions(v) => TripleStatus::Obstructions(v.iter().map(Obstruction::mirrored).collect()),
                other => other,
            };
            (k, st)
        })
        .collect();
    let certified = certified(p, cert);
    CubeReport { direction: Direction::Left, verdict: verdict(&triples, certified), triples, certified }
}

/// Both sides; the presentation is complete when both verdicts are `Complete`.
pub fn check_complete(p: &Presentation, cert: Option<&HomogeneityCertificate>, b: &Budget) -> (CubeReport, CubeReport) {
    (check_strong_cube_letters(p, cert, b), check_strong_cube_letters_left(p, cert, b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubeMode {
    /// `(u v')^-1 (v u') ⇝ ε` for every terminal `v' u'^-1`.
    Strong,
    /// Some terminal `v'' u''^-1` of `u^-1 v` and a word `w''` with
    /// `u' ≡ u'' w''` and `v' ≡ v'' w''`, equivalence decided by the oracle.
    Weak(OracleConfig),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CubeAtResult {
    Ok,
    /// The terminal `v' u'^-1` of `u^-1 w w^-1 v` that fails.
    Fail { v1: PositiveWord, u1: PositiveWord },
    Unknown,
}

/// The (strong) right cube condition at words `u`, `v`, `w`.
pub fn check_cube_at(p: &Presentation, u: &PositiveWord, v: &PositiveWord, w: &PositiveWord, mode: CubeMode, b: &Budget) -> CubeAtResult {
    let word = SignedWord::left_fraction(u, w).concat(&SignedWord::right_fraction(&PositiveWord::empty(), w)).concat(&v.to_signed());
    let out = reverse_search(p, &word, Direction::Right, b, &SearchOptions::terminals_only());
    if out.budget_exceeded {
        return CubeAtResult::Unknown;
    }
    let direct = match mode {
        CubeMode::Strong => Vec::new(),
        CubeMode::Weak(_) => {
            let d = reverse_search(p, &SignedWord::left_fraction(u, v), Direction::Right, b, &SearchOptions::terminals_only());
            if d.budget_exceeded {
                return CubeAtResult::Unknown;
            }
            d.fractions().into_iter().collect()
        }
    };
    let mut unknown = false;
    for (v1, u1) in out.fractions() {
        let ok = match mode {
            CubeMode::Strong => {
                let start = SignedWord::left_fraction(&u.concat(&v1), &v.concat(&u1));
                let res = reverse_search(p, &start, Direction::Right, b, &SearchOptions::reach_empty());
                if res.empty_terminal().is_some() {
                    Some(true)
                } else if res.budget_exceeded {
                    None
                } else {
                    Some(false)
                }
            }
            CubeMode::Weak(cfg) => weak_absorbed(p, &v1, &u1, &direct, &cfg),
        };
        match ok {
            Some(true) => {}
            Some(false) => return CubeAtResult::Fail { v1, u1 },
            None => unknown = true,
        }
    }
    if unknown {
        CubeAtResult::Unknown
    } else {
        CubeAtResult::Ok
    }
}

fn weak_absorbed(
    p: &Presentation,
    v1: &PositiveWord,
    u1: &PositiveWord,
    direct: &[(PositiveWord, PositiveWord)],
    cfg: &OracleConfig,
) -> Option<bool> {
    let class = oracle_class(p, u1, cfg);
    let mut definitive = class.complete;
    for z in &class.words {
        for (v2, u2) in direct {
            if !z.as_slice().starts_with(u2.as_slice()) {
                continue;
            }
            let w2 = PositiveWord(z.as_slice()[u2.len()..].to_vec());
            match oracle_equiv(p, v1, &v2.concat(&w2), cfg) {
                OracleVerdict::Yes(_) => return Some(true),
                OracleVerdict::NoWithinBound { class_exhausted: true } => {}
                _ => definitive = false,
            }
        }
    }
    definitive.then_some(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_presentation;

    #[test]
    fn aabb_passes() {
        let p = parse_presentation("letters: a b\nrel: a a = b b\nrel: a b = b a").unwrap();
        let r = check_strong_cube_letters(&p, None, &Budget::default());
        assert_eq!(r.triples.len(), 8);
        assert_eq!(r.ok_count(), 8);
        assert_eq!(r.verdict, CubeVerdict::NoObstructionFound);
    }

    #[test]
    fn diagonal_is_ok() {
        let p = parse_presentation("letters: a b c\nrel: a b = b c = c a").unwrap();
        let al = p.alphabet();
        let w = |s| al.parse_positive(s).unwrap();
        assert_eq!(check_cube_at(&p, &w("a b"), &w("a b"), &w("c"), CubeMode::Strong, &Budget::default()), CubeAtResult::Ok);
    }
}
