//! Repairing cube obstructions by adding relations.

use thiserror::Error;

use super::cube::{check_strong_cube_letters, check_strong_cube_letters_left, triple_terminals, CubeReport, CubeVerdict, Obstruction};
use super::pseudolength::{verify_pseudolength, HomogeneityCertificate, HomogeneityError, HomogeneitySide, PseudoLength};
use crate::engine::{reverse_search, Budget, Direction, GridLimits, GridReverser, SearchOptions};
use crate::error::PresentationError;
use crate::presentation::Presentation;
use crate::word::{Letter, PositiveWord, SignedLetter, SignedWord};

pub const DEFAULT_MAX_ROUNDS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error("obstruction does not replay: {0}")]
    Rejected(String),
    #[error(transparent)]
    Homogeneity(#[from] HomogeneityError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// Adds the relation that repairs `ob`, after checking that `ob` is a
/// genuine obstruction of `p`. Returns `p` unchanged if the relation is
/// already present.
pub fn one_completion(p: &Presentation, ob: &Obstruction, b: &Budget) -> Result<Presentation, CompletionError> {
    let (x, y) = ob.relation();
    if p.contains_relation(&x, &y) {
        return Ok(p.clone());
    }
    let (q, v, u) = match ob.direction {
        Direction::Right => (p.clone(), ob.v.clone(), ob.u.clone()),
        Direction::Left => (p.mirror(), ob.v.reversed(), ob.u.reversed()),
    };
    let sv = PositiveWord::letter(ob.s).concat(&v);
    let tu = PositiveWord::letter(ob.t).concat(&u);
    let mut grid = GridReverser::new(&q, GridLimits::from_budget(b));
    let reached = match triple_terminals(&mut grid, ob.s, ob.t, ob.r) {
        Some(set) => set.contains(&(v.clone(), u.clone())),
        None => {
            let word = SignedWord(vec![
                SignedLetter::neg(ob.s),
                SignedLetter::pos(ob.r),
                SignedLetter::neg(ob.r),
                SignedLetter::pos(ob.t),
            ]);
            let out = reverse_search(&q, &word, Direction::Right, b, &SearchOptions::terminals_only());
            out.fractions().contains(&(v.clone(), u.clone()))
        }
    };
    if !reached {
        return Err(CompletionError::Rejected("terminal is not reached".into()));
    }
    let empty = grid.reverses_to_empty(&sv, &tu).or_else(|| {
        let check = reverse_search(&q, &SignedWord::left_fraction(&sv, &tu), Direction::Right, b, &SearchOptions::reach_empty());
        if check.empty_terminal().is_some() {
            Some(true)
        } else {
            (!check.budget_exceeded).then_some(false)
        }
    });
    match empty {
        Some(true) => return Err(CompletionError::Rejected("the check already succeeds".into())),
        None => return Err(CompletionError::Rejected("the check ran out of budget".into())),
        Some(false) => {}
    }
    Ok(p.with_relation(x, y)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionStatus {
    Complete,
    Budget,
    MaxRounds,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionRound {
    pub direction: Direction,
    pub triple: (Letter, Letter, Letter),
    pub obstruction: Obstruction,
    pub relation: (PositiveWord, PositiveWord),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionLog {
    pub rounds: Vec<CompletionRound>,
    pub final_presentation: Presentation,
    pub status: CompletionStatus,
    /// Whether a homogeneity certificate backed every round.
    pub certified: bool,
    pub right: CubeReport,
    pub left: CubeReport,
}

/// Fixes the first right obstruction each round; once the right side is
/// clean, fixes left obstructions. Stops when both sides pass.
pub fn complete_presentation(
    p: &Presentation,
    pl: Option<&PseudoLength>,
    max_rounds: usize,
    b: &Budget,
) -> Result<CompletionLog, CompletionError> {
    let certify = |q: &Presentation| -> Result<Option<HomogeneityCertificate>, HomogeneityError> {
        pl.map(|pl| verify_pseudolength(q, pl, HomogeneitySide::Both)).transpose()
    };
    let mut cur = p.clone();
    let mut cert = certify(&cur)?;
    let mut rounds = Vec::new();
    loop {
        let right = check_strong_cube_letters(&cur, cert.as_ref(), b);
        let (ob, left) = match right.first_obstruction() {
            Some(ob) => (Some(ob.clone()), None),
            None => {
                let left = check_strong_cube_letters_left(&cur, cert.as_ref(), b);
                (left.first_obstruction().cloned(), Some(left))
            }
        };
        let Some(ob) = ob else {
            let left = left.expect("left side was checked");
            let status = if right.verdict == CubeVerdict::Unknown || left.verdict == CubeVerdict::Unknown {
                CompletionStatus::Budget
            } else {
                CompletionStatus::Complete
            };
            return Ok(CompletionLog { rounds, final_presentation: cur, status, certified: cert.is_some(), right, left });
        };
        if rounds.len() >= max_rounds {
            let left = left.unwrap_or_else(|| check_strong_cube_letters_left(&cur, cert.as_ref(), b));
            return Ok(CompletionLog {
                rounds,
                final_presentation: cur,
                status: CompletionStatus::MaxRounds,
                certified: cert.is_some(),
                right,
                left,
            });
        }
        let next = one_completion(&cur, &ob, b)?;
        if next == cur {
            return Err(CompletionError::Rejected("obstruction repeats an existing relation".into()));
        }
        cur = next;
        cert = certify(&cur)?;
        rounds.push(CompletionRound { direction: ob.direction, triple: (ob.s, ob.t, ob.r), relation: ob.relation(), obstruction: ob });
    }
}
