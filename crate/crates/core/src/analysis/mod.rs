//! Monoid and group properties read off a presentation. Every decider
//! returns a [`TriVerdict`] that names the hypotheses it relies on.

mod cancel;
mod multiples;
mod ore;
mod word_problem;

pub use crate::oracle::{check_derivation, oracle_class, oracle_equiv, OracleClass, OracleConfig, OracleVerdict};
pub use cancel::{check_left_cancellative, check_right_cancellative};
pub use multiples::{check_er, lcm_right, ErOutcome, LcmOutcome};
pub use ore::{ore_report, OreDetails, OreReport};
pub use word_problem::{fraction_equiv, group_word_problem, monoid_word_problem, MonoidWordProblem};

use crate::engine::ReversingTrace;
use crate::word::PositiveWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        }
    }
}

/// A named hypothesis, marked discharged when it has been established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assumption {
    pub name: &'static str,
    pub discharged: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Trace(ReversingTrace),
    /// Several traces forming one argument, in order.
    Traces(Vec<ReversingTrace>),
    /// A word, such as a common multiplier.
    Word(PositiveWord),
    /// A relation id.
    Relation(usize),
    /// For each `(u, v)`, the `(u', v')` closing the square.
    Squares(Vec<((PositiveWord, PositiveWord), (PositiveWord, PositiveWord))>),
    Note(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriVerdict {
    pub value: Verdict,
    pub witness: Option<Witness>,
    pub assumptions: Vec<Assumption>,
}

impl TriVerdict {
    pub fn new(value: Verdict, witness: Option<Witness>, assumptions: Vec<Assumption>) -> Self {
        TriVerdict { value, witness, assumptions }
    }

    pub fn is_yes(&self) -> bool {
        self.value == Verdict::Yes
    }

    pub fn is_no(&self) -> bool {
        self.value == Verdict::No
    }

    pub fn is_unknown(&self) -> bool {
        self.value == Verdict::Unknown
    }

    /// True when every listed hypothesis has been established.
    pub fn unconditional(&self) -> bool {
        self.assumptions.iter().all(|a| a.discharged)
    }
}

/// Hypotheses the caller has already established for the presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Hypotheses {
    pub r_complete: bool,
    pub l_complete: bool,
    pub er: bool,
}

impl Hypotheses {
    pub fn complete() -> Self {
        Hypotheses { r_complete: true, l_complete: true, er: false }
    }

    pub(crate) fn assume(&self, name: &'static str) -> Assumption {
        let discharged = match name {
            "r-complete" => self.r_complete,
            "l-complete" => self.l_complete,
            "complete" => self.r_complete && self.l_complete,
            "E_r" => self.er,
            _ => false,
        };
        Assumption { name, discharged }
    }
}
