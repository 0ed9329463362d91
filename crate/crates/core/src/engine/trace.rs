use std::fmt::Write as _;

use super::{apply_step, Direction, ReversingStep, Side, StepKind};
use crate::error::TraceError;
use crate::presentation::{Orientation, Presentation};
use crate::word::{Alphabet, SignedWord};

/// A start word and the steps taken from it, with every intermediate word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReversingTrace {
    pub start: SignedWord,
    pub steps: Vec<(ReversingStep, SignedWord)>,
}

impl ReversingTrace {
    pub fn new(start: SignedWord) -> Self {
        ReversingTrace { start, steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end(&self) -> &SignedWord {
        self.steps.last().map(|(_, w)| w).unwrap_or(&self.start)
    }

    /// Number of direction changes along the trace.
    pub fn alternations(&self) -> usize {
        self.steps
            .windows(2)
            .filter(|p| p[0].0.direction != p[1].0.direction)
            .count()
    }

    /// Re-applies every step and checks the recorded words.
    pub fn replay(&self, p: &Presentation) -> Result<(), TraceError> {
        let mut cur = self.start.clone();
        for (index, (step, recorded)) in self.steps.iter().enumerate() {
            let next = apply_step(p, &cur, step).map_err(|reason| TraceError::InvalidStep { index, reason })?;
            if &next != recorded {
                return Err(TraceError::Mismatch { index });
            }
            cur = next;
        }
        Ok(())
    }

    /// One line per step: `<word> --[dir,pos,rule]--> <word>`.
    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        if self.steps.is_empty() {
            let _ = writeln!(out, "{}", alphabet.display_signed(&self.start));
            return out;
        }
        let mut prev = &self.start;
        for (step, w) in &self.steps {
            let _ = writeln!(
                out,
                "{} --[{},{},{}]--> {}",
                alphabet.display_signed(prev),
                step.direction.tag(),
                step.position,
                rule_text(&step.kind),
                alphabet.display_signed(w)
            );
            prev = w;
        }
        out
    }

    /// Reads the format written by [`ReversingTrace::to_text`] and replays it.
    pub fn parse(p: &Presentation, text: &str) -> Result<Self, TraceError> {
        let al = p.alphabet();
        let fmt_err = |line: usize, reason: String| TraceError::Format { line, reason };
        let mut start: Option<SignedWord> = None;
        let mut steps = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let raw = raw.trim();
            if raw.is_empty() {
                continue;
            }
            let Some((lhs, rest)) = raw.split_once("--[") else {
                if start.is_some() {
                    return Err(fmt_err(line, "missing step arrow".into()));
                }
                start = Some(al.parse_signed(raw).map_err(|e| fmt_err(line, e.to_string()))?);
                continue;
            };
            let (label, rhs) = rest
                .split_once("]-->")
                .ok_or_else(|| fmt_err(line, "missing `]-->`".into()))?;
            let before = al.parse_signed(lhs).map_err(|e| fmt_err(line, e.to_string()))?;
            let after = al.parse_signed(rhs).map_err(|e| fmt_err(line, e.to_string()))?;
            match &start {
                None => start = Some(before.clone()),
                Some(_) => {
                    let expected = steps.last().map(|(_, w): &(ReversingStep, SignedWord)| w).or(start.as_ref());
                    if expected != Some(&before) {
                        return Err(fmt_err(line, "word does not continue the previous line".into()));
                    }
                }
            }
            let step = parse_label(label).map_err(|r| fmt_err(line, r))?;
            steps.push((step, after));
        }
        let start = start.ok_or_else(|| fmt_err(1, "empty trace".into()))?;
        let trace = ReversingTrace { start, steps };
        trace.replay(p)?;
        Ok(trace)
    }
}

pub(crate) fn rule_text(kind: &StepKind) -> String {
    match kind {
        StepKind::Delete => "del".to_string(),
        StepKind::Relation { rel_id, orientation } => format!("rel{}:{}", rel_id, orientation.tag()),
        StepKind::Extended { rel_id, orientation, side } => format!(
            "ext{}:{}:{}",
            rel_id,
            orientation.tag(),
            match side {
                Side::Positive => "pos",
                Side::Negative => "neg",
            }
        ),
    }
}

fn parse_label(label: &str) -> Result<ReversingStep, String> {
    let parts: Vec<&str> = label.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("bad step label `{label}`"));
    }
    let direction = match parts[0] {
        "r" => Direction::Right,
        "l" => Direction::Left,
        d => return Err(format!("bad direction `{d}`")),
    };
    let position: usize = parts[1].parse().map_err(|_| format!("bad position `{}`", parts[1]))?;
    let rule = parts[2];
    let orient = |t: &str| Orientation::from_tag(t).ok_or_else(|| format!("bad orientation `{t}`"));
    let kind = if rule == "del" {
        StepKind::Delete
    } else if let Some(body) = rule.strip_prefix("rel") {
        let (id, o) = body.split_once(':').ok_or_else(|| format!("bad rule `{rule}`"))?;
        StepKind::Relation {
            rel_id: id.parse().map_err(|_| format!("bad relation id `{id}`"))?,
            orientation: orient(o)?,
        }
    } else if let Some(body) = rule.strip_prefix("ext") {
        let f: Vec<&str> = body.split(':').collect();
        if f.len() != 3 {
            return Err(format!("bad rule `{rule}`"));
        }
        let side = match f[2] {
            "pos" => Side::Positive,
            "neg" => Side::Negative,
            s => return Err(format!("bad side `{s}`")),
        };
        StepKind::Extended {
            rel_id: f[0].parse().map_err(|_| format!("bad relation id `{}`", f[0]))?,
            orientation: orient(f[1])?,
            side,
        }
    } else {
        return Err(format!("bad rule `{rule}`"));
    };
    Ok(ReversingStep { direction, position, kind })
}
