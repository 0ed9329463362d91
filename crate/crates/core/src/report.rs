//! Flat reports with stable keys, rendered as `key=value` lines or as an
//! aligned human-readable listing.

use std::fmt::Write as _;

use crate::analysis::{TriVerdict, Witness};
use crate::closure::ClosureResult;
use crate::completeness::{CompletionLog, CubeReport, TripleStatus};
use crate::engine::{Direction, SearchOutcome};
use crate::word::Alphabet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    KeyValue,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, String)>,
}

fn escape(v: &str) -> String {
    v.replace('\\', "\\\\").replace('\n', "\\n")
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.entries.push((key.into(), value.to_string()));
        self
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::KeyValue => {
                for (k, v) in &self.entries {
                    let _ = writeln!(out, "{k}={}", escape(v));
                }
            }
            Format::Human => {
                let width = self.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &self.entries {
                    let mut lines = v.lines();
                    let _ = writeln!(out, "{k:width$}  {}", lines.next().unwrap_or(""));
                    for l in lines {
                        let _ = writeln!(out, "{:width$}  {l}", "");
                    }
                }
            }
        }
        out
    }

    /// `prefix.value`, `prefix.assumptions` and, when present, `prefix.witness`.
    pub fn verdict(&mut self, prefix: &str, v: &TriVerdict, alphabet: &Alphabet) -> &mut Self {
        self.push(format!("{prefix}.value"), v.value.as_str());
        let assumptions: Vec<String> = v
            .assumptions
            .iter()
            .map(|a| format!("{}:{}", a.name, if a.discharged { "discharged" } else { "assumed" }))
            .collect();
        self.push(format!("{prefix}.assumptions"), assumptions.join(","));
        if let Some(w) = &v.witness {
            self.push(format!("{prefix}.witness"), witness_text(w, alphabet));
        }
        self
    }

    pub fn search(&mut self, prefix: &str, out: &SearchOutcome, alphabet: &Alphabet) -> &mut Self {
        self.push(format!("{prefix}.direction"), out.direction.tag());
        self.push(format!("{prefix}.terminals"), out.terminals.len());
        for (i, t) in out.terminals.iter().enumerate() {
            self.push(format!("{prefix}.terminal.{i}"), alphabet.display_signed(&t.fraction.to_word()));
            self.push(format!("{prefix}.terminal.{i}.steps"), t.steps);
        }
        self.push(format!("{prefix}.stuck"), out.stuck.len());
        for (i, w) in out.stuck.iter().enumerate() {
            self.push(format!("{prefix}.stuck.{i}"), alphabet.display_signed(w));
        }
        self.push(format!("{prefix}.visited"), out.visited_count);
        self.push(format!("{prefix}.budget_exceeded"), out.budget_exceeded);
        self
    }

    pub fn closure(&mut self, prefix: &str, res: &ClosureResult, alphabet: &Alphabet) -> &mut Self {
        self.push(format!("{prefix}.status"), if res.is_closed() { "closed" } else { "budget_exceeded" });
        self.push(format!("{prefix}.size"), res.words.len());
        self.push(format!("{prefix}.rounds"), res.rounds);
        if res.is_closed() {
            let words: Vec<String> = res.words.iter().map(|w| alphabet.display_positive(w).to_string()).collect();
            self.push(format!("{prefix}.words"), words.join(", "));
            self.push(format!("{prefix}.max_pair_steps"), res.max_pair_steps);
        }
        self.push(format!("{prefix}.word_limit_hit"), res.word_limit_hit);
        self.push(format!("{prefix}.budget_pairs"), res.budget_pairs.len());
        self
    }

    pub fn cube(&mut self, prefix: &str, r: &CubeReport, alphabet: &Alphabet) -> &mut Self {
        let verdict = match r.verdict {
            crate::completeness::CubeVerdict::Complete => "complete",
            crate::completeness::CubeVerdict::NoObstructionFound => "no_obstruction_found",
            crate::completeness::CubeVerdict::Incomplete => "incomplete",
            crate::completeness::CubeVerdict::Unknown => "unknown",
        };
        self.push(format!("{prefix}.verdict"), verdict);
        self.push(format!("{prefix}.certified"), r.certified);
        self.push(format!("{prefix}.triples"), r.triples.len());
        self.push(format!("{prefix}.ok"), r.ok_count());
        self.push(format!("{prefix}.unknown"), r.unknown_count());
        let mut i = 0;
        for ((s, t, rr), st) in &r.triples {
            if let TripleStatus::Obstructions(obs) = st {
                for ob in obs {
                    let (x, y) = ob.relation();
                    self.push(
                        format!("{prefix}.obstruction.{i}"),
                        format!(
                            "({},{},{}) {} = {}",
                            alphabet.name(*s),
                            alphabet.name(*t),
                            alphabet.name(*rr),
                            alphabet.display_positive(&x),
                            alphabet.display_positive(&y)
                        ),
                    );
                    i += 1;
                }
            }
        }
        self
    }

    pub fn completion(&mut self, prefix: &str, log: &CompletionLog, alphabet: &Alphabet) -> &mut Self {
        let status = match log.status {
            crate::completeness::CompletionStatus::Complete => "complete",
            crate::completeness::CompletionStatus::Budget => "budget",
            crate::completeness::CompletionStatus::MaxRounds => "max_rounds",
        };
        self.push(format!("{prefix}.status"), status);
        self.push(format!("{prefix}.certified"), log.certified);
        self.push(format!("{prefix}.added"), log.rounds.len());
        for (i, r) in log.rounds.iter().enumerate() {
            let side = match r.direction {
                Direction::Right => "right",
                Direction::Left => "left",
            };
            self.push(
                format!("{prefix}.round.{i}"),
                format!(
                    "{side} ({},{},{}) {} = {}",
                    alphabet.name(r.triple.0),
                    alphabet.name(r.triple.1),
                    alphabet.name(r.triple.2),
                    alphabet.display_positive(&r.relation.0),
                    alphabet.display_positive(&r.relation.1)
                ),
            );
        }
        self
    }
}

pub fn witness_text(w: &Witness, alphabet: &Alphabet) -> String {
    match w {
        Witness::Trace(t) => t.to_text(alphabet),
        Witness::Traces(ts) => ts.iter().map(|t| t.to_text(alphabet)).collect::<Vec<_>>().join("\n--\n"),
        Witness::Word(x) => alphabet.display_positive(x).to_string(),
        Witness::Relation(id) => format!("relation {id}"),
        Witness::Squares(sq) => format!("{} pairs closed", sq.len()),
        Witness::Note(s) => s.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders() {
        let mut r = Report::new();
        r.push("a", 1).push("long.key", "x\ny");
        assert_eq!(r.render(Format::KeyValue), "a=1\nlong.key=x\\ny\n");
        assert_eq!(r.render(Format::Human), "a         1\nlong.key  x\n          y\n");
        assert_eq!(r.get("a"), Some("1"));
    }
}
