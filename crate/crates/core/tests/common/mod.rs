#![allow(dead_code)]

use rand::Rng;
use wordrev::analysis::{oracle_equiv, OracleConfig};
use wordrev::completeness::{check_cube_at, CubeAtResult, CubeMode};
use wordrev::engine::{reverse_search, split_check, step_right, Budget, Direction, SearchOptions};
use wordrev::{corpus, Letter, PositiveWord, Presentation, SignedLetter, SignedWord};

pub fn corpus_presentation(name: &str) -> Presentation {
    corpus::find(name).expect("bundled entry").document().presentation
}

pub fn small_budget() -> Budget {
    Budget::new(200, 40, 20_000).unwrap()
}

pub fn letters(p: &Presentation) -> Vec<Letter> {
    p.alphabet().letters().collect()
}

pub fn random_positive<R: Rng>(rng: &mut R, p: &Presentation, max_len: usize) -> PositiveWord {
    let ls = letters(p);
    let n = rng.gen_range(0..=max_len);
    PositiveWord((0..n).map(|_| ls[rng.gen_range(0..ls.len())]).collect())
}

pub fn random_signed<R: Rng>(rng: &mut R, p: &Presentation, max_len: usize) -> SignedWord {
    let ls = letters(p);
    let n = rng.gen_range(0..=max_len);
    SignedWord(
        (0..n)
            .map(|_| {
                let l = ls[rng.gen_range(0..ls.len())];
                if rng.gen_bool(0.5) {
                    SignedLetter::pos(l)
                } else {
                    SignedLetter::neg(l)
                }
            })
            .collect(),
    )
}

/// Presentations the random properties run on: small, homogeneous, and
/// quick to reverse.
pub const PROPERTY_CORPUS: &[&str] = &["aabb", "s3r3", "b3", "hako", "heit", "bkl3", "nemb", "noet", "free2", "lee"];

/// Every right step `w -> w'` has the mirror step `w^-1 -> w'^-1`.
pub fn prop_inverse_symmetry(p: &Presentation, w: &SignedWord) -> Result<(), String> {
    let inv: Vec<SignedWord> = step_right(p, &w.inverse()).into_iter().map(|(_, x)| x).collect();
    for (_, next) in step_right(p, w) {
        if !inv.contains(&next.inverse()) {
            return Err(format!("no mirror step for {w:?} -> {next:?}"));
        }
    }
    Ok(())
}

/// Terminals `v' u'^-1` of `u^-1 v` satisfy `u v' ≡ v u'` by brute force.
pub fn prop_terminal_soundness(p: &Presentation, u: &PositiveWord, v: &PositiveWord) -> Result<(), String> {
    let out = reverse_search(p, &SignedWord::left_fraction(u, v), Direction::Right, &small_budget(), &SearchOptions::terminals_only());
    let cfg = OracleConfig { max_len: 24, max_states: 50_000 };
    for (v1, u1) in out.fractions() {
        if oracle_equiv(p, &u.concat(&v1), &v.concat(&u1), &cfg).definitive() == Some(false) {
            return Err(format!("terminal {v1:?}/{u1:?} of {u:?}^-1 {v:?} is not an equivalence"));
        }
    }
    Ok(())
}

/// A reversing of `w1 w2` splits into three reversings whose ends fit.
pub fn prop_split(p: &Presentation, w1: &SignedWord, w2: &SignedWord) -> Result<(), String> {
    let out = reverse_search(p, &w1.concat(w2), Direction::Right, &small_budget(), &SearchOptions::default());
    for t in out.terminals.iter().take(3) {
        let s = split_check(p, w1, w2, &t.trace).map_err(|e| format!("split failed: {e}"))?;
        for tr in [&s.first, &s.second, &s.middle] {
            tr.replay(p).map_err(|e| format!("sub-trace does not replay: {e}"))?;
        }
        let checks = [
            (s.first.start == *w1, "first starts at w1"),
            (s.second.start == *w2, "second starts at w2"),
            (*s.first.end() == SignedWord::right_fraction(&s.v1, &s.u0), "first ends at v1 u0^-1"),
            (*s.second.end() == SignedWord::right_fraction(&s.v0, &s.u1), "second ends at v0 u1^-1"),
            (s.middle.start == SignedWord::left_fraction(&s.u0, &s.v0), "middle starts at u0^-1 v0"),
            (*s.middle.end() == SignedWord::right_fraction(&s.v2, &s.u2), "middle ends at v2 u2^-1"),
            (s.v1.concat(&s.v2) == t.fraction.num, "v = v1 v2"),
            (s.u1.concat(&s.u2) == t.fraction.den, "u = u1 u2"),
            (s.first.len() + s.second.len() + s.middle.len() == t.trace.len(), "step counts add up"),
        ];
        if let Some((_, what)) = checks.iter().find(|(ok, _)| !ok) {
            return Err(format!("{what} fails for {w1:?} | {w2:?}"));
        }
    }
    Ok(())
}

/// Right complemented presentations reverse deterministically.
pub fn prop_determinism(p: &Presentation, w: &SignedWord) -> Result<(), String> {
    if !p.syntactic_flags().is_r_complemented {
        return Ok(());
    }
    let out = reverse_search(p, w, Direction::Right, &small_budget(), &SearchOptions::terminals_only());
    if out.terminals.len() > 1 {
        return Err(format!("{} terminals for {w:?}", out.terminals.len()));
    }
    Ok(())
}

/// Where the strong cube condition holds at `(u, v, w)`, the weak one does.
pub fn prop_strong_implies_weak(p: &Presentation, u: &PositiveWord, v: &PositiveWord, w: &PositiveWord) -> Result<(), String> {
    let b = small_budget();
    if check_cube_at(p, u, v, w, CubeMode::Strong, &b) != CubeAtResult::Ok {
        return Ok(());
    }
    let cfg = OracleConfig { max_len: 16, max_states: 20_000 };
    match check_cube_at(p, u, v, w, CubeMode::Weak(cfg), &b) {
        CubeAtResult::Fail { v1, u1 } => Err(format!("weak cube fails at {u:?},{v:?},{w:?} with {v1:?}/{u1:?}")),
        _ => Ok(()),
    }
}
