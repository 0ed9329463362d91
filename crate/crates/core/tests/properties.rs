mod common;

use proptest::prelude::*;
use wordrev::closure::{bounded_reverse, compute_closure, BoundedOutcome, DEFAULT_MAX_WORDS};
use wordrev::engine::{
    reverse_exhaustive, reverse_search, Budget, Direction, GridLimits, GridReverser, ReversingTrace, SearchOptions,
};
use wordrev::{parse_document, serialize, Letter, PositiveWord, Presentation, SignedLetter, SignedWord};

use common::*;

fn presentation(i: usize) -> Presentation {
    corpus_presentation(PROPERTY_CORPUS[i % PROPERTY_CORPUS.len()])
}

fn positive(p: &Presentation, raw: &[usize]) -> PositiveWord {
    let n = p.alphabet().len();
    PositiveWord(raw.iter().map(|&i| Letter::from_index(i % n)).collect())
}

fn signed(p: &Presentation, raw: &[(usize, bool)]) -> SignedWord {
    let n = p.alphabet().len();
    SignedWord(
        raw.iter()
            .map(|&(i, pos)| {
                let l = Letter::from_index(i % n);
                if pos {
                    SignedLetter::pos(l)
                } else {
                    SignedLetter::neg(l)
                }
            })
            .collect(),
    )
}

fn raw_signed(max: usize) -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0usize..8, any::<bool>()), 0..=max)
}

fn raw_positive(max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..8, 0..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn inverse_is_an_involution(i in 0usize..16, w in raw_signed(16)) {
        let p = presentation(i);
        let w = signed(&p, &w);
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn steps_have_mirror_steps(i in 0usize..16, w in raw_signed(10)) {
        let p = presentation(i);
        prop_assert_eq!(prop_inverse_symmetry(&p, &signed(&p, &w)), Ok(()));
    }

    #[test]
    fn terminals_are_equivalences(i in 0usize..16, u in raw_positive(4), v in raw_positive(4)) {
        let p = presentation(i);
        prop_assert_eq!(prop_terminal_soundness(&p, &positive(&p, &u), &positive(&p, &v)), Ok(()));
    }

    #[test]
    fn reversings_split(i in 0usize..16, w1 in raw_signed(4), w2 in raw_signed(4)) {
        let p = presentation(i);
        prop_assert_eq!(prop_split(&p, &signed(&p, &w1), &signed(&p, &w2)), Ok(()));
    }

    #[test]
    fn complemented_reversing_is_deterministic(i in 0usize..16, w in raw_signed(8)) {
        let p = presentation(i);
        prop_assert_eq!(prop_determinism(&p, &signed(&p, &w)), Ok(()));
    }

    #[test]
    fn strong_cube_implies_cube(i in 0usize..16, u in raw_positive(2), v in raw_positive(2), w in raw_positive(2)) {
        let p = presentation(i);
        prop_assert_eq!(prop_strong_implies_weak(&p, &positive(&p, &u), &positive(&p, &v), &positive(&p, &w)), Ok(()));
    }

    #[test]
    fn grid_agrees_with_search(i in 0usize..16, u in raw_positive(3), v in raw_positive(3)) {
        let p = presentation(i);
        let (u, v) = (positive(&p, &u), positive(&p, &v));
        let out = reverse_exhaustive(&p, &SignedWord::left_fraction(&u, &v), Direction::Right, &small_budget());
        let mut grid = GridReverser::new(&p, GridLimits::default());
        if let Some(set) = grid.terminals(&u, &v) {
            if !out.budget_exceeded {
                let got: Vec<_> = set.iter().cloned().collect();
                let want: Vec<_> = out.fractions().into_iter().collect();
                prop_assert_eq!(got, want);
            }
        }
        if let (Some(e), false) = (grid.reverses_to_empty(&u, &v), out.budget_exceeded) {
            prop_assert_eq!(e, out.empty_terminal().is_some());
        }
    }

    #[test]
    fn traces_replay_and_round_trip(i in 0usize..16, w in raw_signed(6)) {
        let p = presentation(i);
        let w = signed(&p, &w);
        let out = reverse_search(&p, &w, Direction::Right, &small_budget(), &SearchOptions::default());
        for t in out.terminals.iter().take(4) {
            prop_assert!(t.trace.replay(&p).is_ok());
            let text = t.trace.to_text(p.alphabet());
            prop_assert_eq!(&ReversingTrace::parse(&p, &text).unwrap(), &t.trace);
        }
    }

    #[test]
    fn stuck_words_have_a_dead_factor(i in 0usize..16, w in raw_signed(6)) {
        let p = presentation(i);
        let out = reverse_exhaustive(&p, &signed(&p, &w), Direction::Right, &small_budget());
        for s in &out.stuck {
            let dead = s.as_slice().windows(2).any(|f| {
                !f[0].positive && f[1].positive && f[0].letter != f[1].letter && p.relations_for_pair(f[0].letter, f[1].letter).is_empty()
            });
            prop_assert!(dead);
        }
    }

    #[test]
    fn bounded_reversing_respects_pq(w in raw_signed(16)) {
        let p = corpus_presentation("aabb");
        let (_, table) = compute_closure(&p, &Budget::default(), DEFAULT_MAX_WORDS);
        let w = signed(&p, &w);
        match bounded_reverse(&p, &table, &w) {
            BoundedOutcome::Terminal { num, den, macro_steps, p: pc, q: qc } => {
                prop_assert!(macro_steps <= pc * qc);
                let out = reverse_search(&p, &w, Direction::Right, &Budget::default(), &SearchOptions::terminals_only());
                if !out.budget_exceeded {
                    prop_assert!(out.fractions().contains(&(num, den)));
                }
            }
            other => prop_assert!(false, "{:?}", other),
        }
    }
}

#[test]
fn corpus_round_trips() {
    for e in wordrev::corpus::entries() {
        let d = e.document();
        let text = serialize(&d.presentation, d.pseudolength.as_ref());
        assert_eq!(parse_document(&text).unwrap(), d, "{}", e.name);
    }
}

#[test]
fn pair_relations_mirror() {
    for e in wordrev::corpus::entries() {
        let p = e.document().presentation;
        for s in p.alphabet().letters() {
            for t in p.alphabet().letters() {
                let st = p.relations_for_pair(s, t);
                let ts = p.relations_for_pair(t, s);
                assert_eq!(st.len(), ts.len(), "{}", e.name);
                for (x, y, id) in &st {
                    assert!(ts.contains(&(y.clone(), x.clone(), *id)), "{}", e.name);
                }
            }
        }
    }
}

#[test]
fn closure_grows_with_relations() {
    let b = Budget::default();
    let sizes: Vec<usize> = ["hako", "hakp", "hakq"]
        .iter()
        .map(|n| compute_closure(&corpus_presentation(n), &b, DEFAULT_MAX_WORDS).0.words.len())
        .collect();
    assert!(sizes.windows(2).all(|w| w[0] <= w[1]), "{sizes:?}");
}
