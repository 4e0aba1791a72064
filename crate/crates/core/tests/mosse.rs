mod common;

use common::{cut_context_oracle, fixed_prefix};
use sadic_core::language::{prune_to_biextendable, sadic_factors, substitutive_factors};
use sadic_core::presets;
use sadic_core::recognizer::{mosse_search, MosseOutcome};
use sadic_core::Morphism;

/// Frozen from `cut_context_oracle` on a 20000-letter prefix of the fixed point.
const FIBONACCI_ELL: usize = 1;
const THUE_MORSE_ELL: usize = 2;

fn certificate_ell(m: &Morphism) -> usize {
    let lang = prune_to_biextendable(&substitutive_factors(m, 128).unwrap());
    match mosse_search(m, &lang, 30).unwrap() {
        MosseOutcome::Certificate { ell } => ell,
        other => panic!("expected a certificate, got {other:?}"),
    }
}

#[test]
fn oracle_values_are_frozen() {
    for (m, ell) in [(presets::fibonacci(), FIBONACCI_ELL), (presets::thue_morse(), THUE_MORSE_ELL)] {
        for len in [2000, 20000] {
            assert_eq!(cut_context_oracle(&m, &fixed_prefix(&m, 0, len), 30), Some(ell));
        }
    }
}

#[test]
fn search_matches_oracle() {
    assert_eq!(certificate_ell(&presets::fibonacci()), FIBONACCI_ELL);
    assert_eq!(certificate_ell(&presets::thue_morse()), THUE_MORSE_ELL);
}

#[test]
fn search_matches_oracle_on_more_substitutions() {
    for images in [["001", "1"], ["01", "00"], ["0110", "1"], ["010", "11"]] {
        let m = Morphism::from_digits(&images).unwrap();
        let lang = prune_to_biextendable(&substitutive_factors(&m, 64).unwrap());
        let oracle = cut_context_oracle(&m, &fixed_prefix(&m, 0, 20000), 12);
        let found = match mosse_search(&m, &lang, 12).unwrap() {
            MosseOutcome::Certificate { ell } => Some(ell),
            _ => None,
        };
        assert_eq!(found, oracle, "{images:?}");
    }
}

fn assert_counterexample(m: &Morphism, out: MosseOutcome) {
    let MosseOutcome::Counterexample { window, parse_a, parse_b } = out else {
        panic!("expected a counterexample, got {out:?}");
    };
    assert!(parse_a.reproduces(m, &window));
    assert!(parse_b.reproduces(m, &window));
    let a = parse_a.interior_cuts(m, window.len());
    let b = parse_b.interior_cuts(m, window.len());
    assert!(a.iter().all(|c| !b.contains(c)));
}

#[test]
fn counterexamples() {
    let r = presets::remark22();
    let lang = prune_to_biextendable(&substitutive_factors(&r, 128).unwrap());
    assert_counterexample(&r, mosse_search(&r, &lang, 30).unwrap());

    let d = presets::example42();
    let lang = prune_to_biextendable(&sadic_factors(&d, 1, 128).unwrap());
    assert_counterexample(&d.prefix()[0], mosse_search(&d.prefix()[0], &lang, 30).unwrap());
}
