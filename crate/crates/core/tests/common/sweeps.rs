//! Agreement of the window parser with the brute-force tiling enumerator.

use super::{brute_window_parses, random_morphism};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sadic_core::language::substitutive_factors;
use sadic_core::recognizer::{window_horizon, window_parses};
use sadic_core::{Letter, Morphism, Word};

fn words_up_to(k: usize, n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer: Vec<Word> = vec![vec![]];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|w| (0..k as Letter).map(move |a| w.iter().copied().chain([a]).collect::<Word>()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Every morphism into two letters with total length at most `total` and
/// domain size in `domain`; with `distinct`, only those whose images are
/// pairwise distinct.
fn all_morphisms(total: usize, distinct: bool, domain: std::ops::RangeInclusive<usize>) -> Vec<Morphism> {
    let words = words_up_to(2, total);
    let mut out = Vec::new();
    fn go(words: &[Word], left: usize, distinct: bool, domain: &std::ops::RangeInclusive<usize>, acc: &mut Vec<Word>, out: &mut Vec<Morphism>) {
        if domain.contains(&acc.len()) {
            out.push(Morphism::from_images(2, acc.clone()).unwrap());
        }
        for w in words {
            if w.len() > left || (distinct && acc.contains(w)) {
                continue;
            }
            acc.push(w.clone());
            go(words, left - w.len(), distinct, domain, acc, out);
            acc.pop();
        }
    }
    go(&words, total, distinct, &domain, &mut vec![], &mut out);
    out
}

fn ours(w: &[Letter], m: &Morphism) -> Vec<(usize, Word)> {
    window_parses(w, m, None).unwrap().into_iter().map(|p| (p.offset, p.preimage)).collect()
}

fn exhaustive(morphisms: &[Morphism], words: &[Word]) {
    let discrepancies: usize = morphisms
        .par_iter()
        .map(|m| words.iter().filter(|w| ours(w, m) != brute_window_parses(w, m)).count())
        .sum();
    println!("{} morphisms x {} words", morphisms.len(), words.len());
    assert_eq!(discrepancies, 0);
}

pub fn exhaustive_two_letter_agreement() {
    exhaustive(&all_morphisms(6, false, 1..=3), &words_up_to(2, 10));
    exhaustive(&all_morphisms(6, true, 4..=6), &words_up_to(2, 10));
}

/// Repeated images multiply the parses, up to `6^10` of them for six copies
/// of one letter, so words are shorter here.
pub fn exhaustive_with_repeated_images() {
    exhaustive(&all_morphisms(6, false, 4..=6), &words_up_to(2, 6));
}

pub fn random_three_letter_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut discrepancies = 0;
    let mut nontrivial = 0;
    for case in 0..10_000 {
        let m = random_morphism(&mut rng, 3, 3, 4);
        let len = rng.gen_range(1..=12);
        let w: Word = if case % 2 == 0 {
            (0..len).map(|_| rng.gen_range(0..3)).collect()
        } else {
            let pre: Word = (0..len).map(|_| rng.gen_range(0..3)).collect();
            let img = m.apply(&pre).unwrap();
            let start = rng.gen_range(0..img.len());
            let end = rng.gen_range(start + 1..=img.len().min(start + len));
            img[start..end].to_vec()
        };
        let expected = brute_window_parses(&w, &m);
        nontrivial += usize::from(!expected.is_empty());
        if case % 4 == 3 && m.is_substitution() {
            let lang = substitutive_factors(&m, window_horizon(&m, w.len())).unwrap();
            let filtered: Vec<_> =
                expected.into_iter().filter(|(_, p)| lang.contains(p).unwrap()).collect();
            let got: Vec<_> = window_parses(&w, &m, Some(&lang))
                .unwrap()
                .into_iter()
                .map(|p| (p.offset, p.preimage))
                .collect();
            discrepancies += usize::from(got != filtered);
        } else {
            discrepancies += usize::from(ours(&w, &m) != expected);
        }
    }
    assert!(nontrivial > 5000);
    assert_eq!(discrepancies, 0);
}
