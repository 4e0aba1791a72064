//! Brute-force oracles and random generators shared by the integration tests.
#![allow(dead_code)]

pub mod suites;
pub mod sweeps;

use proptest::prelude::*;
use rand::Rng;
use sadic_core::point::EventuallyPeriodicPoint;
use sadic_core::{Letter, Morphism, Word};

/// Every tiling of `w` by images of `m`: the first image may start before the
/// window and the last may end after it. Plain recursion, no pruning beyond
/// letter comparison.
pub fn brute_window_parses(w: &[Letter], m: &Morphism) -> Vec<(usize, Word)> {
    fn extend(w: &[Letter], m: &Morphism, pos: usize, pre: &mut Word, offset: usize, out: &mut Vec<(usize, Word)>) {
        if pos >= w.len() {
            out.push((offset, pre.clone()));
            return;
        }
        for b in 0..m.domain_size() as Letter {
            let img = m.image(b);
            if (0..img.len()).all(|i| pos + i >= w.len() || img[i] == w[pos + i]) {
                pre.push(b);
                extend(w, m, pos + img.len(), pre, offset, out);
                pre.pop();
            }
        }
    }
    let mut out = Vec::new();
    for a in 0..m.domain_size() as Letter {
        let img = m.image(a);
        for off in 0..img.len() {
            let ok = (off..img.len()).all(|i| i - off >= w.len() || img[i] == w[i - off]);
            if ok {
                let mut pre = vec![a];
                extend(w, m, img.len() - off, &mut pre, off, &mut out);
            }
        }
    }
    out.sort();
    out
}

/// `m^n(a)` cut to `len` letters, iterating until long enough.
pub fn fixed_prefix(m: &Morphism, a: Letter, len: usize) -> Word {
    let mut w = vec![a];
    while w.len() < len {
        let next = m.apply(&w).unwrap();
        assert!(next.len() > w.len(), "the letter does not grow");
        w = next;
    }
    w.truncate(len);
    w
}

/// Smallest `ell` for which, along `m(x)` with its own cuts, every length-`2·ell`
/// context determines whether its center is a cut. Only positions at least
/// `ell` from both ends count.
pub fn cut_context_oracle(m: &Morphism, x: &[Letter], ell_max: usize) -> Option<usize> {
    let y = m.apply(x).unwrap();
    let mut is_cut = vec![false; y.len() + 1];
    let mut c = 0;
    for &a in x {
        is_cut[c] = true;
        c += m.image_len(a);
    }
    is_cut[c] = true;
    (1..=ell_max).find(|&ell| {
        let mut seen = std::collections::HashMap::new();
        (ell..=y.len() - ell).all(|i| *seen.entry(&y[i - ell..i + ell]).or_insert(is_cut[i]) == is_cut[i])
    })
}

pub fn random_morphism<R: Rng>(rng: &mut R, dom: usize, cod: usize, max_len: usize) -> Morphism {
    let images = (0..dom)
        .map(|_| {
            let n = rng.gen_range(1..=max_len);
            (0..n).map(|_| rng.gen_range(0..cod) as Letter).collect()
        })
        .collect();
    Morphism::from_images(cod, images).unwrap()
}

pub fn arb_word(k: usize, min: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..k as Letter, min..=max)
}

pub fn arb_morphism(dom: usize, cod: usize, max_len: usize) -> impl Strategy<Value = Morphism> {
    prop::collection::vec(arb_word(cod, 1, max_len), dom)
        .prop_map(move |images| Morphism::from_images(cod, images).unwrap())
}

/// Morphisms on two letters over two letters with images of length ≤ 3, with
/// all images forced to share their first letter half of the time so that
/// rotational conjugates exist.
pub fn arb_rotatable() -> impl Strategy<Value = Morphism> {
    (arb_morphism(2, 2, 3), any::<bool>()).prop_map(|(m, force)| {
        if !force {
            return m;
        }
        let c = m.image(0)[0];
        let images = m.images().iter().map(|w| std::iter::once(c).chain(w[1..].iter().copied()).collect()).collect();
        Morphism::from_images(2, images).unwrap()
    })
}

/// `…LLL·C·RRR…` with short random parts.
pub fn arb_point(k: usize) -> impl Strategy<Value = EventuallyPeriodicPoint> {
    (arb_word(k, 1, 3), arb_word(k, 0, 5), arb_word(k, 1, 3), -3i64..3)
        .prop_map(|(l, c, r, s)| EventuallyPeriodicPoint::with_center_start(l, c, r, s).unwrap())
}
