//! Randomized checks of the structural lemmas on parses, 500 cases or more each.

use std::sync::atomic::{AtomicUsize, Ordering::Relaxed};

use super::{arb_morphism, arb_point, arb_rotatable, arb_word};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use sadic_core::injectivity::{decompose_non_injective, decompose_reduce_alphabet, injective_on_two_sided};
use sadic_core::morphism::rotational_conjugates;
use sadic_core::point::{apply_to_point, image_position};
use sadic_core::recognizer::{have_common_cut, point_parses, CenteredParse};
use sadic_core::{EventuallyPeriodicPoint, Morphism, Side};

const CASES: u32 = 500;

fn runner() -> TestRunner {
    runner_with(CASES)
}

/// More cases for suites whose interesting inputs are rare.
fn runner_with(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn parses(y: &EventuallyPeriodicPoint, m: &Morphism) -> Option<Vec<CenteredParse>> {
    point_parses(y, m, None).unwrap().parses().map(<[_]>::to_vec)
}

/// `x` with its letters reduced modulo `k`.
fn fit(x: &EventuallyPeriodicPoint, k: usize) -> EventuallyPeriodicPoint {
    let r = |w: &[u32]| w.iter().map(|&a| a % k as u32).collect();
    EventuallyPeriodicPoint::with_center_start(r(x.left_period()), r(x.center()), r(x.right_period()), x.center_start())
        .unwrap()
}

/// A point in the image of `m`, or an arbitrary one.
fn target(m: &Morphism, x: &EventuallyPeriodicPoint, y: &EventuallyPeriodicPoint, image: bool) -> EventuallyPeriodicPoint {
    if image {
        apply_to_point(m, x)
    } else {
        y.clone()
    }
}

pub fn aperiodic_points_have_one_parse_per_orbit() {
    let hits = AtomicUsize::new(0);
    let strat = ((2usize..=3).prop_flat_map(|k| arb_morphism(k, 2, 3)), arb_point(3), arb_point(2), any::<bool>(), -6i64..6);
    runner_with(4 * CASES)
        .run(&strat, |(m, x, y0, image, k)| {
            let x = fit(&x, m.domain_size());
            let y = target(&m, &x, &y0, image);
            let Some(ps) = parses(&y, &m) else { return Ok(()) };
            for p in &ps {
                prop_assert!(p.reproduces(&m, &y));
            }
            prop_assert_eq!(Some(ps.len()), point_parses(&y.shift(k), &m, None).unwrap().count());
            if y.is_periodic() {
                return Ok(());
            }
            if ps.len() >= 2 {
                hits.fetch_add(1, Relaxed);
            }
            for i in 0..ps.len() {
                for j in i + 1..ps.len() {
                    prop_assert!(!ps[i].preimage.is_shift_equivalent(&ps[j].preimage));
                }
            }
            Ok(())
        })
        .unwrap();
    println!("{} aperiodic points with several parses", hits.load(Relaxed));
    assert!(hits.load(Relaxed) > 0, "no aperiodic point with two parses was generated");
}

fn permutative(side: Side) -> impl Strategy<Value = Morphism> {
    (2usize..=3, prop::collection::vec(arb_word(3, 0, 3), 3), Just(vec![0u32, 1, 2]).prop_shuffle()).prop_map(
        move |(k, tails, firsts)| {
            let images = tails
                .into_iter()
                .zip(firsts)
                .take(k)
                .map(|(mut t, f)| {
                    match side {
                        Side::Left => t.insert(0, f),
                        Side::Right => t.push(f),
                    }
                    t
                })
                .collect();
            Morphism::from_images(3, images).unwrap()
        },
    )
}

pub fn permutative_morphisms_parse_aperiodic_points_once() {
    for side in [Side::Left, Side::Right] {
        let checked = AtomicUsize::new(0);
        runner()
            .run(&(permutative(side), arb_point(3), arb_point(3), any::<bool>()), |(m, x, y0, image)| {
                let x = fit(&x, m.domain_size());
                let y = target(&m, &x, &y0, image);
                if y.is_periodic() {
                    return Ok(());
                }
                checked.fetch_add(1, Relaxed);
                let n = point_parses(&y, &m, None).unwrap().count();
                prop_assert!(matches!(n, Some(0 | 1)), "{:?} parses of {} under {}", n, y, m);
                if image {
                    prop_assert_eq!(n, Some(1));
                }
                Ok(())
            })
            .unwrap();
        assert!(checked.load(Relaxed) > 250);
    }
}

pub fn rotational_conjugates_have_as_many_parses() {
    let hits = AtomicUsize::new(0);
    runner()
        .run(&(arb_rotatable(), arb_point(2), arb_point(2), any::<bool>()), |(m, x, y0, image)| {
            let y = target(&m, &x, &y0, image);
            let count = point_parses(&y, &m, None).unwrap().count();
            for c in rotational_conjugates(&m, 4).into_iter().filter(|c| !c.witness.is_empty()) {
                hits.fetch_add(1, Relaxed);
                let shift = match c.side {
                    Side::Left => c.witness.len() as i64,
                    Side::Right => -(c.witness.len() as i64),
                };
                prop_assert_eq!(count, point_parses(&y.shift(shift), &c.conjugate, None).unwrap().count());
            }
            Ok(())
        })
        .unwrap();
    assert!(hits.load(Relaxed) > 100);
}

pub fn composition_parses_factor_through_both_morphisms() {
    let hits = AtomicUsize::new(0);
    let strat = (arb_morphism(2, 2, 3), arb_morphism(2, 2, 3), arb_point(2), arb_point(2), any::<bool>());
    runner()
        .run(&strat, |(sigma, tau, x, z0, image)| {
            let ts = Morphism::compose(&tau, &sigma).unwrap();
            let z = target(&ts, &x, &z0, image);
            let Some(outer) = parses(&z, &tau) else { return Ok(()) };
            let mut total = 0;
            for p in &outer {
                match point_parses(&p.preimage, &sigma, None).unwrap().count() {
                    Some(n) => total += n,
                    None => return Ok(()),
                }
            }
            let Some(direct) = point_parses(&z, &ts, None).unwrap().count() else { return Ok(()) };
            if total > 0 {
                hits.fetch_add(1, Relaxed);
            }
            prop_assert_eq!(direct, total);
            Ok(())
        })
        .unwrap();
    assert!(hits.load(Relaxed) > 100);
}

pub fn injective_morphisms_give_cut_disjoint_parses() {
    let hits = AtomicUsize::new(0);
    let strat = ((2usize..=3).prop_flat_map(|k| arb_morphism(k, 2, 4)), arb_point(3), arb_point(2), any::<bool>())
        .prop_filter("injective", |(m, ..)| injective_on_two_sided(m));
    runner_with(4 * CASES)
        .run(&strat, |(m, x, y0, image)| {
            let x = fit(&x, m.domain_size());
            let y = target(&m, &x, &y0, image);
            let ps = parses(&y, &m).expect("injective morphisms have finitely many parses");
            if ps.len() >= 2 {
                hits.fetch_add(1, Relaxed);
            }
            for i in 0..ps.len() {
                for j in i + 1..ps.len() {
                    prop_assert!(!have_common_cut(&m, &ps[i], &ps[j]));
                }
            }
            Ok(())
        })
        .unwrap();
    println!("{} points with several parses", hits.load(Relaxed));
    assert!(hits.load(Relaxed) > 5);
}

pub fn missing_common_cuts_propagate_down() {
    let hits = AtomicUsize::new(0);
    let strat = (arb_morphism(2, 2, 3), arb_morphism(2, 2, 4), arb_point(2));
    runner_with(4 * CASES)
        .run(&strat, |(sigma, tau, y)| {
            let ts = Morphism::compose(&tau, &sigma).unwrap();
            let z = apply_to_point(&tau, &y);
            let Some(outer) = parses(&z, &tau) else { return Ok(()) };
            let lifted: Vec<Vec<CenteredParse>> = outer
                .iter()
                .map(|p| {
                    parses(&p.preimage, &sigma)
                        .unwrap_or_default()
                        .into_iter()
                        .map(|q| CenteredParse {
                            offset: (p.offset as i64 - image_position(&tau, &p.preimage, -(q.offset as i64))) as usize,
                            preimage: q.preimage,
                        })
                        .collect()
                })
                .collect();
            for i in 0..outer.len() {
                for j in i + 1..outer.len() {
                    if have_common_cut(&tau, &outer[i], &outer[j]) {
                        continue;
                    }
                    for a in &lifted[i] {
                        for b in &lifted[j] {
                            hits.fetch_add(1, Relaxed);
                            prop_assert!(a.reproduces(&ts, &z));
                            prop_assert!(b.reproduces(&ts, &z));
                            prop_assert!(!have_common_cut(&ts, a, b));
                        }
                    }
                }
            }
            Ok(())
        })
        .unwrap();
    assert!(hits.load(Relaxed) > 10, "{}", hits.load(Relaxed));
}

pub fn decompositions_shorten_and_recompose() {
    let strat = (2usize..=4).prop_flat_map(|k| arb_morphism(k, 2, 4)).prop_filter("not injective", |m| !injective_on_two_sided(m));
    runner()
        .run(&strat, |m| {
            let d = decompose_non_injective(&m).unwrap();
            prop_assert_eq!(Morphism::compose(&d.sigma_tilde, &d.tau).unwrap(), m.clone());
            prop_assert!(d.sigma_tilde.total_length() < m.total_length());
            let r = decompose_reduce_alphabet(&m).unwrap();
            prop_assert_eq!(Morphism::compose(&r.sigma_tilde, &r.tau).unwrap(), m.clone());
            prop_assert!(r.sigma_tilde.domain_size() < m.domain_size());
            Ok(())
        })
        .unwrap();
}

pub fn points_keep_their_letters_when_normalized() {
    let strat = (arb_word(3, 1, 4), arb_word(3, 0, 6), arb_word(3, 1, 4), -8i64..8);
    runner()
        .run(&strat, |(l, c, r, s)| {
            let y = EventuallyPeriodicPoint::with_center_start(l.clone(), c.clone(), r.clone(), s).unwrap();
            for i in -40i64..40 {
                let off = i - s;
                let raw = if off < 0 {
                    l[l.len() - 1 - ((-off - 1) as usize % l.len())]
                } else if (off as usize) < c.len() {
                    c[off as usize]
                } else {
                    r[(off as usize - c.len()) % r.len()]
                };
                prop_assert_eq!(y.letter_at(i), raw, "index {}", i);
            }
            prop_assert_eq!(y.mirror().mirror(), y.clone());
            prop_assert_eq!(y.shift(3).shift(-3), y);
            Ok(())
        })
        .unwrap();
}
