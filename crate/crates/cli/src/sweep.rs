//! Randomized consistency checks on small morphisms, reproducible from a seed.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sadic_core::injectivity::{certify, decompose_non_injective, decompose_reduce_alphabet, injective_on_two_sided, Verdict};
use sadic_core::{Morphism, Result};
use serde_json::json;

use crate::report::Report;

pub struct SweepConfig {
    pub seed: u64,
    pub cases: usize,
    pub max_letters: usize,
    pub max_image_len: usize,
}

fn random_morphism(rng: &mut ChaCha8Rng, k: usize, max_len: usize) -> Result<Morphism> {
    let images = (0..k)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            (0..len).map(|_| rng.gen_range(0..k as u32)).collect()
        })
        .collect();
    Morphism::from_images(k, images)
}

/// Certificates on two-letter morphisms and the decomposition invariant on
/// non-injective ones.
pub fn run(cfg: &SweepConfig) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (mut certified, mut non_injective) = (0usize, 0usize);
    let mut failures = Vec::new();
    for _ in 0..cfg.cases {
        let k = rng.gen_range(2..=cfg.max_letters.max(2));
        let m = random_morphism(&mut rng, k, cfg.max_image_len.max(1))?;
        let c = certify(&m);
        if c.verdict == Verdict::FullyRecognizableAperiodic {
            certified += 1;
        } else if k == 2 {
            failures.push(format!("{m}: two-letter morphism without a certificate"));
        }
        if !injective_on_two_sided(&m) {
            non_injective += 1;
            let one = decompose_non_injective(&m)?;
            if Morphism::compose(&one.sigma_tilde, &one.tau)? != m || one.sigma_tilde.total_length() >= m.total_length() {
                failures.push(format!("{m}: decomposition does not shorten and recompose"));
            }
            let all = decompose_reduce_alphabet(&m)?;
            if Morphism::compose(&all.sigma_tilde, &all.tau)? != m || all.sigma_tilde.domain_size() >= m.domain_size() {
                failures.push(format!("{m}: alphabet reduction does not shrink and recompose"));
            }
        }
    }
    let json = json!({
        "command": "sweep",
        "seed": cfg.seed,
        "cases": cfg.cases,
        "certified": certified,
        "non_injective": non_injective,
        "failures": failures,
    });
    let mut t = String::new();
    let _ = writeln!(t, "seed {}: {} morphisms, {certified} certified, {non_injective} not injective", cfg.seed, cfg.cases);
    for f in &failures {
        let _ = writeln!(t, "  failure: {f}");
    }
    let _ = writeln!(t, "failures: {}", failures.len());
    Ok(Report { json, text: t, counterexample: !failures.is_empty(), exhausted: None })
}
