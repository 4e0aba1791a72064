use std::fmt::Write as _;

use sadic_core::recognizer::infection_threshold;
use sadic_core::sadic::{
    analyze_levels, enumerate_limit_words, eventual_bound, is_everywhere_growing, language_count_bound, Growth,
    LevelReport, LevelVerdict,
};
use sadic_core::{DirectiveSequence, Result};
use serde_json::json;

use crate::report::{tag, to_json, Report};

pub struct SadicConfig {
    pub max_level: usize,
    pub lang_horizon: usize,
    pub ell_max: usize,
    /// `L` in the bound on the number of non-recognizable levels.
    pub bound_l: u64,
}

fn level_line(d: &DirectiveSequence, r: &LevelReport) -> String {
    let mut s = format!("level {}", r.level);
    if let Some(c) = r.cycle_position {
        let _ = write!(s, " (cycle position {c})");
    }
    let _ = write!(s, ": {} via {}", tag(&r.verdict), tag(&r.method));
    if r.aperiodic_only {
        s.push_str(", aperiodic points");
    }
    if let Some(m) = &r.mosse {
        let _ = write!(s, ", mosse {}", tag(m));
    }
    if let Some(w) = &r.periodic_witness {
        let a = d.alphabet(r.level + 1).map(|a| a.format_word(&w.period)).unwrap_or_default();
        let _ = write!(s, ", periodic point ({a})^ℤ has {} parses", w.parses.len());
    }
    s
}

pub fn run(d: &DirectiveSequence, cfg: &SadicConfig) -> Result<Report> {
    let levels = analyze_levels(d, cfg.max_level, cfg.lang_horizon, cfg.ell_max)?;
    let growth = is_everywhere_growing(d);
    let top = d.depth_limit().unwrap_or(d.prefix_len() + d.cycle_len());
    let k = (0..=top).filter_map(|n| d.alphabet(n).ok()).map(|a| a.size()).max().unwrap_or(1) as u64;
    let threshold = infection_threshold(k as usize)?;
    let eventual = if k >= 2 { Some(eventual_bound(k, cfg.bound_l)?) } else { None };
    let languages = language_count_bound(k)?;
    let limit_words = if growth == Growth::Growing { Some(enumerate_limit_words(d)?) } else { None };
    let count = |v: LevelVerdict| levels.iter().filter(|r| r.verdict == v).count();
    let not_recognizable = count(LevelVerdict::NotRecognizable);

    let json = json!({
        "command": "sadic",
        "sequence": to_json(d),
        "levels": to_json(&levels),
        "growth": to_json(&growth),
        "alphabet_bound": k,
        "bounds": {
            "infection_threshold": threshold.to_string(),
            "eventual_bound": eventual.map(|v| json!({ "l": cfg.bound_l, "value": v.to_string() })),
            "language_count_bound": languages.to_string(),
        },
        "limit_words": limit_words.as_ref().map(to_json),
        "summary": {
            "recognizable_certified": count(LevelVerdict::RecognizableCertified),
            "not_recognizable": not_recognizable,
            "unknown": count(LevelVerdict::Unknown),
        },
        "lang_horizon": cfg.lang_horizon,
        "ell_max": cfg.ell_max,
    });

    let mut t = String::new();
    let _ = writeln!(t, "sequence: {} prefix morphism(s), cycle of {}", d.prefix_len(), d.cycle_len());
    let _ = writeln!(t, "levels (lang horizon {}, ell max {}):", cfg.lang_horizon, cfg.ell_max);
    for r in &levels {
        let _ = writeln!(t, "  {}", level_line(d, r));
    }
    let _ = writeln!(t, "growth: {}", tag(&growth));
    let _ = writeln!(t, "alphabet bound K: {k}");
    let _ = writeln!(t, "infection threshold: {threshold}");
    match eventual {
        Some(v) => {
            let _ = writeln!(t, "eventual bound (L = {}): {v}", cfg.bound_l);
        }
        None => {
            let _ = writeln!(t, "eventual bound: needs K >= 2");
        }
    }
    let _ = writeln!(t, "language count bound: {languages}");
    match &limit_words {
        None => {
            let _ = writeln!(t, "limit words: not enumerated (the sequence is not everywhere growing)");
        }
        Some(ws) => {
            let _ = writeln!(t, "limit words: {}", ws.len());
            for w in ws {
                let name = |a| d.alphabet(w.level).map(|al| al.name(a)).unwrap_or_default();
                let _ = writeln!(
                    t,
                    "  {}.{} at level {}, pair period {}, {}",
                    name(w.pair.0),
                    name(w.pair.1),
                    w.level,
                    w.pair_period,
                    if w.in_language { "in the shift" } else { "outside the shift" }
                );
            }
        }
    }
    let _ = writeln!(
        t,
        "summary: {} recognizable_certified, {} not_recognizable, {} unknown",
        count(LevelVerdict::RecognizableCertified),
        not_recognizable,
        count(LevelVerdict::Unknown)
    );
    Ok(Report { json, text: t, counterexample: not_recognizable > 0, exhausted: None })
}
