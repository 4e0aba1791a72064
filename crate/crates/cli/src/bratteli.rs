use std::fmt::Write as _;

use sadic_core::bratteli::{build_diagram, equivariance_check, EquivarianceReport, OrderedBratteliDiagram, PathPrefix};
use sadic_core::{DirectiveSequence, Error, Result};
use serde_json::json;

use crate::report::{to_json, Report};

pub enum Artifact {
    Text,
    Json,
    Dot,
}

pub struct BratteliConfig {
    pub depth: usize,
    pub orbit: Option<usize>,
    pub artifact: Artifact,
}

/// Longest path depth tried when looking for a tower tall enough.
const MAX_PATH_DEPTH: usize = 512;

/// The smallest path depth, at least `from`, whose tower over the first
/// letter has more than `steps` floors, so that `steps` successors exist.
fn orbit_depth(d: &DirectiveSequence, from: usize, steps: usize) -> Result<usize> {
    let limit = d.depth_limit().unwrap_or(MAX_PATH_DEPTH);
    let mut lengths: Vec<u128> = vec![1; d.alphabet(0)?.size()];
    for n in 1..=limit {
        let m = d.level_morphism(n - 1)?;
        lengths = m.images().iter().map(|w| w.iter().map(|&b| lengths[b as usize]).fold(0u128, u128::saturating_add)).collect();
        if n >= from && lengths[0] > steps as u128 {
            return Ok(n);
        }
    }
    Ok(limit.max(from))
}

fn in_degrees(b: &OrderedBratteliDiagram) -> Vec<Vec<usize>> {
    (0..b.depth).map(|n| (0..b.levels[n + 1]).map(|v| b.in_degree(n, v)).collect()).collect()
}

fn verdict(r: &EquivarianceReport) -> String {
    if r.verified() {
        format!(
            "verified over {} steps at path depth {} ({} letters compared, overlaps {}..{})",
            r.steps_verified, r.depth, r.letters_compared, r.min_overlap, r.max_overlap
        )
    } else if let Some(s) = r.first_failure {
        format!("failed at step {s} (path depth {})", r.depth)
    } else {
        format!("ran out of successors at step {} (path depth {})", r.maximal_at.unwrap_or(r.steps_verified), r.depth)
    }
}

pub fn run(d: &DirectiveSequence, cfg: &BratteliConfig) -> Result<Report> {
    if cfg.depth == 0 {
        return Err(Error::input("--depth must be positive"));
    }
    let b = build_diagram(d, cfg.depth)?;
    let equivariance = match cfg.orbit {
        None => None,
        Some(steps) => {
            let depth = orbit_depth(d, (cfg.depth - 1).max(1), steps)?;
            let db = build_diagram(d, depth + 1)?;
            let p = PathPrefix::minimal(&db, depth, 0)?;
            Some(equivariance_check(d, &p, steps)?)
        }
    };
    let failed = equivariance.as_ref().is_some_and(|r| r.first_failure.is_some());
    let exhausted = equivariance.as_ref().filter(|r| r.first_failure.is_none() && !r.verified()).map(verdict);

    let json = json!({
        "command": "bratteli",
        "diagram": to_json(&b),
        "in_degrees": in_degrees(&b),
        "equivariance": equivariance.as_ref().map(to_json),
        "equivariance_verified": equivariance.as_ref().map(EquivarianceReport::verified),
    });

    let text = match cfg.artifact {
        Artifact::Dot => {
            let mut s = b.to_dot();
            if let Some(r) = &equivariance {
                let _ = writeln!(s, "// equivariance: {}", verdict(r));
            }
            s
        }
        Artifact::Json | Artifact::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "diagram depth: {}", b.depth);
            for n in 0..=b.depth {
                let _ = writeln!(s, "  V_{n}: {}", b.labels[n].join(" "));
            }
            for (n, degs) in in_degrees(&b).iter().enumerate() {
                let cells: Vec<String> = degs.iter().map(usize::to_string).collect();
                let _ = writeln!(s, "  in-degrees into V_{}: {}", n + 1, cells.join(" "));
            }
            if let Some(r) = &equivariance {
                let _ = writeln!(s, "equivariance: {}", verdict(r));
            }
            s
        }
    };
    Ok(Report { json, text, counterexample: failed, exhausted })
}
