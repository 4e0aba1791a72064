use std::fmt::Write as _;

use sadic_core::injectivity::{certify, injective_on_left_infinite, injective_on_right_infinite, Injectivity};
use sadic_core::language::{prune_to_biextendable, substitutive_factors};
use sadic_core::recognizer::{mosse_search, MosseOutcome, WindowParse};
use sadic_core::{Error, Morphism, Primitivity, Result};
use serde_json::json;

use crate::report::{tag, to_json, Report};

pub struct AnalyzeConfig {
    pub mosse: bool,
    pub lang_horizon: usize,
    pub ell_max: usize,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn describe_injectivity(m: &Morphism, side: &str, inj: &Injectivity) -> String {
    match &inj.witness {
        None => format!("injective on {side}-infinite words: yes"),
        Some(w) => {
            let (a, b) = w.expand(8);
            let d = m.domain();
            let cyc = |c: &[u32]| if c.is_empty() { String::new() } else { format!("({})^ω", d.format_word(c)) };
            format!(
                "injective on {side}-infinite words: no ({}{} and {}{} have the same image; prefixes {} / {})",
                d.format_word(&w.first),
                cyc(&w.first_cycle),
                d.format_word(&w.second),
                cyc(&w.second_cycle),
                d.format_word(&a),
                d.format_word(&b),
            )
        }
    }
}

fn describe_parse(m: &Morphism, p: &WindowParse) -> String {
    format!("offset {} preimage {}", p.offset, m.domain().format_word(&p.preimage))
}

pub fn run(m: &Morphism, cfg: &AnalyzeConfig) -> Result<Report> {
    let matrix = m.incidence_matrix();
    let rank = matrix.rank();
    let perm = m.permutativity();
    let primitivity = m.is_primitive(None).ok();
    let right = injective_on_right_infinite(m);
    let left = injective_on_left_infinite(m);
    let two_sided = right.injective && left.injective;
    let certificate = certify(m);

    let mosse = if cfg.mosse {
        if !m.is_substitution() {
            return Err(Error::input("--mosse needs a substitution; use `sadic` for a sequence of morphisms"));
        }
        let lang = prune_to_biextendable(&substitutive_factors(m, cfg.lang_horizon)?);
        Some(mosse_search(m, &lang, cfg.ell_max)?)
    } else {
        None
    };
    let counterexample = matches!(mosse, Some(MosseOutcome::Counterexample { .. }));

    let json = json!({
        "command": "analyze",
        "morphism": to_json(m),
        "incidence_matrix": matrix.to_rows(),
        "rank": rank,
        "permutativity": to_json(&perm),
        "proper": m.is_proper(),
        "primitivity": primitivity.map(|p| to_json(&p)),
        "injectivity": {
            "right_infinite": to_json(&right),
            "left_infinite": to_json(&left),
            "two_sided": two_sided,
        },
        "certificate": to_json(&certificate),
        "mosse": mosse.as_ref().map(to_json),
        "lang_horizon": cfg.mosse.then_some(cfg.lang_horizon),
        "ell_max": cfg.mosse.then_some(cfg.ell_max),
        "verdict": tag(&certificate.verdict),
    });

    let mut t = String::new();
    let _ = writeln!(t, "morphism: {m}");
    let _ = writeln!(t, "incidence matrix:");
    for row in matrix.to_rows() {
        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
        let _ = writeln!(t, "  {}", cells.join(" "));
    }
    let _ = writeln!(t, "rank: {rank}");
    let _ = writeln!(t, "permutativity: {}", tag(&perm));
    let _ = writeln!(t, "proper: {}", yes_no(m.is_proper()));
    let prim = match primitivity {
        Some(Primitivity::Primitive(k)) => format!("primitive (positive matrix at power {k})"),
        Some(p) => tag(&p),
        None => "not a substitution".into(),
    };
    let _ = writeln!(t, "primitivity: {prim}");
    let _ = writeln!(t, "{}", describe_injectivity(m, "right", &right));
    let _ = writeln!(t, "{}", describe_injectivity(m, "left", &left));
    let _ = writeln!(t, "injective on two-sided words: {}", yes_no(two_sided));
    let reasons: Vec<String> = certificate.reasons.iter().map(tag).collect();
    let _ = writeln!(t, "certificate: {} [{}]", tag(&certificate.verdict), reasons.join(", "));
    if let Some(c) = &certificate.witness {
        let _ = writeln!(
            t,
            "  {}-permutative conjugate by {}: {}",
            tag(&c.side),
            m.codomain().format_word(&c.witness),
            c.conjugate
        );
    }
    match &mosse {
        None => {}
        Some(MosseOutcome::Certificate { ell }) => {
            let _ = writeln!(t, "mosse: certificate (ell = {ell}, lang horizon {})", cfg.lang_horizon);
        }
        Some(MosseOutcome::Counterexample { window, parse_a, parse_b }) => {
            let _ = writeln!(t, "mosse: counterexample");
            let _ = writeln!(t, "  window: {}", m.codomain().format_word(window));
            if let Some(p) = (1..=window.len() / 2).find(|&p| (p..window.len()).all(|i| window[i] == window[i - p])) {
                let _ = writeln!(t, "  the window has period {p}");
            }
            let _ = writeln!(t, "  parse: {}", describe_parse(m, parse_a));
            let _ = writeln!(t, "  parse: {}", describe_parse(m, parse_b));
        }
        Some(MosseOutcome::Unknown { ell_tried }) => {
            let _ = writeln!(t, "mosse: unknown (no certificate or counterexample up to ell = {ell_tried})");
        }
    }
    let _ = writeln!(t, "verdict: {}", tag(&certificate.verdict));
    Ok(Report { json, text: t, counterexample, exhausted: None })
}
