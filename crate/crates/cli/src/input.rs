//! Loading morphisms and directive sequences from files or presets.

use std::path::Path;

use sadic_core::format::{parse_directive_sequence, parse_morphism};
use sadic_core::presets::{preset, Preset};
use sadic_core::{DirectiveSequence, Error, Morphism, Result};

/// A file is read as JSON when its name ends in `.json`, and otherwise in the
/// text format; text holding a `prefix:` or `cycle:` line is a sequence.
fn load(path: &Path) -> Result<Preset> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
    if path.extension().is_some_and(|e| e == "json") {
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
        let bad = |e: serde_json::Error| Error::input(format!("{}: {e}", path.display()));
        return if value.get("images").is_some() {
            serde_json::from_value(value).map(Preset::Morphism).map_err(bad)
        } else {
            serde_json::from_value(value).map(Preset::Sequence).map_err(bad)
        };
    }
    let is_sequence = text.lines().any(|l| matches!(l.split('#').next().unwrap_or("").trim(), "prefix:" | "cycle:"));
    if is_sequence {
        parse_directive_sequence(&text).map(Preset::Sequence)
    } else {
        parse_morphism(&text).map(Preset::Morphism)
    }
}

pub fn resolve(path: Option<&Path>, name: Option<&str>) -> Result<Preset> {
    match (path, name) {
        (Some(p), None) => load(p),
        (None, Some(n)) => preset(n),
        (Some(_), Some(_)) => Err(Error::input("give either an input file or --preset, not both")),
        (None, None) => Err(Error::input("give an input file or --preset")),
    }
}

pub fn morphism(path: Option<&Path>, name: Option<&str>) -> Result<Morphism> {
    resolve(path, name)?.morphism()
}

pub fn sequence(path: Option<&Path>, name: Option<&str>) -> Result<DirectiveSequence> {
    resolve(path, name)?.sequence()
}
