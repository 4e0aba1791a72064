//! `sadic-lab`: recognizability analysis of morphisms and S-adic sequences.
//!
//! Exit codes: 0 success, 1 a counterexample was found, 2 input error,
//! 3 a horizon or depth was too small.

mod analyze;
mod bratteli;
mod input;
mod report;
mod sadic;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sadic_core::presets::PRESET_NAMES;
use sadic_core::Error;

use report::Report;

#[derive(Parser)]
#[command(name = "sadic-lab", version, about = "Recognizability of morphisms and S-adic sequences")]
struct Cli {
    /// Report format; `dot` applies to `bratteli` only.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct Source {
    /// Morphism or directive sequence file, in the text format or as JSON.
    input: Option<PathBuf>,
    /// Built-in example instead of a file.
    #[arg(long)]
    preset: Option<String>,
}

#[derive(Args)]
struct Horizons {
    /// Longest factor generated for languages.
    #[arg(long, default_value_t = 128, value_parser = clap::value_parser!(u64).range(1..))]
    lang_horizon: u64,
    /// Largest context radius tried by the Mossé search.
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
    ell_max: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Properties, injectivity and a recognizability certificate of one morphism.
    Analyze {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        horizons: Horizons,
        /// Also run the Mossé search in the shift of the substitution.
        #[arg(long)]
        mosse: bool,
    },
    /// Level-by-level recognizability of a directive sequence.
    Sadic {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        horizons: Horizons,
        /// Last level analyzed; a cycle is covered by its first pass.
        #[arg(long)]
        max_level: Option<usize>,
        /// `L` in the bound on the number of non-recognizable levels.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        bound_l: u64,
    },
    /// The ordered Bratteli diagram, with an optional equivariance check.
    Bratteli {
        #[command(flatten)]
        source: Source,
        /// Number of levels below the root.
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Check the path-to-point map against this many successor steps.
        #[arg(long)]
        orbit: Option<usize>,
        /// Write the diagram here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Randomized consistency checks, reproducible from the seed.
    Sweep {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        #[arg(long, default_value_t = 3)]
        max_letters: usize,
        #[arg(long, default_value_t = 4)]
        max_image_len: usize,
    },
    /// List the built-in examples.
    Presets,
}

enum Failure {
    Input(String),
    Horizon { message: String, need: Option<usize> },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_horizon() {
            Failure::Horizon { need: e.needed_horizon(), message: e.to_string() }
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("SADIC_LAB_THREADS") else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Input(format!("SADIC_LAB_THREADS must be a positive integer, found {v:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Failure::Input(e.to_string()))
}

fn run(cli: &Cli) -> Result<(Report, Option<&PathBuf>), Failure> {
    configure_threads()?;
    if cli.format == Format::Dot && !matches!(cli.command, Command::Bratteli { .. }) {
        return Err(Failure::Input("--format dot is only available for `bratteli`".into()));
    }
    let report = match &cli.command {
        Command::Analyze { source, horizons, mosse } => {
            let m = input::morphism(source.input.as_deref(), source.preset.as_deref())?;
            let cfg = analyze::AnalyzeConfig {
                mosse: *mosse,
                lang_horizon: horizons.lang_horizon as usize,
                ell_max: horizons.ell_max as usize,
            };
            analyze::run(&m, &cfg)?
        }
        Command::Sadic { source, horizons, max_level, bound_l } => {
            let d = input::sequence(source.input.as_deref(), source.preset.as_deref())?;
            let cfg = sadic::SadicConfig {
                max_level: max_level.unwrap_or(usize::MAX),
                lang_horizon: horizons.lang_horizon as usize,
                ell_max: horizons.ell_max as usize,
                bound_l: *bound_l,
            };
            sadic::run(&d, &cfg)?
        }
        Command::Bratteli { source, depth, orbit, out } => {
            let d = input::sequence(source.input.as_deref(), source.preset.as_deref())?;
            let artifact = match cli.format {
                Format::Text => bratteli::Artifact::Text,
                Format::Json => bratteli::Artifact::Json,
                Format::Dot => bratteli::Artifact::Dot,
            };
            let cfg = bratteli::BratteliConfig { depth: *depth, orbit: *orbit, artifact };
            return Ok((bratteli::run(&d, &cfg)?, out.as_ref()));
        }
        Command::Sweep { seed, cases, max_letters, max_image_len } => sweep::run(&sweep::SweepConfig {
            seed: *seed,
            cases: *cases,
            max_letters: *max_letters,
            max_image_len: *max_image_len,
        })?,
        Command::Presets => Report {
            json: serde_json::json!({ "command": "presets", "presets": PRESET_NAMES }),
            text: PRESET_NAMES.iter().map(|n| format!("{n}\n")).collect(),
            counterexample: false,
            exhausted: None,
        },
    };
    Ok((report, None))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, out)) => {
            let body = match cli.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&report.json).expect("valid JSON")),
                Format::Text | Format::Dot => report.text.clone(),
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, body) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{body}"),
            }
            if let Some(msg) = report.exhausted {
                eprintln!("error: {msg}; a deeper sequence is needed");
                ExitCode::from(3)
            } else if report.counterexample {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Horizon { message, need }) => {
            eprintln!("error: {message}");
            if let Some(n) = need {
                eprintln!("needed horizon: {n} (rerun with --lang-horizon {n})");
            }
            ExitCode::from(3)
        }
    }
}
