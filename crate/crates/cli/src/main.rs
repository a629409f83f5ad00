//! `sesqui`: manifest-driven checks of interpolating sesqui-harmonic
//! vector fields on Lie groups with left-invariant orthonormal frames.
//!
//! Exit codes: 0 = computed and all requested assertions passed,
//! 1 = computed but an assertion failed, 2 = input error.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod manifest;
mod report;

use commands::Expectation;
use manifest::{load_manifest, parse_delta_pair, parse_manifest, LoadedManifest};
use report::Format;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Assertion(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn assertion(msg: impl Into<String>) -> Self {
        CliError::Assertion(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Assertion(m) => write!(f, "assertion failed: {m}"),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "sesqui",
    version,
    about = "Exact checks of interpolating sesqui-harmonic vector fields on Lie groups"
)]
struct Cli {
    /// Manifest file (TOML) describing algebra, field, and deltas.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate both criticality conditions for the manifest's field.
    Check {
        /// Assert the outcome: `vector-field` or `map` (exit 1 if unmet).
        #[arg(long)]
        expect: Option<String>,
    },
    /// Derive the profile ODE for fields f(z) e3 on the Sol preset.
    DeriveOde {
        #[arg(long, default_value = "sol")]
        preset: String,
        /// Specialize delta1 (rational literal); default symbolic.
        #[arg(long, allow_hyphen_values = true)]
        delta1: Option<String>,
        /// Specialize delta2 (rational literal); default symbolic.
        #[arg(long, allow_hyphen_values = true)]
        delta2: Option<String>,
    },
    /// Verify the family classification on the Heisenberg preset.
    ClassifyNil {
        #[arg(long, allow_hyphen_values = true)]
        delta1: String,
        #[arg(long, allow_hyphen_values = true)]
        delta2: String,
    },
    /// Verify a single classification family at the given deltas.
    VerifyFamily {
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        delta1: String,
        #[arg(long, allow_hyphen_values = true)]
        delta2: String,
    },
    /// Finite-difference check of the first-variation identity.
    VariationTest,
    /// Rigidity scan of the vertical condition for same-sign deltas.
    ScanSameSign {
        #[arg(long, allow_hyphen_values = true)]
        delta1: String,
        #[arg(long, allow_hyphen_values = true)]
        delta2: String,
        /// Algebra preset when no manifest is given.
        #[arg(long, default_value = "nil")]
        preset: String,
    },
}

fn load_from_path(path: &Option<PathBuf>) -> Result<LoadedManifest, CliError> {
    let path = path
        .as_ref()
        .ok_or_else(|| CliError::input("this command requires --manifest <path>"))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    load_manifest(parse_manifest(&text)?)
}

fn run(cli: &Cli) -> Result<(String, bool), CliError> {
    let (report, ok) = match &cli.command {
        Command::Check { expect } => {
            let loaded = load_from_path(&cli.manifest)?;
            let expect = match expect.as_deref().or(loaded.manifest.expect.as_deref()) {
                Some(text) => Some(Expectation::parse(text)?),
                None => None,
            };
            commands::cmd_check(&loaded, expect)?
        }
        Command::DeriveOde {
            preset,
            delta1,
            delta2,
        } => {
            let deltas = match (delta1, delta2) {
                (None, None) => None,
                (Some(a), Some(b)) => Some(parse_delta_pair(a, b)?),
                _ => {
                    return Err(CliError::input(
                        "give both --delta1 and --delta2, or neither (symbolic)",
                    ))
                }
            };
            commands::cmd_derive_ode(preset, deltas)?
        }
        Command::ClassifyNil { delta1, delta2 } => {
            let d = parse_delta_pair(delta1, delta2)?;
            commands::cmd_classify_nil(&d)?
        }
        Command::VerifyFamily {
            family,
            delta1,
            delta2,
        } => {
            let d = parse_delta_pair(delta1, delta2)?;
            commands::cmd_verify_family(family, &d)?
        }
        Command::VariationTest => {
            let loaded = load_from_path(&cli.manifest)?;
            commands::cmd_variation_test(&loaded)?
        }
        Command::ScanSameSign {
            delta1,
            delta2,
            preset,
        } => {
            let d = parse_delta_pair(delta1, delta2)?;
            let loaded = match &cli.manifest {
                Some(_) => Some(load_from_path(&cli.manifest)?),
                None => None,
            };
            commands::cmd_scan_same_sign(preset, loaded.as_ref(), &d)?
        }
    };
    Ok((report.render(cli.format), ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => {
            match &cli.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        eprintln!("cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e @ CliError::Input(_)) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
        Err(e @ CliError::Assertion(_)) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}
