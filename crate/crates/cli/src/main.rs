use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lieform::BuiltinFormation;

mod commands;

/// Exit codes beyond 0 (success), 1 (bad input or failed computation) and
/// 2 (usage error, reported by clap).
pub mod exit {
    /// A requested check answered "no": not intravariant, or an invalid chain.
    pub const NEGATIVE: u8 = 3;
    /// An 𝔉-normaliser that is not intravariant.
    pub const INTRAVARIANCE: u8 = 10;
    pub const COVER_AVOID: u8 = 11;
    pub const CRITERIA_DISAGREE: u8 = 12;
    pub const OTHER_PROPERTY: u8 = 13;
}

#[derive(Parser, Debug)]
#[command(name = "lieform", version, about = "Formations, normalisers and derivations of soluble Lie algebras")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Linear,
    Extension,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Jacobi identity and solubility of an algebra file.
    Validate { file: PathBuf },

    /// Series, chief series, nil radical, derivations and per-formation results.
    Analyze {
        file: PathBuf,
        /// Formation to analyse (repeatable; default: all built-in formations).
        #[arg(long = "formation", value_parser = parse_formation)]
        formations: Vec<BuiltinFormation>,
        /// Write the first counterexample found to this file.
        #[arg(long)]
        counterexample: Option<PathBuf>,
    },

    /// List the 𝔉-normalisers with one witnessing chain each.
    Normalisers {
        file: PathBuf,
        #[arg(long, value_parser = parse_formation, default_value = "nilpotent")]
        formation: BuiltinFormation,
    },

    /// Basis of the derivation algebra and the inner derivations.
    Derivations { file: PathBuf },

    /// Test whether a subalgebra is intravariant. FILE may also be a counterexample dump.
    CheckIntravariance {
        file: PathBuf,
        /// Basis vectors separated by ';', entries by ',', e.g. "1,0;0,1".
        #[arg(long)]
        subalgebra: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },

    /// Check a normaliser chain step by step (works over Q as well).
    VerifyChain {
        file: PathBuf,
        chainfile: PathBuf,
        #[arg(long, value_parser = parse_formation, default_value = "nilpotent")]
        formation: BuiltinFormation,
    },

    /// Enumerate soluble algebras and check every property on each.
    Sweep {
        /// Prime field, e.g. GF(2) (repeatable).
        #[arg(long = "field", required = true)]
        fields: Vec<String>,
        #[arg(long)]
        max_dim: usize,
        /// Formation to check (repeatable; default: nilpotent and allsoluble).
        #[arg(long = "formation", value_parser = parse_formation)]
        formations: Vec<BuiltinFormation>,
        /// Maximum derivations sampled per parent algebra.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads (default: LIEFORM_THREADS, else all cores).
        #[arg(long)]
        threads: Option<usize>,
        /// Write the first counterexample found to this file.
        #[arg(long)]
        counterexample: Option<PathBuf>,
    },
}

fn parse_formation(s: &str) -> Result<BuiltinFormation, String> {
    s.parse().map_err(|e: lieform::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let result = match cli.command {
        Command::Validate { file } => commands::validate(&file, json),
        Command::Analyze {
            file,
            formations,
            counterexample,
        } => commands::analyze(&file, &formations, counterexample.as_deref(), json),
        Command::Normalisers { file, formation } => commands::normalisers(&file, formation, json),
        Command::Derivations { file } => commands::derivations(&file, json),
        Command::CheckIntravariance { file, subalgebra, method } => {
            commands::check_intravariance(&file, subalgebra.as_deref(), method, json)
        }
        Command::VerifyChain {
            file,
            chainfile,
            formation,
        } => commands::verify_chain(&file, &chainfile, formation, json),
        Command::Sweep {
            fields,
            max_dim,
            formations,
            cap,
            seed,
            threads,
            counterexample,
        } => commands::sweep(
            &commands::SweepArgs {
                fields,
                max_dim,
                formations,
                cap,
                seed,
                threads,
            },
            counterexample.as_deref(),
            json,
        ),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::error_code(&e))
        }
    }
}
