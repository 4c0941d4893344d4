use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser)]
#[command(
    name = "minorsum",
    version,
    about = "Exact checks of interlacing minor-sum identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compare principal minors of TX, all minors of X, and the interlacing sum
    /// on seeded random matrices.
    VerifyTheorem(commands::TheoremArgs),
    /// Exhaustive path-count, cluster, sign and orbit checks.
    VerifyLemmas(commands::LemmaArgs),
    /// Dump every flip-group orbit of the k-edge matchings with its ledger.
    OrbitAudit(commands::OrbitArgs),
    /// Tabulate T minors against the closed formula and disjoint path counts.
    LgvAudit(commands::LgvArgs),
    /// Integrate a multipeakon state and report conserved quantities.
    Peakon(commands::PeakonArgs),
    /// Sample the peakon wave profile on a grid as CSV.
    Wave(commands::WaveArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::VerifyTheorem(a) => commands::verify_theorem(&a),
        Command::VerifyLemmas(a) => commands::verify_lemmas(&a),
        Command::OrbitAudit(a) => commands::orbit_audit(&a),
        Command::LgvAudit(a) => commands::lgv_audit(&a),
        Command::Peakon(a) => commands::peakon(&a),
        Command::Wave(a) => commands::wave(&a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
