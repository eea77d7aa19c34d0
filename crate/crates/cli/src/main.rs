//! `matverify`: certify, verify and query uncertain matroid instances.
//!
//! Every subcommand prints one JSON record per line on stdout. Exit codes:
//! 0 on success, 1 on invalid input, 2 when an internal consistency check
//! fails.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "matverify",
    version,
    about = "Minimum-weight basis verification under uncertainty"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum-cost certificate, for the best basis or a given one.
    Certify(CertifyArgs),
    /// Check whether a query set verifies a basis.
    Verify(VerifyArgs),
    /// Adaptive querying for a known minimum-weight basis.
    Online(OnlineArgs),
    /// Adaptive querying guided by predicted weights or a predicted basis.
    Augment(AugmentArgs),
    /// Exhaustive minimum-cost certificates for small instances.
    Oracle(OracleArgs),
    /// Generate a random or gap instance.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
struct CertifyArgs {
    file: String,
    /// Certify this basis instead of choosing one.
    #[arg(long, value_delimiter = ',')]
    basis: Option<Vec<String>>,
    /// Print the rule applications that selected the basis.
    #[arg(long)]
    trace: bool,
    /// Print the auxiliary graph.
    #[arg(long)]
    dump_aux: bool,
    /// Compare against the exhaustive oracle when the instance is small enough.
    #[arg(long)]
    check: bool,
    /// Size limit for `--check`.
    #[arg(long, default_value_t = 12)]
    max_elements: usize,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    file: String,
    #[arg(long, value_delimiter = ',', required = true)]
    basis: Vec<String>,
    /// Queried elements; empty for none.
    #[arg(long, value_delimiter = ',', default_value = "")]
    query: Vec<String>,
}

#[derive(Debug, Args)]
struct OnlineArgs {
    file: String,
    /// Minimum-weight basis to run with; chosen by the rule engine when absent.
    #[arg(long, value_delimiter = ',')]
    basis: Option<Vec<String>>,
}

#[derive(Debug, Args)]
struct AugmentArgs {
    file: String,
    /// JSON object mapping element ids to predicted weights.
    #[arg(long, conflicts_with = "predict_basis")]
    predict_weights: Option<String>,
    #[arg(long, value_delimiter = ',')]
    predict_basis: Option<Vec<String>>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    file: String,
    #[arg(long, default_value_t = 12)]
    max_elements: usize,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// graphic:V:E, uniform:N:K or partition:N:C1,C2,..
    #[arg(long, conflicts_with = "gap")]
    profile: Option<String>,
    /// mixed or two-point:L:U
    #[arg(long, default_value = "mixed")]
    areas: String,
    #[arg(long, default_value_t = 0.1)]
    trivial_fraction: f64,
    /// unit or random
    #[arg(long, default_value = "unit")]
    costs: String,
    /// Gap instance with parameters RHO N.
    #[arg(long, num_args = 2, value_names = ["RHO", "N"])]
    gap: Option<Vec<String>>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Certify(a) => commands::certify(a),
        Command::Verify(a) => commands::verify(a),
        Command::Online(a) => commands::online(a),
        Command::Augment(a) => commands::augment(a),
        Command::Oracle(a) => commands::oracle(a),
        Command::Gen(a) => commands::gen(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{}", failure.record());
            ExitCode::from(failure.code())
        }
    }
}
