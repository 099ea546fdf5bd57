use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use splitkit_cli::{budget_from_env, exit, run, Command, Format, Options};

#[derive(Parser)]
#[command(name = "splitkit", version, about = "Split digraph recognition from degree sequences")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Report digraphic, split and splittance.
    Check(Args),
    /// Print the splittance matrix, one row per k.
    Matrix {
        #[command(flatten)]
        args: Args,
        /// Also print the s_bar, s_under, m_bar and m_under rows.
        #[arg(long)]
        extras: bool,
    },
    /// List the induced split partition at every zero of the matrix.
    Partitions(Args),
    /// Print a minimum arc edit script that makes a digraph split.
    Repair(Args),
}

#[derive(clap::Args)]
struct Args {
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Cross-check against brute-force search (bounded by SPLITKIT_ORACLE_MAX_N).
    #[arg(long)]
    oracle: bool,
    file: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Kv,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::OK });
        }
    };
    let (command, args, extras) = match cli.command {
        Cmd::Check(a) => (Command::Check, a, false),
        Cmd::Matrix { args, extras } => (Command::Matrix, args, extras),
        Cmd::Partitions(a) => (Command::Partitions, a, false),
        Cmd::Repair(a) => (Command::Repair, a, false),
    };
    let budget = match budget_from_env() {
        Ok(b) => b,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(exit::USAGE);
        }
    };
    let text = match std::fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", args.file.display());
            return ExitCode::from(exit::USAGE);
        }
    };
    let opts = Options {
        format: args.format.map(|f| match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Kv => Format::Kv,
        }),
        oracle: args.oracle,
        extras,
        budget,
    };
    let outcome = run(command, &text, &opts);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code)
}
