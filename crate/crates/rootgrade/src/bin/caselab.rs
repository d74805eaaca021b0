//! Command-line driver: single-case reports, reference-case replay, and
//! cross-family consistency sweeps.
//!
//! Exit codes: 0 on success, 1 when a replayed case or sweep check fails,
//! 2 on invalid input.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rootgrade::caselab::sweep::{self, CheckKind};
use rootgrade::caselab::{registry, render_text, run_case, DistSpec};
use rootgrade::{Error, LieType, Numbering};

#[derive(Parser)]
#[command(
    name = "caselab",
    version,
    about = "Reports, reference-case replays, and consistency sweeps for multi-graded root systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the full report for one type and marking
    Report {
        /// Simple type, e.g. "F4" or "A3"
        #[arg(long = "type")]
        lie_type: String,
        /// Marked nodes in the chosen numbering, comma-separated, e.g. "1,4"
        #[arg(long)]
        marking: String,
        /// Node numbering the marking and labels use: "bourbaki" or "paper"
        #[arg(long, default_value = "bourbaki")]
        numbering: String,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Distribution under study: "columns", "full", "d<k>", or
        /// "gens=k1,k2;k1,k2"
        #[arg(long, default_value = "columns")]
        dist: String,
    },
    /// Replay the reference cases against their frozen values
    Replay {
        /// Replay a single case id (see list-cases)
        #[arg(long)]
        only: Option<String>,
    },
    /// Run consistency checks over all simple types up to a rank bound
    Sweep {
        /// Largest rank to include (1 through 8)
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        /// Comma-separated subset of: chern-identity, properness,
        /// ideal-oracle, connectivity, degrees, strings (default: all)
        #[arg(long)]
        check: Option<String>,
    },
    /// List the reference case ids and titles
    ListCases,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Report {
            lie_type,
            marking,
            numbering,
            format,
            dist,
        } => {
            let lt = LieType::parse(&lie_type)?;
            let numbering = Numbering::parse(&numbering)?;
            let nodes = parse_nodes(&marking)?;
            let spec = DistSpec::parse(&dist)?;
            let report = run_case(lt, numbering, &nodes, &spec)?;
            match format {
                Format::Text => print!("{}", render_text(&report)),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("reports serialize")
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Replay { only } => {
            let outcome = registry::replay(only.as_deref())?;
            print!("{}", outcome.render_text());
            Ok(exit_for(outcome.pass()))
        }
        Command::Sweep { max_rank, check } => {
            let kinds: Vec<CheckKind> = match check {
                None => CheckKind::ALL.to_vec(),
                Some(list) => list
                    .split(',')
                    .map(CheckKind::parse)
                    .collect::<Result<_, _>>()?,
            };
            let outcome = sweep::sweep(max_rank, &kinds)?;
            print!("{}", outcome.render_text());
            Ok(exit_for(outcome.pass()))
        }
        Command::ListCases => {
            for (id, title) in registry::catalog() {
                println!("{id:<16} {title}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_for(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn parse_nodes(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::ParseMarking(s.to_string()))
        })
        .collect()
}
