//! Command-line front end. Every run is deterministic for a fixed set of
//! flags; output headers echo the configuration. Exit status: 0 on success
//! (including all requested verifications), 1 on errors, 2 when a requested
//! verification fails.

mod algebra_cmd;
mod common;
mod complexity_cmd;
mod rauzy_cmd;
mod rotation_cmd;

use anyhow::Result;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "sturmkit",
    version,
    about = "Minimal-complexity words, factor graphs, rotation codings and monomial algebra growth"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Complexity profile T(n) of a word (CSV columns n,T).
    Complexity(complexity_cmd::ComplexityArgs),
    /// Factor-graph tables, DOT export, shape ancestry.
    Rauzy(rauzy_cmd::RauzyArgs),
    /// Rotation codings: orbit words, growth verification, dual check.
    Rotation(rotation_cmd::RotationArgs),
    /// Growth tables and classification of monomial presentations.
    Algebra(algebra_cmd::AlgebraArgs),
}

fn main() {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Complexity(args) => complexity_cmd::run(args),
        Command::Rauzy(args) => rauzy_cmd::run(args),
        Command::Rotation(args) => rotation_cmd::run(args),
        Command::Algebra(args) => algebra_cmd::run(args),
    }
}
