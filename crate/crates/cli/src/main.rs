use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use diverse_lattice::{MeasureKind, Solver};
use diverse_lattice_cli::{exit_code, run, selftest, Mode, Output, ProblemKind, RunConfig};

/// Maximum-diversity and pairwise-disjoint solutions for minimum s-t cuts and stable matchings.
#[derive(Parser)]
#[command(name = "divlat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum s-t cuts of a digraph (`p`/`a` line format).
    Mincut(RunArgs),
    /// Stable matchings of a complete preference profile.
    Matching(RunArgs),
    #[command(hide = true)]
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        rounds: usize,
    },
}

#[derive(Args)]
struct RunArgs {
    mode: Mode,
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value = "sum")]
    measure: MeasureKind,
    #[arg(long, default_value = "auto")]
    solver: Solver,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Only the hidden self-test draws random numbers.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Integer value per ground element, for `--measure abs`.
    #[arg(long)]
    values: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (problem, args) = match cli.command {
        Command::Mincut(a) => (ProblemKind::Mincut, a),
        Command::Matching(a) => (ProblemKind::Matching, a),
        Command::Selftest { seed, rounds } => {
            return match selftest(seed, rounds) {
                Ok(checks) => {
                    for (name, ok) in &checks {
                        println!("{} {name}", if *ok { "PASS" } else { "FAIL" });
                    }
                    ExitCode::from(if checks.iter().all(|c| c.1) { 0 } else { 4 })
                }
                Err(e) => fail(&e),
            };
        }
    };
    let config = RunConfig {
        problem,
        mode: args.mode,
        k: args.k,
        measure: args.measure,
        solver: args.solver,
        input: args.input,
        values: args.values,
        output: args.output,
        seed: args.seed,
    };
    match run(&config) {
        Ok(report) => {
            print!("{}", report.render(config.output));
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}

fn fail(e: &diverse_lattice::Error) -> ExitCode {
    eprintln!("divlat: {e}");
    ExitCode::from(exit_code(e) as u8)
}
