//! `verbalis`: command-line front end for the verbalis library.
//!
//! Exit status is 0 on success, 1 when the library reports a domain error
//! (the report names the error kind) and 2 on a usage error.

mod cmd;
mod input;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use verbalis::Caps;

use input::Failure;
use output::Format;

#[derive(Parser, Debug)]
#[command(name = "verbalis", version, about = "Verbal subgroups, S-ranks, Frattini covers, first-order relativization and quotient towers of finite groups")]
struct Cli {
    /// Output mode; text is for humans and not a stable interface.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(flatten)]
    caps: CapArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct CapArgs {
    /// Largest group materialized as a table.
    #[arg(long, env = "VERBALIS_CAP_GROUP_ORDER", default_value_t = 5040, global = true)]
    cap_group_order: usize,
    /// Largest group whose subgroup lattice is enumerated.
    #[arg(long, env = "VERBALIS_CAP_ENUMERATION", default_value_t = 256, global = true)]
    cap_enumeration: usize,
    /// Largest order accepted by the isomorphism test.
    #[arg(long, env = "VERBALIS_CAP_ISOMORPHISM", default_value_t = 2000, global = true)]
    cap_isomorphism: usize,
    /// Largest order accepted by the minimal generating set search.
    #[arg(long, env = "VERBALIS_CAP_GENERATION", default_value_t = 512, global = true)]
    cap_generation: usize,
    /// Budget of table lookups for exhaustive evaluation.
    #[arg(long, env = "VERBALIS_CAP_EVALUATION", default_value_t = 100_000_000, global = true)]
    cap_evaluation: u64,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            group_order: self.cap_group_order,
            enumeration: self.cap_enumeration,
            isomorphism: self.cap_isomorphism,
            generation: self.cap_generation,
            evaluation: self.cap_evaluation,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Finite group structure.
    #[command(subcommand)]
    Group(cmd::group::GroupCmd),
    /// Word maps and verbal subgroups.
    #[command(subcommand)]
    Word(cmd::word::WordCmd),
    /// S-rank and the kernel intersection M_S(G).
    Srank(cmd::srank::SrankArgs),
    /// Number of normal subgroups with a given quotient.
    CountQuotients(cmd::srank::CountArgs),
    /// Frattini subgroup.
    Frattini(cmd::srank::FrattiniArgs),
    /// Whether an epimorphism is a Frattini cover.
    FrattiniCover(cmd::srank::CoverArgs),
    /// First-order formulas over group models.
    #[command(subcommand)]
    Fo(cmd::fo::FoCmd),
    /// Finite towers of quotients.
    #[command(subcommand)]
    Tower(cmd::tower::TowerCmd),
}

fn run(cli: &Cli) -> input::Outcome<serde_json::Value> {
    let caps = cli.caps.caps();
    match &cli.command {
        Command::Group(c) => cmd::group::run(c, &caps),
        Command::Word(c) => cmd::word::run(c, &caps),
        Command::Srank(a) => cmd::srank::srank(a, &caps),
        Command::CountQuotients(a) => cmd::srank::count(a, &caps),
        Command::Frattini(a) => cmd::srank::frattini(a, &caps),
        Command::FrattiniCover(a) => cmd::srank::cover(a, &caps),
        Command::Fo(c) => cmd::fo::run(c, &caps),
        Command::Tower(c) => cmd::tower::run(c, &caps),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut stdout = std::io::stdout().lock();
    match run(&cli) {
        Ok(report) => {
            let _ = stdout.write_all(output::render(report, cli.format).as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            if cli.format == Format::Json {
                let report = output::error_report(e.name(), &e.to_string());
                let _ = stdout.write_all(output::render(report, cli.format).as_bytes());
            }
            eprintln!("error[{}]: {e}", e.name());
            ExitCode::from(1)
        }
    }
}
