//! Command-line front end: parse an algebra description, dispatch one
//! computation, print a deterministic report.
//!
//! Exit codes: 0 all checks passed or were skipped with a reason, 1 a check
//! failed, 2 input error, 3 size budget or truncation exceeded.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hochschild::runner::{self, Subcommand as Job};
use hochschild::verify::JobConfig;

#[derive(Parser)]
#[command(
    name = "hochschild",
    about = "Exact Hochschild cohomology for quiver algebras, skew group \
             algebras, smash products and covering algebras",
    version
)]
struct Cli {
    /// Path to the JSON input document
    #[arg(long, global = true, default_value = "")]
    input: String,

    /// Maximum homological degree to compute
    #[arg(long, global = true, default_value_t = 2)]
    max_hdeg: usize,

    /// Internal-degree truncation for graded algebras
    #[arg(long, global = true, default_value_t = 6)]
    max_idg: usize,

    /// Cap on cochain-space dimensions; exceeding it is a refusal, not a
    /// silent truncation
    #[arg(long, global = true, default_value_t = 200_000)]
    budget: usize,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for the sampled multiplicativity checks (the only randomness)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Per-degree dimensions, finiteness certificate, center
    Algebra {
        #[command(subcommand)]
        sub: AlgebraCmd,
    },
    /// Hochschild cohomology
    Hh {
        #[command(subcommand)]
        sub: HhCmd,
    },
    /// Skew group algebra
    Skew {
        #[command(subcommand)]
        sub: BuildCmd,
    },
    /// Covering algebra of a grading
    Cover {
        #[command(subcommand)]
        sub: BuildCmd,
    },
    /// Smash product of a grading
    Smash {
        #[command(subcommand)]
        sub: BuildCmd,
    },
    /// Koszul complex: certification and the HH lower bound
    Koszul {
        #[command(subcommand)]
        sub: KoszulCmd,
    },
    /// Run a named theorem verification
    Verify {
        /// One of: thm29, prop23, prop26, prop35, duality, galois, cen, tau
        name: String,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Summary of the quadratic algebra
    Info,
}

#[derive(Subcommand)]
enum HhCmd {
    /// Cohomology of the bar complex (plus the relative cross-check)
    Bar,
    /// Cohomology through the bimodule Koszul complex, graded by weight
    Koszul,
}

#[derive(Subcommand)]
enum BuildCmd {
    /// Construct and re-verify the algebra
    Build,
}

#[derive(Subcommand)]
enum KoszulCmd {
    /// Degreewise exactness certification of the augmented complex
    Check,
    /// The vertex-diagonal lower bound for dim HH^n
    Bound {
        /// Homological degree of the bound
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let job = match &cli.command {
        Command::Algebra {
            sub: AlgebraCmd::Info,
        } => Job::AlgebraInfo,
        Command::Hh { sub: HhCmd::Bar } => Job::HhBar,
        Command::Hh { sub: HhCmd::Koszul } => Job::HhKoszul,
        Command::Skew {
            sub: BuildCmd::Build,
        } => Job::SkewBuild,
        Command::Cover {
            sub: BuildCmd::Build,
        } => Job::CoverBuild,
        Command::Smash {
            sub: BuildCmd::Build,
        } => Job::SmashBuild,
        Command::Koszul { sub: KoszulCmd::Check } => Job::KoszulCheck,
        Command::Koszul {
            sub: KoszulCmd::Bound { n },
        } => Job::KoszulBound { n: *n },
        Command::Verify { name } => Job::Verify { name: name.clone() },
    };
    if cli.input.is_empty() {
        eprintln!("error: --input <path> is required");
        return ExitCode::from(2);
    }
    let json = match std::fs::read_to_string(&cli.input) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", cli.input);
            return ExitCode::from(2);
        }
    };
    let cfg = JobConfig {
        max_hdeg: cli.max_hdeg,
        max_idg: cli.max_idg,
        budget: cli.budget,
        seed: cli.seed,
        samples: 20,
    };
    let (output, code) = runner::run_to_output(
        &json,
        &job,
        &cfg,
        matches!(cli.format, Format::Json),
    );
    if code == 0 || code == 1 {
        print!("{output}");
    } else {
        eprint!("{output}");
    }
    ExitCode::from(code as u8)
}
