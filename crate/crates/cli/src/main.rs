//! `ramseylab` command-line interface.
//!
//! Exit codes: 0 decided, 1 input error, 2 budget exhausted, 3 size limit.

mod commands;
mod output;
mod spec;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ramseylab::Error;

#[derive(Parser, Debug)]
#[command(name = "ramseylab", version, about = "Two-colour Ramsey search and bounds for fans")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Worker threads for searches; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    /// Seed for randomized components.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Render markdown instead of JSON.
    #[arg(long, global = true)]
    pub md: bool,
    /// Search node budget.
    #[arg(long, global = true, env = "RAMSEYLAB_BUDGET", default_value_t = 200_000_000)]
    pub budget: u64,
    /// Write the search certificate to this file.
    #[arg(long, global = true)]
    pub certificate: Option<std::path::PathBuf>,
    /// Symmetry reduction for searches.
    #[arg(long, global = true, value_enum, default_value_t = Symmetry::Auto)]
    pub symmetry: Symmetry,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Auto,
    None,
    VertexOrbit,
    CanonicalAugmentation,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    /// Burr colouring; needs --chi, --s, --h.
    Burr,
    /// Lower-bound colouring of K_{knt}.
    RamseyWitness,
    /// Lower-bound colouring of K_{knt} plus a pendant of degree (k-1)nt+t-1.
    StarWitness,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// χ, s, τ, edge-criticality and a critical colouring of a graph
    /// (read from stdin when omitted).
    Invariants { graph: Option<String> },
    /// Emit a lower-bound colouring as JSON.
    Construct {
        #[arg(value_enum)]
        kind: Construction,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        chi: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        h: Option<usize>,
        /// Output file (stdout when omitted).
        #[arg(short, long)]
        output: Option<std::path::PathBuf>,
    },
    /// Check a colouring file, or decide arrowing on a host.
    Verify {
        /// Red pattern.
        #[arg(long)]
        red: String,
        /// Blue pattern (`fan:n,t` selects the fan detector).
        #[arg(long)]
        blue: String,
        /// Colouring file to check.
        #[arg(long, conflicts_with = "host")]
        coloring: Option<std::path::PathBuf>,
        /// Host to search: `K<n>` or `starbook:m,k`.
        #[arg(long, required_unless_present = "coloring")]
        host: Option<String>,
    },
    /// Exact R(G, H) by search over K_lo ..= K_hi.
    Ramsey {
        #[arg(long)]
        red: String,
        #[arg(long)]
        blue: String,
        #[arg(long, default_value_t = 1)]
        lo: usize,
        #[arg(long, default_value_t = 13)]
        hi: usize,
    },
    /// Exact star-critical Ramsey number.
    StarRamsey {
        #[arg(long)]
        red: String,
        #[arg(long)]
        blue: String,
        /// R(G, H) if known; computed first otherwise.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Closed-form predictions and bounds for an edge-critical G with
    /// χ(G) = k+1 against K_1 + nK_t, or a published result by tag.
    Predict {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Letter a..i of a published result.
        #[arg(long)]
        tag: Option<char>,
        #[arg(long)]
        h: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
    },
    /// Partition diagnostics of a colouring.
    Diagnose {
        /// Colouring file; the star witness for (k, t, n) when omitted.
        #[arg(long)]
        coloring: Option<std::path::PathBuf>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = ramseylab::stability::DEFAULT_XI)]
        xi: f64,
        #[arg(long, default_value_t = 16)]
        restarts: usize,
    },
    /// Formulas against exact search over ranges such as `2..3`.
    Table {
        #[arg(long)]
        k: String,
        #[arg(long)]
        t: String,
        #[arg(long)]
        n: String,
        /// Skip the exact searches.
        #[arg(long)]
        no_search: bool,
    },
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExhausted { .. } => 2,
        Error::SizeLimit { .. } => 3,
        _ => 1,
    }
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
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", output::render(&out.value, cli.global.md));
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
