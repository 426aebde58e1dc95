use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use scottper::cli::{cmd_bench, cmd_catalog, cmd_eval, cmd_verify, Output, DEFAULT_MAX_N};

/// Scott-type permanents per(1/(x_i - y_j)) over the zeros of two polynomials.
#[derive(Parser)]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate PER(P, Q) by one route.
    Eval {
        p: String,
        q: String,
        /// auto, theorem1, fes, closed:<id>, oracle or involution.
        #[arg(long, default_value = "auto")]
        method: String,
    },
    /// Run every applicable route and compare.
    Verify {
        p: String,
        q: String,
        /// Skip the floating routes above this deg P.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// List closed-form catalog entries.
    Catalog {
        #[arg(long)]
        id: Option<String>,
        /// Substring of the id, statement or domain.
        #[arg(long)]
        filter: Option<String>,
        /// Evaluate the entry at e.g. "n=3,a=1/2" (needs --id).
        #[arg(long)]
        params: Option<String>,
    },
    /// Time the oracle against theorem1 on random instances.
    Bench {
        /// Degrees of P, e.g. 6..10.
        n_range: String,
        /// Degrees of Q; defaults to m = n.
        m_range: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest n for the oracle leg.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        /// JSON rows instead of CSV.
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let out: Output = match Cli::parse().command {
        Command::Eval { p, q, method } => cmd_eval(&p, &q, &method),
        Command::Verify { p, q, max_n } => cmd_verify(&p, &q, max_n),
        Command::Catalog { id, filter, params } => {
            cmd_catalog(id.as_deref(), filter.as_deref(), params.as_deref())
        }
        Command::Bench {
            n_range,
            m_range,
            seed,
            max_n,
            json,
        } => cmd_bench(&n_range, m_range.as_deref(), seed, max_n, json),
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let mut stdout = io::stdout().lock();
    if !out.stdout.is_empty() {
        let newline = if out.stdout.ends_with('\n') { "" } else { "\n" };
        let _ = write!(stdout, "{}{newline}", out.stdout);
    }
    if !out.stderr.is_empty() {
        let _ = writeln!(io::stderr(), "{}", out.stderr);
    }
    ExitCode::from(out.code as u8)
}
