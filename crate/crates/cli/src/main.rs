//! `rck`: command-line front end for rational Catalan combinatorics.
//!
//! Exit codes: 0 success, 1 verification failure or finding, 2 usage or
//! input error.

mod commands;
mod output;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rck_core::enumerate::Family;

#[derive(Parser, Debug)]
#[command(
    name = "rck",
    version,
    about = "Rational Catalan combinatorics: Dyck paths, cores and their statistics"
)]
struct Cli {
    /// Accepted for scripting; output never depends on a seed.
    #[arg(long, global = true)]
    seedless: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Pair {
    #[arg(short = 'm')]
    m: u32,
    #[arg(short = 'n')]
    n: u32,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
enum StreamFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ranks, end sets, area, dinv, codinv and the sweep image of a path.
    Stats {
        #[command(flatten)]
        pair: Pair,
        /// Step string over N and E ("-" for the empty path).
        path: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Anderson's bijection, from a Dyck path or from a core.
    Anderson {
        #[command(flatten)]
        pair: Pair,
        #[arg(required_unless_present = "core", conflicts_with = "core")]
        path: Option<String>,
        /// Comma-separated parts, "-" for the empty partition.
        #[arg(long)]
        core: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The sweep map on one path, or the injectivity report for a pair.
    Sweep {
        #[command(flatten)]
        pair: Pair,
        #[arg(required_unless_present = "report", conflicts_with = "report")]
        path: Option<String>,
        #[arg(long)]
        report: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Stream every object of a family, in lexicographic order.
    Enumerate {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_enum, default_value_t)]
        format: StreamFormat,
    },
    /// Size of a family, checked against its closed form.
    Count {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The rational q-Catalan polynomial.
    Catpoly {
        #[command(flatten)]
        pair: Pair,
        /// Also compute the path and core sums and compare.
        #[arg(long)]
        sums: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run every identity check on one pair or on all pairs with m + n <= K.
    Verify {
        #[arg(long, value_name = "K", conflicts_with_all = ["m", "n"], required_unless_present_all = ["m", "n"])]
        upto: Option<u32>,
        #[arg(short = 'm', requires = "n")]
        m: Option<u32>,
        #[arg(short = 'n', requires = "m")]
        n: Option<u32>,
        /// Also write the reports as a JSON array to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Record milliseconds per check (makes output run-dependent).
        #[arg(long)]
        timing: bool,
    },
    /// psi: self-rank-complement (m, n)-Dyck paths to free paths in the
    /// floor(m/2) x floor(n/2) rectangle.
    Psi {
        #[command(flatten)]
        pair: Pair,
        path: String,
        /// Map a small free path back to the (m, n)-Dyck path.
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

/// How a command ended when it did not fail outright.
pub enum Outcome {
    Success,
    /// A check failed or reported a finding.
    Findings,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = commands::run(cli.command, &mut out).and_then(|o| {
        out.flush()?;
        Ok(o)
    });
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Findings) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<io::Error>()
            .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
    })
}
