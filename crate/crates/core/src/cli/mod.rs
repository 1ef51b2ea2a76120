//! Command-line front end: each subcommand produces a [`Report`].

mod report;
mod suites;

use std::time::Instant;

use clap::{Parser, Subcommand};

pub use report::{emit_report, parse_report, Format, Record, Report};
pub use suites::{Suite, DUNKL_MAX_DEGREE};

use crate::error::{Error, Result};
use crate::sampling::DEFAULT_SEED;
use crate::varieties::{hilbert_compare, MAX_HILBERT_DEGREE, MAX_SYMBOLIC_N};

/// Largest dimension accepted by `lemma-sl2 --dim`.
pub const MAX_LEMMA_DIM: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "spnil", version, about = "Exact checks for nilpotent sp(2n) geometry")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Include wall time in the report (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Nilpotent orbit table for P_n.
    Census {
        #[arg(short)]
        n: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Truncated Hilbert functions of the two sides of the isomorphism.
    Hilbert {
        #[arg(short, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        max_degree: u32,
    },
    /// Radial part on the weight-zero vector against L_c.
    Radial {
        #[arg(short)]
        n: usize,
    },
    /// The sl2 lowest-coefficient lemma, optionally the square lemma for P_n.
    LemmaSl2 {
        #[arg(long)]
        dim: usize,
        #[arg(short)]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
}

impl Command {
    fn label(&self) -> String {
        match self {
            Command::Census { n } => format!("census -n {n}"),
            Command::Verify { suite, n, trials, .. } => {
                format!("verify {} -n {n} --trials {trials}", suite.name())
            }
            Command::Hilbert { n, max_degree } => format!("hilbert -n {n} --max-degree {max_degree}"),
            Command::Radial { n } => format!("radial -n {n}"),
            Command::LemmaSl2 { dim, n, trials, .. } => match n {
                Some(n) => format!("lemma-sl2 --dim {dim} -n {n} --trials {trials}"),
                None => format!("lemma-sl2 --dim {dim}"),
            },
        }
    }

    fn seed(&self) -> u64 {
        match self {
            Command::Verify { seed, .. } | Command::LemmaSl2 { seed, .. } => *seed,
            _ => DEFAULT_SEED,
        }
    }
}

fn guard_n(n: usize) -> Result<()> {
    if (1..=MAX_SYMBOLIC_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::ResourceGuard(format!("n must be in 1..={MAX_SYMBOLIC_N}, got {n}")))
    }
}

/// Runs one command. Resource-guard violations come back as
/// [`Error::ResourceGuard`] before any work is done.
pub fn run(command: &Command, timing: bool) -> Result<Report> {
    let start = Instant::now();
    let records = match command {
        Command::Census { n } => {
            guard_n(*n)?;
            suites::census_records(*n)?
        }
        Command::Verify { suite, n, seed, trials } => {
            guard_n(*n)?;
            suites::run_suite(*suite, *n, *seed, *trials)?
        }
        Command::Hilbert { n, max_degree } => {
            if *n != 1 || *max_degree > MAX_HILBERT_DEGREE {
                return Err(Error::ResourceGuard(format!(
                    "hilbert supports n = 1 and max degree <= {MAX_HILBERT_DEGREE}"
                )));
            }
            hilbert_compare(*n, *max_degree)?
                .into_iter()
                .map(|row| {
                    Record::new(
                        "hilbert",
                        format!("n={n};degree={}", row.degree),
                        row.left,
                        row.right,
                    )
                })
                .collect()
        }
        Command::Radial { n } => {
            guard_n(*n)?;
            suites::radial_records(*n)?
        }
        Command::LemmaSl2 { dim, n, seed, trials } => {
            if *dim == 0 || *dim > MAX_LEMMA_DIM {
                return Err(Error::ResourceGuard(format!("dim must be in 1..={MAX_LEMMA_DIM}")));
            }
            if let Some(n) = n {
                guard_n(*n)?;
            }
            suites::lemma_records(*dim, *n, *seed, *trials)?
        }
    };
    let mut report = Report::new(command.label(), command.seed(), records);
    if timing {
        report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

/// Parses `argv`, runs, prints, and returns the process exit code:
/// 0 if every record passed, 1 on a failed check or runtime error, 2 on
/// a usage or resource-guard error.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match run(&cli.command, cli.timing).and_then(|r| Ok((emit_report(&r, cli.format)?, r.pass))) {
        Ok((text, pass)) => {
            print!("{text}");
            if pass {
                0
            } else {
                1
            }
        }
        Err(e @ Error::ResourceGuard(_)) => {
            eprintln!("error: {e}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
