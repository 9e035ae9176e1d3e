//! Workbench for finite ternary and binary operation tables kept in plain
//! text files: law verification, biunit-pair reports, the correspondence
//! between semiheaps-with-pair and switch monoids, exhaustive enumeration,
//! isomorphism and warp-equivalence search, and stock constructions.
//!
//! Reports are line-oriented `key: value` text on stdout, byte-identical
//! across runs given the same inputs, flags, and seed; timing goes to
//! stderr. Exit codes: 0 success (the checked property holds), 1 a law
//! violation or negative verdict, 2 malformed input.

mod biunits;
mod correspond;
mod enumerate;
mod equiv;
mod format;
mod make;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use semiheaps_core::{AlgebraError, DEFAULT_WITNESS_LIMIT};

pub(crate) const EXIT_HOLDS: u8 = 0;
pub(crate) const EXIT_VIOLATION: u8 = 1;
pub(crate) const EXIT_INPUT: u8 = 2;

/// Failure that aborts a command before its report can carry a verdict.
#[derive(Debug)]
pub(crate) struct Failure {
    pub code: u8,
    pub message: String,
}

pub(crate) fn input_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

/// Malformed data is an input error; every other algebra error is a verdict
/// about the data and exits 1.
pub(crate) fn algebra_exit_code(e: &AlgebraError) -> u8 {
    match e {
        AlgebraError::EmptyCarrier
        | AlgebraError::TableLength { .. }
        | AlgebraError::EntryRange { .. }
        | AlgebraError::ElementRange { .. }
        | AlgebraError::CarrierMismatch { .. }
        | AlgebraError::CarrierTooLarge { .. } => EXIT_INPUT,
        _ => EXIT_VIOLATION,
    }
}

/// Folds a checker error into the report: law-level errors become the
/// printed verdict, input-level ones abort.
pub(crate) fn report_algebra_error(e: AlgebraError) -> Result<u8, Failure> {
    match algebra_exit_code(&e) {
        EXIT_VIOLATION => {
            println!("verdict: fails");
            println!("error: {e}");
            Ok(EXIT_VIOLATION)
        }
        code => Err(Failure {
            code,
            message: e.to_string(),
        }),
    }
}

pub(crate) fn join(values: impl IntoIterator<Item = usize>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Law {
    Semiheap,
    Heap,
    Diheap,
    Abelian,
    Monoid,
    Group,
}

impl Law {
    pub(crate) fn word(self) -> &'static str {
        match self {
            Law::Semiheap => "semiheap",
            Law::Heap => "heap",
            Law::Diheap => "diheap",
            Law::Abelian => "abelian",
            Law::Monoid => "monoid",
            Law::Group => "group",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Direction {
    ToMonoid,
    ToSemiheap,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Filter {
    Heap,
    Diheap,
    HasBiunitPair,
}

impl Filter {
    pub(crate) fn word(self) -> &'static str {
        match self {
            Filter::Heap => "heap",
            Filter::Diheap => "diheap",
            Filter::HasBiunitPair => "has-biunit-pair",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Mode {
    Iso,
    Warp,
}

impl Mode {
    pub(crate) fn word(self) -> &'static str {
        match self {
            Mode::Iso => "iso",
            Mode::Warp => "warp",
        }
    }
}

#[derive(Parser)]
#[command(
    name = "semiheaps",
    version,
    about = "Finite semiheap and switch-monoid workbench"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a law against a table file
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        law: Law,
        /// Most violations to list before stopping the scan
        #[arg(long, default_value_t = DEFAULT_WITNESS_LIMIT)]
        witness_limit: usize,
    },
    /// List every left, right, and full biunit pair of a ternar
    Biunits { file: PathBuf },
    /// Map a semiheap with a full pair to its switch monoid, or back
    Correspond {
        #[arg(value_enum)]
        direction: Direction,
        file: PathBuf,
        /// Full biunit pair (to-monoid)
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        pair: Option<Vec<usize>>,
        /// Switch images, overriding any meta.switch in the file (to-semiheap)
        #[arg(long, num_args = 1..)]
        switch: Option<Vec<usize>>,
        /// Write the image algebra here
        #[arg(long)]
        out: Option<PathBuf>,
        /// Apply the inverse assignment and diff against the input
        #[arg(long)]
        round_trip: bool,
    },
    /// Enumerate all semiheaps on a carrier of n elements
    Enumerate {
        n: usize,
        /// Keep one representative per isomorphism class
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long, value_enum)]
        filter: Option<Filter>,
        /// Dump the surviving tables to a listing file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide isomorphism or warp equivalence of two ternar files
    Equiv {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Build a stock construction and write it as a table file
    Make {
        /// Construction name and its parameters, e.g. `cyclic-sum 4`,
        /// `group-heap z3`, `odd-residues 3`, `group klein`, `constant 3 0`,
        /// `boolean-monoid 2`, `relation 2 2`, `cubic 2 z2`
        #[arg(num_args = 1..)]
        spec: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// For cubic: verify the distinguished right biunit pair and sample
        /// the semiheap law
        #[arg(long)]
        check_biunit: bool,
        /// Seed for sampled checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let outcome = match cli.command {
        Command::Verify {
            file,
            law,
            witness_limit,
        } => verify::run(&file, law, witness_limit),
        Command::Biunits { file } => biunits::run(&file),
        Command::Correspond {
            direction,
            file,
            pair,
            switch,
            out,
            round_trip,
        } => correspond::run(
            direction,
            &file,
            pair.map(|p| (p[0], p[1])),
            switch,
            out.as_deref(),
            round_trip,
        ),
        Command::Enumerate {
            n,
            up_to_iso,
            filter,
            out,
        } => enumerate::run(n, up_to_iso, filter, out.as_deref()),
        Command::Equiv { file1, file2, mode } => equiv::run(&file1, &file2, mode),
        Command::Make {
            spec,
            out,
            check_biunit,
            seed,
        } => make::run(&spec, out.as_deref(), check_biunit, seed),
    };
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
