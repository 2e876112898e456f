mod bench;
mod report;
mod scan;

use std::alloc::{GlobalAlloc, Layout, System};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Heap accounting for `bench`; a thin wrapper over the system allocator.
pub struct CountingAlloc;

pub static HEAP_CURRENT: AtomicUsize = AtomicUsize::new(0);
pub static HEAP_PEAK: AtomicUsize = AtomicUsize::new(0);

unsafe impl GlobalAlloc for CountingAlloc {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        let p = System.alloc(layout);
        if !p.is_null() {
            let now = HEAP_CURRENT.fetch_add(layout.size(), Ordering::Relaxed) + layout.size();
            HEAP_PEAK.fetch_max(now, Ordering::Relaxed);
        }
        p
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        System.dealloc(ptr, layout);
        HEAP_CURRENT.fetch_sub(layout.size(), Ordering::Relaxed);
    }
}

#[global_allocator]
static ALLOC: CountingAlloc = CountingAlloc;

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INPUT: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "denseregion",
    version,
    about = "Find substrings whose density of 1s lies in [θ1, θ2]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Scan FASTA records or a raw bit string.
    Scan(ScanArgs),
    /// Time the solvers on seeded random sequences.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Fasta,
    Bits,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Map {
    Gc,
    Cpg,
    Raw,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    Longest,
    Shortest,
    Maximal,
}

impl Problem {
    pub fn as_str(self) -> &'static str {
        match self {
            Problem::Longest => "longest",
            Problem::Shortest => "shortest",
            Problem::Maximal => "maximal",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Ambiguous {
    Zero,
    Error,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    /// Input file; standard input when absent or "-".
    #[arg(long)]
    pub input: Option<String>,
    #[arg(long, value_enum, default_value = "fasta")]
    pub format: Format,
    /// Residue mapping for FASTA input [default: gc].
    #[arg(long, value_enum)]
    pub map: Option<Map>,
    /// Lower density bound as C/D.
    #[arg(long, value_name = "C/D")]
    pub theta1: String,
    /// Upper density bound as C/D.
    #[arg(long, value_name = "C/D")]
    pub theta2: String,
    #[arg(long, value_enum, default_value = "longest")]
    pub problem: Problem,
    /// Minimum region length (shortest and maximal only).
    #[arg(long)]
    pub min_len: Option<usize>,
    /// Maximum region length (shortest and maximal only).
    #[arg(long)]
    pub max_len: Option<usize>,
    /// Handling of residues other than A, C, G, T.
    #[arg(long, value_enum, default_value = "zero")]
    pub ambiguous: Ambiguous,
    /// Emit one JSON object per row instead of TSV.
    #[arg(long)]
    pub json: bool,
    /// Print a TSV header row.
    #[arg(long)]
    pub header: bool,
    /// Worker threads for multi-record input.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Use the quadratic reference solvers.
    #[arg(long, hide = true)]
    pub oracle: bool,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Sequence lengths, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "100000,1000000")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Probability of a 1 as C/D.
    #[arg(long, value_name = "C/D", default_value = "1/2")]
    pub p_ones: String,
    #[arg(long, value_name = "C/D", default_value = "2/5")]
    pub theta1: String,
    #[arg(long, value_name = "C/D", default_value = "3/5")]
    pub theta2: String,
    /// Problems to time, comma separated.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "longest")]
    pub problem: Vec<Problem>,
    /// Emit one JSON object per row instead of TSV.
    #[arg(long)]
    pub json: bool,
}

/// A failure with the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Scan(args) => scan::run(&args),
        Command::Bench(args) => bench::run(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
