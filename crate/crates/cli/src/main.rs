use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hadamard_cli::{
    cmd_construct, cmd_convert, cmd_enumerate, cmd_search, cmd_verify, ArrayKind, OutputFormat,
    SearchOptions, EXIT_OK,
};

#[derive(Parser)]
#[command(
    name = "hadamard",
    version,
    about = "Verify, construct, and search Hadamard matrices built from circulant blocks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ArrayArg {
    /// Goethals-Seidel array: real, order 4p
    Gs,
    /// Kharaghani-Seberry array: complex, order 2p, pairwise amicable blocks
    Ks,
    /// Two-symmetric-block array: complex, order 2p
    T4,
}

impl From<ArrayArg> for ArrayKind {
    fn from(value: ArrayArg) -> Self {
        match value {
            ArrayArg::Gs => ArrayKind::Gs,
            ArrayArg::Ks => ArrayKind::Ks,
            ArrayArg::T4 => ArrayKind::T4,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum FormatArg {
    #[default]
    Text,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(value: FormatArg) -> Self {
        match value {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check a 4-sequence file and print a JSON certificate
    Verify {
        /// Sequence file (canonical format)
        path: PathBuf,
    },
    /// Build a Hadamard matrix from a verified quadruple file
    Construct {
        /// Sequence file (canonical format)
        path: PathBuf,
        /// Which array to use
        #[arg(long, value_enum)]
        array: ArrayArg,
        /// Output file
        #[arg(short, long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Run the meet-in-the-middle search for quadruples
    Search {
        /// Odd order of the circulant blocks
        #[arg(long)]
        p: usize,
        /// Row sums "sigma_a,sigma_b,sigma_c,sigma_d"
        #[arg(long, value_delimiter = ',', num_args = 4, allow_negative_numbers = true)]
        sigmas: Vec<i32>,
        /// Norm cap on stored autocorrelation sums
        #[arg(long, default_value_t = 1200)]
        bound: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Stop after this many trials (absolute trial counter)
        #[arg(long)]
        max_trials: Option<u64>,
        /// Stop after this many hits (default 1; 0 means unlimited)
        #[arg(long, default_value_t = 1)]
        max_hits: u64,
        /// Additive slack for the spectral bound filter
        #[arg(long, default_value_t = 1e-9)]
        dft_slack: f64,
        /// Store one record per distinct autocorrelation sum
        #[arg(long)]
        dedup_sigma: bool,
        /// Probe every (c, d) pair once instead of sampling
        #[arg(long)]
        exhaustive: bool,
        /// Build the table, print its statistics as JSON, and exit
        #[arg(long)]
        stats_only: bool,
        /// Directory for hit files and certificates
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// Resume from a checkpoint file
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Write a checkpoint file at the end of the run
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// List admissible row-sum decompositions for an order
    Enumerate {
        #[arg(long)]
        p: usize,
    },
    /// Convert brace notation or a 0/1 table to the canonical format
    Convert {
        path: PathBuf,
        /// Read 0 entries as -1 (for 0/1 tables)
        #[arg(long)]
        zeros_as_minus_ones: bool,
        #[arg(short, long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { path } => cmd_verify(&path),
        Command::Construct {
            path,
            array,
            out,
            format,
        } => cmd_construct(&path, array.into(), &out, format.into()),
        Command::Search {
            p,
            sigmas,
            bound,
            seed,
            workers,
            max_trials,
            max_hits,
            dft_slack,
            dedup_sigma,
            exhaustive,
            stats_only,
            out_dir,
            resume,
            checkpoint,
        } => {
            let sigmas: [i32; 4] = sigmas.try_into().expect("clap enforces four values");
            cmd_search(&SearchOptions {
                p,
                sigmas,
                bound,
                seed,
                workers,
                max_trials,
                max_hits: (max_hits > 0).then_some(max_hits),
                dft_slack,
                dedup_sigma,
                exhaustive,
                stats_only,
                out_dir,
                resume,
                checkpoint,
            })
        }
        Command::Enumerate { p } => cmd_enumerate(p),
        Command::Convert {
            path,
            zeros_as_minus_ones,
            out,
            format,
        } => cmd_convert(&path, zeros_as_minus_ones, &out, format.into()),
    };
    match result {
        Ok(()) => ExitCode::from(EXIT_OK as u8),
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error.exit_code() as u8)
        }
    }
}
