//! Command implementations. Each returns `Ok(())` for exit code 0 or a
//! [`CliError`] that main maps onto the exit-code contract:
//! 0 = all checks passed, 1 = a check or construction precondition failed,
//! 2 = usage or parse error, 3 = resource exhaustion.

use std::fs;
use std::io::Write;
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};

use hadamard::{
    enumerate_sigma_decompositions, is_complex_hadamard, is_real_hadamard, Checkpoint, Error,
    LookupTable, ProbeMode, Quadruple, SearchConfig, SearchEngine, SearchHit,
    SigmaDecomposition,
};

use crate::certificate::{certify, sha256_digest};
use crate::format::{
    complex_matrix_to_json, parse_brace_notation, parse_sequence_file, parse_table_rows,
    real_matrix_to_json, sequence_file_to_json, write_complex_matrix, write_real_matrix,
    write_sequence_file, write_sequence_file_with_comments, ParseError, SequenceFile,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Environment variable capping the lookup-table memory estimate, in bytes.
pub const MEMORY_BUDGET_VAR: &str = "HADAMARD_MEMORY_BUDGET";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error("{0}")]
    Usage(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("{0}")]
    Resource(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::CheckFailed(_) => EXIT_CHECK_FAILED,
            CliError::Resource(_) => EXIT_RESOURCE,
        }
    }

    fn parse(path: &Path, source: ParseError) -> Self {
        CliError::Parse {
            path: path.to_path_buf(),
            source,
        }
    }

    fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }
}

/// Maps library errors from configuration and table building onto the exit
/// contract: budget overruns are resource errors, everything else is bad
/// usage.
fn config_error(error: Error) -> CliError {
    match error {
        Error::MemoryBudget {
            needed_bytes,
            budget_bytes,
            partial,
        } => CliError::Resource(format!(
            "table needs about {needed_bytes} bytes, budget is {budget_bytes}; \
             partial statistics: {}",
            serde_json::to_string(&partial).expect("serializable")
        )),
        other => CliError::Usage(other.to_string()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrayKind {
    /// Goethals–Seidel, real, order 4p.
    Gs,
    /// Kharaghani–Seberry, complex, order 2p.
    Ks,
    /// Two-symmetric-block array, complex, order 2p.
    T4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

fn read_to_string(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

fn quadruple_from_file(path: &Path) -> Result<(Quadruple, String), CliError> {
    let text = read_to_string(path)?;
    let file = parse_sequence_file(&text).map_err(|e| CliError::parse(path, e))?;
    if file.sequences.len() != 4 {
        return Err(CliError::parse(
            path,
            ParseError {
                line: 1,
                column: 1,
                message: format!("expected exactly 4 sequences, found {}", file.sequences.len()),
            },
        ));
    }
    let [a, b, c, d]: [hadamard::Sequence; 4] =
        file.sequences.try_into().expect("length checked above");
    let quadruple = Quadruple::new(a, b, c, d).map_err(|e| {
        CliError::parse(
            path,
            ParseError {
                line: 1,
                column: 1,
                message: e.to_string(),
            },
        )
    })?;
    Ok((quadruple, sha256_digest(text.as_bytes())))
}

/// Verifies a 4-block sequence file and prints the certificate as JSON on
/// standard output.
pub fn cmd_verify(path: &Path) -> Result<(), CliError> {
    let (quadruple, digest) = quadruple_from_file(path)?;
    let certificate = certify(&quadruple, digest);
    print!("{}", certificate.to_json());
    if certificate.pass {
        Ok(())
    } else {
        Err(CliError::CheckFailed(
            certificate.failing_checks().join(", "),
        ))
    }
}

/// Builds the requested array from a verified quadruple file, re-checks the
/// Hadamard property, and writes the matrix.
pub fn cmd_construct(
    path: &Path,
    array: ArrayKind,
    out: &Path,
    format: OutputFormat,
) -> Result<(), CliError> {
    let (q, _) = quadruple_from_file(path)?;
    let (contents, order, kind) = match array {
        ArrayKind::Gs => {
            let h = hadamard::goethals_seidel(q.a(), q.b(), q.c(), q.d())
                .map_err(|e| CliError::CheckFailed(e.to_string()))?;
            if !is_real_hadamard(&h) {
                return Err(CliError::CheckFailed(
                    "constructed matrix failed re-verification".to_string(),
                ));
            }
            let contents = match format {
                OutputFormat::Text => write_real_matrix(&h),
                OutputFormat::Json => real_matrix_to_json(&h),
            };
            (contents, h.order(), "real")
        }
        ArrayKind::Ks | ArrayKind::T4 => {
            let k = match array {
                ArrayKind::Ks => hadamard::kharaghani_seberry(q.a(), q.b(), q.c(), q.d()),
                _ => hadamard::two_symmetric_array(q.a(), q.b(), q.c(), q.d()),
            }
            .map_err(|e| CliError::CheckFailed(e.to_string()))?;
            if !is_complex_hadamard(&k) {
                return Err(CliError::CheckFailed(
                    "constructed matrix failed re-verification".to_string(),
                ));
            }
            let contents = match format {
                OutputFormat::Text => write_complex_matrix(&k),
                OutputFormat::Json => complex_matrix_to_json(&k),
            };
            (contents, k.order(), "complex")
        }
    };
    write_file(out, &contents)?;
    eprintln!("wrote {kind} Hadamard matrix of order {order} to {}", out.display());
    Ok(())
}

/// Prints every admissible row-sum decomposition for order `p`, one
/// space-separated tuple per line.
pub fn cmd_enumerate(p: usize) -> Result<(), CliError> {
    let list = enumerate_sigma_decompositions(p).map_err(config_error)?;
    let mut stdout = std::io::stdout().lock();
    for decomposition in list {
        writeln!(stdout, "{decomposition}").map_err(|e| CliError::io(Path::new("stdout"), e))?;
    }
    Ok(())
}

/// Converts brace-notation or a 0/1 table into the canonical sequence file
/// format.
pub fn cmd_convert(
    path: &Path,
    zeros_as_minus_ones: bool,
    out: &Path,
    format: OutputFormat,
) -> Result<(), CliError> {
    let text = read_to_string(path)?;
    let rows = if text.trim_start().starts_with('{') {
        parse_brace_notation(&text)
    } else {
        parse_table_rows(&text, zeros_as_minus_ones)
    }
    .map_err(|e| CliError::parse(path, e))?;
    let mut sequences = Vec::with_capacity(rows.len());
    for row in rows {
        sequences.push(
            hadamard::Sequence::new(row)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?,
        );
    }
    let file = SequenceFile::new(sequences);
    let contents = match format {
        OutputFormat::Text => write_sequence_file(&file),
        OutputFormat::Json => sequence_file_to_json(&file),
    };
    write_file(out, &contents)?;
    Ok(())
}

/// Everything `cmd_search` needs beyond the library configuration.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub p: usize,
    pub sigmas: [i32; 4],
    pub bound: u64,
    pub seed: u64,
    pub workers: usize,
    pub max_trials: Option<u64>,
    pub max_hits: Option<u64>,
    pub dft_slack: f64,
    pub dedup_sigma: bool,
    pub exhaustive: bool,
    pub stats_only: bool,
    pub out_dir: PathBuf,
    pub resume: Option<PathBuf>,
    pub checkpoint: Option<PathBuf>,
}

fn build_config(options: &SearchOptions) -> Result<SearchConfig, CliError> {
    let sigma = SigmaDecomposition::new(options.p, options.sigmas).map_err(config_error)?;
    let mut config = SearchConfig::new(options.p, sigma);
    config.bound = options.bound;
    config.seed = options.seed;
    config.workers = options.workers;
    config.max_trials = options.max_trials;
    config.dft_slack = options.dft_slack;
    config.dedup_sigma = options.dedup_sigma;
    config.probe_mode = if options.exhaustive {
        ProbeMode::Exhaustive
    } else {
        ProbeMode::Random
    };
    if let Ok(raw) = std::env::var(MEMORY_BUDGET_VAR) {
        let bytes = raw.parse::<u64>().map_err(|_| {
            CliError::Usage(format!("{MEMORY_BUDGET_VAR} must be a byte count, got '{raw}'"))
        })?;
        config.memory_budget = Some(bytes);
    }
    config.validate().map_err(config_error)?;
    Ok(config)
}

fn write_hit_files(
    out_dir: &Path,
    ordinal: u64,
    config: &SearchConfig,
    hit: &SearchHit,
) -> Result<PathBuf, CliError> {
    fs::create_dir_all(out_dir).map_err(|e| CliError::io(out_dir, e))?;
    let q = &hit.quadruple;
    let file = SequenceFile::new(vec![
        q.a().clone(),
        q.b().clone(),
        q.c().clone(),
        q.d().clone(),
    ]);
    let sums = q.row_sums();
    let comments = vec![
        format!("sigma={},{},{},{}", sums[0], sums[1], sums[2], sums[3]),
        format!("type={}", hadamard::classify_symmetry(q).label()),
        format!("seed={} trial={}", config.seed, hit.trial),
    ];
    let text = write_sequence_file_with_comments(&file, &comments);
    let seq_path = out_dir.join(format!("hit-{ordinal:04}.seq"));
    write_file(&seq_path, &text)?;

    let certificate = certify(q, sha256_digest(text.as_bytes()));
    let cert_path = out_dir.join(format!("hit-{ordinal:04}.cert.json"));
    write_file(&cert_path, &certificate.to_json())?;
    if !certificate.pass {
        return Err(CliError::CheckFailed(format!(
            "emitted hit failed certification: {}",
            certificate.failing_checks().join(", ")
        )));
    }
    Ok(seq_path)
}

fn load_checkpoint(path: &Path, config: &SearchConfig) -> Result<Checkpoint, CliError> {
    let text = read_to_string(path)?;
    let checkpoint: Checkpoint = serde_json::from_str(&text).map_err(|e| {
        CliError::parse(
            path,
            ParseError {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            },
        )
    })?;
    checkpoint
        .matches(config)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(checkpoint)
}

fn store_checkpoint(path: &Path, checkpoint: &Checkpoint) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(checkpoint).expect("serializable");
    text.push('\n');
    write_file(path, &text)
}

/// Runs the meet-in-the-middle search: hits land in `out_dir` as sequence
/// files with certificates, progress streams to standard error as JSON
/// lines, and an optional checkpoint enables resuming.
pub fn cmd_search(options: &SearchOptions) -> Result<(), CliError> {
    let config = build_config(options)?;

    if options.stats_only {
        let table = LookupTable::build(&config).map_err(config_error)?;
        let mut json = serde_json::to_string_pretty(table.stats()).expect("serializable");
        json.push('\n');
        print!("{json}");
        return Ok(());
    }

    let start = match &options.resume {
        Some(path) => load_checkpoint(path, &config)?,
        None => Checkpoint::new(&config, 0, 0),
    };

    let engine = SearchEngine::build(config.clone()).map_err(config_error)?;
    let mut hit_ordinal = start.hits;
    let mut failure = None;
    let summary = engine.run(
        start.next_trial,
        |hit| {
            hit_ordinal += 1;
            match write_hit_files(&options.out_dir, hit_ordinal, &config, &hit) {
                Ok(path) => eprintln!(
                    "{}",
                    serde_json::json!({
                        "event": "hit",
                        "ordinal": hit_ordinal,
                        "trial": hit.trial,
                        "path": path.display().to_string(),
                    })
                ),
                Err(error) => {
                    failure = Some(error);
                    return ControlFlow::Break(());
                }
            }
            if options.max_hits.is_some_and(|limit| hit_ordinal >= limit) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        },
        |progress| {
            eprintln!(
                "{}",
                serde_json::to_string(progress).expect("serializable")
            );
        },
    );
    if let Some(error) = failure {
        return Err(error);
    }

    if let Some(path) = &options.checkpoint {
        store_checkpoint(path, &Checkpoint::new(&config, summary.next_trial, hit_ordinal))?;
    }
    eprintln!(
        "{}",
        serde_json::json!({
            "event": "done",
            "trials": summary.trials,
            "hits": summary.hits,
            "elapsed_secs": summary.elapsed.as_secs_f64(),
            "stop": format!("{:?}", summary.stop),
        })
    );
    Ok(())
}
