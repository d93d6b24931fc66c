//! Library half of the `hadamard` command-line tool: file formats,
//! certificates, and the command implementations, kept out of `main` so
//! integration tests can drive them directly.

pub mod certificate;
pub mod commands;
pub mod format;

pub use certificate::{certify, sha256_digest, Certificate, CheckResult};
pub use commands::{
    cmd_construct, cmd_convert, cmd_enumerate, cmd_search, cmd_verify, ArrayKind, CliError,
    OutputFormat, SearchOptions, EXIT_CHECK_FAILED, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE,
    MEMORY_BUDGET_VAR,
};
pub use format::{
    parse_brace_notation, parse_sequence_file, parse_table_rows, sequence_file_from_json,
    sequence_file_to_json, write_complex_matrix, write_real_matrix, write_sequence_file,
    write_sequence_file_with_comments, ParseError, SequenceFile,
};
