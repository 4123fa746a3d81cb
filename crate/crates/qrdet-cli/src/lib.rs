//! Batch-verification front end: parameter sweeps, report files, and the
//! self-test suite behind the `qrdet` binary.

pub mod report;
pub mod selftest;
pub mod sweep;

/// Errors surfaced by the CLI layer; everything maps to exit code 2 except
/// check failures, which are reported through record statuses.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Domain(#[from] qrdet::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}
