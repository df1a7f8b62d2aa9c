//! Checks of the quadruple zeta identities, assembled from the symbolic and
//! numeric crates, and the reports the `verify` binary writes.

pub mod anchors;
pub mod config;
pub mod context;
pub mod eval;
pub mod formulas;
pub mod polylog;
pub mod properties;
pub mod regularization;
pub mod report;
pub mod suites;
pub mod symbolic;

pub use config::{Config, WeightRange};
pub use context::Verifier;
pub use formulas::{derive_lemma41, lemma41_printed, Theorem1Mode};
pub use report::{CheckResult, Status};
pub use suites::{run_suites, Suite};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Numeric(#[from] numeric::Error),
    #[error(transparent)]
    Poly(#[from] polyring::Error),
    #[error(transparent)]
    Shuffle(#[from] qshuffle::Error),
    #[error(transparent)]
    Pfrac(#[from] pfrac::Error),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
