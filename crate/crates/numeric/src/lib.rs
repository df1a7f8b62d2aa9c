//! High-precision multiple polylogarithms, multiple zeta values and their
//! regularized versions, constant-term extraction near `z = 1`, and a
//! persistent value cache.
//!
//! All series are summed by one routine that walks the summation variable
//! once and updates every nested partial sum along a trie of suffixes.

mod cache;
mod ct;
mod li;
mod mzv;
mod sweep;

pub use cache::{MzvCache, Record};
pub use ct::{ct_extract, ct_fit_many, CtFit, CtSchedule};
pub use li::{eval_li, eval_li_many, eval_param_sum, monomial, ParamKind, PatternKind, MAX_TERMS};
pub use mzv::{eval_mzv, star_combination, star_value, MzvValue, Zeta};
pub use sweep::{sweep, terms_needed, Bounded, SweepWord};

pub use rug::{Float, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("precision infeasible: {0}")]
    PrecisionInfeasible(String),
    #[error("ill-conditioned fit: {0}")]
    IllConditioned(String),
    #[error("index {0} is not admissible")]
    NotAdmissible(String),
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("cache i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
