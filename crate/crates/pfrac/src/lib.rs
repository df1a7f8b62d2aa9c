//! Sums of reciprocal products of subset sums `m_S = sum_{j in S} m_j`,
//! optionally with polynomial numerators in `y_1, ..., y_4`, and an exact
//! test for their equality as rational functions.

mod frac;
mod identities;

pub use frac::{
    equal_as_rational_functions, prescreen, shift_expand, FracSum, FracTerm, Verdict,
};
pub use identities::{
    double_double, expansions, four_singles, linear, single_single, stated_rhs,
    substituted_rhs, triple_single, verify_prop22_expansions, verify_substitutions, ArgTuple,
    Expansion, Linear, TupleSum,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("evaluation point hits a pole")]
    Pole,
    #[error("integer overflow while clearing denominators")]
    Overflow,
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
}

pub type Result<T> = std::result::Result<T, Error>;
