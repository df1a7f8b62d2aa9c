//! Exact polynomials in `x1..x4` with the S4 action, and the coefficient
//! polynomials of the four-parameter sum formula for `zeta(l1, l2, l3, l4)`.

mod lemmas;
mod patterns;
mod poly;

use indexword::IndexWord;

pub use lemmas::{
    param_sum_formal, verify_bracket_merges, verify_remainder_cancellations, verify_star_split,
};
pub use patterns::{
    assembled_lhs, lhs_is_fixed_by, nu_bracket, nu_rho_bracket, rhs_multiplier,
    split_pair_bracket, split_rho_bracket, starred_patterns, substituted_combination,
    theorem1_coefficient, theorem_patterns, tuple, ArgPatternSum,
};
pub use poly::{complete_homogeneous, subset_power, Exps, MultiPoly};
pub use rug::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("index {0} does not have depth 4")]
    Depth(IndexWord),
    #[error("index {0} is not admissible")]
    NotAdmissible(IndexWord),
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
}

pub type Result<T> = std::result::Result<T, Error>;
