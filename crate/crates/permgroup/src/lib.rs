//! Permutations of small symmetric groups, generated subgroups, right cosets,
//! signed multisets and the subscript action `sigma . l_{j1...jm} = l_{sigma(j1)...sigma(jm)}`.
//!
//! Composition is right to left, `(s * r)(i) = s(r(i))`, and `H sigma` is the
//! right coset `{h * sigma}`.

mod identities;
pub mod named;
mod perm;
mod set;
mod subscript;
mod table;

pub use identities::{
    verify_c_cosets, verify_congruences, verify_coset_identities, verify_coset_products,
    verify_transversals,
};
pub use perm::Perm;
pub use set::{generate, is_transversal, right_coset, PermSet, SignedMultiset};
pub use subscript::{act_on_subscript_tuple, format_tuple, parse_tuple, Subscript};
pub use table::{verify_action_tables, CosetTable, TABLES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("bad cycle notation: {0:?}")]
    BadCycleNotation(String),
    #[error("bad subscript: {0}")]
    BadSubscript(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Outcome of one exact check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Mismatch description; empty or informational when passing.
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}
