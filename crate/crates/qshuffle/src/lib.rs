//! Formal multiple polylogarithm symbols `Li(k1, ..., kn; z^e1, ..., z^en)`,
//! their quasi-shuffle (harmonic) product, and exact checks of the harmonic
//! relations between products of ladder polylogarithms.
//!
//! Exponents are either integers or formal sums `l_{j1...jm}` of four base
//! symbols, so that one formal comparison covers every index at once.

mod harmonic;
mod li;
mod symbol;
mod zeta;

pub use harmonic::{
    cyclic_identity_sides, cyclic_param_blocks, cyclic_rhs_pattern, expand_blocks, lemma21_lhs,
    lemma21_rhs, lemma22_lhs, lemma22_rhs, lemma22_summing_set, verify_cyclic_identity,
    verify_cyclic_param_identity, verify_lemma21, verify_lemma21_direct,
    verify_lemma21_exhaustive, verify_lemma21_formal, verify_lemma22, verify_lemma22_formal,
    ParamBlock, ParamFactor, Part,
};
pub use li::{li, li_int, stuffle, FormalLiSum, Letter, LiSymbol};
pub use symbol::{Exponent, SymbolSum};
pub use zeta::{
    cyclic_identity_at_one, cyclic_sum_relation, six_transversal, symmetric_sum_depth2,
    symmetric_sum_depth3, symmetric_sum_depth4, symmetric_sum_rule, verify_cyclic_sum_relation,
    ZetaMonomial, ZetaPoly,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("word has {word} entries but the pattern has {pattern}")]
    Arity { word: usize, pattern: usize },
    #[error("z-pattern {0} is not nondecreasing")]
    DecreasingPattern(String),
    #[error("bad symbol {0:?}")]
    BadSymbol(String),
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
}

pub type Result<T> = std::result::Result<T, Error>;
