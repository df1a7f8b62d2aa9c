//! Short names of the results each check id belongs to, recorded with every
//! report line.

pub const SUM_FORMULA: &str = "sum formula for quadruple zeta values";
pub const THEOREM1: &str = "parameterized sum formula for quadruple zeta values";
pub const THEOREM2: &str = "weighted sum formulas with powers of 2 and 3";
pub const LEMMA41: &str = "0/1 substitutions into the parameterized sum formula";
pub const REMARK41: &str = "weighted relations behind the 2-and-3-power formula";
pub const PROP21: &str = "cyclic harmonic identity for ladder polylogarithms";
pub const PROP22: &str = "shuffle identities from partial fraction expansions";
pub const PROP23: &str = "constant terms of parameterized polylogarithm sums";
pub const LEMMA23: &str = "limits of polylogarithm differences at z = 1";
pub const SHUFFLE: &str = "shuffle relation for Li(1,...,1)";
pub const LEMMA21: &str = "harmonic product expansions of ladder polylogarithms";
pub const LEMMA22: &str = "cyclic sums of harmonic product expansions";
pub const LEMMA3X: &str = "reduction of the regularized identity to admissible sums";
pub const REMARK21: &str = "cyclic sum of quadruple zeta values and symmetric sums";
pub const TABLE1: &str = "right coset tables of the symmetric group S4";
pub const COSETS: &str = "coset and transversal identities in S4";
pub const PROPERTIES: &str = "algebraic laws of the underlying structures";
