use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::Arc;

use numeric::MzvCache;

use crate::Error;

/// Settings shared by every check.
#[derive(Clone)]
pub struct Config {
    pub prec_bits: u32,
    pub tol: f64,
    pub ct_tol: f64,
    /// Weights of the numeric checks.
    pub weights: RangeInclusive<u32>,
    /// Highest weight for exhaustive symbolic sweeps.
    pub symbolic_max_weight: u32,
    /// Highest weight for constant-term fits.
    pub ct_max_weight: u32,
    /// Sample points `z` for the polylogarithm identities.
    pub z: Vec<f64>,
    pub seed: u64,
    /// Random rational points per weight in the random-point checks.
    pub random_points: usize,
    pub cache: Option<Arc<MzvCache>>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            prec_bits: 128,
            tol: 1e-10,
            ct_tol: 1e-4,
            weights: 5..=10,
            symbolic_max_weight: 8,
            ct_max_weight: 7,
            z: vec![0.5, 0.8],
            seed: 20130,
            random_points: 5,
            cache: None,
        }
    }
}

impl Config {
    /// Restricts the numeric weights, capping the symbolic and ct sweeps
    /// at the new maximum.
    pub fn with_weights(mut self, weights: RangeInclusive<u32>) -> Self {
        self.symbolic_max_weight = self.symbolic_max_weight.min(*weights.end()).max(4);
        self.ct_max_weight = self.ct_max_weight.min(*weights.end());
        self.weights = weights;
        self
    }
}

/// `7`, `5..10` or `5..=10`, both ends included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightRange(pub RangeInclusive<u32>);

impl FromStr for WeightRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Usage(format!("bad weight range {s:?}"));
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let w = num(s)?;
                (w, w)
            }
        };
        if lo < 4 || hi < lo {
            return Err(bad());
        }
        Ok(WeightRange(lo..=hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_ranges() {
        assert_eq!("5..10".parse::<WeightRange>().unwrap().0, 5..=10);
        assert_eq!("5..=8".parse::<WeightRange>().unwrap().0, 5..=8);
        assert_eq!("7".parse::<WeightRange>().unwrap().0, 7..=7);
        assert!("9..5".parse::<WeightRange>().is_err());
        assert!("3".parse::<WeightRange>().is_err());
        assert!("a..b".parse::<WeightRange>().is_err());
    }

    #[test]
    fn narrowing_weights_caps_the_sweeps() {
        let c = Config::default().with_weights(5..=6);
        assert_eq!(c.symbolic_max_weight, 6);
        assert_eq!(c.ct_max_weight, 6);
        let c = Config::default().with_weights(5..=10);
        assert_eq!(c.symbolic_max_weight, 8);
        assert_eq!(c.ct_max_weight, 7);
    }
}
