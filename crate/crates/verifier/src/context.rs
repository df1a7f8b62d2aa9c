use numeric::{Float, Rational, Zeta};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Config;
use crate::Result;

/// Configuration plus the memoized zeta evaluator the checks share.
pub struct Verifier {
    pub config: Config,
    zeta: Zeta,
}

impl Verifier {
    pub fn new(config: Config) -> Self {
        let mut zeta = Zeta::new(config.prec_bits);
        if let Some(c) = &config.cache {
            zeta = zeta.with_cache(c.clone());
        }
        Verifier { config, zeta }
    }

    /// Working precision of sums built from the values.
    pub fn prec(&self) -> u32 {
        self.config.prec_bits + 32
    }

    /// Truncation target for polylogarithm sweeps.
    pub fn target(&self) -> f64 {
        2f64.powi(-(self.config.prec_bits as i32))
    }

    pub fn zeta(&self, parts: &[u32]) -> Result<Float> {
        Ok(self.zeta.zeta_of(parts)?.value)
    }

    pub fn star(&self, parts: &[u32]) -> Result<Float> {
        Ok(self.zeta.star_of(parts)?.value)
    }

    pub fn float(&self, r: &Rational) -> Float {
        Float::with_val(self.prec(), r)
    }

    /// A generator seeded from the configured seed and a per-check salt.
    pub fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.config.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

/// A point of `[-2, 2]^4` with small denominators.
pub fn random_point(rng: &mut impl Rng) -> [Rational; 4] {
    std::array::from_fn(|_| {
        let q: i64 = rng.gen_range(1..=6);
        let p: i64 = rng.gen_range(-2 * q..=2 * q);
        Rational::from((p, q))
    })
}

pub fn point_string(x: &[Rational]) -> String {
    let parts: Vec<String> = x.iter().map(|r| r.to_string()).collect();
    format!("({})", parts.join(","))
}
