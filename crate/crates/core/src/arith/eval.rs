use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ring::Ctx;

/// Bound on random numerators and denominators for identity pre-checks.
pub const SAMPLE_BOUND: i64 = 10_000;

/// Seeded source of random evaluation points.
#[derive(Clone, Debug)]
pub struct PointSampler {
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        PointSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rational(&mut self) -> BigRational {
        let n = self.rng.gen_range(1..=SAMPLE_BOUND);
        let d = self.rng.gen_range(1..=SAMPLE_BOUND);
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// One value per generator of `ctx`.
    pub fn point(&mut self, ctx: &Ctx) -> Vec<BigRational> {
        (0..ctx.len()).map(|_| self.rational()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::RingCtx;

    #[test]
    fn same_seed_same_point() {
        let c = RingCtx::new(["a", "b", "c"]).unwrap();
        let p1 = PointSampler::new(7).point(&c);
        let p2 = PointSampler::new(7).point(&c);
        assert_eq!(p1, p2);
        let bound = BigRational::from_integer(BigInt::from(SAMPLE_BOUND));
        assert!(p1.iter().all(|v| *v > BigRational::from_integer(0.into()) && *v <= bound));
    }
}
