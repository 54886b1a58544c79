use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Scalar, Subspace, Vector};
use crate::error::{Error, Result};

/// The engine's random source: ChaCha8 seeded from a `u64`, reproducible
/// across platforms.
pub type EngineRng = ChaCha8Rng;

/// Default coefficient height for random samples.
pub const DEFAULT_HEIGHT: i64 = 100;

pub fn seeded(seed: u64) -> EngineRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform integer in `[-height, height]`.
pub fn small_int(rng: &mut EngineRng, height: i64) -> i64 {
    rng.gen_range(-height..=height)
}

/// Vector with independent uniform integer coordinates in `[-height, height]`.
pub fn random_vector(rng: &mut EngineRng, n: usize, height: i64) -> Vector {
    (0..n)
        .map(|_| Scalar::from_int(small_int(rng, height)))
        .collect()
}

/// Random nonzero integer combination of the basis rows of `s`.
pub fn random_element(s: &Subspace, rng: &mut EngineRng, height: i64) -> Result<Vector> {
    if s.dim() == 0 {
        return Err(Error::ZeroSubspace);
    }
    let basis = s.basis_vectors();
    loop {
        let coeffs: Vec<i64> = (0..basis.len()).map(|_| small_int(rng, height)).collect();
        if coeffs.iter().all(|&c| c == 0) {
            continue;
        }
        let mut v = vec![Scalar::zero(); s.ambient_dim()];
        for (c, b) in coeffs.iter().zip(&basis) {
            if *c == 0 {
                continue;
            }
            let c = Scalar::from_int(*c);
            for (x, y) in v.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x += &(&c * y);
                }
            }
        }
        return Ok(v);
    }
}
