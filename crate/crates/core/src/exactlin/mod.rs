//! Exact rational linear algebra: scalars, dense matrices, canonical subspaces
//! and seeded sampling.

mod echelon;
mod matrix;
mod sample;
mod scalar;
mod subspace;

pub use echelon::{null_basis, rank, rref};
pub use matrix::{dot, is_zero_vector, ivec, Matrix, Vector};
pub use sample::{random_element, random_vector, seeded, small_int, EngineRng, DEFAULT_HEIGHT};
pub use scalar::Scalar;
pub use subspace::{kernel, Subspace};

/// Annihilator of `s` under the pairing `⟨v, y⟩ = vᵀ·pairing·y`.
pub fn annihilator(s: &Subspace, pairing: &Matrix) -> crate::Result<Subspace> {
    s.annihilator(pairing)
}
