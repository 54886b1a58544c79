use serde::{Deserialize, Serialize};

use super::echelon::{null_basis, rank, rref};
use super::{Matrix, Scalar, Vector};
use crate::error::{Error, Result};

/// A linear subspace of `Q^n`, stored by its reduced row echelon basis so that
/// equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Self {
        let m = Matrix::from_rows_with_cols(vectors, ambient_dim);
        let (rows, _) = rref(&m);
        Subspace {
            ambient_dim,
            basis: Matrix::from_rows_with_cols(&rows, ambient_dim),
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: v.len(),
            });
        }
        if v.iter().all(Scalar::is_zero) {
            return Ok(true);
        }
        let mut rows = self.basis.row_vectors();
        rows.push(v.to_vec());
        Ok(rank(&Matrix::from_rows(&rows)) == self.dim())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut rows = self.basis.row_vectors();
        rows.extend(other.basis.row_vectors());
        Ok(Subspace::span(self.ambient_dim, &rows))
    }

    /// Vectors orthogonal (for the standard dot product) to the subspace.
    fn orthogonal(&self) -> Vec<Vector> {
        if self.dim() == 0 {
            return Matrix::identity(self.ambient_dim).row_vectors();
        }
        null_basis(&self.basis)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut constraints = self.orthogonal();
        constraints.extend(other.orthogonal());
        if constraints.is_empty() {
            return Ok(Subspace::full(self.ambient_dim));
        }
        let m = Matrix::from_rows_with_cols(&constraints, self.ambient_dim);
        Ok(Subspace::span(self.ambient_dim, &null_basis(&m)))
    }

    /// `{y : vᵀ·P·y = 0 for all v in self}`.
    pub fn annihilator(&self, pairing: &Matrix) -> Result<Subspace> {
        let n = self.ambient_dim;
        if pairing.rows() != n || pairing.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: pairing.rows(),
            });
        }
        if rank(pairing) != n {
            return Err(Error::SingularPairing);
        }
        if self.dim() == 0 {
            return Ok(Subspace::full(n));
        }
        let constraints = self.basis.mul(pairing);
        Ok(Subspace::span(n, &null_basis(&constraints)))
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, map: &Matrix) -> Subspace {
        let imgs: Vec<Vector> = self
            .basis
            .row_vectors()
            .iter()
            .map(|v| map.apply(v))
            .collect();
        Subspace::span(map.rows(), &imgs)
    }
}

/// Right null space of a matrix.
pub fn kernel(m: &Matrix) -> Subspace {
    Subspace::span(m.cols(), &null_basis(m))
}
