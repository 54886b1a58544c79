use rand::Rng;

use crate::error::{Error, Result};
use crate::exactlin::{small_int, EngineRng, Matrix, Scalar};

/// `exp(ξ) = Σ ξ^k / k!` for nilpotent `ξ`.
pub fn exp_nilpotent(xi: &Matrix) -> Result<Matrix> {
    if !xi.is_square() {
        return Err(Error::DimensionMismatch {
            expected: xi.rows(),
            got: xi.cols(),
        });
    }
    let n = xi.rows();
    let mut acc = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    for k in 1..=n {
        term = term.mul(xi).scale(&Scalar::frac(1, k as i64));
        if term.is_zero() {
            return Ok(acc);
        }
        acc = acc.add(&term);
    }
    if term.mul(xi).is_zero() {
        Ok(acc)
    } else {
        Err(Error::NotNilpotent)
    }
}

/// Small nonzero rational `a/b`, `0 < |a| ≤ 3`, `1 ≤ b ≤ 3`.
pub fn small_rational(rng: &mut EngineRng) -> Scalar {
    loop {
        let a = small_int(rng, 3);
        if a != 0 {
            let b = small_int(rng, 2).abs() + 1;
            return Scalar::frac(a, b);
        }
    }
}

/// Product of `steps` factors `exp(c·ξ)` with `ξ` drawn from `nilpotents`.
pub fn random_unipotent(
    dim: usize,
    nilpotents: &[Matrix],
    rng: &mut EngineRng,
    steps: usize,
) -> Matrix {
    let mut g = Matrix::identity(dim);
    if nilpotents.is_empty() {
        return g;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..nilpotents.len());
        let c = small_rational(rng);
        let f = exp_nilpotent(&nilpotents[i].scale(&c)).expect("root vectors are nilpotent");
        g = f.mul(&g);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::seeded;

    #[test]
    fn examples() {
        assert_eq!(exp_nilpotent(&Matrix::zeros(3, 3)).unwrap(), Matrix::identity(3));
        let e12 = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(
            exp_nilpotent(&e12).unwrap(),
            Matrix::from_i64(&[&[1, 1], &[0, 1]])
        );
        assert_eq!(
            exp_nilpotent(&Matrix::identity(2)),
            Err(Error::NotNilpotent)
        );
    }

    #[test]
    fn inverse_pairs() {
        let mut rng = seeded(9);
        let x = Matrix::from_i64(&[&[0, 2, -1, 4], &[0, 0, 3, 1], &[0, 0, 0, 5], &[0, 0, 0, 0]]);
        let c = small_rational(&mut rng);
        let a = exp_nilpotent(&x.scale(&c)).unwrap();
        let b = exp_nilpotent(&x.scale(&-c)).unwrap();
        assert_eq!(a.mul(&b), Matrix::identity(4));
    }
}
