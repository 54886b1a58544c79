//! Basic B-semi-invariants of `Sp_{2n} × GL_3` on `2n × 3` matrices.
//!
//! The group acts by `(g, h)·x = (gᵀ)⁻¹ x h⁻¹`, so `(A, H)` in the Lie
//! algebra moves `x` along `−Aᵀx − xH`. Rows are `a_1..a_n, b_n..b_1` and the
//! form is [`omega`].

use crate::error::{Error, Result};
use crate::exactlin::{small_int, EngineRng, Matrix, Scalar};
use crate::repcat::lie::{omega, sp_basis};

/// Sign `ε` with `∂_{ξ·x} f = ε·dλ(ξ)·f` for every basic semi-invariant.
pub const DERIVATIVE_SIGN: i64 = -1;

/// Character of the diagonal Cartan in `ε`-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    /// Coefficients of `ε_1..ε_n` on `diag(a_1..a_n, −a_n..−a_1)`.
    pub sp: Vec<i64>,
    /// Coefficients of `ε'_1..ε'_3` on `diag(h_1, h_2, h_3)`.
    pub gl: [i64; 3],
}

impl Weight {
    /// `Σ ω_k + Σ ω'_l` for the listed `k` and `l` (1-based).
    pub fn fundamentals(n: usize, sp: &[usize], gl: &[usize]) -> Weight {
        let mut w = Weight {
            sp: vec![0; n],
            gl: [0; 3],
        };
        for &k in sp {
            w.sp.iter_mut().take(k).for_each(|c| *c += 1);
        }
        for &l in gl {
            w.gl.iter_mut().take(l).for_each(|c| *c += 1);
        }
        w
    }

    fn eval(&self, a: &Matrix, h: &Matrix) -> Scalar {
        let mut s = Scalar::zero();
        for (k, c) in self.sp.iter().enumerate() {
            s += &(&a[(k, k)] * &Scalar::from_int(*c));
        }
        for (l, c) in self.gl.iter().enumerate() {
            s += &(&h[(l, l)] * &Scalar::from_int(*c));
        }
        s
    }
}

/// Expected weight of `f_i`.
pub fn table_weight(i: usize, n: usize) -> Result<Weight> {
    let w = |sp: &[usize], gl: &[usize]| Weight::fundamentals(n, sp, gl);
    Ok(match i {
        1 => w(&[1], &[1]),
        2 => w(&[2], &[2]),
        3 => w(&[3], &[3]),
        4 => w(&[], &[2]),
        5 => w(&[1], &[3]),
        6 => w(&[2], &[1, 3]),
        _ => return Err(Error::InvalidCase(format!("no semi-invariant f{i}"))),
    })
}

fn det(m: &Matrix) -> Scalar {
    let n = m.rows();
    if n == 1 {
        return m[(0, 0)].clone();
    }
    let mut s = Scalar::zero();
    for j in 0..n {
        let rows: Vec<Vec<Scalar>> = (1..n)
            .map(|i| (0..n).filter(|&c| c != j).map(|c| m[(i, c)].clone()).collect())
            .collect();
        let t = &m[(0, j)] * &det(&Matrix::from_rows(&rows));
        if j % 2 == 0 {
            s += &t;
        } else {
            s -= &t;
        }
    }
    s
}

/// Minor `Δ^{rows}_{cols}` with 1-based indices, in the given order.
fn minor(x: &Matrix, rows: &[usize], cols: &[usize]) -> Scalar {
    let sub: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| x[(r - 1, c - 1)].clone()).collect())
        .collect();
    det(&Matrix::from_rows(&sub))
}

/// `f_i(x)` for `i = 1..6`.
pub fn semiinvariant_eval(i: usize, n: usize, x: &Matrix) -> Result<Scalar> {
    if x.rows() != 2 * n || x.cols() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 2 * n * 3,
            got: x.rows() * x.cols(),
        });
    }
    let om = || x.transpose().mul(&omega(n)).mul(x);
    Ok(match i {
        1 => minor(x, &[1], &[1]),
        2 => minor(x, &[1, 2], &[1, 2]),
        3 => minor(x, &[1, 2, 3], &[1, 2, 3]),
        4 => om()[(0, 1)].clone(),
        5 => (2..=n)
            .map(|k| minor(x, &[1, k, 2 * n - k + 1], &[1, 2, 3]))
            .sum(),
        6 => {
            let o = om();
            &(&o[(0, 1)] * &minor(x, &[1, 2], &[1, 3])) - &(&o[(0, 2)] * &minor(x, &[1, 2], &[1, 2]))
        }
        _ => return Err(Error::InvalidCase(format!("no semi-invariant f{i}"))),
    })
}

/// `Ω'_{31}Δ^{12}_{12} − Ω'_{12}Δ^{12}_{31}`, an equivalent expression for `f_6`.
pub fn f6_alternate(n: usize, x: &Matrix) -> Scalar {
    let o = x.transpose().mul(&omega(n)).mul(x);
    &(&o[(2, 0)] * &minor(x, &[1, 2], &[1, 2])) - &(&o[(0, 1)] * &minor(x, &[1, 2], &[3, 1]))
}

fn is_upper(m: &Matrix) -> bool {
    (0..m.rows()).all(|i| (0..i).all(|j| m[(i, j)].is_zero()))
}

fn random_combination(basis: &[Matrix], rng: &mut EngineRng, height: i64) -> Matrix {
    let mut m = Matrix::zeros(basis[0].rows(), basis[0].cols());
    for b in basis {
        m = m.add(&b.scale(&Scalar::from_int(small_int(rng, height))));
    }
    m
}

/// Exact derivative of a polynomial of degree ≤ 4 along a line, by the
/// five-point stencil.
fn derivative(f: impl Fn(&Matrix) -> Scalar, x: &Matrix, d: &Matrix) -> Scalar {
    let at = |t: i64| f(&x.add(&d.scale(&Scalar::from_int(t))));
    let num = &(&(&at(-2) - &at(2)) + &(&at(1) * &Scalar::from_int(8))) - &(&at(-1) * &Scalar::from_int(8));
    &num / &Scalar::from_int(12)
}

/// Borel subalgebra of `sp_{2n} ⊕ gl_3`: upper-triangular basis elements.
pub fn borel(n: usize) -> (Vec<Matrix>, Vec<Matrix>) {
    let sp: Vec<Matrix> = sp_basis(n).into_iter().filter(is_upper).collect();
    let mut gl = Vec::new();
    for i in 0..3 {
        for j in i..3 {
            let mut e = Matrix::zeros(3, 3);
            e[(i, j)] = Scalar::one();
            gl.push(e);
        }
    }
    (sp, gl)
}

/// Does `∂_{ξ·x} f_i = ε·dλ(ξ)·f_i(x)` hold at `trials` random `(x, ξ)`?
pub fn semiinvariance_check(
    i: usize,
    n: usize,
    weight: &Weight,
    trials: usize,
    rng: &mut EngineRng,
) -> Result<bool> {
    let (bsp, bgl) = borel(n);
    let eps = Scalar::from_int(DERIVATIVE_SIGN);
    for _ in 0..trials {
        let entries = (0..6 * n).map(|_| Scalar::from_int(small_int(rng, 5))).collect();
        let x = Matrix::from_entries(2 * n, 3, entries)?;
        let a = random_combination(&bsp, rng, 3);
        let h = random_combination(&bgl, rng, 3);
        let dir = a.transpose().mul(&x).add(&x.mul(&h)).neg();
        let f = |y: &Matrix| semiinvariant_eval(i, n, y).expect("shape checked");
        let lhs = derivative(f, &x, &dir);
        let rhs = &(&eps * &weight.eval(&a, &h)) * &semiinvariant_eval(i, n, &x)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::seeded;

    #[test]
    fn f1_is_corner_entry() {
        let x = Matrix::from_i64(&[&[7, 1, 2], &[0, 3, 4], &[5, 6, 8], &[9, 1, 1], &[2, 2, 2], &[3, 1, 4]]);
        assert_eq!(semiinvariant_eval(1, 3, &x).unwrap(), Scalar::from_int(7));
        assert!(semiinvariant_eval(1, 2, &x).is_err());
    }

    #[test]
    fn f4_vanishes_on_isotropic_image() {
        // columns in span(a_1, a_2, a_3) are pairwise orthogonal
        let x = Matrix::from_i64(&[&[1, 2, 0], &[3, 1, 1], &[0, 5, 2], &[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert!(semiinvariant_eval(4, 3, &x).unwrap().is_zero());
    }

    #[test]
    fn f6_expressions_agree() {
        let mut rng = seeded(3);
        for _ in 0..20 {
            let e = (0..18).map(|_| Scalar::from_int(small_int(&mut rng, 9))).collect();
            let x = Matrix::from_entries(6, 3, e).unwrap();
            assert_eq!(semiinvariant_eval(6, 3, &x).unwrap(), f6_alternate(3, &x));
        }
    }

    #[test]
    fn wrong_weight_fails() {
        let mut rng = seeded(5);
        let w = Weight::fundamentals(3, &[2], &[1]);
        assert!(!semiinvariance_check(1, 3, &w, 10, &mut rng).unwrap());
    }

    #[test]
    fn table_weights_hold() {
        let mut rng = seeded(7);
        for n in [3, 4] {
            for i in 1..=6 {
                let w = table_weight(i, n).unwrap();
                assert!(semiinvariance_check(i, n, &w, 20, &mut rng).unwrap(), "f{i} n={n}");
            }
        }
    }
}
