//! `g_2` inside `so_7`, cut out as the stabiliser of the octonionic 3-form
//! `φ(x, y, z) = ⟨xy, z⟩` on the trace-zero split octonions.

use super::octonion::{self as oct, Oct};
use crate::error::{Error, Result};
use crate::exactlin::{null_basis, Matrix, Scalar};

fn combo(coeffs: &[Scalar], basis: &[Oct]) -> Oct {
    let mut acc = oct::zero();
    for (c, b) in coeffs.iter().zip(basis) {
        if !c.is_zero() {
            acc = oct::add(&acc, &oct::scale(b, c));
        }
    }
    acc
}

/// Gram matrix of the polar norm on the 7-dimensional imaginary basis.
pub fn quadratic_form() -> Matrix {
    let b = oct::imaginary_basis();
    let mut m = Matrix::zeros(7, 7);
    for i in 0..7 {
        for j in 0..7 {
            m[(i, j)] = oct::polar(&b[i], &b[j]);
        }
    }
    m
}

/// `φ(e_i, e_j, e_k)` on the imaginary basis.
pub fn three_form() -> Vec<Scalar> {
    let b = oct::imaginary_basis();
    let mut out = Vec::with_capacity(343);
    for i in 0..7 {
        for j in 0..7 {
            let p = oct::mul(&b[i], &b[j]);
            for k in 0..7 {
                out.push(oct::polar(&p, &b[k]));
            }
        }
    }
    out
}

/// Basis of `so_7` for [`quadratic_form`].
fn so7() -> Vec<Matrix> {
    let q = quadratic_form();
    // unknown ξ (49 entries); condition ξᵀQ + Qξ = 0
    let mut rows = Vec::new();
    for a in 0..7 {
        for b in 0..7 {
            let mut row = vec![Scalar::zero(); 49];
            for k in 0..7 {
                // (ξᵀQ)_{ab} = Σ_k ξ_{ka} Q_{kb};  (Qξ)_{ab} = Σ_k Q_{ak} ξ_{kb}
                row[k * 7 + a] += &q[(k, b)];
                row[k * 7 + b] += &q[(a, k)];
            }
            rows.push(row);
        }
    }
    null_basis(&Matrix::from_rows(&rows))
        .into_iter()
        .map(|v| Matrix::from_entries(7, 7, v).expect("7x7"))
        .collect()
}

/// Generators of `g_2` acting on the 7 imaginary coordinates.
pub fn g2_in_so7() -> Result<Vec<Matrix>> {
    let so = so7();
    let phi = three_form();
    let at = |i: usize, j: usize, k: usize| &phi[(i * 7 + j) * 7 + k];
    // (ξ·φ)(e_i,e_j,e_k) = φ(ξe_i,e_j,e_k) + φ(e_i,ξe_j,e_k) + φ(e_i,e_j,ξe_k)
    let mut rows = Vec::new();
    for i in 0..7 {
        for j in 0..7 {
            for k in 0..7 {
                let row: Vec<Scalar> = so
                    .iter()
                    .map(|x| {
                        let mut s = Scalar::zero();
                        for l in 0..7 {
                            s += &(&x[(l, i)] * at(l, j, k));
                            s += &(&x[(l, j)] * at(i, l, k));
                            s += &(&x[(l, k)] * at(i, j, l));
                        }
                        s
                    })
                    .collect();
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = null_basis(&Matrix::from_rows(&rows));
    if kernel.len() != 14 {
        return Err(Error::Internal(format!(
            "g2 kernel has dimension {}, expected 14",
            kernel.len()
        )));
    }
    Ok(kernel
        .iter()
        .map(|c| {
            let mut acc = Matrix::zeros(7, 7);
            for (coef, x) in c.iter().zip(&so) {
                if !coef.is_zero() {
                    acc = acc.add(&x.scale(coef));
                }
            }
            acc
        })
        .collect())
}

/// Imaginary coordinates to an octonion.
pub fn to_octonion(v: &[Scalar]) -> Oct {
    combo(v, &oct::imaginary_basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::lie::{is_bracket_closed, span_dim};

    #[test]
    fn dimension_fourteen() {
        let g = g2_in_so7().unwrap();
        assert_eq!(span_dim(&g), 14);
        assert!(is_bracket_closed(&g));
        let q = quadratic_form();
        for x in &g {
            assert!(x.transpose().mul(&q).add(&q.mul(x)).is_zero());
        }
    }

    #[test]
    fn form_is_nondegenerate() {
        assert_eq!(quadratic_form().rank(), 7);
        assert_eq!(so7().len(), 21);
    }
}
