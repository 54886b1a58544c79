//! Classical Lie algebra bases and their actions on matrix coordinates.
//!
//! A matrix space `rows × cols` is flattened row-major, so coordinate
//! `(i, j)` sits at index `i * cols + j`.

use crate::exactlin::{Matrix, Scalar};

/// Elementary matrix `E_ij` of size `n`.
pub fn elementary(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = Scalar::one();
    m
}

/// Anti-diagonal `n × n` matrix with ones.
pub fn antidiag(n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        m[(i, n - 1 - i)] = Scalar::one();
    }
    m
}

/// The symplectic form `[[0, J], [-J, 0]]` on `C^{2n}`, `J` anti-diagonal.
pub fn omega(n: usize) -> Matrix {
    let j = antidiag(n);
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for a in 0..n {
        for b in 0..n {
            m[(a, n + b)] = j[(a, b)].clone();
            m[(n + a, b)] = -&j[(a, b)];
        }
    }
    m
}

pub fn gl_basis(n: usize) -> Vec<Matrix> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            out.push(elementary(n, i, j));
        }
    }
    out
}

/// Traceless part of `gl_n`: off-diagonal `E_ij` and `E_ii − E_{i+1,i+1}`.
pub fn sl_basis(n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(elementary(n, i, j));
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        out.push(elementary(n, i, i).sub(&elementary(n, i + 1, i + 1)));
    }
    out
}

/// `sp_{2n}` for [`omega`]: `−Ω(E_ij + E_ji)`, `i ≤ j`.
pub fn sp_basis(n: usize) -> Vec<Matrix> {
    let om = omega(n).neg();
    let d = 2 * n;
    let mut out = Vec::new();
    for i in 0..d {
        for j in i..d {
            let s = elementary(d, i, j).add(&elementary(d, j, i));
            out.push(om.mul(&s));
        }
    }
    out
}

/// `so_n` for the anti-diagonal symmetric form `S`: `S(E_ij − E_ji)`, `i < j`.
pub fn so_basis(n: usize) -> Vec<Matrix> {
    let s = antidiag(n);
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(s.mul(&elementary(n, i, j).sub(&elementary(n, j, i))));
        }
    }
    out
}

/// `x ↦ a·x` on `rows × cols` matrices (`a` is `rows × rows`).
pub fn left_action(a: &Matrix, cols: usize) -> Matrix {
    let rows = a.rows();
    let d = rows * cols;
    let mut m = Matrix::zeros(d, d);
    for i in 0..rows {
        for k in 0..rows {
            let v = &a[(i, k)];
            if v.is_zero() {
                continue;
            }
            for j in 0..cols {
                m[(i * cols + j, k * cols + j)] = v.clone();
            }
        }
    }
    m
}

/// `x ↦ x·b` on `rows × cols` matrices (`b` is `cols × cols`).
pub fn right_action(b: &Matrix, rows: usize) -> Matrix {
    let cols = b.rows();
    let d = rows * cols;
    let mut m = Matrix::zeros(d, d);
    for i in 0..rows {
        for k in 0..cols {
            for j in 0..cols {
                let v = &b[(k, j)];
                if !v.is_zero() {
                    m[(i * cols + j, i * cols + k)] = v.clone();
                }
            }
        }
    }
    m
}

/// Reshape a flat coordinate vector into a `rows × cols` matrix.
pub fn reshape(v: &[Scalar], rows: usize, cols: usize) -> Matrix {
    Matrix::from_entries(rows, cols, v.to_vec()).expect("reshape size")
}

/// Index pairs `i < j` (strict) or `i ≤ j` in lexicographic order.
pub fn pairs(n: usize, strict: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            if !strict || i < j {
                out.push((i, j));
            }
        }
    }
    out
}

/// Action of `a ∈ gl_n` on upper-triangular coordinates of `S²` (`strict =
/// false`) or `∧²` (`strict = true`): `x ↦ a x + x aᵀ`.
pub fn square_action(a: &Matrix, strict: bool) -> Matrix {
    let n = a.rows();
    let idx = pairs(n, strict);
    let d = idx.len();
    let sign = if strict { -1 } else { 1 };
    let mut m = Matrix::zeros(d, d);
    for (col, &(k, l)) in idx.iter().enumerate() {
        // basis element X = E_kl ± E_lk (just E_kk when k = l)
        let mut x = Matrix::zeros(n, n);
        x[(k, l)] = Scalar::one();
        if k != l {
            x[(l, k)] = Scalar::from_int(sign);
        }
        let y = a.mul(&x).add(&x.mul(&a.transpose()));
        for (row, &(i, j)) in idx.iter().enumerate() {
            m[(row, col)] = y[(i, j)].clone();
        }
    }
    m
}

/// Rebuild the full `n × n` symmetric (or skew) matrix from upper coordinates.
pub fn unpack_square(v: &[Scalar], n: usize, strict: bool) -> Matrix {
    let mut x = Matrix::zeros(n, n);
    for (c, &(i, j)) in v.iter().zip(pairs(n, strict).iter()) {
        x[(i, j)] = c.clone();
        if i != j {
            x[(j, i)] = if strict { -c } else { c.clone() };
        }
    }
    x
}

/// Dimension of the linear span of a family of matrices.
pub fn span_dim(gens: &[Matrix]) -> usize {
    if gens.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Scalar>> = gens.iter().map(|g| g.entries().to_vec()).collect();
    Matrix::from_rows(&rows).rank()
}

/// Does the span contain every commutator of its members?
pub fn is_bracket_closed(gens: &[Matrix]) -> bool {
    let base = span_dim(gens);
    let mut rows: Vec<Vec<Scalar>> = gens.iter().map(|g| g.entries().to_vec()).collect();
    for (a, ga) in gens.iter().enumerate() {
        for gb in &gens[a + 1..] {
            rows.push(ga.bracket(gb).entries().to_vec());
        }
    }
    Matrix::from_rows(&rows).rank() == base
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(span_dim(&sp_basis(2)), 10);
        assert_eq!(span_dim(&so_basis(5)), 10);
        assert_eq!(span_dim(&sl_basis(3)), 8);
    }

    #[test]
    fn sp_preserves_omega() {
        let om = omega(2);
        for x in sp_basis(2) {
            assert!(x.transpose().mul(&om).add(&om.mul(&x)).is_zero());
        }
        assert!(is_bracket_closed(&sp_basis(2)));
    }

    #[test]
    fn so_preserves_antidiag() {
        let s = antidiag(4);
        for x in so_basis(4) {
            assert!(x.transpose().mul(&s).add(&s.mul(&x)).is_zero());
        }
    }

    #[test]
    fn matrix_actions_match_products() {
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64(&[&[0, 1, 0], &[2, 0, 1], &[1, 1, 1]]);
        let x = Matrix::from_i64(&[&[1, 0, 2], &[-1, 3, 5]]);
        let flat = x.entries().to_vec();
        assert_eq!(left_action(&a, 3).apply(&flat), a.mul(&x).entries());
        assert_eq!(right_action(&b, 2).apply(&flat), x.mul(&b).entries());
    }

    #[test]
    fn square_action_matches() {
        let a = Matrix::from_i64(&[&[1, 2, 0], &[3, 4, 1], &[0, 1, 1]]);
        for strict in [false, true] {
            let v = crate::exactlin::ivec(if strict { &[1, 2, 3] } else { &[1, 2, 3, 4, 5, 6] });
            let x = unpack_square(&v, 3, strict);
            let y = a.mul(&x).add(&x.mul(&a.transpose()));
            let got = unpack_square(&square_action(&a, strict).apply(&v), 3, strict);
            assert_eq!(got, y);
        }
    }
}
