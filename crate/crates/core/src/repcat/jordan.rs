//! The 27-dimensional exceptional Jordan algebra `H_3(O)` over split
//! octonions.
//!
//! Coordinates are `[α1, α2, α3, c1, c2, c3]` (3 + 3·8) for the Hermitian
//! matrix
//!
//! ```text
//! [ α1   c3   c̄2 ]
//! [ c̄3   α2   c1 ]
//! [ c2   c̄1   α3 ]
//! ```

use super::octonion::{self as oct, Oct};
use crate::exactlin::{Matrix, Scalar, Vector};

pub const DIM: usize = 27;

type Herm = [[Oct; 3]; 3];

fn slot(x: &[Scalar], i: usize) -> Oct {
    oct::from_slice(&x[3 + 8 * i..11 + 8 * i])
}

fn to_matrix(x: &[Scalar]) -> Herm {
    let c1 = slot(x, 0);
    let c2 = slot(x, 1);
    let c3 = slot(x, 2);
    let d = |a: &Scalar| oct::scale(&oct::one(), a);
    [
        [d(&x[0]), c3.clone(), oct::conj(&c2)],
        [oct::conj(&c3), d(&x[1]), c1.clone()],
        [c2, oct::conj(&c1), d(&x[2])],
    ]
}

fn from_matrix(m: &Herm) -> Vector {
    let mut v = vec![m[0][0][0].clone(), m[1][1][0].clone(), m[2][2][0].clone()];
    v.extend(m[1][2].iter().cloned());
    v.extend(m[2][0].iter().cloned());
    v.extend(m[0][1].iter().cloned());
    v
}

fn herm_mul(x: &Herm, y: &Herm) -> Herm {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = oct::zero();
            for k in 0..3 {
                acc = oct::add(&acc, &oct::mul(&x[i][k], &y[k][j]));
            }
            acc
        })
    })
}

/// Jordan product `x∘y = (xy + yx)/2`.
pub fn product(x: &[Scalar], y: &[Scalar]) -> Vector {
    let a = to_matrix(x);
    let b = to_matrix(y);
    let ab = herm_mul(&a, &b);
    let ba = herm_mul(&b, &a);
    let half = Scalar::frac(1, 2);
    let s: Herm = std::array::from_fn(|i| {
        std::array::from_fn(|j| oct::scale(&oct::add(&ab[i][j], &ba[i][j]), &half))
    });
    from_matrix(&s)
}

pub fn identity() -> Vector {
    let mut v = vec![Scalar::zero(); DIM];
    for e in v.iter_mut().take(3) {
        *e = Scalar::one();
    }
    v
}

pub fn diag(a: i64, b: i64, c: i64) -> Vector {
    let mut v = vec![Scalar::zero(); DIM];
    v[0] = Scalar::from_int(a);
    v[1] = Scalar::from_int(b);
    v[2] = Scalar::from_int(c);
    v
}

/// Cubic norm `α1α2α3 − Σ αᵢ n(cᵢ) + t(c1 c2 c3)`.
pub fn det(x: &[Scalar]) -> Scalar {
    let c: Vec<Oct> = (0..3).map(|i| slot(x, i)).collect();
    let mut d = &(&x[0] * &x[1]) * &x[2];
    for i in 0..3 {
        d -= &(&x[i] * &oct::norm(&c[i]));
    }
    d + oct::trace(&oct::mul(&oct::mul(&c[0], &c[1]), &c[2]))
}

/// Quadratic adjoint: diagonal `α_{i+1}α_{i+2} − n(cᵢ)`, off-diagonal
/// `conj(c_{i+1} c_{i+2}) − αᵢ cᵢ`.
pub fn sharp(x: &[Scalar]) -> Vector {
    let c: Vec<Oct> = (0..3).map(|i| slot(x, i)).collect();
    let mut v = Vec::with_capacity(DIM);
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        v.push(&x[j] * &x[k] - oct::norm(&c[i]));
    }
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let o = oct::sub(&oct::conj(&oct::mul(&c[j], &c[k])), &oct::scale(&c[i], &x[i]));
        v.extend(o);
    }
    v
}

/// Trace form `T(x, y) = Σ αᵢβᵢ + Σ ⟨cᵢ, dᵢ⟩`.
pub fn trace_form(x: &[Scalar], y: &[Scalar]) -> Scalar {
    let mut t = &(&x[0] * &y[0]) + &(&x[1] * &y[1]);
    t += &(&x[2] * &y[2]);
    for i in 0..3 {
        t += &oct::polar(&slot(x, i), &slot(y, i));
    }
    t
}

fn unit(i: usize) -> Vector {
    let mut v = vec![Scalar::zero(); DIM];
    v[i] = Scalar::one();
    v
}

/// Matrix of the multiplication operator `L_a : x ↦ a∘x`.
pub fn mult_operator(a: &[Scalar]) -> Matrix {
    let cols: Vec<Vector> = (0..DIM).map(|j| product(a, &unit(j))).collect();
    Matrix::from_rows(&cols).transpose()
}

/// Product table: `L_{e_i}` for every basis vector.
pub fn product_table() -> Vec<Matrix> {
    (0..DIM).map(|i| mult_operator(&unit(i))).collect()
}

/// Basis of the trace-zero elements.
pub fn traceless_basis() -> Vec<Vector> {
    let mut out = Vec::new();
    for i in 0..2 {
        let mut v = unit(i);
        v[i + 1] = Scalar::from_int(-1);
        out.push(v);
    }
    out.extend((3..DIM).map(unit));
    out
}

/// `e_6`: traceless multiplications `L_a` plus the derivations `[L_a, L_b]`,
/// reduced to a linearly independent family.
pub fn e6_generators() -> Vec<Matrix> {
    let ls: Vec<Matrix> = traceless_basis().iter().map(|a| mult_operator(a)).collect();
    let mut cands = ls.clone();
    for a in 0..ls.len() {
        for b in a + 1..ls.len() {
            let c = ls[a].bracket(&ls[b]);
            if !c.is_zero() {
                cands.push(c);
            }
        }
    }
    independent_subset(cands)
}

/// Greedy maximal linearly independent subfamily, order preserving.
pub fn independent_subset(cands: Vec<Matrix>) -> Vec<Matrix> {
    use crate::exactlin::Subspace;
    let Some(first) = cands.first() else {
        return cands;
    };
    let n = first.entries().len();
    let mut span = Subspace::zero(n);
    let mut out = Vec::new();
    for c in cands {
        if !span.contains(c.entries()).expect("same shape") {
            span = span.sum(&Subspace::span(n, &[c.entries().to_vec()])).expect("same shape");
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{random_vector, seeded};

    #[test]
    fn normalisation() {
        assert_eq!(det(&identity()), Scalar::one());
        assert!(sharp(&diag(1, 0, 0)).iter().all(Scalar::is_zero));
        let s = sharp(&diag(1, 1, 0));
        assert_eq!(s, diag(0, 0, 1));
        assert!(det(&diag(1, 1, 0)).is_zero());
    }

    #[test]
    fn adjoint_identities() {
        let mut rng = seeded(11);
        for _ in 0..5 {
            let x = random_vector(&mut rng, DIM, 5);
            let d = det(&x);
            let ss = sharp(&sharp(&x));
            let dx: Vector = x.iter().map(|v| v * &d).collect();
            assert_eq!(ss, dx);
            let p = product(&x, &sharp(&x));
            let di: Vector = identity().iter().map(|v| v * &d).collect();
            assert_eq!(p, di);
        }
    }

    #[test]
    fn identity_is_unit() {
        let mut rng = seeded(12);
        let x = random_vector(&mut rng, DIM, 5);
        assert_eq!(product(&identity(), &x), x);
    }
}
