//! Invariant and equivariant polynomial tensors, solved by incremental kernel
//! intersection.
//!
//! A tensor of degree `d` with values in a module `W` is a table of
//! coefficients indexed by `(w, I)` where `I = (i_1 ≤ … ≤ i_d)` runs over
//! monomials in lexicographic order. A generator `ξ` (acting on `V` by `ξ_V`
//! and on `W` by `ξ_W`) annihilates `f` when `df_x(ξ_V x) = ξ_W f(x)`.
//!
//! Before solving, the unknowns are restricted to weight-compatible entries:
//! the diagonal elements of the generator span act diagonally on monomials, so
//! an invariant can only involve `(w, I)` whose `V`-weight equals the weight
//! of `w`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::exactlin::{null_basis, rref, Matrix, Scalar, Vector};

/// Shape of a tensor to solve for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Shape {
    /// Scalar-valued homogeneous form of the given degree.
    Form(usize),
    /// Quadratic map into the case's auxiliary module (a symmetric pairing
    /// `V × V → W`).
    Pairing,
}

impl Shape {
    pub fn degree(&self) -> usize {
        match self {
            Shape::Form(d) => *d,
            Shape::Pairing => 2,
        }
    }
}

/// A solved tensor: `coefficients[w * monomials.len() + m]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantTensor {
    pub degree: usize,
    pub dim: usize,
    pub target_dim: usize,
    pub monomials: Vec<Vec<usize>>,
    pub coefficients: Vec<Scalar>,
}

impl InvariantTensor {
    /// Evaluate at `x`, one value per target coordinate.
    pub fn eval(&self, x: &[Scalar]) -> Vector {
        let vals: Vec<Scalar> = self
            .monomials
            .iter()
            .map(|m| {
                let mut p = Scalar::one();
                for &i in m {
                    if x[i].is_zero() {
                        return Scalar::zero();
                    }
                    p *= &x[i];
                }
                p
            })
            .collect();
        let nm = self.monomials.len();
        (0..self.target_dim)
            .map(|w| {
                let mut acc = Scalar::zero();
                for (c, v) in self.coefficients[w * nm..(w + 1) * nm].iter().zip(&vals) {
                    if !c.is_zero() && !v.is_zero() {
                        acc += &(c * v);
                    }
                }
                acc
            })
            .collect()
    }

    /// Value of a scalar form.
    pub fn eval_scalar(&self, x: &[Scalar]) -> Scalar {
        self.eval(x).swap_remove(0)
    }

    /// Gradient of a scalar form at `x`.
    pub fn gradient(&self, x: &[Scalar]) -> Vector {
        let mut g = vec![Scalar::zero(); self.dim];
        for (m, c) in self.monomials.iter().zip(&self.coefficients) {
            if c.is_zero() {
                continue;
            }
            for k in 0..m.len() {
                if k > 0 && m[k] == m[k - 1] {
                    continue;
                }
                let mult = m.iter().filter(|&&i| i == m[k]).count() as i64;
                let mut p = c * &Scalar::from_int(mult);
                for (l, &i) in m.iter().enumerate() {
                    if l != k {
                        p *= &x[i];
                    }
                }
                g[m[k]] += &p;
            }
        }
        g
    }

    /// Does `ξ` (with `ξ_W`) annihilate the tensor?
    pub fn is_annihilated_by(&self, xi_v: &Matrix, xi_w: Option<&Matrix>) -> bool {
        let index = monomial_index(&self.monomials);
        let nm = self.monomials.len();
        let mut out: HashMap<(usize, usize), Scalar> = HashMap::new();
        for w in 0..self.target_dim {
            for (mi, m) in self.monomials.iter().enumerate() {
                let c = &self.coefficients[w * nm + mi];
                if c.is_zero() {
                    continue;
                }
                for (key, v) in apply_generator(w, m, xi_v, xi_w, &index) {
                    *out.entry(key).or_insert_with(Scalar::zero) += &(c * &v);
                }
            }
        }
        out.values().all(Scalar::is_zero)
    }
}

/// All sorted index tuples of length `d` over `0..n`.
pub fn monomials(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(n: usize, d: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, d, i, cur, out);
            cur.pop();
        }
    }
    rec(n, d, 0, &mut cur, &mut out);
    out
}

fn monomial_index(ms: &[Vec<usize>]) -> HashMap<Vec<usize>, usize> {
    ms.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect()
}

/// Image of the basis tensor `e_w ⊗ x^I` under `ξ`, as sparse `(w, J)` entries.
fn apply_generator(
    w: usize,
    m: &[usize],
    xi_v: &Matrix,
    xi_w: Option<&Matrix>,
    index: &HashMap<Vec<usize>, usize>,
) -> Vec<((usize, usize), Scalar)> {
    let mut out = Vec::new();
    let n = xi_v.rows();
    // x^I ↦ Σ_k Σ_j ξ_{i_k j} x_j Π_{l≠k} x_{i_l}
    for k in 0..m.len() {
        let i = m[k];
        for j in 0..n {
            let c = &xi_v[(i, j)];
            if c.is_zero() {
                continue;
            }
            let mut t = m.to_vec();
            t[k] = j;
            t.sort_unstable();
            out.push(((w, index[&t]), c.clone()));
        }
    }
    // − ξ_W e_w
    if let Some(a) = xi_w {
        let mi = index[m];
        for u in 0..a.rows() {
            let c = &a[(u, w)];
            if !c.is_zero() {
                out.push(((u, mi), -c));
            }
        }
    }
    out
}

/// Diagonal elements of the span of `(ξ_V, ξ_W)` pairs, as weight vectors on
/// `V` followed by `W`.
fn diagonal_weights(gens: &[Matrix], target: Option<&[Matrix]>) -> Vec<Vector> {
    if gens.is_empty() {
        return Vec::new();
    }
    let mut rows: Vec<Vector> = Vec::new();
    let push_offdiag = |rows: &mut Vec<Vector>, mats: Vec<&Matrix>| {
        let n = mats[0].rows();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let row: Vector = mats.iter().map(|m| m[(i, j)].clone()).collect();
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    };
    push_offdiag(&mut rows, gens.iter().collect());
    if let Some(t) = target {
        push_offdiag(&mut rows, t.iter().collect());
    }
    let combos = if rows.is_empty() {
        Matrix::identity(gens.len()).row_vectors()
    } else {
        null_basis(&Matrix::from_rows(&rows))
    };
    combos
        .iter()
        .map(|c| {
            let n = gens[0].rows();
            let mut h = vec![Scalar::zero(); n];
            for (coef, g) in c.iter().zip(gens) {
                for (i, hi) in h.iter_mut().enumerate() {
                    *hi += &(coef * &g[(i, i)]);
                }
            }
            if let Some(t) = target {
                let nw = t[0].rows();
                let mut hw = vec![Scalar::zero(); nw];
                for (coef, g) in c.iter().zip(t) {
                    for (i, hi) in hw.iter_mut().enumerate() {
                        *hi += &(coef * &g[(i, i)]);
                    }
                }
                h.extend(hw);
            }
            h
        })
        .collect()
}

/// Basis of degree-`degree` tensors annihilated by every generator.
///
/// `target`, when given, holds the action of each generator on the auxiliary
/// module `W` (same order as `gens`); otherwise the tensors are scalar forms.
pub fn solve_invariants(
    gens: &[Matrix],
    target: Option<&[Matrix]>,
    degree: usize,
) -> Vec<InvariantTensor> {
    let n = gens.first().map_or(0, Matrix::rows);
    let nw = target.map_or(1, |t| t[0].rows());
    let ms = monomials(n, degree);
    let index = monomial_index(&ms);
    let nm = ms.len();

    let weights = diagonal_weights(gens, target);
    let unknowns: Vec<(usize, usize)> = (0..nw)
        .flat_map(|w| (0..nm).map(move |m| (w, m)))
        .filter(|&(w, m)| {
            weights.iter().all(|h| {
                let mut s = Scalar::zero();
                for &i in &ms[m] {
                    s += &h[i];
                }
                let hw = if target.is_some() { h[n + w].clone() } else { Scalar::zero() };
                s == hw
            })
        })
        .collect();

    // columns of `basis` span the current solution space (in unknown coords)
    let mut basis: Vec<Vector> = (0..unknowns.len())
        .map(|i| {
            let mut v = vec![Scalar::zero(); unknowns.len()];
            v[i] = Scalar::one();
            v
        })
        .collect();
    for (g, xi) in gens.iter().enumerate() {
        if basis.is_empty() {
            break;
        }
        let xi_w = target.map(|t| &t[g]);
        let images: Vec<Vec<((usize, usize), Scalar)>> = unknowns
            .iter()
            .map(|&(w, m)| apply_generator(w, &ms[m], xi, xi_w, &index))
            .collect();
        // A = M_ξ · basis, rows keyed by (w, J)
        let mut rows: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
        for (c, col) in basis.iter().enumerate() {
            for (u, coef) in col.iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                for (key, v) in &images[u] {
                    let row = rows
                        .entry(*key)
                        .or_insert_with(|| vec![Scalar::zero(); basis.len()]);
                    row[c] += &(coef * v);
                }
            }
        }
        let rows: Vec<Vector> = rows
            .into_values()
            .filter(|r| r.iter().any(|v| !v.is_zero()))
            .collect();
        if rows.is_empty() {
            continue;
        }
        let ker = null_basis(&Matrix::from_rows(&rows));
        basis = ker
            .iter()
            .map(|k| {
                let mut v = vec![Scalar::zero(); unknowns.len()];
                for (coef, col) in k.iter().zip(&basis) {
                    if coef.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(col) {
                        if !y.is_zero() {
                            *x += &(coef * y);
                        }
                    }
                }
                v
            })
            .collect();
    }
    if basis.is_empty() {
        return Vec::new();
    }
    let (canon, _) = rref(&Matrix::from_rows(&basis));
    canon
        .into_iter()
        .map(|v| {
            let mut coefficients = vec![Scalar::zero(); nw * nm];
            for (c, &(w, m)) in v.into_iter().zip(&unknowns) {
                coefficients[w * nm + m] = c;
            }
            InvariantTensor {
                degree,
                dim: n,
                target_dim: nw,
                monomials: ms.clone(),
                coefficients,
            }
        })
        .collect()
}
