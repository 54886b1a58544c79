//! Spinor modules built on the exterior algebra of a maximal isotropic
//! subspace.
//!
//! For `so_{2k}` the vector space is spanned by creation operators `e_i` and
//! contractions `f_i` on `∧(C^k)`, with `{e_i, f_j} = δ_ij`. The Lie algebra is
//! spanned by the quadratic elements `e_i e_j`, `f_i f_j` (`i < j`) and
//! `e_i f_j − δ_ij/2`. Odd `d = 2k − 1` is realised as the stabiliser of
//! `u = e_k + f_k` inside `so_{2k}`.

use crate::error::{Error, Result};
use crate::exactlin::{null_basis, Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chirality {
    Full,
    Plus,
    Minus,
}

/// A spin representation together with the vector representation it covers.
#[derive(Clone, Debug)]
pub struct SpinModule {
    pub d: usize,
    /// Generators of `so_d` acting on the spinor space.
    pub generators: Vec<Matrix>,
    /// The same generators acting on `C^d`, in the basis of [`SpinModule::gammas`].
    pub vector_action: Vec<Matrix>,
    /// Clifford generators spanning `C^d`, as operators on the full spinor space.
    pub gammas: Vec<Matrix>,
    /// Basis masks of the spinor space (subsets of `{0..k}` as bit sets).
    pub masks: Vec<u32>,
}

impl SpinModule {
    pub fn dim(&self) -> usize {
        self.masks.len()
    }
}

fn below(mask: u32, i: usize) -> u32 {
    (mask & ((1u32 << i) - 1)).count_ones()
}

fn sign(n: u32) -> Scalar {
    Scalar::from_int(if n % 2 == 0 { 1 } else { -1 })
}

/// Creation operator `e_i` on `∧(C^k)` in the mask basis `0..2^k`.
fn creation(k: usize, i: usize) -> Matrix {
    let n = 1usize << k;
    let mut m = Matrix::zeros(n, n);
    for s in 0..n as u32 {
        if s & (1 << i) == 0 {
            m[((s | (1 << i)) as usize, s as usize)] = sign(below(s, i));
        }
    }
    m
}

fn contraction(k: usize, i: usize) -> Matrix {
    creation(k, i).transpose()
}

/// Coordinates of a matrix in the span of mutually Frobenius-orthogonal gammas.
fn gamma_coords(m: &Matrix, gammas: &[Matrix]) -> Vec<Scalar> {
    gammas
        .iter()
        .map(|g| {
            let num: Scalar = crate::exactlin::dot(g.entries(), m.entries());
            let den: Scalar = crate::exactlin::dot(g.entries(), g.entries());
            num / den
        })
        .collect()
}

/// Vector representation matrix of `x`: column `b` holds `[x, γ_b]`.
fn vector_matrix(x: &Matrix, gammas: &[Matrix]) -> Matrix {
    let cols: Vec<Vec<Scalar>> = gammas
        .iter()
        .map(|g| gamma_coords(&x.bracket(g), gammas))
        .collect();
    Matrix::from_rows(&cols).transpose()
}

fn restrict(m: &Matrix, idx: &[usize]) -> Matrix {
    let mut out = Matrix::zeros(idx.len(), idx.len());
    for (a, &i) in idx.iter().enumerate() {
        for (b, &j) in idx.iter().enumerate() {
            out[(a, b)] = m[(i, j)].clone();
        }
    }
    out
}

/// Full `so_{2k}` data on `∧(C^k)`.
fn even_full(k: usize) -> (Vec<Matrix>, Vec<Matrix>) {
    let es: Vec<Matrix> = (0..k).map(|i| creation(k, i)).collect();
    let fs: Vec<Matrix> = (0..k).map(|i| contraction(k, i)).collect();
    let half = Scalar::frac(1, 2);
    let id = Matrix::identity(1 << k);
    let mut gens = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            gens.push(es[i].mul(&es[j]));
            gens.push(fs[i].mul(&fs[j]));
        }
    }
    for i in 0..k {
        for j in 0..k {
            let mut x = es[i].mul(&fs[j]);
            if i == j {
                x = x.sub(&id.scale(&half));
            }
            gens.push(x);
        }
    }
    let mut gammas = es;
    gammas.extend(fs);
    (gens, gammas)
}

/// Spin representation of `so_d`, `d ∈ {7, 8, 9, 10}`. Odd `d` needs
/// `Chirality::Full`; even `d` needs `Plus` or `Minus` (or `Full` for the
/// sum of both half-spin modules, even part first).
pub fn spin_module(d: usize, chirality: Chirality) -> Result<SpinModule> {
    if !(7..=10).contains(&d) {
        return Err(Error::Unsupported(format!("spin module for d = {d}")));
    }
    let odd = d % 2 == 1;
    if odd && chirality != Chirality::Full {
        return Err(Error::Unsupported(format!("chirality for odd d = {d}")));
    }
    let k = d.div_ceil(2);
    let (mut gens, mut gammas) = even_full(k);
    if odd {
        // stabiliser of u = e_{k-1} + f_{k-1}
        let u = gammas[k - 1].add(&gammas[2 * k - 1]);
        let rows: Vec<Vec<Scalar>> = gens
            .iter()
            .map(|g| gamma_coords(&g.bracket(&u), &gammas))
            .collect();
        let combos = null_basis(&Matrix::from_rows(&rows).transpose());
        gens = combos
            .iter()
            .map(|c| {
                let mut acc = Matrix::zeros(1 << k, 1 << k);
                for (coef, g) in c.iter().zip(&gens) {
                    if !coef.is_zero() {
                        acc = acc.add(&g.scale(coef));
                    }
                }
                acc
            })
            .collect();
        let w = gammas[k - 1].sub(&gammas[2 * k - 1]);
        gammas.remove(2 * k - 1);
        gammas[k - 1] = w;
        if gens.len() != d * (d - 1) / 2 {
            return Err(Error::Internal("spin stabiliser has wrong dimension".into()));
        }
    }
    let vector_action = gens.iter().map(|g| vector_matrix(g, &gammas)).collect();
    let parity = |s: &u32| s.count_ones() % 2;
    let masks: Vec<u32> = match chirality {
        Chirality::Plus => (0..1u32 << k).filter(|s| parity(s) == 0).collect(),
        Chirality::Minus => (0..1u32 << k).filter(|s| parity(s) == 1).collect(),
        Chirality::Full if odd => (0..1u32 << k).filter(|s| parity(s) == 0).collect(),
        Chirality::Full => {
            let mut v: Vec<u32> = (0..1u32 << k).filter(|s| parity(s) == 0).collect();
            v.extend((0..1u32 << k).filter(|s| parity(s) == 1));
            v
        }
    };
    let idx: Vec<usize> = masks.iter().map(|&s| s as usize).collect();
    let generators = gens.iter().map(|g| restrict(g, &idx)).collect();
    Ok(SpinModule {
        d,
        generators,
        vector_action,
        gammas,
        masks,
    })
}
