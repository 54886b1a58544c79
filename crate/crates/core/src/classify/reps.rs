use super::{classify, component_labels, enumerate_labels, z_labels, Comp, OrbitLabel, ZData};
use crate::error::{Error, Result};
use crate::exactlin::{seeded, small_int, Matrix, Scalar, Vector};
use crate::repcat::lie::pairs;
use crate::repcat::{jordan, CaseSpec, Family, Shape, Side};

fn p(case: &CaseSpec, name: &str) -> usize {
    case.id.param(name).expect("validated case")
}

fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// `rows × cols` array with `k` leading ones on the diagonal.
fn block_identity(rows: usize, cols: usize, k: usize) -> Vector {
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..k {
        m[(i, i)] = Scalar::one();
    }
    m.into_entries()
}

fn skew_rank(n: usize, i: usize) -> Vector {
    let idx = pairs(n, true);
    let mut v = vec![Scalar::zero(); idx.len()];
    for k in 0..i {
        let pos = idx.iter().position(|&e| e == (2 * k, 2 * k + 1)).expect("pair");
        v[pos] = Scalar::one();
    }
    v
}

fn a10_matrix(n: usize, m: usize, r: usize, s: usize) -> Matrix {
    let mut x = Matrix::zeros(2 * n, m);
    let a = |i: usize| i - 1;
    let b = |i: usize| 2 * n - i;
    for k in 0..s / 2 {
        x[(a(k + 1), 2 * k)] = Scalar::one();
        x[(b(k + 1), 2 * k + 1)] = Scalar::one();
    }
    for j in 0..r - s {
        x[(a(s / 2 + j + 1), s + j)] = Scalar::one();
    }
    x
}

fn comp_rank(c: Comp) -> usize {
    match c {
        Comp::Index { i } => i as usize,
        Comp::RankPair { r, .. } => r as usize,
    }
}

/// Representative of one summand label of a reducible case.
fn component_rep(case: &CaseSpec, k: usize, c: Comp) -> Vector {
    use Family::*;
    let fam = case.id.family;
    let len = case.summands[k];
    if c.is_zero() {
        return vec![Scalar::zero(); len];
    }
    let pair = |n: usize, m: usize| match c {
        Comp::RankPair { r, s } => a10_matrix(n, m, r as usize, s as usize),
        Comp::Index { .. } => unreachable!("rank pair expected"),
    };
    match (fam, k) {
        (B1 | B2, 0) => skew_rank(p(case, "n"), comp_rank(c)),
        (B3 | B4, 0) => block_identity(p(case, "q"), p(case, "p"), comp_rank(c)),
        (B6 | B8 | B9, 0) => pair(p(case, "n"), 2).into_entries(),
        (B7, 0) => block_identity(p(case, "n"), 2, comp_rank(c)),
        (B7 | B8, 1) => block_identity(2, p(case, "m"), comp_rank(c)),
        (B9, 1) => pair(p(case, "m"), 2).transpose().into_entries(),
        _ => unit(len, 0),
    }
}

fn concat(a: Vector, b: Vector) -> Vector {
    a.into_iter().chain(b).collect()
}

/// Deterministic candidate vectors: units, then sums and differences of two
/// units, then small random vectors.
fn candidates(n: usize) -> impl Iterator<Item = Vector> {
    let singles = (0..n).map(move |i| unit(n, i));
    let doubles = (0..n).flat_map(move |i| {
        (i + 1..n).flat_map(move |j| {
            [1i64, -1].into_iter().map(move |sg| {
                let mut v = unit(n, i);
                v[j] = Scalar::from_int(sg);
                v
            })
        })
    });
    let mut rng = seeded(0x5eed);
    let randoms = (0..400).map(move |_| (0..n).map(|_| Scalar::from_int(small_int(&mut rng, 3))).collect());
    singles.chain(doubles).chain(randoms)
}

fn polar(case: &CaseSpec, side: Side, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let q = &case.invariants(side, Shape::Form(2))[0];
    let ab: Vector = a.iter().zip(b).map(|(x, y)| x + y).collect();
    q.eval_scalar(&ab) - q.eval_scalar(a) - q.eval_scalar(b)
}

/// Search for a vector with the given label; null vectors are produced from
/// pairs of candidates by solving the quadric along a line.
fn search(case: &CaseSpec, label: OrbitLabel) -> Result<Vector> {
    let n = case.dim;
    let hit = |v: &Vector| classify(case, v).map(|l| l == label).unwrap_or(false);
    let mut pool = Vec::new();
    for v in candidates(n) {
        if hit(&v) {
            return Ok(v);
        }
        if pool.len() < 24 {
            pool.push(v);
        }
    }
    if !case.invariants(Side::V, Shape::Form(2)).is_empty() {
        let q = &case.invariants(Side::V, Shape::Form(2))[0];
        for a in &pool {
            for b in &pool {
                let w = polar(case, Side::V, a, b);
                if w.is_zero() {
                    continue;
                }
                let t = -(q.eval_scalar(a) / w);
                let v: Vector = a.iter().zip(b).map(|(x, y)| x + &(&t * y)).collect();
                if hit(&v) {
                    return Ok(v);
                }
            }
        }
    }
    Err(Error::Internal(format!("no representative found for {label}")))
}

fn b10_rep(case: &CaseSpec, label: OrbitLabel) -> Result<Vector> {
    let side_cands = |k: usize| {
        let len = case.summands[k];
        std::iter::once(vec![Scalar::zero(); len])
            .chain(candidates(len).take(1 + len + len * (len - 1)))
            .collect::<Vec<_>>()
    };
    let (ca, cb) = (side_cands(0), side_cands(1));
    for a in &ca {
        for b in &cb {
            let v = concat(a.clone(), b.clone());
            if classify(case, &v)? == label {
                return Ok(v);
            }
        }
    }
    search(case, label)
}

fn reducible_rep(case: &CaseSpec, label: OrbitLabel) -> Result<Vector> {
    use Family::*;
    let fam = case.id.family;
    if fam == B10 {
        return b10_rep(case, label);
    }
    let (la, lb) = match label {
        OrbitLabel::Origin => (comp_zero(case, 0), comp_zero(case, 1)),
        OrbitLabel::Pure1 { l } => (l, comp_zero(case, 1)),
        OrbitLabel::Pure2 { l } => (comp_zero(case, 0), l),
        OrbitLabel::Y { l, l2 } => (l, l2),
        OrbitLabel::Z { .. } => {
            let (_, a, b) = z_labels(case)
                .into_iter()
                .find(|(z, _, _)| *z == label)
                .ok_or_else(|| Error::EmptyLabel(format!("{label} in {}", case.id)))?;
            (a, b)
        }
        _ => return Err(Error::EmptyLabel(format!("{label} in {}", case.id))),
    };
    let x = component_rep(case, 0, la);
    let mut y = component_rep(case, 1, lb);
    let is_z = matches!(label, OrbitLabel::Z { .. });
    let both = !la.is_zero() && !lb.is_zero();
    if both {
        let i = comp_rank(la);
        let ylen = y.len();
        match fam {
            B1 => {
                let n = p(case, "n");
                y = unit(n, if is_z || 2 * i == n { 0 } else { n - 1 });
            }
            B2 => y = unit(ylen, if is_z { ylen - 1 } else { 0 }),
            B3 => {
                let pp = p(case, "p");
                y = unit(pp, if is_z || i == pp { 0 } else { pp - 1 });
            }
            B4 => y = unit(ylen, if is_z { ylen - 1 } else { 0 }),
            B5 => {
                let n2 = ylen;
                y = match label {
                    OrbitLabel::Z { z: ZData::Sim } => unit(n2, 0),
                    OrbitLabel::Z { .. } => unit(n2, 1),
                    _ => unit(n2, n2 - 1),
                };
            }
            B6 => y = unit(2, if is_z { 1 } else { 0 }),
            B7 | B8 | B9 if is_z => {
                let cols = ylen / 2;
                let mut m = Matrix::zeros(2, cols);
                m[(1, 0)] = Scalar::one();
                y = m.into_entries();
            }
            _ => {}
        }
    }
    Ok(concat(x, y))
}

fn comp_zero(case: &CaseSpec, k: usize) -> Comp {
    let (a, b) = component_labels(case).expect("reducible");
    if k == 0 {
        a[0]
    } else {
        b[0]
    }
}

/// A canonical vector in the orbit with the given label.
pub fn representative(case: &CaseSpec, label: OrbitLabel) -> Result<Vector> {
    use Family::*;
    if !enumerate_labels(case).contains(&label) {
        return Err(Error::EmptyLabel(format!("{label} in {}", case.id)));
    }
    let i = match label {
        OrbitLabel::Index { i } => i as usize,
        _ => 0,
    };
    let v = match case.id.family {
        A1 => block_identity(p(case, "q"), p(case, "p"), i),
        A2 => {
            let n = p(case, "n");
            let idx = pairs(n, false);
            let mut v = vec![Scalar::zero(); idx.len()];
            for k in 0..i {
                v[idx.iter().position(|&e| e == (k, k)).expect("diag")] = Scalar::one();
            }
            v
        }
        A3 => skew_rank(p(case, "n"), i),
        A4 => match i {
            0 => vec![Scalar::zero(); jordan::DIM],
            1 => jordan::diag(1, 0, 0),
            2 => jordan::diag(1, 1, 0),
            _ => jordan::identity(),
        },
        A10 => match label {
            OrbitLabel::RankPair { r, s } => {
                a10_matrix(p(case, "n"), p(case, "m"), r as usize, s as usize).into_entries()
            }
            _ => unreachable!("A10 labels are rank pairs"),
        },
        A5 | A6 | A7 | A8 | A9 => {
            if i == 0 {
                vec![Scalar::zero(); case.dim]
            } else {
                search(case, label)?
            }
        }
        _ => reducible_rep(case, label)?,
    };
    if classify(case, &v)? != label {
        return Err(Error::Internal(format!("representative of {label} misclassified")));
    }
    Ok(v)
}

/// Polynomial curve `τ ↦ Σ τ^k c_k` in `V`.
#[derive(Clone, Debug, PartialEq)]
pub struct Curve {
    pub coefficients: Vec<Vector>,
}

impl Curve {
    pub fn at(&self, tau: &Scalar) -> Vector {
        let n = self.coefficients[0].len();
        let mut out = vec![Scalar::zero(); n];
        let mut pw = Scalar::one();
        for c in &self.coefficients {
            for (o, x) in out.iter_mut().zip(c) {
                *o += &(&pw * x);
            }
            pw = &pw * tau;
        }
        out
    }
}

/// Curve `x(τ)` with `x(0)` the representative of `from` and `x(τ)` in the
/// orbit `to` for `τ ≠ 0`, for the covering relations `(r,s) → (r+1,s)` and
/// `(r,s) → (r,s+2)` of the rank-pair case.
pub fn degeneration_witness(case: &CaseSpec, from: OrbitLabel, to: OrbitLabel) -> Result<Curve> {
    if case.id.family != Family::A10 {
        return Err(Error::Unsupported("degeneration curves exist for A10 only".into()));
    }
    let (n, m) = (p(case, "n"), p(case, "m"));
    let labels = enumerate_labels(case);
    if !labels.contains(&from) || !labels.contains(&to) {
        return Err(Error::Parse(format!("labels {from}, {to} not in {}", case.id)));
    }
    let (OrbitLabel::RankPair { r, s }, OrbitLabel::RankPair { r: r2, s: s2 }) = (from, to) else {
        unreachable!("A10 labels are rank pairs")
    };
    let (r, s) = (r as usize, s as usize);
    let x0 = a10_matrix(n, m, r, s);
    let a = |i: usize| i - 1;
    let b = |i: usize| 2 * n - i;
    let zero = Matrix::zeros(2 * n, m);
    let coefficients = if (r2 as usize, s2 as usize) == (r + 1, s) {
        let mut x1 = zero;
        x1[(a(s / 2 + r - s + 1), r)] = Scalar::one();
        vec![x0, x1]
    } else if (r2 as usize, s2 as usize) == (r, s + 2) && r - s >= 2 {
        let l2 = a(s / 2 + 2);
        let (l1p, l2p) = (b(s / 2 + 1), b(s / 2 + 2));
        let mut x1 = zero.clone();
        let mut x2 = zero;
        x1[(l2, s)] = Scalar::one();
        x1[(l1p, s)] = Scalar::one();
        x2[(l2p, s)] = Scalar::one();
        x1[(l2p, s + 1)] = Scalar::one();
        x2[(l1p, s + 1)] = Scalar::one();
        vec![x0, x1, x2]
    } else {
        return Err(Error::Unsupported(format!("no covering curve {from} -> {to}")));
    };
    let curve = Curve {
        coefficients: coefficients.into_iter().map(Matrix::into_entries).collect(),
    };
    Ok(curve)
}
