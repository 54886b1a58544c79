//! Closure order, orbit dimensions and the duality involution of each case.

mod assign;
mod export;

pub use assign::{abstract_diagram_of, assign_orbits, AbstractDiagram, Assignment};

use serde::{Deserialize, Serialize};

use crate::classify::{
    a10_pairs, component_labels, enumerate_labels, representative, Comp, OrbitLabel, ZData,
};
use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vector, Matrix, Scalar};
use crate::repcat::lie::{omega, reshape, unpack_square};
use crate::repcat::{CaseId, CaseSpec, Family, Shape, Side};

/// Orbit diagram of one case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitPoset {
    pub case: CaseId,
    pub labels: Vec<OrbitLabel>,
    /// Hasse edges `(lower, upper)` as label indices.
    pub covers: Vec<(usize, usize)>,
    pub dims: Vec<usize>,
    /// `duality[i]` is the index of the dual label.
    pub duality: Vec<usize>,
}

impl OrbitPoset {
    pub fn index_of(&self, l: &OrbitLabel) -> Option<usize> {
        self.labels.iter().position(|x| x == l)
    }

    fn require(&self, l: &OrbitLabel) -> Result<usize> {
        self.index_of(l)
            .ok_or_else(|| Error::Parse(format!("no orbit {l} in {}", self.case)))
    }

    pub fn dim(&self, l: &OrbitLabel) -> Result<usize> {
        Ok(self.dims[self.require(l)?])
    }

    pub fn dual(&self, l: &OrbitLabel) -> Result<OrbitLabel> {
        Ok(self.labels[self.duality[self.require(l)?]])
    }

    /// Reflexive closure order `a ≤ b`.
    pub fn leq(&self, a: &OrbitLabel, b: &OrbitLabel) -> Result<bool> {
        let (a, b) = (self.require(a)?, self.require(b)?);
        let mut seen = vec![false; self.labels.len()];
        let mut stack = vec![a];
        while let Some(v) = stack.pop() {
            if v == b {
                return Ok(true);
            }
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            stack.extend(self.covers.iter().filter(|e| e.0 == v).map(|e| e.1));
        }
        Ok(false)
    }

    /// The unique maximum of a nonempty set of labels.
    pub fn maximum(&self, ls: &[OrbitLabel]) -> Result<OrbitLabel> {
        for cand in ls {
            let mut top = true;
            for other in ls {
                if !self.leq(other, cand)? {
                    top = false;
                    break;
                }
            }
            if top {
                return Ok(*cand);
            }
        }
        let names: Vec<String> = ls.iter().map(|l| l.to_string()).collect();
        Err(Error::InconsistentSamples(names.join(", ")))
    }

    pub fn zero(&self) -> OrbitLabel {
        self.labels[0]
    }

    /// Label of the open orbit.
    pub fn open(&self) -> OrbitLabel {
        *self
            .labels
            .iter()
            .zip(&self.dims)
            .max_by_key(|(_, d)| **d)
            .expect("nonempty")
            .0
    }
}

fn p(case: &CaseSpec, name: &str) -> usize {
    case.id.param(name).expect("validated case")
}

fn rank_of(x: &Matrix) -> u32 {
    x.rank() as u32
}

fn stack_rows(a: &Matrix, row: &[Scalar]) -> Matrix {
    let mut rows = a.row_vectors();
    rows.push(row.to_vec());
    Matrix::from_rows_with_cols(&rows, a.cols())
}

/// Rank data whose componentwise order is the closure order on labels.
pub fn signature(case: &CaseSpec, v: &[Scalar]) -> Vec<u32> {
    use Family::*;
    let fam = case.id.family;
    if !fam.is_reducible() {
        return match crate::classify::classify(case, v).expect("sized vector") {
            OrbitLabel::Index { i } => vec![i],
            OrbitLabel::RankPair { r, s } => vec![r, s],
            other => unreachable!("irreducible label {other}"),
        };
    }
    let a = &v[case.summand_range(0)];
    let b = &v[case.summand_range(1)];
    let nz = |x: &[Scalar]| u32::from(!is_zero_vector(x));
    let pair = |x: &Matrix| {
        let n = x.rows() / 2;
        vec![rank_of(x), rank_of(&x.transpose().mul(&omega(n)).mul(x))]
    };
    match fam {
        B1 => {
            let n = p(case, "n");
            let x = unpack_square(a, n, true);
            let mut aug = Matrix::zeros(n + 1, n + 1);
            for i in 0..n {
                for j in 0..n {
                    aug[(i, j)] = x[(i, j)].clone();
                }
                aug[(i, n)] = b[i].clone();
                aug[(n, i)] = -&b[i];
            }
            vec![rank_of(&x), rank_of(&aug), nz(b)]
        }
        B2 | B4 => {
            let x = match fam {
                B2 => unpack_square(a, p(case, "n"), true),
                _ => reshape(a, p(case, "q"), p(case, "p")),
            };
            let xy = x.mul(&Matrix::column(b));
            vec![rank_of(&x), nz(b), rank_of(&xy)]
        }
        B3 => {
            let x = reshape(a, p(case, "q"), p(case, "p"));
            vec![rank_of(&x), rank_of(&stack_rows(&x, b)), nz(b)]
        }
        B5 => {
            let n = p(case, "n");
            let both = Matrix::from_rows(&[a.to_vec(), b.to_vec()]);
            let w = Matrix::column(a).transpose().mul(&omega(n)).mul(&Matrix::column(b));
            vec![nz(a), nz(b), rank_of(&both), u32::from(!w.is_zero())]
        }
        B6 | B8 => {
            let x = reshape(a, 2 * p(case, "n"), 2);
            let y = match fam {
                B6 => Matrix::column(b),
                _ => reshape(b, 2, p(case, "m")),
            };
            let mut s = pair(&x);
            s.extend([rank_of(&y), rank_of(&x.mul(&y))]);
            s
        }
        B7 => {
            let x = reshape(a, p(case, "n"), 2);
            let y = reshape(b, 2, p(case, "m"));
            vec![rank_of(&x), rank_of(&y), rank_of(&x.mul(&y))]
        }
        B9 => {
            let x = reshape(a, 2 * p(case, "n"), 2);
            let y = reshape(b, 2, 2 * p(case, "m"));
            let mut s = pair(&x);
            s.extend(pair(&y.transpose()));
            s.push(rank_of(&x.mul(&y)));
            s
        }
        B10 => {
            let (la, lb) = match crate::classify::classify(case, v).expect("sized vector") {
                OrbitLabel::Origin => (0, 0),
                OrbitLabel::Pure1 { l } => (comp_index(l), 0),
                OrbitLabel::Pure2 { l } => (0, comp_index(l)),
                OrbitLabel::Y { l, l2 } => (comp_index(l), comp_index(l2)),
                OrbitLabel::Z { .. } => (1, 1),
                other => unreachable!("B10 label {other}"),
            };
            let beta = case.invariants(Side::V, Shape::Pairing);
            vec![la, lb, nz(&beta[0].eval(v))]
        }
        _ => unreachable!("reducible family"),
    }
}

fn comp_index(c: Comp) -> u32 {
    match c {
        Comp::Index { i } => i,
        Comp::RankPair { r, .. } => r,
    }
}

fn a1_dim(i: usize, p: usize, q: usize) -> usize {
    i * (p + q) - i * i
}

fn a3_dim(i: usize, n: usize) -> usize {
    i * (2 * n - 2 * i - 1)
}

fn a10_dim(r: usize, s: usize, n: usize, m: usize) -> usize {
    r * (2 * n + m - r) - (r - s) * (r - s).saturating_sub(1) / 2
}

fn comp_dim(case: &CaseSpec, k: usize, c: Comp) -> usize {
    use Family::*;
    let fam = case.id.family;
    let (i, pair) = match c {
        Comp::Index { i } => (i as usize, None),
        Comp::RankPair { r, s } => (r as usize, Some((r as usize, s as usize))),
    };
    if i == 0 {
        return 0;
    }
    match (fam, k) {
        (B1 | B2, 0) => a3_dim(i, p(case, "n")),
        (B1 | B2, 1) => p(case, "n"),
        (B3 | B4, 0) => a1_dim(i, p(case, "p"), p(case, "q")),
        (B3 | B4, 1) => p(case, "p"),
        (B5, _) => 2 * p(case, "n"),
        (B6 | B8 | B9, 0) => {
            let (r, s) = pair.expect("rank pair");
            a10_dim(r, s, p(case, "n"), 2)
        }
        (B6, 1) => 2,
        (B7, 0) => a1_dim(i, 2, p(case, "n")),
        (B7 | B8, 1) => a1_dim(i, 2, p(case, "m")),
        (B9, 1) => {
            let (r, s) = pair.expect("rank pair");
            a10_dim(r, s, p(case, "m"), 2)
        }
        (B10, _) => [0, 7, 8][i],
        _ => unreachable!("component index"),
    }
}

/// Closed-form orbit dimension.
pub fn dim_formula(case: &CaseSpec, l: &OrbitLabel) -> Result<usize> {
    use Family::*;
    let fam = case.id.family;
    let bad = || Error::Parse(format!("no orbit {l} in {}", case.id));
    Ok(match *l {
        OrbitLabel::Index { i } => {
            let i = i as usize;
            let table = |t: &[usize]| t.get(i).copied().ok_or_else(bad);
            match fam {
                A1 => a1_dim(i, p(case, "p"), p(case, "q")),
                A2 => {
                    let n = p(case, "n");
                    i * n - i * i.saturating_sub(1) / 2
                }
                A3 => a3_dim(i, p(case, "n")),
                A4 => table(&[0, 17, 26, 27])?,
                A5 => {
                    let n = p(case, "n");
                    table(&[0, n - 1, n])?
                }
                A6 => table(&[0, 6, 7])?,
                A7 => table(&[0, 7, 8])?,
                A8 => table(&[0, 11, 16])?,
                A9 => table(&[0, 11, 15, 16])?,
                _ => return Err(bad()),
            }
        }
        OrbitLabel::RankPair { r, s } => {
            if fam != A10 {
                return Err(bad());
            }
            a10_dim(r as usize, s as usize, p(case, "n"), p(case, "m"))
        }
        OrbitLabel::Origin => 0,
        OrbitLabel::Pure1 { l } => comp_dim(case, 0, l),
        OrbitLabel::Pure2 { l } => comp_dim(case, 1, l),
        OrbitLabel::Y { l, l2 } => comp_dim(case, 0, l) + comp_dim(case, 1, l2),
        OrbitLabel::Z { z } => {
            let i = match z {
                ZData::Index(i) => i as usize,
                _ => 0,
            };
            let (n, m) = (case.id.param("n").unwrap_or(0), case.id.param("m").unwrap_or(0));
            let (pp, q) = (case.id.param("p").unwrap_or(0), case.id.param("q").unwrap_or(0));
            match (fam, z) {
                (B1, _) => i * (2 * n - 2 * i + 1),
                (B2, _) => n + i * (2 * n - 2 * i - 3),
                (B3, _) => i * (pp + q - i + 1),
                (B4, _) => pp + i * (pp + q - i - 1),
                (B5, ZData::Sim) => 2 * n + 1,
                (B5, _) => 4 * n - 1,
                (B6, _) => 2 * n + 2,
                (B7, _) => m + n + 1,
                (B8, _) => 2 * n + m + 1,
                (B9, _) => 2 * (n + m) + 1,
                (B10, _) => 11,
                _ => return Err(bad()),
            }
        }
        OrbitLabel::DualRankPair { .. } => return Err(bad()),
    })
}

/// Dual of a rank pair for `Sp_{2n} × GL_m`: `r + r' = min(2n, m + c)` with
/// `c = ⌊r − s⌋₂ = ⌊r' − s'⌋₂`.
pub fn a10_dual(r: u32, s: u32, n: u32, m: u32) -> (u32, u32) {
    let c = (r - s) / 2 * 2;
    let r2 = (2 * n).min(m + c) - r;
    let mut s2 = r2 - c;
    if s2 % 2 == 1 {
        s2 -= 1;
    }
    (r2, s2)
}

fn comp_dual(case: &CaseSpec, k: usize, c: Comp) -> Comp {
    use Family::*;
    let fam = case.id.family;
    match c {
        Comp::RankPair { r, s } => {
            let n = if (fam, k) == (B9, 1) { p(case, "m") } else { p(case, "n") };
            let (r2, s2) = a10_dual(r, s, n as u32, 2);
            Comp::pair(r2, s2)
        }
        Comp::Index { i } => {
            let top = match (fam, k) {
                (B1 | B2, 0) => p(case, "n") / 2,
                (B3 | B4, 0) => p(case, "p").min(p(case, "q")),
                (B7, 0) => p(case, "n").min(2),
                (B7 | B8, 1) => p(case, "m").min(2),
                (B10, _) => 2,
                _ => 1,
            } as u32;
            if fam == B10 && i == 1 {
                c
            } else {
                Comp::index(top - i)
            }
        }
    }
}

/// Index `j(i)` of the dual of `Z_i` in the cases with a family of `Z` orbits.
pub fn z_index_dual(case: &CaseSpec, i: u32) -> Option<u32> {
    use Family::*;
    let max = crate::classify::z_labels(case).len() as u32;
    if max == 0 {
        return None;
    }
    let j = match case.id.family {
        B1 | B2 => {
            // ⌊n − 2i + 1⌋₂ / 2
            let n = p(case, "n") as u32;
            (n + 1 - 2 * i) / 2
        }
        B3 | B4 => {
            let (pp, q) = (p(case, "p") as u32, p(case, "q") as u32);
            (pp - i).min(q + 1 - i)
        }
        _ => return None,
    };
    Some(j.clamp(1, max))
}

/// Closed-form dual label.
pub fn dual_formula(case: &CaseSpec, l: &OrbitLabel) -> Result<OrbitLabel> {
    use Family::*;
    let fam = case.id.family;
    let labels = enumerate_labels(case);
    if !labels.contains(l) {
        return Err(Error::Parse(format!("no orbit {l} in {}", case.id)));
    }
    Ok(match *l {
        OrbitLabel::Index { i } => {
            let top = match labels.last().expect("nonempty") {
                OrbitLabel::Index { i } => *i,
                _ => unreachable!("index chain"),
            };
            match fam {
                A1 | A2 | A3 | A4 => OrbitLabel::index(top - i),
                A5 | A6 | A7 | A8 => OrbitLabel::index(if i == 1 { 1 } else { 2 - i }),
                _ => OrbitLabel::index(match i {
                    0 => 3,
                    3 => 0,
                    k => k,
                }),
            }
        }
        OrbitLabel::RankPair { r, s } => {
            let (r2, s2) = a10_dual(r, s, p(case, "n") as u32, p(case, "m") as u32);
            OrbitLabel::pair(r2, s2)
        }
        OrbitLabel::Z { z: ZData::Index(i) } => {
            OrbitLabel::z(ZData::Index(z_index_dual(case, i).expect("indexed Z family")))
        }
        OrbitLabel::Z { .. } => *l,
        OrbitLabel::DualRankPair { .. } => return Err(Error::Parse(format!("{l} is a covector label"))),
        _ => {
            let (a0, b0) = component_labels(case).expect("reducible");
            let (a, b) = match *l {
                OrbitLabel::Origin => (a0[0], b0[0]),
                OrbitLabel::Pure1 { l } => (l, b0[0]),
                OrbitLabel::Pure2 { l } => (a0[0], l),
                OrbitLabel::Y { l, l2 } => (l, l2),
                _ => unreachable!("apparent label"),
            };
            OrbitLabel::from_components(comp_dual(case, 0, a), comp_dual(case, 1, b))
        }
    })
}

/// Strict order relation from signature dominance.
fn dominance(sigs: &[Vec<u32>]) -> Vec<Vec<bool>> {
    let n = sigs.len();
    let mut lt = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            lt[i][j] = i != j && sigs[i].iter().zip(&sigs[j]).all(|(a, b)| a <= b);
        }
    }
    lt
}

/// Hasse edges of a strict order given as a relation matrix.
pub fn transitive_reduction(lt: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = lt.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt[i][j] && !(0..n).any(|k| lt[i][k] && lt[k][j]) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Builtin orbit diagram with closed-form dimensions and duality.
pub fn builtin_poset(case: &CaseSpec) -> Result<OrbitPoset> {
    let labels = enumerate_labels(case);
    let sigs = labels
        .iter()
        .map(|l| Ok(signature(case, &representative(case, *l)?)))
        .collect::<Result<Vec<_>>>()?;
    for i in 0..sigs.len() {
        for j in 0..i {
            if sigs[i] == sigs[j] {
                return Err(Error::Internal(format!(
                    "labels {} and {} share a signature",
                    labels[i], labels[j]
                )));
            }
        }
    }
    let covers = transitive_reduction(&dominance(&sigs));
    let dims = labels
        .iter()
        .map(|l| dim_formula(case, l))
        .collect::<Result<Vec<_>>>()?;
    let duality = labels
        .iter()
        .map(|l| {
            let d = dual_formula(case, l)?;
            labels
                .iter()
                .position(|x| *x == d)
                .ok_or_else(|| Error::Internal(format!("dual {d} of {l} is not a label")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OrbitPoset {
        case: case.id.clone(),
        labels,
        covers,
        dims,
        duality,
    })
}

/// All rank pairs of `Sp_{2n} × GL_m`, as labels.
pub fn a10_labels(n: usize, m: usize) -> Vec<OrbitLabel> {
    a10_pairs(n, m)
        .into_iter()
        .map(|(r, s)| OrbitLabel::pair(r, s))
        .collect()
}
