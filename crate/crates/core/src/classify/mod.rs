//! Orbit labels, classifiers and canonical representatives.
//!
//! Every recipe is an exact vanishing or rank test. Covectors are classified
//! by the same invariant data recomputed for the dual action, which is how
//! labels on `V*` are matched with labels on `V`.

mod label;
mod reps;

pub use label::{Comp, OrbitLabel, ZData};
pub use reps::{degeneration_witness, representative, Curve};

use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vector, kernel, Matrix, Scalar, Vector};
use crate::repcat::lie::{omega, reshape, unpack_square};
use crate::repcat::{jordan, CaseSpec, Family, Shape, Side};

fn p(case: &CaseSpec, name: &str) -> usize {
    case.id.param(name).expect("validated case")
}

/// `(r, s)` pairs of `Sp_{2n} × GL_m` on `2n × m` matrices.
pub fn a10_pairs(n: usize, m: usize) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for r in 0..=m.min(2 * n) {
        for s in (0..=r).step_by(2) {
            if 2 * r - s <= 2 * n {
                out.push((r as u32, s as u32));
            }
        }
    }
    out
}

/// Labels of each irreducible summand, lowest first.
pub fn component_labels(case: &CaseSpec) -> Option<(Vec<Comp>, Vec<Comp>)> {
    use Family::*;
    let idx = |k: usize| (0..=k as u32).map(Comp::index).collect::<Vec<_>>();
    let pairs = |n: usize, m: usize| {
        a10_pairs(n, m)
            .into_iter()
            .map(|(r, s)| Comp::pair(r, s))
            .collect::<Vec<_>>()
    };
    Some(match case.id.family {
        B1 | B2 => (idx(p(case, "n") / 2), idx(1)),
        B3 | B4 => (idx(p(case, "q").min(p(case, "p"))), idx(1)),
        B5 => (idx(1), idx(1)),
        B6 => (pairs(p(case, "n"), 2), idx(1)),
        B7 => (idx(p(case, "n").min(2)), idx(p(case, "m").min(2))),
        B8 => (pairs(p(case, "n"), 2), idx(p(case, "m").min(2))),
        B9 => (pairs(p(case, "n"), 2), pairs(p(case, "m"), 2)),
        B10 => (idx(2), idx(2)),
        _ => return None,
    })
}

/// Non-apparent orbits of a reducible case, with the component pair they lie in.
pub fn z_labels(case: &CaseSpec) -> Vec<(OrbitLabel, Comp, Comp)> {
    use Family::*;
    let one = Comp::index(1);
    match case.id.family {
        B1 | B2 => {
            let n = p(case, "n");
            (1..=n / 2)
                .filter(|i| 2 * i < n)
                .map(|i| (OrbitLabel::z(ZData::Index(i as u32)), Comp::index(i as u32), one))
                .collect()
        }
        B3 | B4 => {
            let (q, pp) = (p(case, "q"), p(case, "p"));
            (1..=q.min(pp))
                .filter(|&i| i < pp)
                .map(|i| (OrbitLabel::z(ZData::Index(i as u32)), Comp::index(i as u32), one))
                .collect()
        }
        B5 => {
            let mut v = vec![(OrbitLabel::z(ZData::Sim), one, one)];
            if p(case, "n") >= 2 {
                v.push((OrbitLabel::z(ZData::Circ), one, one));
            }
            v
        }
        B6 => vec![(OrbitLabel::z(ZData::Unit), Comp::pair(1, 0), one)],
        B7 | B10 => vec![(OrbitLabel::z(ZData::Unit), one, one)],
        B8 => vec![(OrbitLabel::z(ZData::Unit), Comp::pair(1, 0), one)],
        B9 => vec![(OrbitLabel::z(ZData::Unit), Comp::pair(1, 0), Comp::pair(1, 0))],
        _ => Vec::new(),
    }
}

/// All nonempty orbit labels of the case.
pub fn enumerate_labels(case: &CaseSpec) -> Vec<OrbitLabel> {
    use Family::*;
    let range = |k: usize| (0..=k as u32).map(OrbitLabel::index).collect::<Vec<_>>();
    match case.id.family {
        A1 => range(p(case, "p").min(p(case, "q"))),
        A2 => range(p(case, "n")),
        A3 => range(p(case, "n") / 2),
        A4 => range(3),
        A5 | A6 | A7 | A8 => range(2),
        A9 => range(3),
        A10 => a10_pairs(p(case, "n"), p(case, "m"))
            .into_iter()
            .map(|(r, s)| OrbitLabel::pair(r, s))
            .collect(),
        _ => {
            let (a, b) = component_labels(case).expect("reducible");
            let zs = z_labels(case);
            let mut out = Vec::new();
            for &lb in &b {
                for &la in &a {
                    for (z, za, zb) in &zs {
                        if (*za, *zb) == (la, lb) {
                            out.push(*z);
                        }
                    }
                    out.push(OrbitLabel::from_components(la, lb));
                }
            }
            out
        }
    }
}

fn rank_pair(x: &Matrix) -> (u32, u32) {
    let n = x.rows() / 2;
    let r = x.rank();
    let s = x.transpose().mul(&omega(n)).mul(x).rank();
    (r as u32, s as u32)
}

/// `(k, t)` of a covector `y ∈ Hom(W, U)` given as a `2n × m` array in dual
/// coordinates: `k = dim ker y`, `t = dim ker Ω|_{ker y}`.
pub fn dual_rank_pair(y: &Matrix) -> (u32, u32) {
    let n = y.rows() / 2;
    let ker = kernel(&y.transpose());
    let k = ker.dim();
    let b = ker.basis();
    let t = if k == 0 {
        0
    } else {
        k - b.mul(&omega(n)).mul(&b.transpose()).rank()
    };
    (k as u32, t as u32)
}

fn quadric_label(case: &CaseSpec, side: Side, v: &[Scalar]) -> u32 {
    if is_zero_vector(v) {
        return 0;
    }
    let q = case.invariants(side, Shape::Form(2));
    if q[0].eval_scalar(v).is_zero() {
        1
    } else {
        2
    }
}

fn is_pure(case: &CaseSpec, side: Side, v: &[Scalar]) -> bool {
    let beta = case.invariants(side, Shape::Pairing);
    is_zero_vector(&beta[0].eval(v))
}

fn a4_label(case: &CaseSpec, side: Side, v: &[Scalar]) -> u32 {
    if is_zero_vector(v) {
        return 0;
    }
    let (d, grad) = match side {
        Side::V => (jordan::det(v), jordan::sharp(v)),
        Side::Dual => {
            let c = case.invariants(Side::Dual, Shape::Form(3));
            (c[0].eval_scalar(v), c[0].gradient(v))
        }
    };
    if !d.is_zero() {
        3
    } else if !is_zero_vector(&grad) {
        2
    } else {
        1
    }
}

/// Quadratic forms of the two summands of B10, in summand order.
fn b10_forms(case: &CaseSpec, side: Side) -> Vec<crate::repcat::InvariantTensor> {
    let forms = case.invariants(side, Shape::Form(2));
    let mut out: Vec<_> = forms.iter().cloned().collect();
    let first_summand = |t: &crate::repcat::InvariantTensor| {
        t.monomials
            .iter()
            .zip(&t.coefficients)
            .any(|(m, c)| !c.is_zero() && m[0] < 8)
    };
    out.sort_by_key(|t| !first_summand(t));
    out
}

fn comps(case: &CaseSpec, side: Side, v: &[Scalar]) -> (Comp, Comp) {
    use Family::*;
    let a = &v[case.summand_range(0)];
    let b = &v[case.summand_range(1)];
    let nz = |x: &[Scalar]| Comp::index(u32::from(!is_zero_vector(x)));
    match case.id.family {
        B1 | B2 => {
            let n = p(case, "n");
            let r = unpack_square(a, n, true).rank() / 2;
            (Comp::index(r as u32), nz(b))
        }
        B3 | B4 => {
            let r = reshape(a, p(case, "q"), p(case, "p")).rank();
            (Comp::index(r as u32), nz(b))
        }
        B5 => (nz(a), nz(b)),
        B6 | B8 | B9 => {
            let (r, s) = rank_pair(&reshape(a, 2 * p(case, "n"), 2));
            let second = match case.id.family {
                B6 => nz(b),
                B8 => Comp::index(reshape(b, 2, p(case, "m")).rank() as u32),
                _ => {
                    let (r2, s2) = rank_pair(&reshape(b, 2, 2 * p(case, "m")).transpose());
                    Comp::pair(r2, s2)
                }
            };
            (Comp::pair(r, s), second)
        }
        B7 => (
            Comp::index(reshape(a, p(case, "n"), 2).rank() as u32),
            Comp::index(reshape(b, 2, p(case, "m")).rank() as u32),
        ),
        B10 => {
            let forms = b10_forms(case, side);
            let lab = |x: &[Scalar], full: Vector, f: &crate::repcat::InvariantTensor| {
                if is_zero_vector(x) {
                    0
                } else if f.eval_scalar(&full).is_zero() {
                    1
                } else {
                    2
                }
            };
            let mut va = v.to_vec();
            va[8..].iter_mut().for_each(|c| *c = Scalar::zero());
            let mut vb = v.to_vec();
            vb[..8].iter_mut().for_each(|c| *c = Scalar::zero());
            (
                Comp::index(lab(a, va, &forms[0])),
                Comp::index(lab(b, vb, &forms[1])),
            )
        }
        _ => unreachable!("irreducible case"),
    }
}

/// The non-apparent stratum containing `v`, if any (`v` has both components
/// nonzero with labels `(la, lb)`).
fn z_of(case: &CaseSpec, side: Side, v: &[Scalar], la: Comp, lb: Comp) -> Option<ZData> {
    use Family::*;
    let a = &v[case.summand_range(0)];
    let b = &v[case.summand_range(1)];
    let i = match la {
        Comp::Index { i } => i,
        Comp::RankPair { r, .. } => r,
    };
    let one = Comp::index(1);
    let product_zero = |x: Matrix, y: Matrix| x.mul(&y).is_zero();
    match case.id.family {
        B1 => {
            let n = p(case, "n");
            let x = unpack_square(a, n, true);
            let mut rows = x.transpose().row_vectors();
            rows.push(b.to_vec());
            let inside = Matrix::from_rows(&rows).rank() == x.rank();
            (inside && 2 * (i as usize) < n).then_some(ZData::Index(i))
        }
        B2 => {
            let n = p(case, "n");
            product_zero(unpack_square(a, n, true), Matrix::column(b)).then_some(ZData::Index(i))
        }
        B3 => {
            let (q, pp) = (p(case, "q"), p(case, "p"));
            let x = reshape(a, q, pp);
            let mut rows = x.row_vectors();
            rows.push(b.to_vec());
            let inside = Matrix::from_rows(&rows).rank() == x.rank();
            (inside && (i as usize) < pp).then_some(ZData::Index(i))
        }
        B4 => {
            let (q, pp) = (p(case, "q"), p(case, "p"));
            product_zero(reshape(a, q, pp), Matrix::column(b)).then_some(ZData::Index(i))
        }
        B5 => {
            let n = p(case, "n");
            if Matrix::from_rows(&[a.to_vec(), b.to_vec()]).rank() == 1 {
                Some(ZData::Sim)
            } else {
                let w = Matrix::column(a).transpose().mul(&omega(n)).mul(&Matrix::column(b));
                w.is_zero().then_some(ZData::Circ)
            }
        }
        B6 => {
            let n = p(case, "n");
            product_zero(reshape(a, 2 * n, 2), Matrix::column(b)).then_some(ZData::Unit)
        }
        B7 | B8 | B9 => {
            let (n, m) = (p(case, "n"), p(case, "m"));
            let rows = if case.id.family == B7 { n } else { 2 * n };
            let cols = if case.id.family == B9 { 2 * m } else { m };
            product_zero(reshape(a, rows, 2), reshape(b, 2, cols)).then_some(ZData::Unit)
        }
        B10 => {
            if (la, lb) != (one, one) {
                return None;
            }
            let beta = case.invariants(side, Shape::Pairing);
            is_zero_vector(&beta[0].eval(v)).then_some(ZData::Unit)
        }
        _ => None,
    }
}

/// Label of `v` on the given side.
pub fn classify_on(case: &CaseSpec, side: Side, v: &[Scalar]) -> Result<OrbitLabel> {
    use Family::*;
    if v.len() != case.dim {
        return Err(Error::DimensionMismatch {
            expected: case.dim,
            got: v.len(),
        });
    }
    let label = match case.id.family {
        A1 => OrbitLabel::index(reshape(v, p(case, "q"), p(case, "p")).rank() as u32),
        A2 => {
            let n = p(case, "n");
            let mut x = unpack_square(v, n, false);
            if side == Side::Dual {
                let half = Scalar::frac(1, 2);
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            x[(i, j)] = &x[(i, j)] * &half;
                        }
                    }
                }
            }
            OrbitLabel::index(x.rank() as u32)
        }
        A3 => OrbitLabel::index((unpack_square(v, p(case, "n"), true).rank() / 2) as u32),
        A4 => OrbitLabel::index(a4_label(case, side, v)),
        A5 | A6 | A7 => OrbitLabel::index(quadric_label(case, side, v)),
        A8 => OrbitLabel::index(if is_zero_vector(v) {
            0
        } else if is_pure(case, side, v) {
            1
        } else {
            2
        }),
        A9 => OrbitLabel::index(if is_zero_vector(v) {
            0
        } else if is_pure(case, side, v) {
            1
        } else if quadric_label(case, side, v) == 1 {
            2
        } else {
            3
        }),
        A10 => {
            let (n, m) = (p(case, "n"), p(case, "m"));
            let x = reshape(v, 2 * n, m);
            match side {
                Side::V => {
                    let (r, s) = rank_pair(&x);
                    OrbitLabel::pair(r, s)
                }
                Side::Dual => {
                    let (k, t) = dual_rank_pair(&x);
                    let nn = 2 * n as u32;
                    OrbitLabel::pair(nn - k, nn - k - t)
                }
            }
        }
        _ => {
            let (la, lb) = comps(case, side, v);
            if la.is_zero() || lb.is_zero() {
                OrbitLabel::from_components(la, lb)
            } else {
                match z_of(case, side, v, la, lb) {
                    Some(z) => OrbitLabel::z(z),
                    None => OrbitLabel::y(la, lb),
                }
            }
        }
    };
    Ok(label)
}

/// Label of a vector in `V`.
pub fn classify(case: &CaseSpec, v: &[Scalar]) -> Result<OrbitLabel> {
    classify_on(case, Side::V, v)
}

/// Label of a covector in `V*` (dual-basis coordinates).
pub fn classify_dual(case: &CaseSpec, y: &[Scalar]) -> Result<OrbitLabel> {
    classify_on(case, Side::Dual, y)
}

/// Raw `Q_{kt}` label of an A10 covector.
pub fn classify_dual_raw(case: &CaseSpec, y: &[Scalar]) -> Result<OrbitLabel> {
    if case.id.family != Family::A10 {
        return Err(Error::Unsupported("Q labels exist for A10 only".into()));
    }
    if y.len() != case.dim {
        return Err(Error::DimensionMismatch {
            expected: case.dim,
            got: y.len(),
        });
    }
    let (k, t) = dual_rank_pair(&reshape(y, 2 * p(case, "n"), p(case, "m")));
    Ok(OrbitLabel::DualRankPair { k, t })
}

/// Find a label by its display name.
pub fn parse_label(case: &CaseSpec, name: &str) -> Result<OrbitLabel> {
    let name = name.trim();
    if name.starts_with('{') {
        return serde_json::from_str(name).map_err(|e| Error::Parse(e.to_string()));
    }
    enumerate_labels(case)
        .into_iter()
        .find(|l| l.to_string() == name)
        .ok_or_else(|| Error::Parse(format!("no orbit {name:?} in {}", case.id)))
}
