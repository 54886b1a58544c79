//! Faces of the simplicial cone `cone(v_1, …, v_r)` whose relative interior
//! meets the valuation cone, and the orbit diagram they form.

mod semiinv;

pub use semiinv::{
    borel, f6_alternate, semiinvariant_eval, semiinvariance_check, table_weight, Weight,
    DERIVATIVE_SIGN,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{Scalar, Vector};
use crate::poset::transitive_reduction;

/// Spherical roots in λ-coordinates on a rank-`r` lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeSystem {
    pub r: usize,
    pub roots: Vec<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl ConeSystem {
    pub fn new(r: usize, roots: Vec<Vector>) -> Result<Self> {
        if r > 10 {
            return Err(Error::Unsupported(format!("rank {r} > 10")));
        }
        for root in &roots {
            if root.len() != r {
                return Err(Error::DimensionMismatch {
                    expected: r,
                    got: root.len(),
                });
            }
        }
        Ok(ConeSystem {
            r,
            roots,
            names: None,
        })
    }
}

/// Homogeneous inequality `a·c ≥ 0`, or `a·c > 0` when `strict`.
#[derive(Clone, Debug)]
struct Ineq {
    a: Vector,
    strict: bool,
}

/// Eliminate variable `k`; returns the projected system.
fn eliminate(sys: &[Ineq], k: usize) -> Vec<Ineq> {
    let mut out = Vec::new();
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for q in sys {
        match q.a[k].signum() {
            0 => out.push(q.clone()),
            1 => pos.push(q),
            _ => neg.push(q),
        }
    }
    for p in &pos {
        for q in &neg {
            let (cp, cq) = (-&q.a[k], p.a[k].clone());
            let a: Vector = p.a.iter().zip(&q.a).map(|(x, y)| &(&cp * x) + &(&cq * y)).collect();
            out.push(Ineq {
                a,
                strict: p.strict || q.strict,
            });
        }
    }
    dedup(out)
}

fn dedup(mut v: Vec<Ineq>) -> Vec<Ineq> {
    for q in &mut v {
        // scale to a primitive direction so duplicates coincide
        if let Some(first) = q.a.iter().find(|x| !x.is_zero()) {
            let s = first.abs().recip();
            q.a.iter_mut().for_each(|x| *x = &*x * &s);
        }
    }
    let mut out: Vec<Ineq> = Vec::new();
    for q in v {
        if let Some(e) = out.iter_mut().find(|e| e.a == q.a) {
            e.strict |= q.strict;
        } else {
            out.push(q);
        }
    }
    out
}

/// Exact feasibility of a homogeneous system with strict/non-strict flags.
fn feasible(mut sys: Vec<Ineq>, vars: usize) -> bool {
    for k in 0..vars {
        sys = eliminate(&sys, k);
    }
    sys.iter().all(|q| !q.strict)
}

fn face_system(system: &ConeSystem, face: &[usize]) -> Vec<Ineq> {
    let m = face.len();
    let mut sys = Vec::new();
    for k in 0..m {
        let mut a = vec![Scalar::zero(); m];
        a[k] = Scalar::one();
        sys.push(Ineq { a, strict: true });
    }
    for root in &system.roots {
        // Σ c_i σ_i ≤ 0
        let a = face.iter().map(|&i| -&root[i]).collect();
        sys.push(Ineq { a, strict: false });
    }
    sys
}

/// Does the relative interior of `cone(v_i : i ∈ face)` meet the valuation
/// cone? `face` holds 0-based indices.
pub fn face_meets_valuation(system: &ConeSystem, face: &[usize]) -> bool {
    if face.is_empty() {
        return true;
    }
    feasible(face_system(system, face), face.len())
}

/// Faces meeting the valuation cone, ordered by reverse inclusion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceDiagram {
    /// Admitted faces as sorted 1-based index sets, largest first.
    pub faces: Vec<Vec<usize>>,
    /// `(i, j)`: face `j` is a maximal proper subface of face `i` among admitted faces.
    pub covers: Vec<(usize, usize)>,
}

impl FaceDiagram {
    pub fn face_name(face: &[usize]) -> String {
        if face.is_empty() {
            "{0}".into()
        } else {
            format!("({})", face.iter().map(|i| i.to_string()).collect::<String>())
        }
    }

    pub fn export_dot(&self) -> String {
        let mut out = String::from("digraph faces {\n  rankdir=LR;\n");
        for (i, f) in self.faces.iter().enumerate() {
            out.push_str(&format!("  f{i} [label=\"{}\"];\n", Self::face_name(f)));
        }
        for (a, b) in &self.covers {
            out.push_str(&format!("  f{a} -> f{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

pub fn abstract_diagram(system: &ConeSystem) -> FaceDiagram {
    let r = system.r;
    let mut faces: Vec<Vec<usize>> = (0u32..1 << r)
        .map(|mask| (0..r).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|f| face_meets_valuation(system, f))
        .collect();
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let n = faces.len();
    let lt: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| faces[j].len() < faces[i].len() && faces[j].iter().all(|x| faces[i].contains(x)))
                .collect()
        })
        .collect();
    let covers = transitive_reduction(&lt);
    let faces = faces
        .into_iter()
        .map(|f| f.into_iter().map(|i| i + 1).collect())
        .collect();
    FaceDiagram { faces, covers }
}

/// The rank-6 system of `Sp_{2n} × GL_3` on `2n × 3` matrices, `n ≥ 3`.
pub fn bundled_sp2n_gl3() -> ConeSystem {
    let v = |x: [i64; 6]| x.iter().map(|&c| Scalar::from_int(c)).collect::<Vector>();
    ConeSystem {
        r: 6,
        roots: vec![
            v([1, 0, 0, 0, 1, -1]),
            v([-1, 1, -1, -1, 0, 1]),
            v([0, 0, 1, 0, -1, 0]),
            v([1, -1, 0, 0, -1, 1]),
            v([0, 1, 0, 1, 0, -1]),
        ],
        names: Some(
            [
                "λ1+λ5−λ6",
                "−λ1+λ2−λ3−λ4+λ6",
                "λ3−λ5",
                "λ1−λ2−λ5+λ6",
                "λ2+λ4−λ6",
            ]
            .map(String::from)
            .to_vec(),
        ),
    }
}

/// Orbits attached to the admitted faces of [`bundled_sp2n_gl3`], in the
/// order `(123456), (23456), (3456), (356), (456), {0}`.
pub fn bundled_face_orbits() -> Vec<(Vec<usize>, crate::classify::OrbitLabel)> {
    use crate::classify::OrbitLabel as L;
    vec![
        (vec![1, 2, 3, 4, 5, 6], L::pair(0, 0)),
        (vec![2, 3, 4, 5, 6], L::pair(1, 0)),
        (vec![3, 4, 5, 6], L::pair(2, 0)),
        (vec![3, 5, 6], L::pair(2, 2)),
        (vec![4, 5, 6], L::pair(3, 0)),
        (vec![], L::pair(3, 2)),
    ]
}
