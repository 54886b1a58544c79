//! Representation catalogue: generator matrices of `g` on `V` for every
//! family, the dual action, and cached invariant tensors.
//!
//! `V*` is always described in dual-basis coordinates, so the pairing is the
//! identity and the dual generators are `−ξᵀ`.

pub mod exp;
pub mod g2;
pub mod invariants;
pub mod jordan;
pub mod lie;
pub mod octonion;
pub mod spin;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{null_basis, EngineRng, Matrix, Scalar};

pub use exp::{exp_nilpotent, random_unipotent};
pub use g2::g2_in_so7;
pub use invariants::{solve_invariants, InvariantTensor, Shape};
pub use spin::{spin_module, Chirality, SpinModule};

use lie::{
    gl_basis, left_action, right_action, sl_basis, so_basis, sp_basis, square_action,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    A9,
    A10,
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    B7,
    B8,
    B9,
    B10,
}

impl Family {
    pub const ALL: [Family; 20] = [
        Family::A1,
        Family::A2,
        Family::A3,
        Family::A4,
        Family::A5,
        Family::A6,
        Family::A7,
        Family::A8,
        Family::A9,
        Family::A10,
        Family::B1,
        Family::B2,
        Family::B3,
        Family::B4,
        Family::B5,
        Family::B6,
        Family::B7,
        Family::B8,
        Family::B9,
        Family::B10,
    ];

    /// Parameter names, in display order.
    pub fn params(self) -> &'static [&'static str] {
        use Family::*;
        match self {
            A1 | B3 | B4 => &["q", "p"],
            A2 | A3 | A5 | B1 | B2 | B5 | B6 => &["n"],
            A10 | B7 | B8 | B9 => &["n", "m"],
            A4 | A6 | A7 | A8 | A9 | B10 => &[],
        }
    }

    pub fn is_reducible(self) -> bool {
        matches!(self, Family::B1
            | Family::B2
            | Family::B3
            | Family::B4
            | Family::B5
            | Family::B6
            | Family::B7
            | Family::B8
            | Family::B9
            | Family::B10)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// A family tag with its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CaseId {
    pub family: Family,
    #[serde(default)]
    pub params: BTreeMap<String, u32>,
}

impl CaseId {
    pub fn new(family: Family, params: &[(&str, u32)]) -> Self {
        CaseId {
            family,
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        }
    }

    pub fn bare(family: Family) -> Self {
        CaseId::new(family, &[])
    }

    pub fn param(&self, name: &str) -> Result<usize> {
        self.params
            .get(name)
            .map(|&v| v as usize)
            .ok_or_else(|| Error::InvalidCase(format!("{}: missing parameter {name}", self.family)))
    }

    /// Check parameter names and ranges.
    pub fn validate(&self) -> Result<()> {
        use Family::*;
        let names = self.family.params();
        for k in self.params.keys() {
            if !names.contains(&k.as_str()) {
                return Err(Error::InvalidCase(format!(
                    "{}: unexpected parameter {k}",
                    self.family
                )));
            }
        }
        let p = |n: &str| self.param(n);
        let need = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::InvalidCase(format!("{}: requires {what}", self.family)))
            }
        };
        match self.family {
            A1 => {
                let (q, pp) = (p("q")?, p("p")?);
                need(q >= pp && pp >= 1, "q ≥ p ≥ 1")
            }
            A2 => need(p("n")? >= 1, "n ≥ 1"),
            A3 => need(p("n")? >= 2, "n ≥ 2"),
            A5 => need(p("n")? >= 2, "n ≥ 2"),
            A10 => need(p("n")? >= 1 && p("m")? >= 1, "n ≥ 1, m ≥ 1"),
            B1 | B2 => need(p("n")? >= 2, "n ≥ 2"),
            B3 | B4 => need(p("q")? >= 1 && p("p")? >= 1, "q ≥ 1, p ≥ 1"),
            B5 | B6 => need(p("n")? >= 1, "n ≥ 1"),
            B7 | B8 | B9 => need(p("n")? >= 1 && p("m")? >= 1, "n ≥ 1, m ≥ 1"),
            A4 | A6 | A7 | A8 | A9 | B10 => Ok(()),
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for name in self.family.params() {
            if let Some(v) = self.params.get(*name) {
                write!(f, " {name}={v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for CaseId {
    type Err = Error;

    /// Accepts JSON (`{"family":"A10","params":{"n":2,"m":3}}`) or the short
    /// form `A10 n=2 m=3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
        }
        let mut parts = s.split_whitespace();
        let family: Family = parts
            .next()
            .ok_or_else(|| Error::Parse("empty case".into()))?
            .parse()?;
        let mut params = BTreeMap::new();
        for kv in parts {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {kv:?}")))?;
            let v: u32 = v
                .parse()
                .map_err(|_| Error::Parse(format!("bad parameter value {v:?}")))?;
            params.insert(k.to_string(), v);
        }
        Ok(CaseId { family, params })
    }
}

/// Which side of the duality a tensor or vector lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    V,
    Dual,
}

/// An auxiliary Lie algebra action used for equivariant pairings: generators on
/// `V` together with their action on a module `W`.
#[derive(Clone, Debug)]
pub struct AuxModule {
    pub on_v: Vec<Matrix>,
    pub on_w: Vec<Matrix>,
}

type Cache = Arc<Mutex<BTreeMap<(Side, Shape), Arc<Vec<InvariantTensor>>>>>;

/// One representation case.
#[derive(Clone, Debug)]
pub struct CaseSpec {
    pub id: CaseId,
    pub dim: usize,
    pub generators: Vec<Matrix>,
    /// Indices of the identity-scaling generators.
    pub scalings: Vec<usize>,
    pub pairing: Matrix,
    pub dual_generators: Vec<Matrix>,
    /// Dimensions of the irreducible summands, in coordinate order.
    pub summands: Vec<usize>,
    /// Module for [`Shape::Pairing`] tensors (spin cases only).
    pub aux: Option<AuxModule>,
    /// Root vectors of the generator span, used for group elements.
    pub nilpotents: Vec<Matrix>,
    invariants: Cache,
}

impl CaseSpec {
    /// Generators minus the central scalings.
    pub fn semisimple(&self, side: Side) -> Vec<Matrix> {
        let gens = match side {
            Side::V => &self.generators,
            Side::Dual => &self.dual_generators,
        };
        gens.iter()
            .enumerate()
            .filter(|(i, _)| !self.scalings.contains(i))
            .map(|(_, g)| g.clone())
            .collect()
    }

    /// Coordinate range of summand `k`.
    pub fn summand_range(&self, k: usize) -> std::ops::Range<usize> {
        let lo: usize = self.summands[..k].iter().sum();
        lo..lo + self.summands[k]
    }

    /// Solved invariant tensors, computed once per `(side, shape)`.
    pub fn invariants(&self, side: Side, shape: Shape) -> Arc<Vec<InvariantTensor>> {
        if let Some(t) = self.invariants.lock().expect("cache").get(&(side, shape)) {
            return t.clone();
        }
        let solved = Arc::new(match shape {
            Shape::Form(d) => solve_invariants(&self.semisimple(side), None, d),
            Shape::Pairing => match &self.aux {
                None => Vec::new(),
                Some(aux) => {
                    let gens: Vec<Matrix> = match side {
                        Side::V => aux.on_v.clone(),
                        Side::Dual => aux.on_v.iter().map(|g| g.transpose().neg()).collect(),
                    };
                    solve_invariants(&gens, Some(&aux.on_w), 2)
                }
            },
        });
        self.invariants
            .lock()
            .expect("cache")
            .entry((side, shape))
            .or_insert(solved)
            .clone()
    }

    /// Random element of the identity component, acting on `V` or `V*`.
    pub fn random_group_element(&self, side: Side, rng: &mut EngineRng, steps: usize) -> Matrix {
        let nil: Vec<Matrix> = match side {
            Side::V => self.nilpotents.clone(),
            Side::Dual => self.nilpotents.iter().map(|x| x.transpose().neg()).collect(),
        };
        random_unipotent(self.dim, &nil, rng, steps)
    }

    pub fn generators_on(&self, side: Side) -> &[Matrix] {
        match side {
            Side::V => &self.generators,
            Side::Dual => &self.dual_generators,
        }
    }
}

/// Random element of the identity component of `ρ(G)` on `V`.
pub fn random_group_element(case: &CaseSpec, rng: &mut EngineRng, steps: usize) -> Matrix {
    case.random_group_element(Side::V, rng, steps)
}

fn zero(n: usize) -> Matrix {
    Matrix::zeros(n, n)
}

fn scaling(dims: &[usize], k: usize) -> Matrix {
    let mut out = Matrix::zeros(0, 0);
    for (i, &d) in dims.iter().enumerate() {
        let b = if i == k { Matrix::identity(d) } else { zero(d) };
        out = out.direct_sum(&b);
    }
    out
}

/// Root-space components of the generator span for its diagonal torus.
fn root_vectors(gens: &[Matrix]) -> Vec<Matrix> {
    let n = gens.first().map_or(0, Matrix::rows);
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let row: Vec<Scalar> = gens.iter().map(|g| g[(i, j)].clone()).collect();
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let torus: Vec<Vec<Scalar>> = if rows.is_empty() {
        Matrix::identity(gens.len()).row_vectors()
    } else {
        null_basis(&Matrix::from_rows(&rows))
    }
    .iter()
    .map(|c| {
        (0..n)
            .map(|i| {
                let mut s = Scalar::zero();
                for (coef, g) in c.iter().zip(gens) {
                    s += &(coef * &g[(i, i)]);
                }
                s
            })
            .collect()
    })
    .collect();
    let key = |i: usize, j: usize| -> Vec<Scalar> { torus.iter().map(|h| &h[i] - &h[j]).collect() };
    let mut out = Vec::new();
    for g in gens {
        let mut parts: BTreeMap<Vec<Scalar>, Matrix> = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                let v = &g[(i, j)];
                if v.is_zero() {
                    continue;
                }
                let k = key(i, j);
                if k.iter().all(Scalar::is_zero) {
                    continue;
                }
                parts.entry(k).or_insert_with(|| zero(n))[(i, j)] = v.clone();
            }
        }
        out.extend(parts.into_values());
    }
    let out = jordan::independent_subset(out);
    if out.is_empty() {
        gens.iter()
            .filter(|g| exp_nilpotent(g).is_ok())
            .cloned()
            .collect()
    } else {
        out
    }
}

struct Builder {
    dims: Vec<usize>,
    gens: Vec<Matrix>,
    scalings: Vec<usize>,
    aux: Option<AuxModule>,
}

impl Builder {
    fn new(dims: &[usize]) -> Self {
        Builder {
            dims: dims.to_vec(),
            gens: Vec::new(),
            scalings: Vec::new(),
            aux: None,
        }
    }

    /// A generator given by its block on each summand (`None` = acts by 0).
    fn push(&mut self, blocks: &[Option<Matrix>]) {
        let mut m = Matrix::zeros(0, 0);
        for (b, &d) in blocks.iter().zip(&self.dims) {
            m = m.direct_sum(&b.clone().unwrap_or_else(|| zero(d)));
        }
        self.gens.push(m);
    }

    fn scale(&mut self, k: usize) {
        self.scalings.push(self.gens.len());
        self.gens.push(scaling(&self.dims, k));
    }

    fn finish(self, id: CaseId) -> CaseSpec {
        let dim: usize = self.dims.iter().sum();
        let dual_generators = self.gens.iter().map(|g| g.transpose().neg()).collect();
        let semisimple: Vec<Matrix> = self
            .gens
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.scalings.contains(i))
            .map(|(_, g)| g.clone())
            .collect();
        let nilpotents = root_vectors(&semisimple);
        CaseSpec {
            id,
            dim,
            generators: self.gens,
            scalings: self.scalings,
            pairing: Matrix::identity(dim),
            dual_generators,
            summands: self.dims,
            aux: self.aux,
            nilpotents,
            invariants: Arc::default(),
        }
    }
}

fn neg_t(a: &Matrix) -> Matrix {
    a.transpose().neg()
}

/// Build the case: generators on `V`, dual generators, pairing.
pub fn build_case(id: &CaseId) -> Result<CaseSpec> {
    use Family::*;
    id.validate()?;
    let p = |n: &str| id.param(n).expect("validated");
    let b = match id.family {
        A1 => {
            let (q, pp) = (p("q"), p("p"));
            let mut b = Builder::new(&[q * pp]);
            for e in gl_basis(q) {
                b.push(&[Some(left_action(&e, pp))]);
            }
            for e in gl_basis(pp) {
                b.push(&[Some(right_action(&e, q).neg())]);
            }
            b
        }
        A2 | A3 => {
            let n = p("n");
            let strict = id.family == A3;
            let d = if strict { n * (n - 1) / 2 } else { n * (n + 1) / 2 };
            let mut b = Builder::new(&[d]);
            for e in gl_basis(n) {
                b.push(&[Some(square_action(&e, strict))]);
            }
            b
        }
        A4 => {
            let mut b = Builder::new(&[jordan::DIM]);
            for g in jordan::e6_generators() {
                b.push(&[Some(g)]);
            }
            b.scale(0);
            b
        }
        A5 => {
            let n = p("n");
            let mut b = Builder::new(&[n]);
            for g in so_basis(n) {
                b.push(&[Some(g)]);
            }
            b.scale(0);
            b
        }
        A6 => {
            let mut b = Builder::new(&[7]);
            for g in g2_in_so7()? {
                b.push(&[Some(g)]);
            }
            b.scale(0);
            b
        }
        A7 | A8 | A9 => {
            let (d, c) = match id.family {
                A7 => (7, Chirality::Full),
                A8 => (10, Chirality::Plus),
                _ => (9, Chirality::Full),
            };
            let s = spin_module(d, c)?;
            let mut b = Builder::new(&[s.dim()]);
            for g in &s.generators {
                b.push(&[Some(g.clone())]);
            }
            b.scale(0);
            if id.family != A7 {
                let big = if d == 10 { s } else { spin_module(10, Chirality::Plus)? };
                b.aux = Some(AuxModule {
                    on_v: big.generators,
                    on_w: big.vector_action,
                });
            }
            b
        }
        A10 => {
            let (n, m) = (p("n"), p("m"));
            let mut b = Builder::new(&[2 * n * m]);
            for x in sp_basis(n) {
                b.push(&[Some(left_action(&neg_t(&x), m))]);
            }
            for e in gl_basis(m) {
                b.push(&[Some(right_action(&e, 2 * n).neg())]);
            }
            b
        }
        B1 | B2 => {
            let n = p("n");
            let mut b = Builder::new(&[n * (n - 1) / 2, n]);
            for e in gl_basis(n) {
                let y = if id.family == B1 { e.clone() } else { neg_t(&e) };
                b.push(&[Some(square_action(&e, true)), Some(y)]);
            }
            b.scale(1);
            b
        }
        B3 | B4 => {
            let (q, pp) = (p("q"), p("p"));
            let mut b = Builder::new(&[q * pp, pp]);
            for e in gl_basis(q) {
                b.push(&[Some(left_action(&e, pp)), None]);
            }
            for e in gl_basis(pp) {
                // B3: row y ↦ −yη ; B4: column y ↦ ηy
                let y = if id.family == B3 { right_action(&e, 1).neg() } else { e.clone() };
                b.push(&[Some(right_action(&e, q).neg()), Some(y)]);
            }
            b
        }
        B5 => {
            let n = p("n");
            let mut b = Builder::new(&[2 * n, 2 * n]);
            for x in sp_basis(n) {
                b.push(&[Some(x.clone()), Some(x)]);
            }
            b.scale(0);
            b.scale(1);
            b
        }
        B6 => {
            let n = p("n");
            let mut b = Builder::new(&[4 * n, 2]);
            for x in sp_basis(n) {
                b.push(&[Some(left_action(&x, 2)), None]);
            }
            for e in gl_basis(2) {
                b.push(&[Some(right_action(&e, 2 * n).neg()), Some(e.clone())]);
            }
            b.scale(0);
            b
        }
        B7 | B8 | B9 => {
            let (n, m) = (p("n"), p("m"));
            let rows = if id.family == B7 { n } else { 2 * n };
            let cols = if id.family == B9 { 2 * m } else { m };
            let mut b = Builder::new(&[2 * rows, 2 * cols]);
            if id.family == B7 {
                for e in gl_basis(n) {
                    b.push(&[Some(left_action(&e, 2)), None]);
                }
            } else {
                for x in sp_basis(n) {
                    b.push(&[Some(left_action(&x, 2)), None]);
                }
            }
            let middle = if id.family == B9 { gl_basis(2) } else { sl_basis(2) };
            for e in middle {
                b.push(&[Some(right_action(&e, rows).neg()), Some(left_action(&e, cols))]);
            }
            if id.family == B9 {
                for z in sp_basis(m) {
                    b.push(&[None, Some(right_action(&z, 2).neg())]);
                }
            } else {
                for e in gl_basis(m) {
                    b.push(&[None, Some(right_action(&e, 2).neg())]);
                }
            }
            if id.family != B7 {
                b.scale(0);
            }
            if id.family == B9 {
                b.scale(1);
            }
            b
        }
        B10 => {
            let s = spin_module(8, Chirality::Full)?;
            let mut b = Builder::new(&[8, 8]);
            for g in &s.generators {
                b.push(&[Some(g.block(0, 8)), Some(g.block(8, 16))]);
            }
            b.scale(0);
            b.scale(1);
            b.aux = Some(AuxModule {
                on_v: s.generators,
                on_w: s.vector_action,
            });
            b
        }
    };
    Ok(b.finish(id.clone()))
}

/// One small instance of every family, used by batch verification.
pub fn default_cases() -> Vec<CaseId> {
    use Family::*;
    let c = CaseId::new;
    vec![
        c(A1, &[("q", 3), ("p", 2)]),
        c(A2, &[("n", 3)]),
        c(A3, &[("n", 5)]),
        c(A4, &[]),
        c(A5, &[("n", 4)]),
        c(A6, &[]),
        c(A7, &[]),
        c(A8, &[]),
        c(A9, &[]),
        c(A10, &[("n", 2), ("m", 3)]),
        c(B1, &[("n", 5)]),
        c(B2, &[("n", 4)]),
        c(B3, &[("q", 3), ("p", 2)]),
        c(B4, &[("q", 2), ("p", 3)]),
        c(B5, &[("n", 2)]),
        c(B6, &[("n", 2)]),
        c(B7, &[("n", 2), ("m", 3)]),
        c(B8, &[("n", 2), ("m", 2)]),
        c(B9, &[("n", 1), ("m", 1)]),
        c(B10, &[]),
    ]
}

/// Small-parameter grid covering every family.
pub fn grid_cases() -> Vec<CaseId> {
    use Family::*;
    let c = CaseId::new;
    let mut out = Vec::new();
    for q in 1..=3 {
        for p in 1..=q {
            out.push(c(A1, &[("q", q), ("p", p)]));
        }
    }
    out.extend((1..=4).map(|n| c(A2, &[("n", n)])));
    out.extend((2..=4).map(|n| c(A3, &[("n", n)])));
    out.push(c(A4, &[]));
    out.extend([2, 3, 7].map(|n| c(A5, &[("n", n)])));
    out.extend([A6, A7, A8, A9].map(CaseId::bare));
    for n in 1..=3 {
        for m in 1..=5 {
            out.push(c(A10, &[("n", n), ("m", m)]));
        }
    }
    for f in [B1, B2] {
        out.extend((2..=5).map(|n| c(f, &[("n", n)])));
    }
    for f in [B3, B4] {
        for q in 1..=5 {
            for p in 1..=5 {
                out.push(c(f, &[("q", q), ("p", p)]));
            }
        }
    }
    out.extend((1..=3).map(|n| c(B5, &[("n", n)])));
    out.extend((1..=3).map(|n| c(B6, &[("n", n)])));
    for f in [B7, B8, B9] {
        for n in 1..=3 {
            for m in 1..=3 {
                out.push(c(f, &[("n", n), ("m", m)]));
            }
        }
    }
    out.push(CaseId::bare(B10));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::lie::{is_bracket_closed, span_dim};

    #[test]
    fn parse_forms() {
        let a: CaseId = "A10 n=2 m=3".parse().unwrap();
        let b: CaseId = r#"{"family":"A10","params":{"n":2,"m":3}}"#.parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"{"family":"A10","params":{"m":3,"n":2}}"#
        );
        assert_eq!(a.to_string(), "A10 n=2 m=3");
    }

    #[test]
    fn constraints() {
        assert!(build_case(&"A1 q=1 p=2".parse().unwrap()).is_err());
        assert!(build_case(&"A3 n=1".parse().unwrap()).is_err());
        assert!(build_case(&"A10 n=2".parse().unwrap()).is_err());
        let e = build_case(&"A3 n=1".parse().unwrap()).unwrap_err();
        assert!(e.to_string().contains("n ≥ 2"));
    }

    #[test]
    fn a10_span() {
        let c = build_case(&"A10 n=2 m=3".parse().unwrap()).unwrap();
        assert_eq!(c.dim, 12);
        assert_eq!(span_dim(&c.generators), 19);
        assert!(is_bracket_closed(&c.generators));
    }

    #[test]
    fn a5_span() {
        let c = build_case(&"A5 n=2".parse().unwrap()).unwrap();
        assert_eq!(c.dim, 2);
        assert_eq!(span_dim(&c.generators), 2);
    }
}
