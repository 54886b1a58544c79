//! Tangent spaces, conormal spaces and sampled duals of orbits.

use serde::{Deserialize, Serialize};

use crate::classify::{classify, classify_dual, enumerate_labels, representative, z_labels, OrbitLabel, ZData};
use crate::error::{Error, Result};
use crate::exactlin::{random_element, seeded, EngineRng, Scalar, Subspace, Vector, DEFAULT_HEIGHT};
use crate::poset::{builtin_poset, OrbitPoset};
use crate::repcat::{CaseId, CaseSpec, Side};

/// Steps of the random unipotent used to move a base point off its canonical form.
pub const BASE_STEPS: usize = 6;
pub const DEFAULT_TRIALS: usize = 8;

/// `𝔤·x` on the given side.
pub fn tangent_on(case: &CaseSpec, side: Side, x: &[Scalar]) -> Subspace {
    let vs: Vec<Vector> = case.generators_on(side).iter().map(|g| g.apply(x)).collect();
    Subspace::span(case.dim, &vs)
}

pub fn tangent(case: &CaseSpec, x: &[Scalar]) -> Subspace {
    tangent_on(case, Side::V, x)
}

/// Annihilator of the tangent space in `V*`.
pub fn conormal(case: &CaseSpec, x: &[Scalar]) -> Result<Subspace> {
    tangent(case, x).annihilator(&case.pairing)
}

pub fn orbit_dim(case: &CaseSpec, label: OrbitLabel) -> Result<usize> {
    Ok(tangent(case, &representative(case, label)?).dim())
}

/// Dimension of the `V*` orbit through `y`.
pub fn dual_orbit_dim(case: &CaseSpec, y: &[Scalar]) -> usize {
    tangent_on(case, Side::Dual, y).dim()
}

/// One draw of a covector from the conormal space at a moved base point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConormalSample {
    pub case: CaseId,
    pub base_label: OrbitLabel,
    pub base_point: Vector,
    pub conormal_dim: usize,
    pub sampled_covector: Vector,
    pub dual_label: OrbitLabel,
}

pub fn sample_conormal(
    case: &CaseSpec,
    label: OrbitLabel,
    rng: &mut EngineRng,
    height: i64,
) -> Result<ConormalSample> {
    let rep = representative(case, label)?;
    let g = case.random_group_element(Side::V, rng, BASE_STEPS);
    let x = g.apply(&rep);
    if classify(case, &x)? != label {
        return Err(Error::Internal(format!("group element moved {label} off its orbit")));
    }
    let n = conormal(case, &x)?;
    let y = if n.dim() == 0 {
        vec![Scalar::zero(); case.dim]
    } else {
        random_element(&n, rng, height)?
    };
    Ok(ConormalSample {
        case: case.id.clone(),
        base_label: label,
        base_point: x,
        conormal_dim: n.dim(),
        dual_label: classify_dual(case, &y)?,
        sampled_covector: y,
    })
}

/// Orbit in `V*` met by a generic conormal covector: the maximum of the
/// sampled labels in the closure order.
pub fn empirical_dual_in(
    case: &CaseSpec,
    poset: &OrbitPoset,
    label: OrbitLabel,
    trials: usize,
    rng: &mut EngineRng,
    height: i64,
) -> Result<OrbitLabel> {
    if trials == 0 {
        return Err(Error::InvalidCase("trials must be positive".into()));
    }
    let mut seen = Vec::with_capacity(trials);
    for _ in 0..trials {
        seen.push(sample_conormal(case, label, rng, height)?.dual_label);
    }
    poset.maximum(&seen)
}

pub fn empirical_dual(
    case: &CaseSpec,
    label: OrbitLabel,
    trials: usize,
    rng: &mut EngineRng,
) -> Result<OrbitLabel> {
    let poset = builtin_poset(case)?;
    empirical_dual_in(case, &poset, label, trials, rng, DEFAULT_HEIGHT)
}

/// Outcome for one orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelReport {
    pub label: OrbitLabel,
    pub expected: OrbitLabel,
    pub empirical: OrbitLabel,
    pub dim_recorded: usize,
    pub dim_measured: usize,
    pub dual_dim_measured: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: CaseId,
    pub seed: u64,
    pub trials: usize,
    pub height: i64,
    pub labels: Vec<LabelReport>,
    pub involution: bool,
    pub ok: bool,
}

/// Compare sampled duals and measured dimensions with the closed forms.
pub fn verify_case(case: &CaseSpec, trials: usize, seed: u64, height: i64) -> Result<CaseReport> {
    let poset = builtin_poset(case)?;
    let mut rng = seeded(seed);
    let mut labels = Vec::new();
    for l in enumerate_labels(case) {
        let expected = poset.dual(&l)?;
        let empirical = empirical_dual_in(case, &poset, l, trials, &mut rng, height)?;
        let dim_recorded = poset.dim(&l)?;
        let dim_measured = orbit_dim(case, l)?;
        let dual_dim_measured = dual_orbit_dim(case, &representative(case, l)?);
        labels.push(LabelReport {
            label: l,
            expected,
            empirical,
            dim_recorded,
            dim_measured,
            dual_dim_measured,
            matches: expected == empirical && dim_recorded == dim_measured && dim_recorded == dual_dim_measured,
        });
    }
    let involution = poset
        .labels
        .iter()
        .all(|l| poset.dual(&poset.dual(l).expect("label")).ok() == Some(*l));
    let ok = involution && labels.iter().all(|r| r.matches);
    Ok(CaseReport {
        case: case.id.clone(),
        seed,
        trials,
        height,
        labels,
        involution,
        ok,
    })
}

/// The map `i ↦ j` with `Z_i^∨ = Z_j`, read off the sampled duals (cases with
/// an indexed family of `Z` orbits).
pub fn regenerate_z_duality(case: &CaseSpec, trials: usize, seed: u64) -> Result<Vec<(u32, u32)>> {
    let poset = builtin_poset(case)?;
    let mut rng = seeded(seed);
    let mut out = Vec::new();
    for (z, _, _) in z_labels(case) {
        let OrbitLabel::Z { z: ZData::Index(i) } = z else {
            continue;
        };
        match empirical_dual_in(case, &poset, z, trials, &mut rng, DEFAULT_HEIGHT)? {
            OrbitLabel::Z { z: ZData::Index(j) } => out.push((i, j)),
            other => {
                return Err(Error::Internal(format!("{z} sampled dual {other} is not a Z orbit")))
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::build_case;

    #[test]
    fn zero_and_open() {
        let case = build_case(&"A2 n=2".parse().unwrap()).unwrap();
        let zero = vec![Scalar::zero(); case.dim];
        assert_eq!(tangent(&case, &zero).dim(), 0);
        assert_eq!(conormal(&case, &zero).unwrap().dim(), case.dim);
        let open = representative(&case, OrbitLabel::index(2)).unwrap();
        assert_eq!(conormal(&case, &open).unwrap().dim(), 0);
    }
}
