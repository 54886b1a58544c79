//! Duality for a subgroup against duality for an overgroup acting on the
//! same space: if `O` and `O^∨` are open in their overgroup orbits, then
//! `(H·O)^∨ = H·O^∨`.

use orbitdual::classify::{classify, classify_dual, enumerate_labels, representative};
use orbitdual::conormal::{sample_conormal, tangent_on};
use orbitdual::exactlin::{random_element, seeded, EngineRng, Matrix, Scalar, Subspace, Vector};
use orbitdual::poset::builtin_poset;
use orbitdual::repcat::lie::gl_basis;
use orbitdual::repcat::{build_case, CaseSpec, Side};
use orbitdual::OrbitLabel;

fn span_orbit(gens: &[Matrix], x: &[Scalar]) -> Subspace {
    let vs: Vec<Vector> = gens.iter().map(|g| g.apply(x)).collect();
    Subspace::span(x.len(), &vs)
}

/// Generic covector label of the overgroup conormal at `x`: the sampled label
/// whose overgroup orbit has the largest dimension.
fn overgroup_dual<L: Clone + PartialEq + std::fmt::Debug>(
    gens: &[Matrix],
    pairing: &Matrix,
    x: &[Scalar],
    label_dual: impl Fn(&[Scalar]) -> L,
    rng: &mut EngineRng,
) -> L {
    let dual_gens: Vec<Matrix> = gens.iter().map(|g| g.transpose().neg()).collect();
    let n = span_orbit(gens, x).annihilator(pairing).unwrap();
    let mut best: Option<(usize, L)> = None;
    for _ in 0..8 {
        let y = if n.dim() == 0 { vec![Scalar::zero(); x.len()] } else { random_element(&n, rng, 100).unwrap() };
        let d = span_orbit(&dual_gens, &y).dim();
        let l = label_dual(&y);
        match &best {
            Some((bd, bl)) if *bd == d => assert_eq!(*bl, l, "two labels at top dimension"),
            Some((bd, _)) if *bd > d => {}
            _ => best = Some((d, l)),
        }
    }
    best.unwrap().1
}

fn open_in_overgroup(case: &CaseSpec, side: Side, over: &[Matrix], v: &[Scalar]) -> bool {
    let over_side: Vec<Matrix> = match side {
        Side::V => over.to_vec(),
        Side::Dual => over.iter().map(|g| g.transpose().neg()).collect(),
    };
    tangent_on(case, side, v).dim() == span_orbit(&over_side, v).dim()
}

/// Returns the number of orbits where both sides are open in the overgroup.
pub fn spin9_inside_spin10() -> usize {
    let a9 = build_case(&"A9".parse().unwrap()).unwrap();
    let a8 = build_case(&"A8".parse().unwrap()).unwrap();
    let p9 = builtin_poset(&a9).unwrap();
    let over = a8.generators.clone();
    let mut rng = seeded(42);
    // O_2(A8) = O_2 ∪ O_3
    let coarse: Vec<OrbitLabel> = enumerate_labels(&a9)
        .into_iter()
        .map(|l| classify(&a8, &representative(&a9, l).unwrap()).unwrap())
        .collect();
    let idx = OrbitLabel::index;
    assert_eq!(coarse, vec![idx(0), idx(1), idx(2), idx(2)]);

    let mut checked = 0;
    for l in enumerate_labels(&a9) {
        let x = representative(&a9, l).unwrap();
        let s = sample_conormal(&a9, l, &mut rng, 100).unwrap();
        assert_eq!(s.dual_label, p9.dual(&l).unwrap());
        if !open_in_overgroup(&a9, Side::V, &over, &x)
            || !open_in_overgroup(&a9, Side::Dual, &over, &s.sampled_covector)
        {
            continue;
        }
        let h_dual = overgroup_dual(&over, &a8.pairing, &x, |y| classify_dual(&a8, y).unwrap(), &mut rng);
        assert_eq!(h_dual, classify_dual(&a8, &s.sampled_covector).unwrap(), "{l}");
        checked += 1;
    }
    checked
}

pub fn b5_inside_gl2n() {
    for n in 1..=3usize {
        let case = build_case(&format!("B5 n={n}").parse().unwrap()).unwrap();
        let p = builtin_poset(&case).unwrap();
        let d = 2 * n;
        let mut over: Vec<Matrix> = gl_basis(d).iter().map(|e| e.direct_sum(e)).collect();
        over.push(Matrix::identity(d).direct_sum(&Matrix::zeros(d, d)));
        over.push(Matrix::zeros(d, d).direct_sum(&Matrix::identity(d)));
        // overgroup orbits: Z° and Y merge
        let coarse = |l: OrbitLabel| match l.to_string().as_str() {
            "Zo" => "Y".to_string(),
            s if s.starts_with('Y') => "Y".to_string(),
            s => s.to_string(),
        };
        let mut rng = seeded(42);
        for l in enumerate_labels(&case) {
            let x = representative(&case, l).unwrap();
            let s = sample_conormal(&case, l, &mut rng, 100).unwrap();
            assert_eq!(s.dual_label, p.dual(&l).unwrap(), "n={n} {l}");
            let h = overgroup_dual(&over, &case.pairing, &x, |y| coarse(classify_dual(&case, y).unwrap()), &mut rng);
            let expected = match coarse(l).as_str() {
                "0" => "Y",
                "O1" => "O'1",
                "O'1" => "O1",
                "Z~" => "Z~",
                _ => "0",
            };
            assert_eq!(h, expected, "n={n} {l}");
            let open = open_in_overgroup(&case, Side::V, &over, &x);
            assert_eq!(open, l.to_string() != "Zo", "n={n} {l}");
            if open && open_in_overgroup(&case, Side::Dual, &over, &s.sampled_covector) {
                assert_eq!(coarse(s.dual_label), h, "n={n} {l}");
            }
        }
    }
}
