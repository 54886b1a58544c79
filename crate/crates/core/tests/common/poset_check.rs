use orbitdual::classify::{classify, component_labels, degeneration_witness, z_labels};
use orbitdual::poset::{abstract_diagram_of, assign_orbits, builtin_poset, AbstractDiagram};
use orbitdual::repcat::{build_case, grid_cases, CaseId, Family};
use orbitdual::{Comp, OrbitLabel, Scalar};

fn case(s: &str) -> orbitdual::CaseSpec {
    build_case(&s.parse().unwrap()).unwrap()
}

/// Exchange the two summands by chain position: `a[k]` and `b[k]` trade places.
fn swap(l: OrbitLabel, a: &[Comp], b: &[Comp]) -> OrbitLabel {
    let pos = |c: Comp, chain: &[Comp]| chain.iter().position(|&x| x == c).unwrap();
    match l {
        OrbitLabel::Pure1 { l } => OrbitLabel::from_components(a[0], b[pos(l, a)]),
        OrbitLabel::Pure2 { l } => OrbitLabel::from_components(a[pos(l, b)], b[0]),
        OrbitLabel::Y { l, l2 } => OrbitLabel::y(a[pos(l2, b)], b[pos(l, a)]),
        other => other,
    }
}

pub fn assignment_reproduces_builtin_labels() {
    for id in grid_cases() {
        if !id.family.is_reducible() {
            continue;
        }
        let c = build_case(&id).unwrap();
        let p = builtin_poset(&c).unwrap();
        let n = p.labels.len();
        let perm: Vec<usize> = (0..n).rev().collect();
        let d = abstract_diagram_of(&p, &perm);
        let (a, b) = component_labels(&c).unwrap();
        let got = assign_orbits(&d, &a, &b, &z_labels(&c)).unwrap_or_else(|e| panic!("{id}: {e}"));
        let direct = (0..n).all(|i| got.labels[perm[i]] == p.labels[i]);
        let swapped = got.symmetric && (0..n).all(|i| swap(got.labels[perm[i]], &a, &b) == p.labels[i]);
        assert!(direct || swapped, "{id}");
    }
}

pub fn b8_example_assignment() {
    let (v0, a1, a2, a3, b1, b2) = (0, 1, 2, 3, 4, 5);
    let (f1, f2, c1, c2, d1, d2, vmax) = (6, 7, 8, 9, 10, 11, 12);
    let d = AbstractDiagram {
        vertices: 13,
        covers: vec![
            (v0, a1), (a1, a2), (a2, a3), (v0, b1), (b1, b2),
            (a1, f1), (b1, f1), (f1, f2), (f2, d1), (f2, c1),
            (c1, c2), (a3, c2), (b2, d1), (d1, d2), (a2, c1),
            (c1, d2), (d2, vmax), (c2, vmax),
        ],
    };
    let c = case("B8 n=2 m=2");
    let (ca, cb) = component_labels(&c).unwrap();
    let got = assign_orbits(&d, &ca, &cb, &z_labels(&c)).unwrap();
    assert!(!got.symmetric);
    let s: Vec<String> = got.labels.iter().map(|l| l.to_string()).collect();
    assert_eq!(
        s,
        ["0", "O10", "O20", "O22", "O'1", "O'2", "Z", "Y10,1", "Y20,1", "Y22,1", "Y10,2", "Y20,2", "Y22,2"]
    );
    // the diagram is exactly the builtin one
    let p = builtin_poset(&c).unwrap();
    let idx: Vec<usize> = got.labels.iter().map(|l| p.index_of(l).unwrap()).collect();
    let mut mapped: Vec<(usize, usize)> = d.covers.iter().map(|&(x, y)| (idx[x], idx[y])).collect();
    let mut covers = p.covers.clone();
    mapped.sort();
    covers.sort();
    assert_eq!(mapped, covers);
}

/// Checks every Hasse edge of the two rank-pair types; returns how many.
pub fn degeneration_witnesses() -> usize {
    let mut count = 0;
    for n in 1..=3u32 {
        for m in 1..=4u32 {
            let c = build_case(&CaseId::new(Family::A10, &[("n", n), ("m", m)])).unwrap();
            let p = builtin_poset(&c).unwrap();
            for &(a, b) in &p.covers {
                let (from, to) = (p.labels[a], p.labels[b]);
                let (OrbitLabel::RankPair { r, s }, OrbitLabel::RankPair { r: r2, s: s2 }) = (from, to) else {
                    unreachable!()
                };
                if !((r2, s2) == (r + 1, s) || (r2, s2) == (r, s + 2)) {
                    continue;
                }
                let curve = degeneration_witness(&c, from, to).unwrap();
                assert_eq!(classify(&c, &curve.at(&Scalar::zero())).unwrap(), from);
                for t in [1, -1, 2, 3] {
                    assert_eq!(classify(&c, &curve.at(&Scalar::from_int(t))).unwrap(), to, "{from}->{to}");
                }
                assert_eq!(classify(&c, &curve.at(&Scalar::frac(1, 7))).unwrap(), to);
                count += 1;
            }
        }
    }
    count
}

