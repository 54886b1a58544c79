use orbitdual::classify::{classify, classify_dual, enumerate_labels, representative};
use orbitdual::exactlin::seeded;
use orbitdual::repcat::{build_case, default_cases, Side};

#[test]
fn representatives_are_sound() {
    for id in default_cases() {
        let case = build_case(&id).unwrap();
        let labels = enumerate_labels(&case);
        for l in &labels {
            let v = representative(&case, *l).unwrap_or_else(|e| panic!("{id} {l}: {e}"));
            assert_eq!(classify(&case, &v).unwrap(), *l, "{id}");
            // the same coordinates read as a covector land in a valid orbit
            let d = classify_dual(&case, &v).unwrap();
            assert!(labels.contains(&d), "{id}: dual label {d} of {l}");
        }
    }
}

#[test]
fn labels_are_group_invariant() {
    let mut rng = seeded(7);
    for id in default_cases() {
        let case = build_case(&id).unwrap();
        for l in enumerate_labels(&case) {
            let v = representative(&case, l).unwrap();
            for side in [Side::V, Side::Dual] {
                let g = case.random_group_element(side, &mut rng, 6);
                let w = g.apply(&v);
                let (a, b) = match side {
                    Side::V => (classify(&case, &v), classify(&case, &w)),
                    Side::Dual => (classify_dual(&case, &v), classify_dual(&case, &w)),
                };
                assert_eq!(a.unwrap(), b.unwrap(), "{id} {l} {side:?}");
            }
        }
    }
}
