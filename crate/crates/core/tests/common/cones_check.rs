use orbitdual::cones::{abstract_diagram, bundled_face_orbits, bundled_sp2n_gl3};
use orbitdual::poset::builtin_poset;
use orbitdual::repcat::build_case;

/// The bundled face diagram, with faces named by orbits, equals the rank-pair
/// Hasse diagram for `n = 3, 4`.
pub fn bundled_matches_rank_pairs() {
    let d = abstract_diagram(&bundled_sp2n_gl3());
    let names = bundled_face_orbits();
    for n in [3, 4] {
        let case = build_case(&format!("A10 n={n} m=3").parse().unwrap()).unwrap();
        let p = builtin_poset(&case).unwrap();
        let idx = |f: usize| p.index_of(&names[f].1).unwrap();
        let mut mapped: Vec<(usize, usize)> = d.covers.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
        let mut covers = p.covers.clone();
        mapped.sort();
        covers.sort();
        assert_eq!(mapped, covers, "n={n}");
    }
}
