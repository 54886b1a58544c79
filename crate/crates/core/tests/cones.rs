mod common;

use common::fm::random_systems_agree;
use common::cones_check::bundled_matches_rank_pairs;

#[test]
fn fourier_motzkin_matches_grid() {
    let (faces, bad) = random_systems_agree(200, 42);
    assert!(faces > 0);
    assert_eq!(bad, 0);
}

#[test]
fn bundled_diagram_is_the_rank_pair_hexagon() {
    bundled_matches_rank_pairs();
}
