mod common;

use common::restriction::{b5_inside_gl2n, spin9_inside_spin10};

#[test]
fn spin9_in_spin10() {
    // O_0, O_1, O_3 qualify
    assert_eq!(spin9_inside_spin10(), 3);
}

#[test]
fn b5_in_gl2n() {
    b5_inside_gl2n();
}
