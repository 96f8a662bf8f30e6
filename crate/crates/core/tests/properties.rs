//! Property tests for the exact ring, operators, folds and the monopole torus.

mod common;

fn assert_prop(r: common::PropResult) {
    if let Err(e) = r {
        panic!("{}", e);
    }
}

#[test]
fn ring_axioms() {
    assert_prop(common::ring_axioms(128));
}

#[test]
fn operator_composition_is_associative() {
    assert_prop(common::operator_associativity(96));
}

#[test]
fn folds_agree_on_symmetric_basis() {
    assert_prop(common::fold_agreement(48, 12));
}

#[test]
fn monopole_operators_are_weyl_invariant() {
    assert_prop(common::weyl_invariance(48));
}

#[test]
fn grading_is_additive() {
    assert_prop(common::grading_additivity(96));
}

#[test]
fn embedding_is_a_homomorphism() {
    assert_prop(common::embedding_homomorphism(200));
}
