//! Randomised property suites for the representation-theory layer.

mod common;

#[test]
fn freudenthal_totals_match_weyl_dimension() {
    common::freudenthal_totals(false).unwrap();
}

#[test]
fn exterior_powers_have_binomial_totals() {
    common::exterior_binomials(false).unwrap();
}

#[test]
fn peeling_reconstructs_the_multiset() {
    common::peel_reconstruction(false).unwrap();
}

#[test]
fn dot_normalisation_is_idempotent() {
    common::dot_idempotence(false).unwrap();
}
