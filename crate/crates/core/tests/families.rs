mod common;

use hamlab_core::conditions::is_claw_free;
use hamlab_core::families::{
    brousek, brousek_specs, find_induced_brousek, g1, g2, g2_pattern, g3, perturbed_brousek, validate_counterexample,
    FamilyError, G2Layout,
};
use hamlab_core::gamma::{find_bad_p6, GammaPattern};
use hamlab_core::hamilton::HamOptions;

#[test]
fn small_brousek_members_are_claw_free_and_non_hamiltonian() {
    let specs = brousek_specs(10);
    assert!(!specs.is_empty());
    for spec in specs {
        let g = brousek(spec).unwrap().graph;
        assert_eq!(g.order(), spec.order());
        assert!(is_claw_free(&g), "{spec:?}");
        assert!(g.is_two_connected(), "{spec:?}");
        assert!(!common::hamiltonian_by_permutations(&g), "{spec:?}");
    }
}

#[test]
fn spec_parsing_is_canonical_up_to_connector_order() {
    let a: hamlab_core::families::BrousekSpec = "4,T,3".parse().unwrap();
    let b: hamlab_core::families::BrousekSpec = "T,3,4".parse().unwrap();
    assert_eq!(a.canonical(), b.canonical());
    assert!("T,2,3".parse::<hamlab_core::families::BrousekSpec>().is_err());
    assert!("T,T".parse::<hamlab_core::families::BrousekSpec>().is_err());
}

#[test]
fn perturbed_members_keep_an_induced_copy() {
    for seed in 0..10 {
        let g = perturbed_brousek("3,T,3".parse().unwrap(), seed, 4).unwrap();
        assert!(find_induced_brousek(&g).is_some(), "seed {seed}");
    }
}

#[test]
fn outer_families_validate() {
    let g1 = g1(7).unwrap();
    assert!(validate_counterexample(&g1, Some(GammaPattern::from_codes(&[22, 55])), &HamOptions::default()).passed());

    let g3 = g3(8, 31).unwrap();
    let gamma = GammaPattern::from_codes(&[11, 13, 46, 66]);
    let report = validate_counterexample(&g3, Some(gamma), &HamOptions::default());
    assert!(report.passed(), "{:?}", report.failures());
    assert!(find_bad_p6(&g3.graph, GammaPattern::from_codes(&[11])).is_some());
}

#[test]
fn middle_family_needs_more_than_the_minimal_parameters() {
    assert!(matches!(
        g2(6, 12, 12, 23, G2Layout::default()),
        Err(FamilyError::Validation(_))
    ));
    let w = g2(7, 13, 13, 25, G2Layout::default()).unwrap();
    assert_eq!(w.graph.order(), 7 + 13 + 13 + 25 + 8);
    assert!(find_bad_p6(&w.graph, g2_pattern()).is_none());
}
