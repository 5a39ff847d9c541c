//! Identity checks across the corpus: Stasheff relations for the
//! transferred operations, associativity of the harmonic product, and the
//! isomorphism onto the cohomology ring.

use ainfty_core::corpus;
use ainfty_core::hodge::HodgeData;
use ainfty_core::transfer::{
    harmonic_associativity_check, ring_isomorphism_check, stasheff_check, transfer_structure,
    transfer_structure_with, LambdaVariant, TransferOptions,
};

fn max_arity_for(name: &str) -> usize {
    // The torus has the largest ambient spaces; four inputs keep it quick.
    if name == "torus" { 4 } else { 6 }
}

#[test]
fn stasheff_identities_hold_on_every_entry() {
    for entry in corpus::ENTRIES {
        let arity = max_arity_for(entry.name);
        let dga = corpus::build(entry.name).unwrap();
        let hodge = HodgeData::compute(&dga);
        let structure = transfer_structure(&dga, &hodge, arity);
        for n in 1..=arity {
            let report = stasheff_check(&structure, n);
            assert!(report.passed(), "{} with {n} inputs:\n{report}", entry.name);
            assert_eq!(
                report.details.get("sign_variant").map(String::as_str),
                Some("printed")
            );
        }
    }
}

#[test]
fn stasheff_identities_hold_for_the_uniform_variant() {
    let dga = corpus::build("heisenberg").unwrap();
    let hodge = HodgeData::compute(&dga);
    let structure = transfer_structure_with(
        &dga,
        &hodge,
        TransferOptions { max_arity: 6, variant: LambdaVariant::Uniform, parallel: false },
    );
    for n in 1..=6 {
        let report = stasheff_check(&structure, n);
        assert!(report.passed(), "{n} inputs:\n{report}");
        assert_eq!(report.details.get("sign_variant").map(String::as_str), Some("uniform"));
    }
}

#[test]
fn harmonic_product_is_associative_on_every_entry() {
    for entry in corpus::ENTRIES {
        let dga = corpus::build(entry.name).unwrap();
        let hodge = HodgeData::compute(&dga);
        let report = harmonic_associativity_check(&dga, &hodge);
        assert!(report.passed(), "{}:\n{report}", entry.name);
    }
}

#[test]
fn harmonic_ring_matches_cohomology_on_every_entry() {
    for entry in corpus::ENTRIES {
        let dga = corpus::build(entry.name).unwrap();
        let hodge = HodgeData::compute(&dga);
        let report = ring_isomorphism_check(&dga, &hodge);
        assert!(report.passed(), "{}:\n{report}", entry.name);
    }
}
