mod common;

use common::r;
use mwc_power::atlas::{atlas_entries, enumerate_antichains, profile_atlas, profile_atlases, sperner_bound};
use mwc_power::oracle::{oracle_banzhaf, oracle_ssi};
use mwc_power::{analyze, BigInt, DirectOptions, IndexKind, MwcSet, Rational};

// Distinct unordered profile counts below were computed independently from
// the permutation-pivot and swing-count definitions over every system.

#[test]
fn three_voter_ssi_profiles() {
    let atlas = profile_atlas(3, IndexKind::Ssi).unwrap();
    let expected = vec![
        vec![Rational::one(), Rational::zero(), Rational::zero()],
        vec![r(2, 3), r(1, 6), r(1, 6)],
        vec![r(1, 2), r(1, 2), Rational::zero()],
        vec![r(1, 3), r(1, 3), r(1, 3)],
    ];
    let mut got: Vec<Vec<Rational>> = atlas.unordered.keys().cloned().collect();
    got.sort_by(|a, b| b.cmp(a));
    assert_eq!(got, expected);
    assert_eq!(atlas.unordered.values().sum::<usize>(), 18);
}

#[test]
fn four_voter_profile_counts() {
    let atlases = profile_atlases(4).unwrap();
    assert_eq!(atlases[&IndexKind::Ssi].unordered.len(), 11);
    assert_eq!(atlases[&IndexKind::Pbi].unordered.len(), 12);
    for atlas in atlases.values() {
        assert_eq!(atlas.ordered.values().sum::<usize>(), 166);
        assert!(atlas.ordered.len() >= atlas.unordered.len());
    }
}

#[test]
fn entries_carry_the_pipeline_report() {
    for entry in atlas_entries(3).unwrap() {
        assert_eq!(entry.report, analyze(&entry.system, &DirectOptions::default()).unwrap());
        assert_eq!(entry.report.bs, oracle_banzhaf(&entry.system).unwrap());
        assert_eq!(entry.report.ssi, oracle_ssi(&entry.system).unwrap());
    }
}

#[test]
fn five_voter_systems_respect_the_sperner_bound() {
    let bound = sperner_bound(5);
    let mut count = 0;
    for system in enumerate_antichains(5).unwrap() {
        assert!(BigInt::from(system.len()) <= bound);
        let again = MwcSet::new(system.shared_voters(), system.members().to_vec());
        assert_eq!(again.as_ref(), Ok(&system));
        count += 1;
    }
    assert_eq!(count, 7579);
}
