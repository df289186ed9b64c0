#![allow(dead_code)]

use mwc_power::{is_winning, Coalition, MwcSet, Rational, VoterSet, WeightedGame};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random antichain on `n` voters with at most `max_m` members: draws
/// coalitions of random size and keeps those incomparable to everything kept
/// so far.
pub fn random_antichain<R: Rng>(rng: &mut R, n: usize, max_m: usize) -> MwcSet {
    let target = rng.gen_range(1..=max_m);
    let mut members: Vec<Coalition> = Vec::new();
    let mut voters: Vec<usize> = (0..n).collect();
    for _ in 0..40 * max_m {
        if members.len() == target {
            break;
        }
        let k = rng.gen_range(1..=n);
        voters.shuffle(rng);
        let c = Coalition::from_indices(voters[..k].iter().copied());
        if members
            .iter()
            .all(|&v| !v.is_subset_of(c) && !c.is_subset_of(v))
        {
            members.push(c);
        }
    }
    MwcSet::new(VoterSet::numbered(n).unwrap(), members).unwrap()
}

/// Random antichain with at least `min_m` members, topped up with
/// middle-layer coalitions. Loops forever if `min_m` is unreachable for `n`.
pub fn random_wide_antichain<R: Rng>(rng: &mut R, n: usize, min_m: usize, max_m: usize) -> MwcSet {
    loop {
        let s = random_antichain(rng, n, max_m);
        if s.len() >= min_m {
            return s;
        }
        let mut members = s.members().to_vec();
        let mut voters: Vec<usize> = (0..n).collect();
        for _ in 0..2000 {
            if members.len() >= max_m {
                break;
            }
            voters.shuffle(rng);
            let c = Coalition::from_indices(voters[..n / 2].iter().copied());
            if members.iter().all(|&v| !v.is_subset_of(c) && !c.is_subset_of(v)) {
                members.push(c);
            }
        }
        if members.len() >= min_m {
            return MwcSet::new(s.shared_voters(), members).unwrap();
        }
    }
}

pub fn random_weighted_game<R: Rng>(rng: &mut R, n: usize) -> WeightedGame {
    let mut weights: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=10)).collect();
    if weights.iter().all(|&w| w == 0) {
        weights[0] = 1;
    }
    let quota = rng.gen_range(1..=weights.iter().sum::<i64>());
    WeightedGame::new(
        VoterSet::numbered(n).unwrap(),
        weights.into_iter().map(Rational::from).collect(),
        Rational::from(quota),
    )
    .unwrap()
}

/// Relabels voter `i` as `perm[i]`.
pub fn permute(system: &MwcSet, perm: &[usize]) -> MwcSet {
    let members = system
        .members()
        .iter()
        .map(|c| Coalition::from_indices(c.members().map(|i| perm[i])))
        .collect();
    MwcSet::new(system.shared_voters(), members).unwrap()
}

/// The definition: no coalition wins together with its complement.
pub fn is_proper_by_definition(system: &MwcSet) -> bool {
    let n = system.n();
    (0..1u64 << n).map(Coalition::from_bits).all(|a| {
        !(is_winning(system, a) && is_winning(system, a.complement(n)))
    })
}

/// `A ⊆ B` and `A` winning implies `B` winning, checked through every
/// single-voter extension of every coalition.
pub fn is_monotone(system: &MwcSet) -> bool {
    let n = system.n();
    (0..1u64 << n).map(Coalition::from_bits).all(|a| {
        !is_winning(system, a)
            || (0..n)
                .filter(|&w| !a.contains(w))
                .all(|w| is_winning(system, a.with(w)))
    })
}

pub fn brute_count_winning(system: &MwcSet) -> u64 {
    (0..1u64 << system.n())
        .filter(|&bits| is_winning(system, Coalition::from_bits(bits)))
        .count() as u64
}

pub fn eec_voters() -> VoterSet {
    VoterSet::new(["F", "G", "I", "B", "N", "L"]).unwrap()
}

pub fn eec_game() -> WeightedGame {
    WeightedGame::new(
        eec_voters(),
        [4, 4, 4, 2, 2, 1].into_iter().map(Rational::from).collect(),
        Rational::from(12),
    )
    .unwrap()
}

pub fn eec_mwc() -> MwcSet {
    MwcSet::from_names(
        eec_voters(),
        &[
            vec!["F", "G", "I"],
            vec!["F", "G", "B", "N"],
            vec!["F", "I", "B", "N"],
            vec!["G", "I", "B", "N"],
        ],
    )
    .unwrap()
}

pub fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q).unwrap()
}
