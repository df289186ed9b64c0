//! Voting-system semantics derived from an MWC-set.

use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::coalition::Coalition;
use crate::direct::{self, DirectOptions};
use crate::error::LimitError;
use crate::mwc::MwcSet;
use crate::weighted::WeightedGame;

/// Largest assembly [`derive_mwc`] will enumerate.
pub const MAX_DERIVATION_VOTERS: usize = 24;

/// A coalition wins iff it contains some MWC.
pub fn is_winning(system: &MwcSet, coalition: Coalition) -> bool {
    system.members().iter().any(|v| v.is_subset_of(coalition))
}

/// `voter` belongs to the winning `coalition` and its removal makes it lose.
pub fn is_decisive(system: &MwcSet, voter: usize, coalition: Coalition) -> bool {
    coalition.contains(voter)
        && is_winning(system, coalition)
        && !is_winning(system, coalition.without(voter))
}

/// A system is proper iff no two of its MWCs are disjoint; otherwise both
/// of them and their complements would win.
pub fn is_proper(system: &MwcSet) -> bool {
    let members = system.members();
    members
        .iter()
        .enumerate()
        .all(|(i, a)| members[i + 1..].iter().all(|b| !a.is_disjoint(*b)))
}

/// Number of winning coalitions, by inclusion-exclusion over the principal
/// filters of the MWCs. Visits all `2^m - 1` sub-families with no budget.
pub fn count_winning(system: &MwcSet) -> BigInt {
    let options = DirectOptions::default().with_budget(direct::MAX_TERM_BUDGET);
    direct::tally(system, &options)
        .expect("MWC-set too large to count")
        .winning_count()
}

/// MWC-set of a weighted game: coalitions that meet the quota and fall
/// below it when any single member leaves. Sorted by cardinality, then by
/// bitmask.
pub fn derive_mwc(game: &WeightedGame) -> Result<MwcSet, LimitError> {
    let n = game.voters().len();
    if n > MAX_DERIVATION_VOTERS {
        return Err(LimitError::TooManyVotersForDerivation {
            got: n,
            max: MAX_DERIVATION_VOTERS,
        });
    }

    // Scale weights and quota to integers over a common denominator.
    let lcm = game
        .weights()
        .iter()
        .chain(std::iter::once(game.quota()))
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let scale = |r: &crate::Rational| r.numer() * (&lcm / r.denom());
    let weights: Vec<BigInt> = game.weights().iter().map(scale).collect();
    let quota = scale(game.quota());
    let total: BigInt = weights.iter().sum();

    let mut members = match total.to_u128() {
        Some(_) => {
            let weights: Vec<u128> = weights.iter().map(|w| w.to_u128().unwrap()).collect();
            scan_minimal(&weights, quota.to_u128().unwrap())
        }
        None => scan_minimal(&weights, quota),
    };
    members.sort_by_key(|c| (c.len(), c.bits()));
    Ok(MwcSet::new_unchecked(game.shared_voters(), members))
}

/// Half-table of subset sums and minima over `weights`.
fn half_tables<T>(weights: &[T]) -> (Vec<T>, Vec<Option<T>>)
where
    T: Clone + Ord + Zero,
    for<'a> &'a T: Add<&'a T, Output = T>,
{
    let size = 1usize << weights.len();
    let mut sums = vec![T::zero(); size];
    let mut mins: Vec<Option<T>> = vec![None; size];
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        sums[mask] = &sums[rest] + &weights[low];
        mins[mask] = Some(match &mins[rest] {
            Some(m) if *m < weights[low] => m.clone(),
            _ => weights[low].clone(),
        });
    }
    (sums, mins)
}

/// Enumerates every coalition; `A` is minimal winning iff
/// `w(A) >= q` and `w(A) - min_{i in A} w(i) < q`.
fn scan_minimal<T>(weights: &[T], quota: T) -> Vec<Coalition>
where
    T: Clone + Ord + Zero + Send + Sync,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    let low_bits = weights.len() / 2;
    let (lo_sum, lo_min) = half_tables(&weights[..low_bits]);
    let (hi_sum, hi_min) = half_tables(&weights[low_bits..]);
    (0..hi_sum.len())
        .into_par_iter()
        .flat_map_iter(|hi| {
            let (lo_sum, lo_min, hi_sum, hi_min, quota) = (&lo_sum, &lo_min, &hi_sum, &hi_min, &quota);
            (0..lo_sum.len()).filter_map(move |lo| {
                let total = &lo_sum[lo] + &hi_sum[hi];
                if total < *quota {
                    return None;
                }
                let lightest = match (&lo_min[lo], &hi_min[hi]) {
                    (Some(a), Some(b)) => a.min(b),
                    (Some(a), None) | (None, Some(a)) => a,
                    (None, None) => return None,
                };
                if &total - lightest < *quota {
                    Some(Coalition::from_bits(((hi as u64) << low_bits) | lo as u64))
                } else {
                    None
                }
            })
        })
        .collect()
}
