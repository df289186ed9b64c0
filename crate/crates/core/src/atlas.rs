//! Exhaustive enumeration of all voting systems on a small labelled voter
//! set, and the power profiles they realise.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::coalition::{Coalition, VoterSet};
use crate::direct::DirectOptions;
use crate::error::LimitError;
use crate::math::binomial;
use crate::mwc::MwcSet;
use crate::rational::Rational;
use crate::report::{analyze, IndexKind, PowerReport};

/// Largest assembly whose systems can be enumerated.
pub const MAX_ATLAS_VOTERS: usize = 6;
/// Largest assembly for which every system is analysed.
pub const MAX_PROFILE_VOTERS: usize = 5;

/// Maximum number of MWCs on `n` voters: `C(n, floor(n/2))`.
pub fn sperner_bound(n: usize) -> BigInt {
    binomial(n as u64, n as u64 / 2)
}

/// Streams every MWC-set on voters `1..=n` exactly once.
///
/// Candidates are the non-empty coalitions ordered by cardinality, then
/// bitmask. The search extends the current antichain only with later
/// candidates that are incomparable to everything chosen so far, so each
/// node of the search tree is a distinct antichain.
pub fn enumerate_antichains(n: usize) -> Result<Antichains, LimitError> {
    if n == 0 || n > MAX_ATLAS_VOTERS {
        return Err(LimitError::AtlasSizeExceeded {
            got: n,
            max: MAX_ATLAS_VOTERS,
        });
    }
    let voters = Arc::new(VoterSet::numbered(n).expect("1 <= n <= 6"));
    let mut candidates: Vec<Coalition> = (1..1u64 << n).map(Coalition::from_bits).collect();
    candidates.sort_by_key(|c| (c.len(), c.bits()));
    // At most 63 candidates, so a frontier fits one word.
    let comparable = candidates
        .iter()
        .map(|&a| {
            candidates
                .iter()
                .enumerate()
                .filter(|(_, &b)| a.is_subset_of(b) || b.is_subset_of(a))
                .fold(0u64, |mask, (j, _)| mask | 1 << j)
        })
        .collect();
    let all = if candidates.len() == 64 {
        u64::MAX
    } else {
        (1u64 << candidates.len()) - 1
    };
    Ok(Antichains {
        voters,
        candidates,
        comparable,
        frontier: vec![all],
        chosen: Vec::new(),
    })
}

pub struct Antichains {
    voters: Arc<VoterSet>,
    candidates: Vec<Coalition>,
    /// `comparable[i]`: candidates that are subsets or supersets of candidate `i`.
    comparable: Vec<u64>,
    /// Per search depth, the candidates still available for extension.
    frontier: Vec<u64>,
    chosen: Vec<usize>,
}

impl Iterator for Antichains {
    type Item = MwcSet;

    fn next(&mut self) -> Option<MwcSet> {
        loop {
            let top = self.frontier.last_mut()?;
            if *top == 0 {
                self.frontier.pop();
                self.chosen.pop();
                continue;
            }
            let next = top.trailing_zeros() as usize;
            *top &= *top - 1;
            let extension = *top & !self.comparable[next];
            self.chosen.push(next);
            self.frontier.push(extension);
            let members = self.chosen.iter().map(|&i| self.candidates[i]).collect();
            return Some(MwcSet::new_unchecked(Arc::clone(&self.voters), members));
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtlasEntry {
    pub system: MwcSet,
    pub report: PowerReport,
}

/// Every system on `n` voters together with its power report.
pub fn atlas_entries(n: usize) -> Result<impl Iterator<Item = AtlasEntry>, LimitError> {
    let options = DirectOptions::default();
    Ok(enumerate_antichains(n)?.map(move |system| {
        // m <= 20 for n <= 6, far inside the default budget.
        let report = analyze(&system, &options).expect("atlas systems fit the budget");
        AtlasEntry { system, report }
    }))
}

/// Distinct profiles of one index, with the number of systems realising
/// each.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProfileAtlas {
    /// Profiles in voter order.
    pub ordered: BTreeMap<Vec<Rational>, usize>,
    /// Profiles sorted in descending order, forgetting voter identity.
    pub unordered: BTreeMap<Vec<Rational>, usize>,
}

impl ProfileAtlas {
    fn record(&mut self, profile: &[Rational]) {
        *self.ordered.entry(profile.to_vec()).or_default() += 1;
        let mut sorted = profile.to_vec();
        sorted.sort_by(|a, b| b.cmp(a));
        *self.unordered.entry(sorted).or_default() += 1;
    }
}

fn check_profile_size(n: usize) -> Result<(), LimitError> {
    if n == 0 || n > MAX_PROFILE_VOTERS {
        return Err(LimitError::AtlasSizeExceeded {
            got: n,
            max: MAX_PROFILE_VOTERS,
        });
    }
    Ok(())
}

pub fn profile_atlas(n: usize, kind: IndexKind) -> Result<ProfileAtlas, LimitError> {
    Ok(profile_atlases(n)?.remove(&kind).unwrap_or_default())
}

/// Profile atlases for every index kind in one pass over the systems.
pub fn profile_atlases(n: usize) -> Result<BTreeMap<IndexKind, ProfileAtlas>, LimitError> {
    check_profile_size(n)?;
    let mut out: BTreeMap<IndexKind, ProfileAtlas> =
        IndexKind::ALL.iter().map(|&k| (k, ProfileAtlas::default())).collect();
    for entry in atlas_entries(n)? {
        for (&kind, atlas) in out.iter_mut() {
            atlas.record(entry.report.profile(kind));
        }
    }
    Ok(out)
}
