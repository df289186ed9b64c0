//! The MWC-set: a validated antichain of non-empty coalitions, which fully
//! describes a voting system (a coalition wins iff it contains a member).

use std::sync::Arc;

use crate::coalition::{Coalition, VoterSet};
use crate::error::ValidationError;
use crate::math::binomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwcSet {
    voters: Arc<VoterSet>,
    members: Vec<Coalition>,
}

impl MwcSet {
    /// Checks that `candidates` form a non-empty antichain of non-empty
    /// coalitions over `voters`. Input order is kept.
    pub fn new(
        voters: impl Into<Arc<VoterSet>>,
        candidates: Vec<Coalition>,
    ) -> Result<Self, ValidationError> {
        let voters = voters.into();
        if candidates.is_empty() {
            return Err(ValidationError::EmptyFamily);
        }
        for (i, &c) in candidates.iter().enumerate() {
            if !voters.contains(c) {
                return Err(ValidationError::CoalitionOutOfRange { index: i });
            }
            if c.is_empty() {
                return Err(ValidationError::EmptyCoalitionMember(i));
            }
        }
        for (i, &a) in candidates.iter().enumerate() {
            for (j, &b) in candidates.iter().enumerate().skip(i + 1) {
                if a == b {
                    return Err(ValidationError::DuplicateMember(i, j));
                }
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    return Err(ValidationError::NotAntichain(i, j));
                }
            }
        }
        let set = MwcSet {
            voters,
            members: candidates,
        };
        debug_assert!(num_bigint::BigInt::from(set.len()) <= binomial(set.n() as u64, set.n() as u64 / 2));
        Ok(set)
    }

    /// Caller guarantees the antichain invariants.
    pub(crate) fn new_unchecked(voters: Arc<VoterSet>, members: Vec<Coalition>) -> Self {
        MwcSet { voters, members }
    }

    /// Builds a set from lists of voter names.
    pub fn from_names<S: AsRef<str>>(
        voters: impl Into<Arc<VoterSet>>,
        coalitions: &[Vec<S>],
    ) -> Result<Self, ValidationError> {
        let voters = voters.into();
        let members = coalitions
            .iter()
            .map(|names| voters.coalition_from_names(names.iter().map(AsRef::as_ref)))
            .collect::<Result<Vec<_>, _>>()?;
        MwcSet::new(voters, members)
    }

    pub fn voters(&self) -> &VoterSet {
        &self.voters
    }

    pub fn shared_voters(&self) -> Arc<VoterSet> {
        Arc::clone(&self.voters)
    }

    /// Number of voters.
    pub fn n(&self) -> usize {
        self.voters.len()
    }

    /// Number of MWCs.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Coalition] {
        &self.members
    }

    /// Voters appearing in at least one MWC.
    pub fn support(&self) -> Coalition {
        self.members.iter().fold(Coalition::EMPTY, |acc, &c| acc.union(c))
    }

    /// Voters in no MWC.
    pub fn dummies(&self) -> Coalition {
        self.support().complement(self.n())
    }
}

/// Free-function form of [`MwcSet::new`].
pub fn validate_mwc_set(
    voters: impl Into<Arc<VoterSet>>,
    candidates: Vec<Coalition>,
) -> Result<MwcSet, ValidationError> {
    MwcSet::new(voters, candidates)
}
