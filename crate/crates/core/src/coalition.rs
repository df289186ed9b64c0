use std::collections::HashSet;
use std::fmt;

use crate::error::ValidationError;

/// Largest supported assembly: a coalition is one `u64` word.
pub const MAX_VOTERS: usize = 64;

/// Ordered, named voters. A voter's identity is its index; names are for
/// display and input parsing only.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VoterSet {
    names: Vec<String>,
}

impl VoterSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, ValidationError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() || names.len() > MAX_VOTERS {
            return Err(ValidationError::VoterCount {
                got: names.len(),
                max: MAX_VOTERS,
            });
        }
        let mut seen = HashSet::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(ValidationError::EmptyVoterName(i));
            }
            if !seen.insert(name.as_str()) {
                return Err(ValidationError::DuplicateVoterName(name.clone()));
            }
        }
        Ok(VoterSet { names })
    }

    /// Voters named `1..=n`.
    pub fn numbered(n: usize) -> Result<Self, ValidationError> {
        VoterSet::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn grand_coalition(&self) -> Coalition {
        Coalition::full(self.len())
    }

    pub fn contains(&self, coalition: Coalition) -> bool {
        coalition.bits() & !self.grand_coalition().bits() == 0
    }

    pub fn coalition_from_names<S: AsRef<str>>(
        &self,
        names: impl IntoIterator<Item = S>,
    ) -> Result<Coalition, ValidationError> {
        names.into_iter().try_fold(Coalition::EMPTY, |acc, name| {
            let name = name.as_ref();
            self.index_of(name)
                .map(|i| acc.with(i))
                .ok_or_else(|| ValidationError::UnknownVoter(name.to_string()))
        })
    }

    pub fn coalition_names(&self, coalition: Coalition) -> Vec<&str> {
        coalition.members().map(|i| self.name(i)).collect()
    }
}

/// A set of voters as a bitmask: bit `i` set means voter `i` is a member.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coalition(u64);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub const fn from_bits(bits: u64) -> Self {
        Coalition(bits)
    }

    /// The first `n` voters.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            Coalition(u64::MAX)
        } else {
            Coalition((1u64 << n) - 1)
        }
    }

    pub fn singleton(voter: usize) -> Self {
        Coalition(1u64 << voter)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        indices.into_iter().fold(Coalition::EMPTY, |c, i| c.with(i))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, voter: usize) -> bool {
        voter < 64 && self.0 >> voter & 1 == 1
    }

    #[must_use]
    pub fn with(self, voter: usize) -> Self {
        Coalition(self.0 | 1u64 << voter)
    }

    #[must_use]
    pub fn without(self, voter: usize) -> Self {
        Coalition(self.0 & !(1u64 << voter))
    }

    pub const fn union(self, other: Coalition) -> Self {
        Coalition(self.0 | other.0)
    }

    pub const fn intersection(self, other: Coalition) -> Self {
        Coalition(self.0 & other.0)
    }

    pub const fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & other.0 == self.0
    }

    pub const fn is_disjoint(self, other: Coalition) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement within the first `n` voters.
    pub const fn complement(self, n: usize) -> Self {
        Coalition(!self.0 & Coalition::full(n).0)
    }

    /// Member indices in ascending order.
    pub fn members(self) -> Members {
        Members(self.0)
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members()).finish()
    }
}

#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}
