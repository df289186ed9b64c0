use std::sync::Arc;

use crate::coalition::{Coalition, VoterSet};
use crate::error::ValidationError;
use crate::rational::Rational;

/// Weighted voting game: a coalition wins iff its total weight meets or
/// exceeds the quota.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGame {
    voters: Arc<VoterSet>,
    weights: Vec<Rational>,
    quota: Rational,
}

impl WeightedGame {
    /// Requires one nonnegative weight per voter and `0 < quota <= total`,
    /// so the empty coalition loses and the grand coalition wins.
    pub fn new(
        voters: impl Into<Arc<VoterSet>>,
        weights: Vec<Rational>,
        quota: Rational,
    ) -> Result<Self, ValidationError> {
        let voters = voters.into();
        if weights.len() != voters.len() {
            return Err(ValidationError::WeightCount {
                expected: voters.len(),
                got: weights.len(),
            });
        }
        if let Some(i) = weights.iter().position(Rational::is_negative) {
            return Err(ValidationError::NegativeWeight(i));
        }
        if quota <= Rational::zero() {
            return Err(ValidationError::NonPositiveQuota);
        }
        let total: Rational = weights.iter().sum();
        if quota > total {
            return Err(ValidationError::QuotaExceedsTotal);
        }
        Ok(WeightedGame {
            voters,
            weights,
            quota,
        })
    }

    pub fn voters(&self) -> &VoterSet {
        &self.voters
    }

    pub fn shared_voters(&self) -> Arc<VoterSet> {
        Arc::clone(&self.voters)
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn quota(&self) -> &Rational {
        &self.quota
    }

    pub fn weight_of(&self, coalition: Coalition) -> Rational {
        coalition.members().map(|i| &self.weights[i]).sum()
    }

    pub fn is_winning(&self, coalition: Coalition) -> bool {
        self.weight_of(coalition) >= self.quota
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| Rational::from(v)).collect()
    }

    #[test]
    fn eec_weights() {
        let v = VoterSet::new(["F", "G", "I", "B", "N", "L"]).unwrap();
        let g = WeightedGame::new(v, ints(&[4, 4, 4, 2, 2, 1]), Rational::from(12)).unwrap();
        assert!(g.is_winning(Coalition::from_indices([0, 1, 2])));
        assert!(!g.is_winning(Coalition::from_indices([0, 1, 3, 5])));
        assert_eq!(g.weight_of(Coalition::full(6)), Rational::from(17));
    }

    #[test]
    fn quota_bounds() {
        let v = VoterSet::numbered(3).unwrap();
        assert_eq!(
            WeightedGame::new(v.clone(), ints(&[1, 1, 1]), Rational::zero()),
            Err(ValidationError::NonPositiveQuota)
        );
        assert_eq!(
            WeightedGame::new(v.clone(), ints(&[1, 1, 1]), Rational::from(4)),
            Err(ValidationError::QuotaExceedsTotal)
        );
        assert!(WeightedGame::new(v.clone(), ints(&[1, 1, 1]), Rational::from(3)).is_ok());
        assert_eq!(
            WeightedGame::new(v.clone(), ints(&[1, -1, 1]), Rational::from(1)),
            Err(ValidationError::NegativeWeight(1))
        );
        assert_eq!(
            WeightedGame::new(v, ints(&[1, 1]), Rational::from(1)),
            Err(ValidationError::WeightCount { expected: 3, got: 2 })
        );
    }
}
