use thiserror::Error;

/// Malformed input: a voting system, weighted game or number that does not
/// satisfy the structural requirements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("voter set must contain between 1 and {max} voters, got {got}")]
    VoterCount { got: usize, max: usize },
    #[error("voter name at index {0} is empty")]
    EmptyVoterName(usize),
    #[error("duplicate voter name {0:?}")]
    DuplicateVoterName(String),
    #[error("unknown voter name {0:?}")]
    UnknownVoter(String),
    #[error("voter index {index} out of range for {n} voters")]
    VoterOutOfRange { index: usize, n: usize },
    #[error("coalition {index} uses voters outside the voter set")]
    CoalitionOutOfRange { index: usize },
    #[error("MWC family is empty")]
    EmptyFamily,
    #[error("MWC family member {0} is the empty coalition")]
    EmptyCoalitionMember(usize),
    #[error("MWC family members {0} and {1} are duplicates")]
    DuplicateMember(usize, usize),
    #[error("MWC family is not an antichain: members {0} and {1} are comparable")]
    NotAntichain(usize, usize),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse {0:?} as a rational number")]
    BadNumber(String),
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("weight of voter {0} is negative")]
    NegativeWeight(usize),
    #[error("quota must be positive")]
    NonPositiveQuota,
    #[error("quota exceeds the total weight, so the grand coalition would lose")]
    QuotaExceedsTotal,
}

/// A computation refused because its cost would exceed a fixed or
/// configured resource cap.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LimitError {
    #[error("{subfamilies} sub-families of {members} MWCs exceed the term budget of {budget}")]
    SubfamilyBudgetExceeded {
        members: usize,
        subfamilies: u128,
        budget: u64,
    },
    #[error("weighted derivation enumerates all coalitions and supports at most {max} voters, got {got}")]
    TooManyVotersForDerivation { got: usize, max: usize },
    #[error("the brute-force oracle supports at most {max} voters, got {got}")]
    TooManyVotersForOracle { got: usize, max: usize },
    #[error("atlas enumeration supports at most {max} voters, got {got}")]
    AtlasSizeExceeded { got: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Limit(#[from] LimitError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
