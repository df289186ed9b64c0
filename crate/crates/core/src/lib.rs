//! Exact voting-power indices for simple voting games described by their
//! minimal winning coalitions (MWCs).
//!
//! The Banzhaf score and Shapley-Shubik index are computed in
//! [`direct`] by a signed fold over all sub-families of the MWC-set, without
//! ever listing winning coalitions. [`oracle`] recomputes them from the
//! definitions by brute force. [`atlas`] enumerates every voting system on up
//! to six voters.
//!
//! All index values are exact [`Rational`]s.

pub mod atlas;
pub mod coalition;
pub mod direct;
pub mod error;
pub mod game;
mod math;
pub mod mwc;
pub mod oracle;
pub mod rational;
pub mod report;
pub mod weighted;

pub use coalition::{Coalition, VoterSet, MAX_VOTERS};
pub use direct::{
    banzhaf_scores, banzhaf_scores_with, penrose_banzhaf_index, penrose_banzhaf_power,
    shapley_shubik, shapley_shubik_with, trace, DirectOptions, TraceKind, TraceReport, TraceSteps,
    TraversalOrder,
};
pub use error::{Error, LimitError, Result, ValidationError};
pub use game::{count_winning, derive_mwc, is_decisive, is_proper, is_winning};
pub use math::binomial;
pub use mwc::{validate_mwc_set, MwcSet};
pub use num_bigint::BigInt;
pub use rational::Rational;
pub use report::{analyze, IndexKind, PowerReport};
pub use weighted::WeightedGame;
