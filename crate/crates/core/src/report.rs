use std::sync::Arc;

use num_bigint::BigInt;

use crate::coalition::VoterSet;
use crate::direct::{direct_indices, penrose_banzhaf_index, penrose_banzhaf_power, DirectOptions};
use crate::error::LimitError;
use crate::mwc::MwcSet;
use crate::oracle::{deegan_packel, holler_packel};
use crate::rational::Rational;

/// Every supported index for every voter of one system (the power profiles).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerReport {
    pub voters: Arc<VoterSet>,
    /// Banzhaf scores.
    pub bs: Vec<BigInt>,
    /// Penrose-Banzhaf power.
    pub pbp: Vec<Rational>,
    /// Penrose-Banzhaf index.
    pub pbi: Vec<Rational>,
    /// Shapley-Shubik index.
    pub ssi: Vec<Rational>,
    /// Deegan-Packel index.
    pub dp: Vec<Rational>,
    /// Holler-Packel index.
    pub hp: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndexKind {
    Pbi,
    Ssi,
    Dp,
    Hp,
}

impl IndexKind {
    pub const ALL: [IndexKind; 4] = [IndexKind::Pbi, IndexKind::Ssi, IndexKind::Dp, IndexKind::Hp];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Pbi => "pbi",
            IndexKind::Ssi => "ssi",
            IndexKind::Dp => "dp",
            IndexKind::Hp => "hp",
        }
    }
}

impl PowerReport {
    pub fn profile(&self, kind: IndexKind) -> &[Rational] {
        match kind {
            IndexKind::Pbi => &self.pbi,
            IndexKind::Ssi => &self.ssi,
            IndexKind::Dp => &self.dp,
            IndexKind::Hp => &self.hp,
        }
    }
}

/// Runs the full index pipeline on `system`.
pub fn analyze(system: &MwcSet, options: &DirectOptions) -> Result<PowerReport, LimitError> {
    let (bs, ssi) = direct_indices(system, options)?;
    let report = PowerReport {
        voters: system.shared_voters(),
        pbp: penrose_banzhaf_power(&bs, system.n()),
        pbi: penrose_banzhaf_index(&bs),
        ssi,
        dp: deegan_packel(system),
        hp: holler_packel(system),
        bs,
    };
    debug_assert!(IndexKind::ALL
        .iter()
        .all(|&k| report.profile(k).iter().sum::<Rational>() == Rational::one()));
    Ok(report)
}
