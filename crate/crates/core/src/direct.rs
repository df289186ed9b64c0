//! Banzhaf scores and Shapley-Shubik indices computed directly from the
//! MWC-set by inclusion-exclusion over its sub-families.
//!
//! For every non-empty sub-family `{V_i1, ..., V_ir}` with union `U`, each
//! voter `w` in `U` receives `(-1)^(r-1) * 2^(n - #U)` towards its Banzhaf
//! score and `(-1)^(r-1) / #U` towards its Shapley-Shubik index. Voters
//! outside `U` receive nothing from that sub-family.
//!
//! Both sums depend on a sub-family only through its sign and the
//! cardinality of its union, so one depth-first walk tallies, per voter and
//! per union cardinality, the signed number of sub-families whose union
//! contains the voter. The tallies are exact machine integers; the final
//! scores are evaluated from them in arbitrary precision.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::coalition::Coalition;
use crate::error::LimitError;
use crate::math::pow2;
use crate::mwc::MwcSet;
use crate::rational::Rational;

/// Default cap on the number of sub-families (`2^m - 1`) a computation may
/// visit.
pub const DEFAULT_TERM_BUDGET: u64 = 1 << 30;

/// Budgets above this are clamped; it keeps every signed tally within `i64`.
pub const MAX_TERM_BUDGET: u64 = 1 << 62;

/// Levels of the sub-family tree fixed per parallel task.
const SPLIT_DEPTH: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TraversalOrder {
    /// Walk MWC indices in input order.
    #[default]
    Ascending,
    /// Walk MWC indices in reverse input order.
    Descending,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectOptions {
    pub budget: u64,
    /// `1` runs on the calling thread, `0` uses the global rayon pool, any
    /// other value a dedicated pool of that many threads.
    pub workers: usize,
    pub order: TraversalOrder,
}

impl Default for DirectOptions {
    fn default() -> Self {
        DirectOptions {
            budget: DEFAULT_TERM_BUDGET,
            workers: 1,
            order: TraversalOrder::Ascending,
        }
    }
}

impl DirectOptions {
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_order(mut self, order: TraversalOrder) -> Self {
        self.order = order;
        self
    }
}

/// One inclusion-exclusion term: a sub-family of `size` MWCs and the union
/// of its members.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IeTermContext {
    pub size: usize,
    pub union: Coalition,
}

impl IeTermContext {
    pub fn union_card(&self) -> u32 {
        self.union.len()
    }

    /// `(-1)^(size-1)`.
    pub fn sign(&self) -> i64 {
        if self.size % 2 == 1 {
            1
        } else {
            -1
        }
    }
}

/// Fails unless all `2^m - 1` sub-families fit in `budget`.
pub fn check_budget(members: usize, budget: u64) -> Result<(), LimitError> {
    let budget = budget.min(MAX_TERM_BUDGET);
    let subfamilies = if members >= 127 {
        u128::MAX
    } else {
        (1u128 << members) - 1
    };
    if subfamilies > u128::from(budget) {
        return Err(LimitError::SubfamilyBudgetExceeded {
            members,
            subfamilies,
            budget,
        });
    }
    Ok(())
}

/// Visits every non-empty sub-family of `members` exactly once, depth first
/// in ascending index order. Each child's union is one OR away from its
/// parent's.
pub fn for_each_subfamily(members: &[Coalition], mut visit: impl FnMut(&IeTermContext)) {
    walk(members, 0, Coalition::EMPTY, 0, &mut visit);
}

fn walk(
    members: &[Coalition],
    start: usize,
    union: Coalition,
    size: usize,
    visit: &mut impl FnMut(&IeTermContext),
) {
    for (i, &member) in members.iter().enumerate().skip(start) {
        let term = IeTermContext {
            size: size + 1,
            union: union.union(member),
        };
        visit(&term);
        walk(members, i + 1, term.union, term.size, visit);
    }
}

/// Signed sub-family counts by union cardinality, overall and per voter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UnionTally {
    n: usize,
    /// `per_voter[w * (n + 1) + c]`: signed count of sub-families whose
    /// union has `c` voters and contains `w`.
    per_voter: Vec<i64>,
    /// `total[c]`: signed count of sub-families whose union has `c` voters.
    total: Vec<i64>,
}

impl UnionTally {
    fn new(n: usize) -> Self {
        UnionTally {
            n,
            per_voter: vec![0; n * (n + 1)],
            total: vec![0; n + 1],
        }
    }

    fn add(&mut self, term: &IeTermContext) {
        let card = term.union_card() as usize;
        let sign = term.sign();
        self.total[card] += sign;
        let stride = self.n + 1;
        for w in term.union.members() {
            self.per_voter[w * stride + card] += sign;
        }
    }

    fn merge(mut self, other: UnionTally) -> Self {
        for (a, b) in self.per_voter.iter_mut().zip(other.per_voter) {
            *a += b;
        }
        for (a, b) in self.total.iter_mut().zip(other.total) {
            *a += b;
        }
        self
    }

    fn voter(&self, w: usize) -> &[i64] {
        let stride = self.n + 1;
        &self.per_voter[w * stride..(w + 1) * stride]
    }

    fn banzhaf(&self, w: usize) -> BigInt {
        weigh_by_filter_size(self.n, self.voter(w))
    }

    fn shapley_shubik(&self, w: usize) -> Rational {
        weigh_by_reciprocal(self.voter(w))
    }

    pub(crate) fn winning_count(&self) -> BigInt {
        weigh_by_filter_size(self.n, &self.total)
    }
}

/// `sum_c counts[c] * 2^(n - c)`.
fn weigh_by_filter_size(n: usize, counts: &[i64]) -> BigInt {
    counts
        .iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(card, &k)| BigInt::from(k) * pow2((n - card) as u32))
        .sum()
}

/// `sum_c counts[c] / c`. `counts[0]` is always zero.
fn weigh_by_reciprocal(counts: &[i64]) -> Rational {
    counts
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, &k)| k != 0)
        .map(|(card, &k)| Rational::new(k, card as i64).expect("nonzero cardinality"))
        .sum()
}

fn ordered_members(system: &MwcSet, order: TraversalOrder) -> Vec<Coalition> {
    let mut members = system.members().to_vec();
    if order == TraversalOrder::Descending {
        members.reverse();
    }
    members
}

pub(crate) fn tally(system: &MwcSet, options: &DirectOptions) -> Result<UnionTally, LimitError> {
    check_budget(system.len(), options.budget)?;
    let members = ordered_members(system, options.order);
    let n = system.n();
    let tally = match options.workers {
        1 => {
            let mut tally = UnionTally::new(n);
            for_each_subfamily(&members, |t| tally.add(t));
            tally
        }
        0 => parallel_tally(&members, n),
        workers => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .expect("failed to build worker pool");
            pool.install(|| parallel_tally(&members, n))
        }
    };
    Ok(tally)
}

/// Splits the tree on the include/exclude choices for the first
/// `SPLIT_DEPTH` members. Each task owns one prefix choice: it visits the
/// prefix itself (if non-empty) and every extension into the remaining
/// members.
fn parallel_tally(members: &[Coalition], n: usize) -> UnionTally {
    let depth = members.len().min(SPLIT_DEPTH);
    let (prefix, rest) = members.split_at(depth);
    (0u32..1 << depth)
        .into_par_iter()
        .fold(
            || UnionTally::new(n),
            |mut tally, pattern| {
                let chosen = Coalition::from_bits(u64::from(pattern));
                let union = chosen
                    .members()
                    .fold(Coalition::EMPTY, |u, i| u.union(prefix[i]));
                let size = chosen.len() as usize;
                if size > 0 {
                    tally.add(&IeTermContext { size, union });
                }
                walk(rest, 0, union, size, &mut |t| tally.add(t));
                tally
            },
        )
        .reduce(|| UnionTally::new(n), UnionTally::merge)
}

/// Banzhaf scores and Shapley-Shubik indices for all voters from a single
/// traversal.
pub fn direct_indices(
    system: &MwcSet,
    options: &DirectOptions,
) -> Result<(Vec<BigInt>, Vec<Rational>), LimitError> {
    let tally = tally(system, options)?;
    let n = system.n();
    let bs = (0..n).map(|w| tally.banzhaf(w)).collect();
    let ssi = (0..n).map(|w| tally.shapley_shubik(w)).collect();
    Ok((bs, ssi))
}

pub fn banzhaf_scores(system: &MwcSet) -> Result<Vec<BigInt>, LimitError> {
    banzhaf_scores_with(system, &DirectOptions::default())
}

pub fn banzhaf_scores_with(
    system: &MwcSet,
    options: &DirectOptions,
) -> Result<Vec<BigInt>, LimitError> {
    let tally = tally(system, options)?;
    Ok((0..system.n()).map(|w| tally.banzhaf(w)).collect())
}

pub fn shapley_shubik(system: &MwcSet) -> Result<Vec<Rational>, LimitError> {
    shapley_shubik_with(system, &DirectOptions::default())
}

pub fn shapley_shubik_with(
    system: &MwcSet,
    options: &DirectOptions,
) -> Result<Vec<Rational>, LimitError> {
    let tally = tally(system, options)?;
    Ok((0..system.n()).map(|w| tally.shapley_shubik(w)).collect())
}

/// `BS_w / 2^(n-1)`.
pub fn penrose_banzhaf_power(bs: &[BigInt], n: usize) -> Vec<Rational> {
    let denom = pow2(n as u32 - 1);
    bs.iter()
        .map(|b| Rational::new(b.clone(), denom.clone()).expect("positive denominator"))
        .collect()
}

/// `BS_w / sum_i BS_i`. Every MWC member is decisive for that MWC, so the
/// total of a valid system is at least one.
pub fn penrose_banzhaf_index(bs: &[BigInt]) -> Vec<Rational> {
    let total: BigInt = bs.iter().sum();
    assert!(total >= BigInt::from(1), "Banzhaf scores sum to zero");
    bs.iter()
        .map(|b| Rational::new(b.clone(), total.clone()).expect("positive denominator"))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceKind {
    Banzhaf,
    ShapleyShubik,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceSteps {
    Banzhaf(Vec<BigInt>),
    ShapleyShubik(Vec<Rational>),
}

/// Partial sums of one voter's score after all sub-families of size
/// `<= r`, for `r = 1..=m`. The last entry is the score itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceReport {
    pub voter: usize,
    pub steps: TraceSteps,
}

impl TraceReport {
    pub fn len(&self) -> usize {
        match &self.steps {
            TraceSteps::Banzhaf(s) => s.len(),
            TraceSteps::ShapleyShubik(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Steps as exact rationals (Banzhaf steps become integers).
    pub fn rational_steps(&self) -> Vec<Rational> {
        match &self.steps {
            TraceSteps::Banzhaf(s) => s.iter().cloned().map(Rational::from).collect(),
            TraceSteps::ShapleyShubik(s) => s.clone(),
        }
    }
}

pub fn trace(
    system: &MwcSet,
    voter: usize,
    kind: TraceKind,
    budget: u64,
) -> Result<TraceReport, crate::Error> {
    let n = system.n();
    if voter >= n {
        return Err(crate::ValidationError::VoterOutOfRange { index: voter, n }.into());
    }
    check_budget(system.len(), budget)?;
    let m = system.len();
    // by_size[r - 1][c]: sub-families of size r whose c-voter union contains the voter.
    let mut by_size = vec![vec![0i64; n + 1]; m];
    for_each_subfamily(system.members(), |t| {
        if t.union.contains(voter) {
            by_size[t.size - 1][t.union_card() as usize] += 1;
        }
    });
    let steps = match kind {
        TraceKind::Banzhaf => {
            let mut acc = BigInt::from(0);
            let steps = by_size
                .iter()
                .enumerate()
                .map(|(r, counts)| {
                    let level = weigh_by_filter_size(n, counts);
                    if r % 2 == 0 {
                        acc += level;
                    } else {
                        acc -= level;
                    }
                    acc.clone()
                })
                .collect();
            TraceSteps::Banzhaf(steps)
        }
        TraceKind::ShapleyShubik => {
            let mut acc = Rational::zero();
            let steps = by_size
                .iter()
                .enumerate()
                .map(|(r, counts)| {
                    let level = weigh_by_reciprocal(counts);
                    if r % 2 == 0 {
                        acc += level;
                    } else {
                        acc -= &level;
                    }
                    acc.clone()
                })
                .collect();
            TraceSteps::ShapleyShubik(steps)
        }
    };
    Ok(TraceReport { voter, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalition::VoterSet;

    fn eec() -> MwcSet {
        let v = VoterSet::new(["F", "G", "I", "B", "N", "L"]).unwrap();
        MwcSet::from_names(
            v,
            &[
                vec!["F", "G", "I"],
                vec!["F", "G", "B", "N"],
                vec!["F", "I", "B", "N"],
                vec!["G", "I", "B", "N"],
            ],
        )
        .unwrap()
    }

    fn big(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    fn single(n: usize, members: &[&[usize]]) -> MwcSet {
        let v = VoterSet::numbered(n).unwrap();
        let members = members
            .iter()
            .map(|m| Coalition::from_indices(m.iter().copied()))
            .collect();
        MwcSet::new(v, members).unwrap()
    }

    #[test]
    fn eec_scores() {
        assert_eq!(banzhaf_scores(&eec()).unwrap(), big(&[10, 10, 10, 6, 6, 0]));
        let ssi = shapley_shubik(&eec()).unwrap();
        assert_eq!(ssi, vec![r(7, 30), r(7, 30), r(7, 30), r(3, 20), r(3, 20), Rational::zero()]);
    }

    #[test]
    fn dictator_and_unanimity() {
        let dictator = single(6, &[&[0]]);
        assert_eq!(banzhaf_scores(&dictator).unwrap(), big(&[32, 0, 0, 0, 0, 0]));
        let ssi = shapley_shubik(&dictator).unwrap();
        assert_eq!(ssi[0], Rational::one());
        assert!(ssi[1..].iter().all(Rational::is_zero));

        let unanimity = single(6, &[&[0, 1, 2, 3, 4, 5]]);
        assert_eq!(banzhaf_scores(&unanimity).unwrap(), big(&[1; 6]));
        let pbi = penrose_banzhaf_index(&banzhaf_scores(&unanimity).unwrap());
        assert!(pbi.iter().all(|x| *x == r(1, 6)));
    }

    #[test]
    fn banzhaf_normalisations() {
        let bs = banzhaf_scores(&eec()).unwrap();
        let pbp = penrose_banzhaf_power(&bs, 6);
        assert_eq!(pbp[0], r(5, 16));
        assert_eq!(pbp[5], Rational::zero());
        let pbi = penrose_banzhaf_index(&bs);
        assert_eq!(pbi[0], r(5, 21));
        assert_eq!(pbi[3], r(1, 7));
        assert_eq!(pbi.iter().sum::<Rational>(), Rational::one());

        let dictator = single(5, &[&[2]]);
        let pbp = penrose_banzhaf_power(&banzhaf_scores(&dictator).unwrap(), 5);
        assert_eq!(pbp[2], Rational::one());
    }

    #[test]
    fn eec_traces() {
        let bs = trace(&eec(), 0, TraceKind::Banzhaf, DEFAULT_TERM_BUDGET).unwrap();
        assert_eq!(bs.steps, TraceSteps::Banzhaf(big(&[16, 4, 12, 10])));
        let ssi = trace(&eec(), 0, TraceKind::ShapleyShubik, DEFAULT_TERM_BUDGET).unwrap();
        assert_eq!(
            ssi.steps,
            TraceSteps::ShapleyShubik(vec![r(5, 6), r(-11, 30), r(13, 30), r(7, 30)])
        );
    }

    #[test]
    fn dictator_trace_has_one_step() {
        let t = trace(&single(6, &[&[0]]), 0, TraceKind::Banzhaf, DEFAULT_TERM_BUDGET).unwrap();
        assert_eq!(t.steps, TraceSteps::Banzhaf(big(&[32])));
    }

    #[test]
    fn trace_rejects_unknown_voter() {
        assert!(trace(&eec(), 6, TraceKind::Banzhaf, DEFAULT_TERM_BUDGET).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let err = banzhaf_scores_with(&eec(), &DirectOptions::default().with_budget(14)).unwrap_err();
        assert_eq!(
            err,
            LimitError::SubfamilyBudgetExceeded {
                members: 4,
                subfamilies: 15,
                budget: 14
            }
        );
        assert!(banzhaf_scores_with(&eec(), &DirectOptions::default().with_budget(15)).is_ok());
        assert!(check_budget(200, u64::MAX).is_err());
        assert!(check_budget(62, u64::MAX).is_ok());
        assert!(check_budget(63, u64::MAX).is_err());
    }

    #[test]
    fn every_subfamily_visited_once() {
        let members: Vec<Coalition> = (0..5).map(Coalition::singleton).collect();
        let mut seen = std::collections::HashSet::new();
        for_each_subfamily(&members, |t| {
            assert_eq!(t.union_card() as usize, t.size);
            assert!(seen.insert(t.union));
        });
        assert_eq!(seen.len(), 31);
    }

    #[test]
    fn parallel_split_matches_sequential() {
        let mut members = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                members.push(Coalition::from_indices([a, b, 6 + (a + b) % 3]));
            }
        }
        let system = MwcSet::new(VoterSet::numbered(10).unwrap(), members).unwrap();
        let seq = tally(&system, &DirectOptions::default()).unwrap();
        let par = tally(&system, &DirectOptions::default().with_workers(4)).unwrap();
        assert_eq!(seq, par);
    }
}
