//! Definitional power indices by scanning all `2^n` coalitions, and the
//! indices defined directly on the MWC-set.
//!
//! The scans here use only [`is_winning`] and never any inclusion-exclusion,
//! so they serve as an independent check on [`crate::direct`].

use num_bigint::BigInt;

use crate::error::LimitError;
use crate::game::is_winning;
use crate::coalition::Coalition;
use crate::math::{binomial, factorials};
use crate::mwc::MwcSet;
use crate::rational::Rational;

/// Largest assembly the brute-force scans accept.
pub const MAX_ORACLE_VOTERS: usize = 24;

/// Per-voter swing counts by coalition size: `swings[w][k]` is the number of
/// `k`-voter winning coalitions for which `w` is decisive.
fn swing_table(system: &MwcSet) -> Result<Vec<Vec<u64>>, LimitError> {
    let n = system.n();
    if n > MAX_ORACLE_VOTERS {
        return Err(LimitError::TooManyVotersForOracle {
            got: n,
            max: MAX_ORACLE_VOTERS,
        });
    }
    let size = 1usize << n;
    let winning: Vec<bool> = (0..size as u64)
        .map(|bits| is_winning(system, Coalition::from_bits(bits)))
        .collect();
    let mut swings = vec![vec![0u64; n + 1]; n];
    for (bits, _) in winning.iter().enumerate().filter(|(_, &win)| win) {
        let coalition = Coalition::from_bits(bits as u64);
        let k = coalition.len() as usize;
        for w in coalition.members() {
            if !winning[bits & !(1 << w)] {
                swings[w][k] += 1;
            }
        }
    }
    Ok(swings)
}

/// `BS_w = #{C winning : w in C, C \ {w} losing}`.
pub fn oracle_banzhaf(system: &MwcSet) -> Result<Vec<BigInt>, LimitError> {
    Ok(swing_table(system)?
        .iter()
        .map(|by_size| BigInt::from(by_size.iter().sum::<u64>()))
        .collect())
}

/// `SSI_w = sum over coalitions S where w is decisive of (n-#S)!(#S-1)!/n!`.
pub fn oracle_ssi(system: &MwcSet) -> Result<Vec<Rational>, LimitError> {
    let n = system.n();
    let swings = swing_table(system)?;
    let fact = factorials(n);
    Ok(swings
        .iter()
        .map(|by_size| {
            let num: BigInt = by_size
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &count)| BigInt::from(count) * &fact[n - k] * &fact[k - 1])
                .sum();
            Rational::new(num, fact[n].clone()).expect("n! is positive")
        })
        .collect())
}

/// Deegan-Packel: each MWC carries weight `1/m`, split equally among its
/// members.
pub fn deegan_packel(system: &MwcSet) -> Vec<Rational> {
    let m = system.len() as u64;
    let mut out = vec![Rational::zero(); system.n()];
    for v in system.members() {
        let share = Rational::reciprocal_of(m * u64::from(v.len()));
        for w in v.members() {
            out[w] += &share;
        }
    }
    out
}

/// Holler-Packel: MWC membership counts, normalised to sum to one.
pub fn holler_packel(system: &MwcSet) -> Vec<Rational> {
    let mut counts = vec![0u64; system.n()];
    for v in system.members() {
        for w in v.members() {
            counts[w] += 1;
        }
    }
    let total: u64 = counts.iter().sum();
    counts
        .into_iter()
        .map(|c| Rational::new(c, total).expect("a valid MWC-set has members"))
        .collect()
}

/// Sum of `(n-#C)!(#C-1)!/n!` over all supersets `C` of a fixed `k`-voter
/// coalition, by grouping supersets by size. Equals `1/k`.
pub fn filter_weight_sum(n: usize, k: usize) -> Rational {
    assert!(1 <= k && k <= n, "need 1 <= k <= n");
    let fact = factorials(n);
    (k..=n)
        .map(|l| {
            let supersets = binomial((n - k) as u64, (l - k) as u64);
            let weight = &fact[n - l] * &fact[l - 1];
            Rational::new(supersets * weight, fact[n].clone()).expect("n! is positive")
        })
        .sum()
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

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    fn system(n: usize, members: &[&[usize]]) -> MwcSet {
        let v = VoterSet::numbered(n).unwrap();
        MwcSet::new(
            v,
            members
                .iter()
                .map(|m| Coalition::from_indices(m.iter().copied()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn eec_oracle() {
        let bs = oracle_banzhaf(&eec()).unwrap();
        let expected: Vec<BigInt> = [10, 10, 10, 6, 6, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(bs, expected);
        let ssi = oracle_ssi(&eec()).unwrap();
        assert_eq!(ssi[0], r(7, 30));
        assert_eq!(ssi[3], r(3, 20));
        assert_eq!(ssi[4], r(3, 20));
        assert!(ssi[5].is_zero());
        assert_eq!(ssi.iter().sum::<Rational>(), Rational::one());
    }

    #[test]
    fn oracle_small_cases() {
        let unanimity = system(3, &[&[0, 1, 2]]);
        assert_eq!(oracle_banzhaf(&unanimity).unwrap(), vec![BigInt::from(1); 3]);
        let dictator = system(4, &[&[0]]);
        assert_eq!(
            oracle_ssi(&dictator).unwrap(),
            vec![Rational::one(), Rational::zero(), Rational::zero(), Rational::zero()]
        );
        let either = system(2, &[&[0], &[1]]);
        assert_eq!(oracle_ssi(&either).unwrap(), vec![r(1, 2), r(1, 2)]);
    }

    #[test]
    fn oracle_voter_cap() {
        let big = system(25, &[&[0]]);
        assert_eq!(
            oracle_banzhaf(&big).unwrap_err(),
            LimitError::TooManyVotersForOracle { got: 25, max: 24 }
        );
    }

    #[test]
    fn eec_mwc_indices() {
        // F is in FGI, FGBN and FIBN; B in FGBN, FIBN and GIBN.
        let dp_f = r(1, 4) * (r(1, 3) + r(1, 4) + r(1, 4));
        let dp = deegan_packel(&eec());
        assert_eq!(dp[0], dp_f);
        assert_eq!(dp[0], r(5, 24));
        assert!(dp[5].is_zero());
        assert_eq!(dp.iter().sum::<Rational>(), Rational::one());

        let hp = holler_packel(&eec());
        assert_eq!(hp[0], r(3, 15));
        assert_eq!(hp[3], r(3, 15));
        assert!(hp[5].is_zero());
        assert_eq!(hp.iter().sum::<Rational>(), Rational::one());
    }

    #[test]
    fn mwc_indices_trivial_systems() {
        let dictator = system(3, &[&[0]]);
        assert_eq!(deegan_packel(&dictator)[0], Rational::one());
        assert_eq!(holler_packel(&dictator)[0], Rational::one());
        let unanimity = system(5, &[&[0, 1, 2, 3, 4]]);
        assert!(deegan_packel(&unanimity).iter().all(|x| *x == r(1, 5)));
        assert!(holler_packel(&unanimity).iter().all(|x| *x == r(1, 5)));
    }

    #[test]
    fn filter_weight_examples() {
        assert_eq!(filter_weight_sum(6, 3), r(1, 3));
        assert_eq!(filter_weight_sum(7, 7), r(1, 7));
        assert_eq!(filter_weight_sum(12, 5), r(1, 5));
    }
}
