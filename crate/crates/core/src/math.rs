use num_bigint::BigInt;
use num_traits::One;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `[0!, 1!, ..., n!]`.
pub fn factorials(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigInt::one());
    for i in 1..=n {
        let next = &out[i - 1] * i;
        out.push(next);
    }
    out
}

pub fn pow2(exp: u32) -> BigInt {
    BigInt::one() << exp
}
