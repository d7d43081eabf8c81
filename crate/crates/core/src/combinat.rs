//! Small integer helpers: binomials and Catalan numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(n, k)` as a machine integer, for exponents.
pub fn binom_u32(n: u32, k: u32) -> u32 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k as u64 {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    u32::try_from(acc).expect("binomial exponent overflow")
}

pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let cats: Vec<BigInt> = (0..7).map(catalan).collect();
        assert_eq!(cats, [1, 1, 2, 5, 14, 42, 132].map(BigInt::from));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binom_u32(6, 3), 20);
        assert_eq!(binom_u32(2, 3), 0);
    }
}
