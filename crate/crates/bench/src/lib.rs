//! Shared input builders for the benchmark targets.

use num_bigint::BigUint;

/// `10^exp` as a big natural.
pub fn pow10(exp: u32) -> BigUint {
    BigUint::from(10u32).pow(exp)
}

/// A number with `trits` base-3 digits, all equal to 2 (worst case for
/// digit-sum work per length).
pub fn dense_base3(trits: u32) -> BigUint {
    BigUint::from(3u32).pow(trits) - 1u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubic_sums::{digit_sum, Base};

    #[test]
    fn dense_base3_has_maximal_digit_sum() {
        let n = dense_base3(41);
        assert_eq!(digit_sum(&n, Base::THREE), BigUint::from(82u32));
    }
}
