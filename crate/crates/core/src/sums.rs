//! The cubic binomial sum `S_n`, its MacMahon transform, the transformed
//! summands `A_r`, the closed-form valuation predictor, and the dominant-term
//! analysis behind it.
//!
//! MacMahon's identity turns the cubic sum into a short sum over
//! `r <= floor(n/2)`:
//!
//! ```text
//! sum_{k=0..n} C(n,k)^3 x^k y^(n-k)
//!     = sum_{k=0..floor(n/2)} C(n,2k) C(2k,k) C(n+k,k) (xy)^k (x+y)^(n-2k)
//! ```
//!
//! At `(x, y) = (2, 1)` the factor `(x+y)^(n-2k)` becomes `3^(n-2k)`, which
//! exposes the 3-adic structure: after rewriting the binomial product, the
//! summands are
//!
//! ```text
//! A_r = C(n+r,3r) C(2r,r) C(3r,r) 2^r 3^(n-2r)
//! ```
//!
//! and the term `r = m = floor(n/2)` has strictly smaller 3-adic valuation
//! than every other, so it dictates the valuation of the whole sum.

use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::padic::{
    binomial_u64, digit_sum, digit_sum_u64, factorial_valuation_u64, valuation, Base, Prime,
    Valuation,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SumsError {
    #[error("summand index r = {r} out of range for n = {n} (max floor(n/2) = {max})")]
    IndexOutOfRange { n: u64, r: u64, max: u64 },
    #[error("r = {r} is the dominant index for n = {n}; the proof chain bounds only r < floor(n/2)")]
    DominantIndex { n: u64, r: u64 },
    #[error("n must be at least 1")]
    ZeroOutsideRange,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: &BigUint) -> Parity {
        if n.bit(0) {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn of_u64(n: u64) -> Parity {
        if n % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl std::str::FromStr for Parity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            other => Err(format!("unknown parity {other:?}")),
        }
    }
}

/// One summand `A_r` of the transformed sum, with its exact value, the
/// valuation of that literal integer, and the proof's lower bound where one
/// is defined (every index except the dominant `r = m`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermRecord {
    pub r: u64,
    pub value: BigUint,
    pub exact_valuation: Valuation,
    /// `s_3(r) + (n - 2r)`; `None` for the dominant index.
    pub lower_bound: Option<u64>,
    pub is_dominant: bool,
}

/// The closed-form prediction for `v_3(S_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictionRecord {
    pub n: BigUint,
    pub parity: Parity,
    /// `(n - 1) / 2` for odd `n`, `n / 2` for even `n`.
    pub digit_argument: BigUint,
    pub predicted: u64,
    /// The closed form is stated for `n >= 1`; `n = 0` is still computed
    /// (`S_0 = 1`, valuation 0, and the even branch agrees) but flagged.
    pub in_theorem_range: bool,
}

/// `S_n = sum_{r=0..n} C(n,r)^3 * 2^r`, exactly, term by term.
///
/// The binomial coefficient is carried across terms by the running product
/// `C(n,r) = C(n,r-1) * (n-r+1) / r`, every division exact.
pub fn cubic_sum_direct(n: u64) -> BigUint {
    let mut c = BigUint::one();
    let mut total = BigUint::zero();
    for r in 0..=n {
        if r > 0 {
            c *= n - r + 1;
            c /= r;
        }
        let cube = &c * &c * &c;
        total += cube << r;
    }
    total
}

/// The weighted cubic sum `sum_{k=0..n} C(n,k)^3 x^k y^(n-k)`.
///
/// `cubic_sum_general(n, 2, 1)` equals [`cubic_sum_direct`]`(n)`.
pub fn cubic_sum_general(n: u64, x: &BigUint, y: &BigUint) -> BigUint {
    let len = terms_len(n);
    let xp = powers(x, len);
    let yp = powers(y, len);
    let mut c = BigUint::one();
    let mut total = BigUint::zero();
    for k in 0..=n {
        if k > 0 {
            c *= n - k + 1;
            c /= k;
        }
        total += &c * &c * &c * &xp[k as usize] * &yp[(n - k) as usize];
    }
    total
}

/// The MacMahon transform of the cubic sum:
/// `sum_{k=0..floor(n/2)} C(n,2k) C(2k,k) C(n+k,k) (xy)^k (x+y)^(n-2k)`.
///
/// Exactly equal to [`cubic_sum_general`]`(n, x, y)` for every `n, x, y`.
pub fn macmahon_sum(n: u64, x: &BigUint, y: &BigUint) -> BigUint {
    let m = n / 2;
    let sum_xy = x + y;
    let prod_xy = x * y;
    let sp = powers(&sum_xy, terms_len(n));
    let xyp = powers(&prod_xy, terms_len(m));
    let mut total = BigUint::zero();
    for k in 0..=m {
        let coeff = binomial_u64(n, 2 * k) * binomial_u64(2 * k, k) * binomial_u64(n + k, k);
        total += coeff * &xyp[k as usize] * &sp[(n - 2 * k) as usize];
    }
    total
}

fn terms_len(n: u64) -> usize {
    usize::try_from(n)
        .ok()
        .and_then(|n| n.checked_add(1))
        .expect("n too large to enumerate terms")
}

fn powers(x: &BigUint, len: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(len);
    let mut acc = BigUint::one();
    for _ in 0..len {
        out.push(acc.clone());
        acc *= x;
    }
    out
}

fn check_index(n: u64, r: u64) -> Result<u64, SumsError> {
    let m = n / 2;
    if r > m {
        Err(SumsError::IndexOutOfRange { n, r, max: m })
    } else {
        Ok(m)
    }
}

/// The exact summand `A_r = C(n+r,3r) C(2r,r) C(3r,r) 2^r 3^(n-2r)` together
/// with the valuation of the literal integer and the proof's lower bound.
pub fn summand(n: u64, r: u64) -> Result<TermRecord, SumsError> {
    let m = check_index(n, r)?;
    let n_plus_r = n.checked_add(r).expect("n + r overflows u64");
    let r3 = 3 * r;
    let value = binomial_u64(n_plus_r, r3)
        * binomial_u64(2 * r, r)
        * binomial_u64(r3, r)
        * (BigUint::one() << r)
        * Pow::pow(&BigUint::from(3u32), n - 2 * r);
    let exact_valuation = valuation(&value, Prime::THREE);
    let lower_bound = if r < m {
        Some(term_lower_bound(n, r)?)
    } else {
        None
    };
    Ok(TermRecord {
        r,
        value,
        exact_valuation,
        lower_bound,
        is_dominant: r == m,
    })
}

/// `v_3(A_r)` without forming the summand: by Legendre's formula,
///
/// ```text
/// v_3(A_r) = v_3((n+r)!) - v_3((n-2r)!) - 3 v_3(r!) + (n - 2r)
/// ```
///
/// This is the `O(log n)` route used for dominance analysis at large `n`;
/// it agrees with the valuation of the literal summand everywhere both run.
pub fn summand_valuation(n: u64, r: u64) -> Result<u64, SumsError> {
    check_index(n, r)?;
    let n_plus_r = n.checked_add(r).expect("n + r overflows u64");
    let f = |t: u64| factorial_valuation_u64(t, Prime::THREE) as i128;
    let v = f(n_plus_r) - f(n - 2 * r) - 3 * f(r) + i128::from(n - 2 * r);
    Ok(u64::try_from(v).expect("valuation of a positive integer is nonnegative"))
}

/// Checks the binomial-product rewriting used to put the transform in
/// 3-adic-friendly form:
/// `C(n,2r) C(2r,r) C(n+r,r) = C(n+r,3r) C(2r,r) C(3r,r)`.
pub fn rewriting_check(n: u64, r: u64) -> Result<bool, SumsError> {
    check_index(n, r)?;
    let n_plus_r = n.checked_add(r).expect("n + r overflows u64");
    let central = binomial_u64(2 * r, r);
    let lhs = binomial_u64(n, 2 * r) * &central * binomial_u64(n_plus_r, r);
    let rhs = binomial_u64(n_plus_r, 3 * r) * central * binomial_u64(3 * r, r);
    Ok(lhs == rhs)
}

/// The closed form for `v_3(S_n)`: `s_3((n-1)/2) + 1` for odd `n`,
/// `s_3(n/2)` for even `n`.
///
/// Runs in time proportional to the base-3 digit length of `n`; no
/// big-integer sums are formed, so it is meaningful far beyond any `n` for
/// which `S_n` itself could be materialized.
pub fn predicted_valuation(n: &BigUint) -> PredictionRecord {
    let parity = Parity::of(n);
    let digit_argument = n >> 1u32;
    let s = digit_sum(&digit_argument, Base::THREE)
        .to_u64()
        .expect("base-3 digit sum exceeds u64");
    let predicted = match parity {
        Parity::Odd => s + 1,
        Parity::Even => s,
    };
    PredictionRecord {
        n: n.clone(),
        parity,
        digit_argument,
        predicted,
        in_theorem_range: !n.is_zero(),
    }
}

/// The first line of the proof's lower-bound chain for a non-dominant term:
/// `s_3(r) + (n - 2r)`, which is `s_3(r) + 2(m - r)` for `n = 2m` and
/// `s_3(r) + 2(m - r) + 1` for `n = 2m + 1`.
///
/// Defined only for `r < m`; the dominant term has no bound in the proof.
pub fn term_lower_bound(n: u64, r: u64) -> Result<u64, SumsError> {
    let m = check_index(n, r)?;
    if r == m {
        return Err(SumsError::DominantIndex { n, r });
    }
    Ok(digit_sum_u64(r, Base::THREE) + (n - 2 * r))
}

/// All `floor(n/2) + 1` term records for `S_n`, dominant term marked.
///
/// Downstream checks assert that the dominant valuation is strictly below
/// every other and equals the closed-form prediction.
pub fn dominance_report(n: u64) -> Result<Vec<TermRecord>, SumsError> {
    if n == 0 {
        return Err(SumsError::ZeroOutsideRange);
    }
    (0..=n / 2).map(|r| summand(n, r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn cubic_sum_small_values() {
        assert_eq!(cubic_sum_direct(0), big(1));
        assert_eq!(cubic_sum_direct(1), big(3));
        // 1 + 8*2 + 1*4
        assert_eq!(cubic_sum_direct(2), big(21));
        // 171 = 9 * 19
        assert_eq!(cubic_sum_direct(3), big(171));
    }

    #[test]
    fn general_sum_specializes_to_direct() {
        let two = big(2);
        let one = big(1);
        for n in 0..60 {
            assert_eq!(cubic_sum_general(n, &two, &one), cubic_sum_direct(n));
        }
    }

    #[test]
    fn macmahon_hand_values() {
        // k=0 term 9 plus k=1 term 12
        assert_eq!(macmahon_sum(2, &big(2), &big(1)), big(21));
        assert_eq!(macmahon_sum(1, &big(2), &big(1)), big(3));
        for n in 1..40 {
            assert_eq!(macmahon_sum(n, &big(0), &big(1)), big(1), "n={n}");
        }
    }

    #[test]
    fn summand_hand_values() {
        // A_1 = C(3,3) C(2,1) C(3,1) * 2 * 3^0 = 12 = 4 * 3
        let t = summand(2, 1).unwrap();
        assert_eq!(t.value, big(12));
        assert_eq!(t.exact_valuation, Valuation::Finite(1));
        assert!(t.is_dominant);
        assert_eq!(t.lower_bound, None);

        // A_0 = C(2,0) C(0,0) C(0,0) * 1 * 3^2 = 9
        let t = summand(2, 0).unwrap();
        assert_eq!(t.value, big(9));
        assert_eq!(t.exact_valuation, Valuation::Finite(2));
        assert!(!t.is_dominant);
        assert_eq!(t.lower_bound, Some(2));
    }

    #[test]
    fn summands_sum_to_cubic_sum() {
        for n in 1..80u64 {
            let total: BigUint = (0..=n / 2).map(|r| summand(n, r).unwrap().value).sum();
            assert_eq!(total, cubic_sum_direct(n), "n={n}");
        }
    }

    #[test]
    fn summand_rejects_out_of_range_index() {
        assert_eq!(
            summand(2, 2).unwrap_err(),
            SumsError::IndexOutOfRange { n: 2, r: 2, max: 1 }
        );
        assert!(summand(7, 3).is_ok());
        assert!(summand(7, 4).is_err());
    }

    #[test]
    fn fast_valuation_matches_literal_summand() {
        for n in 1..60u64 {
            for r in 0..=n / 2 {
                let literal = summand(n, r).unwrap().exact_valuation.finite().unwrap();
                let fast = summand_valuation(n, r).unwrap();
                assert_eq!(literal, fast, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn rewriting_small_cases() {
        assert!(rewriting_check(2, 1).unwrap());
        for n in 0..40 {
            assert!(rewriting_check(n, 0).unwrap(), "n={n}");
        }
        assert!(rewriting_check(9, 5).is_err());
    }

    #[test]
    fn predictor_hand_values() {
        let p = predicted_valuation(&big(1));
        assert_eq!(p.parity, Parity::Odd);
        assert_eq!(p.digit_argument, big(0));
        assert_eq!(p.predicted, 1);
        assert!(p.in_theorem_range);

        let p = predicted_valuation(&big(2));
        assert_eq!(p.parity, Parity::Even);
        assert_eq!(p.digit_argument, big(1));
        assert_eq!(p.predicted, 1);

        let p = predicted_valuation(&big(3));
        assert_eq!(p.predicted, 2);
    }

    #[test]
    fn predictor_flags_zero() {
        let p = predicted_valuation(&big(0));
        assert!(!p.in_theorem_range);
        assert_eq!(p.parity, Parity::Even);
        assert_eq!(p.predicted, 0);
        // S_0 = 1 has valuation 0, so the even branch happens to agree.
        assert_eq!(cubic_sum_direct(0), big(1));
    }

    #[test]
    fn predictor_handles_huge_n() {
        let n: BigUint = "1000000000000000000".parse().unwrap();
        let p = predicted_valuation(&n);
        assert_eq!(p.parity, Parity::Even);
        assert_eq!(p.predicted, 40); // s_3(5 * 10^17)
    }

    #[test]
    fn lower_bound_hand_values() {
        assert_eq!(term_lower_bound(4, 0).unwrap(), 4);
        assert_eq!(term_lower_bound(4, 1).unwrap(), 3);
        assert_eq!(term_lower_bound(5, 0).unwrap(), 5);
        assert_eq!(
            term_lower_bound(4, 2).unwrap_err(),
            SumsError::DominantIndex { n: 4, r: 2 }
        );
        assert!(matches!(
            term_lower_bound(4, 3).unwrap_err(),
            SumsError::IndexOutOfRange { .. }
        ));
    }

    #[test]
    fn dominance_report_hand_values() {
        let report = dominance_report(2).unwrap();
        assert_eq!(report.len(), 2);
        assert_eq!(report[0].exact_valuation, Valuation::Finite(2));
        assert_eq!(report[1].exact_valuation, Valuation::Finite(1));
        assert!(report[1].is_dominant && !report[0].is_dominant);

        let report = dominance_report(1).unwrap();
        assert_eq!(report.len(), 1);
        assert!(report[0].is_dominant);
        assert_eq!(report[0].exact_valuation, Valuation::Finite(1));

        // A_2 = C(6,6) C(4,2) C(6,2) * 4 = 360, valuation s_3(2) = 2
        let report = dominance_report(4).unwrap();
        let dominant = report.iter().find(|t| t.is_dominant).unwrap();
        assert_eq!(dominant.r, 2);
        assert_eq!(dominant.value, big(360));
        assert_eq!(dominant.exact_valuation, Valuation::Finite(2));

        assert_eq!(dominance_report(0).unwrap_err(), SumsError::ZeroOutsideRange);
    }

    #[test]
    fn exactly_one_dominant_record() {
        for n in 1..50 {
            let report = dominance_report(n).unwrap();
            assert_eq!(report.iter().filter(|t| t.is_dominant).count(), 1);
            assert_eq!(report.last().unwrap().r, n / 2);
        }
    }
}
