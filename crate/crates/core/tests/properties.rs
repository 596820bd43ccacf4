//! Property tests for the arithmetic invariants the suites rely on.

use cubic_sums::{
    binomial, binomial_u64, cubic_sum_direct, cubic_sum_general, digit_sum, digit_sum_u64,
    factorial_valuation, factorial_valuation_u64, macmahon_sum, summand, valuation, valuation_u64,
    Base, BigUint, Prime, Valuation,
};
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

fn big_natural(max_bytes: usize) -> impl Strategy<Value = BigUint> {
    prop::collection::vec(any::<u8>(), 0..=max_bytes)
        .prop_map(|bytes| BigUint::from_bytes_be(&bytes))
}

fn small_prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![2u64, 3, 5, 7]).prop_map(|p| Prime::new(p).unwrap())
}

proptest! {
    // v_p(x * y) = v_p(x) + v_p(y) for nonzero x, y up to ~10^50.
    #[test]
    fn valuation_is_additive(
        x in big_natural(21),
        y in big_natural(21),
        p in small_prime(),
    ) {
        prop_assume!(!x.is_zero() && !y.is_zero());
        let product = &x * &y;
        prop_assert_eq!(
            valuation(&product, p),
            valuation(&x, p) + valuation(&y, p)
        );
    }

    #[test]
    fn valuation_infinite_only_at_zero(x in big_natural(12), p in small_prime()) {
        let v = valuation(&x, p);
        prop_assert_eq!(v.is_finite(), !x.is_zero());
        prop_assert!(Valuation::Infinite >= v);
    }

    // s_3(a + b) <= s_3(a) + s_3(b)
    #[test]
    fn digit_sum_is_subadditive(a in big_natural(16), b in big_natural(16)) {
        let lhs = digit_sum(&(&a + &b), Base::THREE);
        let rhs = digit_sum(&a, Base::THREE) + digit_sum(&b, Base::THREE);
        prop_assert!(lhs <= rhs);
    }

    // s_b(n) == n (mod b - 1)
    #[test]
    fn digit_sum_congruence(n in big_natural(16), b in 2u64..=64) {
        let base = Base::new(b).unwrap();
        let modulus = BigUint::from(b - 1);
        prop_assert_eq!(
            digit_sum(&n, base).mod_floor(&modulus),
            n.mod_floor(&modulus)
        );
    }

    // The two Legendre forms agree: sum floor(n/p^i) == (n - s_p(n)) / (p-1).
    #[test]
    fn factorial_valuation_digit_form(n in any::<u64>(), p in small_prime()) {
        let via_floors = factorial_valuation_u64(n, p);
        let via_digits = (n - digit_sum_u64(n, p.base())) / (p.get() - 1);
        prop_assert_eq!(via_floors, via_digits);
    }

    // The BigUint entry points and the u64 fast paths are bit-exact.
    #[test]
    fn word_sized_fast_paths_agree(n in any::<u64>(), b in 2u64..=256, p in small_prime()) {
        let big = BigUint::from(n);
        let base = Base::new(b).unwrap();
        prop_assert_eq!(digit_sum(&big, base), BigUint::from(digit_sum_u64(n, base)));
        prop_assert_eq!(
            factorial_valuation(&big, p),
            BigUint::from(factorial_valuation_u64(n, p))
        );
        prop_assert_eq!(valuation(&big, p), valuation_u64(n, p));
    }

    // Pascal's rule, against the multiplicative evaluation.
    #[test]
    fn binomial_pascal_rule(n in 1u64..300, k in 1u64..300) {
        let direct = binomial_u64(n, k);
        let pascal = binomial_u64(n - 1, k - 1) + binomial_u64(n - 1, k);
        prop_assert_eq!(direct, pascal);
    }

    #[test]
    fn binomial_biguint_matches_u64(n in 0u64..500, k in 0u64..600) {
        prop_assert_eq!(
            binomial(&BigUint::from(n), &BigUint::from(k)),
            binomial_u64(n, k)
        );
    }

    // Transform equality on sampled inputs; the verify suite sweeps the
    // full grid.
    #[test]
    fn macmahon_transform_equality(n in 1u64..=80, x in 0u64..=5, y in 0u64..=5) {
        let bx = BigUint::from(x);
        let by = BigUint::from(y);
        prop_assert_eq!(cubic_sum_general(n, &bx, &by), macmahon_sum(n, &bx, &by));
    }

    // The transformed summands recompose the direct sum.
    #[test]
    fn summands_recompose_direct_sum(n in 1u64..=400) {
        let total: BigUint = (0..=n / 2).map(|r| summand(n, r).unwrap().value).sum();
        prop_assert_eq!(total, cubic_sum_direct(n));
    }
}
