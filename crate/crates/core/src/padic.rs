//! Exact p-adic primitives: digit sums, valuations, factorial valuations via
//! Legendre's formula, and big-integer binomial coefficients.
//!
//! Everything here is plain integer arithmetic on unbounded naturals. The
//! `*_u64` variants are bit-exact fast paths for word-sized inputs; the
//! `BigUint` entry points dispatch to them automatically.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use std::fmt;
use std::ops::Add;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PadicError {
    #[error("digit base must be at least 2, got {0}")]
    BaseTooSmall(u64),
    #[error("valuation prime must be prime, got {0}")]
    NotPrime(u64),
}

/// A digit base `b >= 2`. Digit sums are well-defined for any such base;
/// valuations additionally require the base to be prime (see [`Prime`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Base(u64);

impl Base {
    pub const THREE: Base = Base(3);

    pub fn new(b: u64) -> Result<Base, PadicError> {
        if b < 2 {
            Err(PadicError::BaseTooSmall(b))
        } else {
            Ok(Base(b))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A prime valuation base. Construction checks primality by trial division,
/// so downstream valuation functions are total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub const TWO: Prime = Prime(2);
    pub const THREE: Prime = Prime(3);

    pub fn new(p: u64) -> Result<Prime, PadicError> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(PadicError::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn base(self) -> Base {
        Base(self.0)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The p-adic valuation of a natural number: the exponent of the largest
/// power of `p` dividing it. `v_p(0)` is the unique infinite value, and it
/// compares greater than every finite valuation, so the "minimum valuation
/// of a sum" rule stays total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn is_finite(self) -> bool {
        matches!(self, Valuation::Finite(_))
    }

    /// The order when finite, `None` for `v_p(0)`.
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl From<u64> for Valuation {
    fn from(v: u64) -> Self {
        Valuation::Finite(v)
    }
}

impl Add for Valuation {
    type Output = Valuation;

    /// Valuation of a product: finite orders add, zero absorbs.
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => v.fmt(f),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => serializer.serialize_u64(*v),
            Valuation::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// Sum of the digits of `n` written in base `b`.
///
/// Satisfies `digit_sum(n, b) == n (mod b - 1)`.
pub fn digit_sum(n: &BigUint, base: Base) -> BigUint {
    if let Some(n64) = n.to_u64() {
        return BigUint::from(digit_sum_u64(n64, base));
    }
    if base.get() <= 256 {
        let mut acc: u128 = 0;
        for d in n.to_radix_le(base.get() as u32) {
            acc += u128::from(d);
        }
        BigUint::from(acc)
    } else {
        let b = BigUint::from(base.get());
        let mut m = n.clone();
        let mut acc = BigUint::zero();
        while !m.is_zero() {
            let (q, r) = m.div_rem(&b);
            acc += r;
            m = q;
        }
        acc
    }
}

/// Word-sized digit sum, bit-exact with [`digit_sum`].
pub fn digit_sum_u64(mut n: u64, base: Base) -> u64 {
    let b = base.get();
    let mut s = 0u64;
    while n > 0 {
        s += n % b;
        n /= b;
    }
    s
}

/// `v_p(x)`: the largest `e` with `p^e | x`, or [`Valuation::Infinite`] for
/// `x = 0`.
///
/// Divides out `p`, then `p^2`, `p^4`, ... while the division stays exact, so
/// extracting a valuation of `v` costs `O(log v)` big divisions rather than
/// `v`.
pub fn valuation(x: &BigUint, p: Prime) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    if let Some(x64) = x.to_u64() {
        return valuation_u64(x64, p);
    }
    if p.get() == 2 {
        return Valuation::Finite(x.trailing_zeros().unwrap_or(0));
    }
    let base = BigUint::from(p.get());
    let mut cur = x.clone();
    let mut total = 0u64;
    let mut step = base.clone();
    let mut step_order = 1u64;
    loop {
        let (q, r) = cur.div_rem(&step);
        if r.is_zero() {
            cur = q;
            total += step_order;
            step = &step * &step;
            step_order *= 2;
        } else if step_order == 1 {
            break;
        } else {
            step = base.clone();
            step_order = 1;
        }
    }
    Valuation::Finite(total)
}

/// Word-sized valuation, bit-exact with [`valuation`].
pub fn valuation_u64(mut x: u64, p: Prime) -> Valuation {
    if x == 0 {
        return Valuation::Infinite;
    }
    let q = p.get();
    let mut v = 0u64;
    while x.is_multiple_of(q) {
        v += 1;
        x /= q;
    }
    Valuation::Finite(v)
}

/// `v_p(n!)` by Legendre's formula, `sum_{i>=1} floor(n / p^i)`.
///
/// Equals `(n - digit_sum(n, p)) / (p - 1)`; the verify suites check both
/// forms against each other and against literally computed factorials.
pub fn factorial_valuation(n: &BigUint, p: Prime) -> BigUint {
    if let Some(n64) = n.to_u64() {
        return BigUint::from(factorial_valuation_u64(n64, p));
    }
    let pb = BigUint::from(p.get());
    let mut acc = BigUint::zero();
    let mut m = n / &pb;
    while !m.is_zero() {
        acc += &m;
        m /= &pb;
    }
    acc
}

/// Word-sized factorial valuation, bit-exact with [`factorial_valuation`].
pub fn factorial_valuation_u64(n: u64, p: Prime) -> u64 {
    let q = p.get();
    let mut acc = 0u64;
    let mut m = n / q;
    while m > 0 {
        acc += m;
        m /= q;
    }
    acc
}

/// Exact binomial coefficient `C(n, k)`, with `C(n, k) = 0` for `k > n`.
///
/// Uses the multiplicative running product `C(n, i) = C(n, i-1) * (n-k+i) / i`
/// with an exact division at every step, so no factorial-sized intermediates
/// are ever formed. `n` around `10^4` is practical.
pub fn binomial(n: &BigUint, k: &BigUint) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let complement = n - k;
    let small = k.min(&complement);
    if let (Some(n64), Some(k64)) = (n.to_u64(), small.to_u64()) {
        return binomial_u64(n64, k64);
    }
    // Indices beyond u64 cannot finish in practice, but stay total anyway.
    let offset = n - small;
    let mut res = BigUint::one();
    let mut i = BigUint::one();
    while &i <= small {
        res *= &offset + &i;
        res /= &i;
        i += 1u32;
    }
    res
}

/// `C(n, k)` for word-sized inputs, bit-exact with [`binomial`].
pub fn binomial_u64(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut res = BigUint::one();
    for i in 1..=k {
        res *= n - k + i;
        res /= i;
    }
    res
}

/// `v_3(C(2k,k) * C(3k,k))` computed through the factored form
/// `v_3((3k)!) - 3 * v_3(k!)`.
///
/// Closed-form identity: this equals `s_3(k)`, which the verify suites check
/// against the valuation of the literally computed product.
pub fn central_product_valuation(k: &BigUint) -> BigUint {
    let three_k = k * 3u32;
    factorial_valuation(&three_k, Prime::THREE) - factorial_valuation(k, Prime::THREE) * 3u32
}
