//! Exact arithmetic for the cubic binomial sum
//! `S_n = sum_{r=0..n} C(n,r)^3 * 2^r` and its 3-adic valuation.
//!
//! The valuation admits a closed form that depends only on the parity of `n`
//! and a base-3 digit sum:
//!
//! ```text
//! v3(S_n) = s3((n - 1) / 2) + 1   if n is odd
//! v3(S_n) = s3(n / 2)             if n is even
//! ```
//!
//! The closed form runs in time proportional to the base-3 digit length of
//! `n`, while `S_n` itself has exponentially many digits. This crate
//! implements both routes, plus a third via MacMahon's transform of the cubic
//! sum, and a verification engine that cross-checks all of them exactly over
//! configurable ranges.
//!
//! - [`padic`]: digit sums, p-adic valuations, factorial valuations by
//!   Legendre's formula, and exact big-integer binomial coefficients.
//! - [`sums`]: `S_n`, the MacMahon transform, the transformed summands `A_r`,
//!   the closed-form predictor, and per-term dominance analysis.
//! - [`verify`]: exhaustive sweep and property suites producing
//!   machine-readable reports.
//! - [`report`]: CSV/JSON rendering of sweep rows and suite reports.

pub mod padic;
pub mod report;
pub mod sums;
pub mod verify;

pub use num_bigint::BigUint;

pub use padic::{
    binomial, binomial_u64, central_product_valuation, digit_sum, digit_sum_u64,
    factorial_valuation, factorial_valuation_u64, valuation, valuation_u64, Base, PadicError,
    Prime, Valuation,
};
pub use sums::{
    cubic_sum_direct, cubic_sum_general, dominance_report, macmahon_sum, predicted_valuation,
    rewriting_check, summand, summand_valuation, term_lower_bound, Parity, PredictionRecord,
    SumsError, TermRecord,
};
pub use verify::{
    run_all, theorem_report, verify_central_product, verify_dominance, verify_macmahon,
    verify_rewriting, verify_subadditivity, verify_theorem, verify_theorem_extended, Failure,
    SuiteReport, SweepRow, VerifyConfig, VerifyError,
};
