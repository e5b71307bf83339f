//! Classification of Catalan numbers modulo `2^k` and modulo 3 using only
//! base-2/base-3 digit arithmetic, exact residue-class censuses over `[0, 2^t)`,
//! and empirical density sweeps with analytic lower bounds.
//!
//! The point of the digit route: deciding `C_n mod 2^k` questions takes
//! O(log n) word operations, while the number `C_n` itself has ~2n bits. The
//! [`oracle`] module computes those exact values anyway, so every digit-based
//! answer can be checked against ground truth.
//!
//! Natural-number inputs are `u64` everywhere; operations that depend on
//! `n + 1` accept inputs up to [`classifier::MAX_N`] = 2^62 and reject larger
//! values instead of wrapping.
//!
//! Module map:
//! - [`padic`] — base-p expansions, p-adic order, cofactor, and the digit
//!   counting functions everything else is built from.
//! - [`classifier`] — per-n classification: 2-adic valuation of `C_n` and its
//!   residue mod 3, without ever computing `C_n`.
//! - [`census`] — closed-form counts of residue classes below `2^t`, plus a
//!   ground-truth enumeration counter.
//! - [`density`] — density sweeps over `[0, N)` together with exact rational
//!   lower bounds.
//! - [`oracle`] — exact big-integer Catalan values and a range verifier that
//!   checks the digit route against them.

pub mod census;
pub mod classifier;
pub mod density;
mod error;
pub mod oracle;
pub mod padic;

pub use census::CensusReport;
pub use classifier::{Mod3Residue, TwoAdicClass, MAX_N};
pub use density::{DensityModulus, DensityRow};
pub use error::Error;
pub use oracle::{BigCatalan, CatalanIter, VerificationReport};
pub use padic::DigitExpansion;

// Exact counts and densities are arbitrary precision; re-exported so
// downstream crates never need to name the num crates themselves.
pub use num_bigint::BigUint;
pub use num_rational::BigRational;
