//! Empirical density sweeps for `{n : 2^k | C_n}` and `{n : 3 | C_n}` over
//! half-open ranges `[0, N)`, together with exact analytic lower bounds.
//!
//! Densities are exact rationals end to end; decimal rendering is left to
//! callers. Floor logarithms are integer-only, since floating-point `log` is
//! off by one near exact powers.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::census::binomial;
use crate::classifier::{catalan_mod3, classify_two_adic};
use crate::Error;

/// Default cap on the sweep range end.
pub const DEFAULT_MAX_N: u64 = 1 << 26;

/// Which residue family a sweep row counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityModulus {
    /// Divisibility by `2^k`.
    PowerOfTwo { k: u64 },
    /// Divisibility by 3.
    Three,
}

/// One sweep row: the count of divisible indices below `n_limit`, the exact
/// empirical density, and the analytic lower bound (clamped at 0 where the
/// finite-N bound goes negative).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityRow {
    pub n_limit: u64,
    pub modulus: DensityModulus,
    pub divisible_count: BigUint,
    pub empirical_density: BigRational,
    pub analytic_lower_bound: BigRational,
}

/// Largest `e` with `base^e <= n`, by integer arithmetic only.
pub fn floor_log(n: u64, base: u64) -> Result<u64, Error> {
    if base < 2 {
        return Err(Error::BaseTooSmall {
            what: "logarithm base",
            got: base,
        });
    }
    if n == 0 {
        return Err(Error::MustBePositive {
            what: "logarithm argument",
        });
    }
    let mut exponent = 0u64;
    let mut power = 1u64;
    loop {
        match power.checked_mul(base) {
            Some(next) if next <= n => {
                power = next;
                exponent += 1;
            }
            _ => return Ok(exponent),
        }
    }
}

fn ratio(numer: BigInt, denom: u64) -> BigRational {
    BigRational::new(numer, BigInt::from(denom))
}

fn clamp_zero(r: BigRational) -> BigRational {
    if r < BigRational::zero() {
        BigRational::zero()
    } else {
        r
    }
}

/// Finite-N lower bound for the density of `{n < N : 2^k | C_n}`:
/// `1 - (1/N) * sum_{i=0}^{k-1} C(r + 1, i + 1)` with `r = floor(log2 N)`.
/// The bounding polynomial is kept in this binomial-sum form and never
/// expanded into coefficients. The raw value is returned and may be negative
/// for small `N`; sweep rows clamp it at 0.
pub fn lower_bound_mod2k(n_limit: u64, k: u64) -> Result<BigRational, Error> {
    if k == 0 {
        return Err(Error::MustBePositive {
            what: "modulus exponent k",
        });
    }
    let r = floor_log(n_limit, 2)?;
    let mut missing = BigUint::zero();
    for i in 0..k {
        missing += binomial(r + 1, i + 1);
    }
    let numer = BigInt::from(n_limit) - BigInt::from(missing);
    Ok(ratio(numer, n_limit))
}

/// Upper bound `3 * 2^(floor(log3 N))` on the number of naturals up to `N`
/// whose base-3 digits above the units position are all 0 or 1.
pub fn tstar_count_bound(n_limit: u64) -> Result<BigUint, Error> {
    let k = floor_log(n_limit, 3)?;
    Ok(BigUint::from(3u32) << k)
}

fn check_sweep_limit(n_limit: u64, guard: u64) -> Result<(), Error> {
    if n_limit == 0 {
        return Err(Error::MustBePositive {
            what: "sweep range end N",
        });
    }
    if n_limit > guard {
        return Err(Error::LimitExceeded {
            what: "sweep range end N",
            value: n_limit,
            limit: guard,
        });
    }
    Ok(())
}

/// Counts `n < N` with `2^k | C_n` for each requested `N` and fills in the
/// exact empirical density and the analytic lower bound. Rows come back in
/// input order.
pub fn density_sweep_mod2k(n_values: &[u64], k: u64) -> Result<Vec<DensityRow>, Error> {
    density_sweep_mod2k_with_guard(n_values, k, DEFAULT_MAX_N)
}

/// As [`density_sweep_mod2k`] with an explicit cap on the range ends.
pub fn density_sweep_mod2k_with_guard(
    n_values: &[u64],
    k: u64,
    guard: u64,
) -> Result<Vec<DensityRow>, Error> {
    if k == 0 {
        return Err(Error::MustBePositive {
            what: "modulus exponent k",
        });
    }
    n_values
        .iter()
        .map(|&n_limit| {
            check_sweep_limit(n_limit, guard)?;
            let count = (0..n_limit)
                .into_par_iter()
                .filter(|&n| classify_two_adic(n).expect("n below guard").valuation() >= k)
                .count() as u64;
            Ok(DensityRow {
                n_limit,
                modulus: DensityModulus::PowerOfTwo { k },
                divisible_count: BigUint::from(count),
                empirical_density: ratio(BigInt::from(count), n_limit),
                analytic_lower_bound: clamp_zero(lower_bound_mod2k(n_limit, k)?),
            })
        })
        .collect()
}

/// Counts `n < N` with `3 | C_n` for each requested `N`. The lower bound is
/// `1 - tstar_count_bound(N) / N` clamped at 0: a nonzero residue forces
/// `n + 1` into the 0/1-digit set, whose size the bound caps.
pub fn density_sweep_mod3(n_values: &[u64]) -> Result<Vec<DensityRow>, Error> {
    density_sweep_mod3_with_guard(n_values, DEFAULT_MAX_N)
}

/// As [`density_sweep_mod3`] with an explicit cap on the range ends.
pub fn density_sweep_mod3_with_guard(
    n_values: &[u64],
    guard: u64,
) -> Result<Vec<DensityRow>, Error> {
    n_values
        .iter()
        .map(|&n_limit| {
            check_sweep_limit(n_limit, guard)?;
            let count = (0..n_limit)
                .into_par_iter()
                .filter(|&n| catalan_mod3(n).expect("n below guard").residue() == 0)
                .count() as u64;
            let bound_numer =
                BigInt::from(n_limit) - BigInt::from(tstar_count_bound(n_limit)?);
            Ok(DensityRow {
                n_limit,
                modulus: DensityModulus::Three,
                divisible_count: BigUint::from(count),
                empirical_density: ratio(BigInt::from(count), n_limit),
                analytic_lower_bound: clamp_zero(ratio(bound_numer, n_limit)),
            })
        })
        .collect()
}
