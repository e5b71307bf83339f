//! Exact big-integer Catalan values and residues, used as ground truth for
//! every digit-based result in the crate.
//!
//! Two independent routes exist for the values (the product recurrence and
//! the direct central-binomial formula) and two for valuations (trial
//! division of the exact value and the factorial-valuation identity), so a
//! bug in one route cannot silently validate itself.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::census::binomial;
use crate::classifier::{catalan_mod3, classify_two_adic};
use crate::padic::omega;
use crate::Error;

/// Default cap on `n` for exact computation: the value at the top has about
/// 100k bits, keeping full runs in seconds.
pub const DEFAULT_ORACLE_BOUND: u64 = 50_000;

/// An index together with the exact value of its Catalan number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigCatalan {
    n: u64,
    value: BigUint,
}

impl BigCatalan {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn into_value(self) -> BigUint {
        self.value
    }
}

/// Streams exact Catalan values from index 0 upward, advancing by the product
/// recurrence `C_{m+1} = C_m * 2(2m + 1) / (m + 2)`. Each step is one
/// multiply and one exact divide on the running value, so walking to `n`
/// costs O(n) big-integer operations in total rather than per index.
#[derive(Debug, Clone)]
pub struct CatalanIter {
    next_n: u64,
    value: BigUint,
}

impl CatalanIter {
    pub fn new() -> Self {
        CatalanIter {
            next_n: 0,
            value: BigUint::one(),
        }
    }

    /// Index the next call to `next` will yield.
    pub fn peek_n(&self) -> u64 {
        self.next_n
    }

    /// Exact value at the current index, without cloning.
    pub fn current_value(&self) -> &BigUint {
        &self.value
    }

    /// Steps the recurrence once without yielding a value.
    pub fn advance(&mut self) {
        let m = self.next_n;
        self.value *= 2 * (2 * u128::from(m) + 1);
        let (quotient, remainder) = self.value.div_rem(&BigUint::from(m + 2));
        assert!(
            remainder.is_zero(),
            "recurrence step at m = {m} is not an exact division"
        );
        self.value = quotient;
        self.next_n += 1;
    }
}

impl Default for CatalanIter {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for CatalanIter {
    type Item = BigCatalan;

    fn next(&mut self) -> Option<BigCatalan> {
        let item = BigCatalan {
            n: self.next_n,
            value: self.value.clone(),
        };
        self.advance();
        Some(item)
    }
}

fn check_bound(n: u64, bound: u64) -> Result<(), Error> {
    if n > bound {
        return Err(Error::LimitExceeded {
            what: "oracle index n",
            value: n,
            limit: bound,
        });
    }
    Ok(())
}

/// Exact value of the n-th Catalan number via the product recurrence.
pub fn catalan_exact(n: u64) -> Result<BigCatalan, Error> {
    catalan_exact_with_bound(n, DEFAULT_ORACLE_BOUND)
}

/// As [`catalan_exact`] with an explicit bound on `n`.
pub fn catalan_exact_with_bound(n: u64, bound: u64) -> Result<BigCatalan, Error> {
    check_bound(n, bound)?;
    let mut iter = CatalanIter::new();
    for _ in 0..n {
        iter.advance();
    }
    Ok(BigCatalan {
        n,
        value: iter.value,
    })
}

/// Independent second route: the n-th Catalan number as
/// `C(2n, n) / (n + 1)`, with the division checked to be exact.
pub fn catalan_direct(n: u64) -> BigUint {
    let central = binomial(2 * n, n);
    let (quotient, remainder) = central.div_rem(&BigUint::from(n + 1));
    assert!(
        remainder.is_zero(),
        "central binomial at n = {n} is not divisible by n + 1"
    );
    quotient
}

/// Exact residue of the n-th Catalan number modulo `m` (`m >= 2`).
pub fn catalan_residue(n: u64, m: u64) -> Result<u64, Error> {
    if m < 2 {
        return Err(Error::BaseTooSmall {
            what: "residue modulus",
            got: m,
        });
    }
    let value = catalan_exact(n)?.into_value();
    Ok((value % m).to_u64().expect("residue below a u64 modulus"))
}

/// Legendre-style valuation of `m!`: the sum of `floor(m / p^i)` over `i >= 1`.
fn factorial_valuation(mut m: u64, p: u64) -> u64 {
    let mut total = 0;
    while m > 0 {
        m /= p;
        total += m;
    }
    total
}

/// Exact p-adic valuation of the n-th Catalan number, computed by trial
/// division of the exact value and cross-checked against the independent
/// factorial-valuation identity
/// `omega_p(C_n) = omega_p((2n)!) - 2 omega_p(n!) - omega_p(n + 1)`.
pub fn valuation_exact(n: u64, p: u64) -> Result<u64, Error> {
    valuation_exact_with_bound(n, p, DEFAULT_ORACLE_BOUND)
}

/// As [`valuation_exact`] with an explicit bound on `n`.
pub fn valuation_exact_with_bound(n: u64, p: u64, bound: u64) -> Result<u64, Error> {
    if p < 2 {
        return Err(Error::BaseTooSmall {
            what: "valuation base",
            got: p,
        });
    }
    let value = catalan_exact_with_bound(n, bound)?.into_value();
    let by_trial_division = big_valuation(&value, p);
    let by_identity = factorial_valuation(2 * n, p) - 2 * factorial_valuation(n, p)
        - omega(n + 1, p).expect("n + 1 is positive");
    assert_eq!(
        by_trial_division, by_identity,
        "valuation routes disagree at n = {n}, p = {p}"
    );
    Ok(by_trial_division)
}

fn big_valuation(value: &BigUint, p: u64) -> u64 {
    let p = BigUint::from(p);
    let mut order = 0;
    let mut m = value.clone();
    loop {
        let (quotient, remainder) = m.div_rem(&p);
        if !remainder.is_zero() {
            return order;
        }
        order += 1;
        m = quotient;
    }
}

/// One digit-route answer that failed against the exact value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u64,
    pub description: String,
}

/// Outcome of [`verify_range`]: how many indices were checked and every
/// mismatch found (an empty list is the expected outcome).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n_max: u64,
    pub k_max: u64,
    pub values_checked: u64,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks every digit-based classification against the exact value for all
/// `n < n_max`: the 2-adic valuation, the residue mod 3, and for each
/// `k = 1..=k_max` the divisibility and half-residue predicates against
/// `C_n mod 2^k`. Maintains the running exact value across indices, so the
/// whole range costs O(n_max) big-integer steps.
///
/// Mismatches are collected and reported, never raised.
pub fn verify_range(n_max: u64, k_max: u64) -> Result<VerificationReport, Error> {
    verify_range_with_bound(n_max, k_max, DEFAULT_ORACLE_BOUND)
}

/// As [`verify_range`] with an explicit bound on `n_max`.
pub fn verify_range_with_bound(
    n_max: u64,
    k_max: u64,
    bound: u64,
) -> Result<VerificationReport, Error> {
    check_bound(n_max, bound)?;
    if k_max > 62 {
        return Err(Error::LimitExceeded {
            what: "k_max",
            value: k_max,
            limit: 62,
        });
    }
    let mut report = VerificationReport {
        n_max,
        k_max,
        values_checked: 0,
        mismatches: Vec::new(),
    };
    let three = BigUint::from(3u32);
    let mut iter = CatalanIter::new();
    for n in 0..n_max {
        let value = iter.current_value();

        // Exact 2-adic valuation, double-checked against the factorial
        // identity; a disagreement here is an oracle bug, not a mismatch.
        let exact_valuation = value.trailing_zeros().unwrap_or(0);
        let identity_valuation = factorial_valuation(2 * n, 2) - 2 * factorial_valuation(n, 2)
            - omega(n + 1, 2).expect("n + 1 is positive");
        assert_eq!(
            exact_valuation, identity_valuation,
            "oracle valuation routes disagree at n = {n}"
        );

        let classified = classify_two_adic(n)?.valuation();
        if classified != exact_valuation {
            report.mismatches.push(Mismatch {
                n,
                description: format!(
                    "valuation: digit route {classified}, exact {exact_valuation}"
                ),
            });
        }

        let mod3 = catalan_mod3(n)?.residue();
        let exact_mod3 = (value % &three).to_u64().expect("residue below 3") as u8;
        if mod3 != exact_mod3 {
            report.mismatches.push(Mismatch {
                n,
                description: format!("mod 3: digit route {mod3}, exact {exact_mod3}"),
            });
        }

        if k_max > 0 {
            // Low 64 bits are enough for residues mod 2^k, k <= 62.
            let low = value.iter_u64_digits().next().unwrap_or(0);
            for k in 1..=k_max {
                let residue = low & ((1u64 << k) - 1);
                let divisible = crate::classifier::divisible_by_2k(n, k)?;
                if divisible != (residue == 0) {
                    report.mismatches.push(Mismatch {
                        n,
                        description: format!("divisibility by 2^{k}: digit route {divisible}"),
                    });
                }
                let half = crate::classifier::is_half_residue_2k(n, k)?;
                if half != (residue == 1u64 << (k - 1)) {
                    report.mismatches.push(Mismatch {
                        n,
                        description: format!("half residue mod 2^{k}: digit route {half}"),
                    });
                }
            }
        }

        report.values_checked += 1;
        iter.advance();
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn first_values_match_the_sequence() {
        let expected: [u64; 15] = [
            1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208_012, 742_900, 2_674_440,
        ];
        let got: Vec<BigUint> = CatalanIter::new().take(15).map(|c| c.into_value()).collect();
        let expected: Vec<BigUint> = expected.iter().map(|&v| big(v)).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn exact_frozen_examples() {
        assert_eq!(catalan_exact(0).unwrap().value(), &big(1));
        assert_eq!(catalan_exact(5).unwrap().value(), &big(42));
        assert_eq!(catalan_exact(10).unwrap().value(), &big(16796));
    }

    #[test]
    fn bound_is_enforced() {
        assert!(catalan_exact_with_bound(11, 10).is_err());
        assert!(catalan_exact_with_bound(10, 10).is_ok());
        assert!(verify_range_with_bound(1 << 20, 1, DEFAULT_ORACLE_BOUND).is_err());
    }

    #[test]
    fn recurrence_matches_direct_formula_up_to_200() {
        let mut iter = CatalanIter::new();
        for n in 0..=200u64 {
            let from_recurrence = iter.next().unwrap().into_value();
            assert_eq!(from_recurrence, catalan_direct(n), "n = {n}");
        }
    }

    #[test]
    fn recurrence_matches_direct_formula_at_random_points() {
        // 20 deterministic pseudo-random indices up to the default bound.
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut samples: Vec<u64> = (0..20)
            .map(|_| {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (state >> 33) % (DEFAULT_ORACLE_BOUND + 1)
            })
            .collect();
        samples.sort_unstable();
        let mut iter = CatalanIter::new();
        for &n in &samples {
            while iter.peek_n() < n {
                iter.advance();
            }
            assert_eq!(iter.current_value(), &catalan_direct(n), "n = {n}");
        }
    }

    #[test]
    fn residue_frozen_examples() {
        assert_eq!(catalan_residue(4, 4).unwrap(), 2);
        assert_eq!(catalan_residue(6, 3).unwrap(), 0);
        for m in [2u64, 3, 5, 1000] {
            assert_eq!(catalan_residue(0, m).unwrap(), 1);
        }
        assert!(catalan_residue(4, 1).is_err());
    }

    #[test]
    fn valuation_frozen_examples() {
        assert_eq!(valuation_exact(4, 2).unwrap(), 1);
        assert_eq!(valuation_exact(7, 2).unwrap(), 0);
        assert_eq!(valuation_exact(10, 2).unwrap(), 2);
        assert_eq!(valuation_exact(6, 3).unwrap(), 1); // 132 = 3 * 44
    }

    #[test]
    fn valuation_routes_agree_for_small_range() {
        // valuation_exact asserts trial division against the factorial
        // identity internally; drive it over a range for both primes.
        for n in 0..200u64 {
            for p in [2u64, 3] {
                valuation_exact(n, p).unwrap();
            }
        }
    }

    #[test]
    fn verify_range_frozen_examples() {
        let report = verify_range(64, 4).unwrap();
        assert_eq!(report.values_checked, 64);
        assert!(report.is_clean(), "mismatches: {:?}", report.mismatches);

        let report = verify_range(1, 1).unwrap();
        assert_eq!(report.values_checked, 1);
        assert!(report.is_clean());
    }

    #[test]
    fn verify_range_medium() {
        let report = verify_range(2048, 6).unwrap();
        assert_eq!(report.values_checked, 2048);
        assert!(report.is_clean(), "mismatches: {:?}", report.mismatches);
    }
}
