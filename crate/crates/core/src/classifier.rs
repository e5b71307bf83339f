//! Digit-based classification of the n-th Catalan number: its exact 2-adic
//! valuation, the divisibility and half-residue predicates mod `2^k`, and its
//! residue mod 3. None of these ever compute the Catalan number itself.
//!
//! The valuation route determines `C_n mod 2^k` only partially: it decides
//! `C_n ≡ 0` (valuation at least k) and `C_n ≡ 2^(k-1)` (valuation exactly
//! k − 1), and nothing else. Full residues mod `2^k` come only from
//! [`crate::oracle`].

use crate::padic::{alpha_of, d3_star, is_tstar01_member};
use crate::Error;

/// Largest supported input: operations here depend on `n + 1`, and the CLI
/// range grammar promises support up to `2^62`.
pub const MAX_N: u64 = 1 << 62;

fn check_n(n: u64) -> Result<(), Error> {
    if n > MAX_N {
        return Err(Error::LimitExceeded {
            what: "n",
            value: n,
            limit: MAX_N,
        });
    }
    Ok(())
}

fn check_k(k: u64) -> Result<(), Error> {
    if k == 0 {
        return Err(Error::MustBePositive {
            what: "modulus exponent k",
        });
    }
    Ok(())
}

/// `n` together with its index `alpha_of(n)` and the 2-adic valuation of the
/// n-th Catalan number (the binary digit sum of that index).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoAdicClass {
    n: u64,
    alpha: u64,
    valuation: u64,
}

impl TwoAdicClass {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The index `(CF_2(n + 1) - 1) / 2` controlling the valuation.
    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    /// Exact 2-adic valuation of the n-th Catalan number.
    pub fn valuation(&self) -> u64 {
        self.valuation
    }
}

/// Computes the 2-adic class of the n-th Catalan number in O(1) word
/// operations: the valuation equals the binary digit sum of `alpha_of(n)`.
pub fn classify_two_adic(n: u64) -> Result<TwoAdicClass, Error> {
    check_n(n)?;
    let alpha = alpha_of(n);
    Ok(TwoAdicClass {
        n,
        alpha,
        valuation: alpha.count_ones() as u64,
    })
}

/// True iff `2^k` divides the n-th Catalan number, i.e. the valuation is at
/// least `k`. Requires `k >= 1`.
pub fn divisible_by_2k(n: u64, k: u64) -> Result<bool, Error> {
    check_k(k)?;
    Ok(classify_two_adic(n)?.valuation >= k)
}

/// True iff the n-th Catalan number is congruent to `2^(k-1)` mod `2^k`,
/// i.e. the valuation is exactly `k - 1`. Requires `k >= 1`.
pub fn is_half_residue_2k(n: u64, k: u64) -> Result<bool, Error> {
    check_k(k)?;
    Ok(classify_two_adic(n)?.valuation == k - 1)
}

/// Residue of the n-th Catalan number mod 3 together with the membership data
/// that produced it: whether `n + 1` has only 0/1 base-3 digits above the
/// units position, and the count of such 1-digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mod3Residue {
    n: u64,
    residue: u8,
    in_shifted_tstar: bool,
    sign_exponent: u64,
}

impl Mod3Residue {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Residue mod 3: 0, 1, or 2.
    pub fn residue(&self) -> u8 {
        self.residue
    }

    /// Whether `n + 1` has only digits 0 or 1 at base-3 positions 1 and above.
    /// The residue is nonzero exactly in this case.
    pub fn in_shifted_tstar(&self) -> bool {
        self.in_shifted_tstar
    }

    /// `d3_star(n + 1)`, the exponent deciding between residues 1 and 2.
    /// Meaningful only when [`Self::in_shifted_tstar`] is true.
    pub fn sign_exponent(&self) -> u64 {
        self.sign_exponent
    }
}

/// Residue of the n-th Catalan number mod 3 from base-3 digits of `n + 1`
/// alone: 0 unless `n + 1` has only 0/1 digits above the units position, in
/// which case the residue is 1 for an even count of those 1-digits and 2 for
/// an odd count.
pub fn catalan_mod3(n: u64) -> Result<Mod3Residue, Error> {
    check_n(n)?;
    let successor = n + 1;
    let member = is_tstar01_member(successor);
    let sign_exponent = d3_star(successor);
    let residue = if !member {
        0
    } else if sign_exponent % 2 == 0 {
        1
    } else {
        2
    };
    Ok(Mod3Residue {
        n,
        residue,
        in_shifted_tstar: member,
        sign_exponent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::{self, expand};
    use proptest::prelude::*;

    #[test]
    fn two_adic_frozen_examples() {
        // C_0 = 1: valuation 0.
        let c = classify_two_adic(0).unwrap();
        assert_eq!((c.n(), c.alpha(), c.valuation()), (0, 0, 0));
        // C_4 = 14 = 2 * 7: alpha 2, valuation 1.
        let c = classify_two_adic(4).unwrap();
        assert_eq!((c.alpha(), c.valuation()), (2, 1));
        // C_10 = 16796 = 4 * 4199: alpha 5 = 101b, valuation 2.
        let c = classify_two_adic(10).unwrap();
        assert_eq!((c.alpha(), c.valuation()), (5, 2));
    }

    #[test]
    fn class_invariants_hold() {
        for n in 0..(1u64 << 14) {
            let c = classify_two_adic(n).unwrap();
            assert_eq!(c.alpha(), padic::alpha_of(n));
            assert_eq!(
                c.valuation(),
                expand(c.alpha(), 2).unwrap().digit_ones_count()
            );
            assert_eq!(
                c.valuation() + 1,
                expand(n + 1, 2).unwrap().digit_ones_count()
            );
        }
    }

    #[test]
    fn divisible_frozen_examples() {
        assert!(divisible_by_2k(4, 1).unwrap()); // C_4 = 14
        assert!(!divisible_by_2k(7, 1).unwrap()); // C_7 = 429
        assert!(divisible_by_2k(6, 2).unwrap()); // C_6 = 132 = 4 * 33
    }

    #[test]
    fn half_residue_frozen_examples() {
        assert!(is_half_residue_2k(4, 2).unwrap()); // 14 = 2 mod 4
        assert!(is_half_residue_2k(0, 1).unwrap()); // C_0 = 1 is odd
        assert!(!is_half_residue_2k(6, 2).unwrap()); // 132 = 0 mod 4
    }

    #[test]
    fn k_zero_is_rejected() {
        assert!(divisible_by_2k(5, 0).is_err());
        assert!(is_half_residue_2k(5, 0).is_err());
    }

    #[test]
    fn n_beyond_supported_range_is_rejected() {
        assert!(classify_two_adic(MAX_N).is_ok());
        assert!(classify_two_adic(MAX_N + 1).is_err());
        assert!(catalan_mod3(MAX_N + 1).is_err());
    }

    #[test]
    fn mod3_frozen_examples() {
        // C_0 = 1: successor 1 is a member with zero high ones.
        let r = catalan_mod3(0).unwrap();
        assert_eq!(r.residue(), 1);
        assert!(r.in_shifted_tstar());
        assert_eq!(r.sign_exponent(), 0);
        // C_2 = 2: successor 3 = 10 base 3, one high one.
        let r = catalan_mod3(2).unwrap();
        assert_eq!(r.residue(), 2);
        assert_eq!(r.sign_exponent(), 1);
        // C_6 = 132 = 3 * 44: successor 7 = 21 base 3 is not a member.
        let r = catalan_mod3(6).unwrap();
        assert_eq!(r.residue(), 0);
        assert!(!r.in_shifted_tstar());
    }

    #[test]
    fn mod3_residue_matches_membership() {
        for n in 0..200_000u64 {
            let r = catalan_mod3(n).unwrap();
            assert_eq!(r.residue() == 0, !r.in_shifted_tstar(), "n = {n}");
            if r.in_shifted_tstar() {
                let expected = if r.sign_exponent() % 2 == 0 { 1 } else { 2 };
                assert_eq!(r.residue(), expected, "n = {n}");
            }
        }
    }

    proptest! {
        #[test]
        fn divisible_and_half_residue_are_mutually_exclusive(
            n in 0..=MAX_N,
            k in 1u64..=64,
        ) {
            let div = divisible_by_2k(n, k).unwrap();
            let half = is_half_residue_2k(n, k).unwrap();
            prop_assert!(!(div && half));
        }

        #[test]
        fn exactly_one_half_residue_level(n in 0..=MAX_N) {
            let v = classify_two_adic(n).unwrap().valuation();
            let hits: Vec<u64> = (0..=64)
                .filter(|&j| is_half_residue_2k(n, j + 1).unwrap())
                .collect();
            prop_assert_eq!(hits, vec![v]);
        }

        #[test]
        fn parity_consistency(n in 0..=MAX_N) {
            // Odd Catalan number <=> n + 1 is a power of two <=> alpha is 0.
            let c = classify_two_adic(n).unwrap();
            let odd = is_half_residue_2k(n, 1).unwrap();
            prop_assert_eq!(odd, c.valuation() == 0);
            prop_assert_eq!(odd, (n + 1).is_power_of_two());
            prop_assert_eq!(odd, c.alpha() == 0);
        }
    }
}
