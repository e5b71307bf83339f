//! Base-p expansions and the digit/valuation primitives everything else is
//! built on: p-adic order `omega`, cofactor, the index `alpha_of`, and the
//! digit-counting functions for bases 2 and 3.
//!
//! Digits are stored least-significant first, and the expansion of 0 is the
//! empty digit sequence. Digit extraction uses bit operations for base 2 and
//! repeated division for every other base; the two paths are checked against
//! each other in the tests.

use crate::Error;

/// Canonical base-p digit string of a natural number, least-significant digit
/// first. The most significant digit is nonzero except for the expansion of 0,
/// which has no digits at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitExpansion {
    base: u64,
    digits: Vec<u64>,
}

impl DigitExpansion {
    /// The base this expansion was taken in.
    pub fn base(&self) -> u64 {
        self.base
    }

    /// Digits, least-significant first. Every digit lies in `0..base`.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Number of digits; 0 only for the expansion of 0.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Reconstructs the expanded number, i.e. the sum of `digit[i] * base^i`.
    /// Canonical expansions of `u64` values can always be reconstructed; a
    /// hand-built digit string that overflows panics rather than wrapping.
    pub fn value(&self) -> u64 {
        let mut acc: u64 = 0;
        let mut scale: u64 = 1;
        for (i, &d) in self.digits.iter().enumerate() {
            acc = d
                .checked_mul(scale)
                .and_then(|t| acc.checked_add(t))
                .expect("digit expansion reconstruction overflows u64");
            if i + 1 < self.digits.len() {
                scale = scale
                    .checked_mul(self.base)
                    .expect("digit expansion reconstruction overflows u64");
            }
        }
        acc
    }

    /// Number of positions (including position 0) whose digit is exactly 1.
    /// For base 2 this is the binary digit sum.
    pub fn digit_ones_count(&self) -> u64 {
        self.digits.iter().filter(|&&d| d == 1).count() as u64
    }
}

/// Canonical base-p expansion of `n`. Rejects bases below 2.
pub fn expand(n: u64, base: u64) -> Result<DigitExpansion, Error> {
    if base < 2 {
        return Err(Error::BaseTooSmall {
            what: "expansion base",
            got: base,
        });
    }
    let digits = if base == 2 {
        digits_base2(n)
    } else {
        digits_by_division(n, base)
    };
    Ok(DigitExpansion { base, digits })
}

fn digits_base2(n: u64) -> Vec<u64> {
    let bits = 64 - n.leading_zeros() as usize;
    (0..bits).map(|i| (n >> i) & 1).collect()
}

fn digits_by_division(mut n: u64, base: u64) -> Vec<u64> {
    let mut digits = Vec::new();
    while n > 0 {
        digits.push(n % base);
        n /= base;
    }
    digits
}

/// p-adic order of `n`: the largest `a` with `p^a` dividing `n`. Undefined at
/// 0, so `n = 0` is rejected.
pub fn omega(n: u64, p: u64) -> Result<u64, Error> {
    if p < 2 {
        return Err(Error::BaseTooSmall {
            what: "p-adic base",
            got: p,
        });
    }
    if n == 0 {
        return Err(Error::MustBePositive {
            what: "argument of the p-adic order",
        });
    }
    if p == 2 {
        return Ok(n.trailing_zeros() as u64);
    }
    let mut order = 0;
    let mut m = n;
    while m % p == 0 {
        order += 1;
        m /= p;
    }
    Ok(order)
}

/// Cofactor of `n` with respect to `p`: `n` with every factor of `p` divided
/// out. The result is never divisible by `p`.
pub fn cofactor(n: u64, p: u64) -> Result<u64, Error> {
    let order = omega(n, p)?;
    if p == 2 {
        Ok(n >> order)
    } else {
        Ok(n / p.pow(order as u32))
    }
}

/// The index `(CF_2(n + 1) - 1) / 2`: the odd part of `n + 1`, shifted down
/// one bit. The division is always exact because the odd part is odd. Its
/// binary digit sum is the 2-adic valuation of the n-th Catalan number.
pub fn alpha_of(n: u64) -> u64 {
    let m = n.checked_add(1).expect("n + 1 overflows u64");
    let odd = m >> m.trailing_zeros();
    odd >> 1
}

/// Counts base-3 digits of `n` equal to 1 at positions 1 and above; the units
/// digit is excluded. Compare [`DigitExpansion::digit_ones_count`], which
/// counts every position.
pub fn d3_star(n: u64) -> u64 {
    let mut m = n / 3;
    let mut count = 0;
    while m > 0 {
        if m % 3 == 1 {
            count += 1;
        }
        m /= 3;
    }
    count
}

/// True when every base-3 digit of `n` at positions 1 and above lies in
/// `{0, 1}`. The units digit is unrestricted, so all of 0, 1, 2 are members.
pub fn is_tstar01_member(n: u64) -> bool {
    let mut m = n / 3;
    while m > 0 {
        if m % 3 == 2 {
            return false;
        }
        m /= 3;
    }
    true
}
