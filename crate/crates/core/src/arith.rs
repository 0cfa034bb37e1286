//! Exact integer arithmetic and the combinatorial primitives every other
//! module is built on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision signed integer used for every coefficient.
pub type ExactInteger = BigInt;

/// Canonical exact rational (reduced, positive denominator).
pub type ExactRational = BigRational;

/// `n!`
pub fn factorial(n: u64) -> ExactInteger {
    (2..=n).fold(ExactInteger::one(), |acc, i| acc * i)
}

/// Binomial coefficient `C(n, r)`, zero whenever `r < 0` or `r > n`.
pub fn binomial(n: u64, r: i64) -> ExactInteger {
    if r < 0 || r as u64 > n {
        return ExactInteger::zero();
    }
    let r = (r as u64).min(n - r as u64);
    // Each partial product C(n, i) is an integer, so the division is exact.
    let mut acc = ExactInteger::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient with a possibly negative top argument. Negative `n`
/// yields zero, which is the convention the counting formulas rely on when an
/// index combination leaves no cells.
pub fn binomial_signed(n: i64, r: i64) -> ExactInteger {
    if n < 0 {
        ExactInteger::zero()
    } else {
        binomial(n as u64, r)
    }
}

/// Falling factorial power `x (x - 1) ... (x - k + 1)`. `k = 0` gives the
/// empty product.
pub fn falling_factorial(x: &ExactInteger, k: u64) -> ExactInteger {
    let mut acc = ExactInteger::one();
    let mut term = x.clone();
    for _ in 0..k {
        if term.is_zero() {
            return ExactInteger::zero();
        }
        acc *= &term;
        term -= 1;
    }
    acc
}

/// `(-1)^e` for a possibly negative exponent.
pub fn sign_pow(e: i64) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Multiply by `(-1)^e` in place.
pub(crate) fn apply_sign(value: ExactInteger, e: i64) -> ExactInteger {
    if sign_pow(e) < 0 {
        -value
    } else {
        value
    }
}

/// Parse a decimal string (optional leading `-`) into an exact integer.
pub fn parse_decimal(s: &str) -> Option<ExactInteger> {
    let t = s.trim();
    let digits = t.strip_prefix('-').unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    t.parse().ok()
}
