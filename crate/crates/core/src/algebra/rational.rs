use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact rational number, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Parses `"p/q"` or a bare integer `"p"`. Decimal and float syntax is
/// rejected so no value is ever silently rounded.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = || Error::Parse {
        what: "rational",
        input: text.to_string(),
    };
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Binomial coefficient C(n, k) via the multiplicative Pascal recurrence,
/// zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}
