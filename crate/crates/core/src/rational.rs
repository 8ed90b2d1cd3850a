//! Exact rational helpers on top of `num-rational`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_biguint(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

/// `base^exp` for a possibly negative exponent.
pub fn pow(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), (-exp) as usize)
    }
}

pub fn pow2(exp: i64) -> Rational {
    pow(&int(2), exp)
}

pub fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// Parses `"a"` or `"a/b"`.
pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim();
    let r = Rational::from_str(t).map_err(|_| Error::validation(format!("not a rational number: {s:?}")))?;
    Ok(r)
}

/// Formats as `"a"` or `"a/b"` in lowest terms.
pub fn format(r: &Rational) -> String {
    r.to_string()
}

pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn double_factorial_odd(k: u64) -> BigUint {
    // (2k-1)!!
    (1..=k).fold(BigUint::one(), |acc, i| acc * (2 * i - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        assert_eq!(parse("3/6").unwrap(), frac(1, 2));
        assert_eq!(format(&frac(-4, 2)), "-2");
        assert_eq!(format(&frac(5, 4)), "5/4");
        assert!(parse("x").is_err());
    }

    #[test]
    fn negative_powers() {
        assert_eq!(pow2(-2), frac(1, 4));
        assert_eq!(pow(&int(-2), 3), int(-8));
    }

    #[test]
    fn counting_helpers() {
        assert_eq!(double_factorial_odd(4), BigUint::from(105u32));
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(factorial(0), BigUint::one());
    }
}
