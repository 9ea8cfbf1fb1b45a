//! Small helpers over `num`'s arbitrary-precision rationals.

use num::{BigInt, BigRational, One, Zero};

use crate::{Error, Result};

/// Exact integer as a rational.
pub(crate) fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// 2^e as a rational; negative exponents give exact dyadic fractions.
pub(crate) fn pow2(e: i64) -> BigRational {
    let shifted = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        BigRational::from_integer(shifted)
    } else {
        BigRational::new(BigInt::one(), shifted)
    }
}

/// 2^e as an integer.
pub(crate) fn big2(e: u32) -> BigInt {
    BigInt::one() << e
}

/// Parse `p`, `-p` or `p/q` into a reduced rational with the sign on the
/// numerator. `Ratio::from_str` panics on a zero denominator, so denominators
/// are checked here first.
pub(crate) fn parse(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidRational(s.to_string());
    match s.split_once('/') {
        None => {
            let n: BigInt = s.trim().parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| bad())?;
            let d: BigInt = den.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow2_handles_both_signs() {
        assert_eq!(pow2(4), int(16));
        assert_eq!(pow2(0), int(1));
        assert_eq!(pow2(-4) * int(16), int(1));
    }

    #[test]
    fn parse_reduces_and_signs() {
        assert_eq!(parse("6/4").unwrap(), BigRational::new(3.into(), 2.into()));
        assert_eq!(parse("-6/4").unwrap(), BigRational::new((-3).into(), 2.into()));
        assert_eq!(parse("17").unwrap(), int(17));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
