//! Reading and writing rationals as `"p/q"` or integer strings.

use num::bigint::BigInt;
use num::{BigRational, Integer, One, Signed};

use crate::error::{Error, Result};

/// Serializes a rational as `"p"` when integral, `"p/q"` otherwise.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"`. The denominator must be positive and the fraction
/// already in lowest terms.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = |msg: &str| Error::Format(format!("bad rational {s:?}: {msg}"));
    let (num_str, den_str) = match s.split_once('/') {
        None => (s, "1"),
        Some((n, d)) => (n, d),
    };
    let numer: BigInt = num_str.parse().map_err(|_| bad("unparsable numerator"))?;
    let denom: BigInt = den_str.parse().map_err(|_| bad("unparsable denominator"))?;
    if !denom.is_positive() {
        return Err(bad("denominator must be positive"));
    }
    if !numer.gcd(&denom).is_one() {
        return Err(bad("fraction not in lowest terms"));
    }
    Ok(BigRational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["0", "7", "-3", "1/2", "-5/8", "123456789123456789/2"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }

    #[test]
    fn rejects_bad_forms() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("2/4").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("").is_err());
    }
}
