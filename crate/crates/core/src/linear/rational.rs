use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact scalar. Always stored reduced with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `p` or `p/q` (optional sign, `q > 0`).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::parse(0, format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den <= BigInt::zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_reduced() {
        assert_eq!(rat(2, 4).to_string(), "1/2");
        assert_eq!(rat(4, 2).to_string(), "2");
        assert_eq!(rat(3, -6).to_string(), "-1/2");
        assert_eq!(int(0).to_string(), "0");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "7", "-3/4", "10/5"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
        }
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn sum_two_ways() {
        // a/b + c/d computed through the common denominator and through the library.
        let (a, b, c, d) = (7i64, 12i64, -5i64, 18i64);
        let direct = rat(a * d + c * b, b * d);
        assert_eq!(rat(a, b) + rat(c, d), direct);
    }
}
