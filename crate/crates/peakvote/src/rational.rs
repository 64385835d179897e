//! Exact rational scores.
//!
//! All score computation in this crate is exact; there is no floating point
//! and no tolerance parameter anywhere. `i128` components are far beyond the
//! desk-scale magnitudes the solvers and generators produce.

use crate::model::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::Ratio<i128>;

/// Shorthand for an integral rational.
pub fn rat(n: i128) -> Rational {
    Rational::from_integer(n)
}

/// Parses `p` or `p/q` into a rational. Used by the CLI for Copeland's alpha.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Invalid(format!("invalid rational {text:?}: expected `p` or `p/q`"));
    let mut parts = text.splitn(2, '/');
    let numer: i128 = parts.next().unwrap().trim().parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(rat(numer)),
        Some(d) => {
            let denom: i128 = d.trim().parse().map_err(|_| bad())?;
            if denom == 0 {
                return Err(bad());
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("1/2").unwrap(), Rational::new(1, 2));
        assert_eq!(parse_rational("6/4").unwrap(), Rational::new(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn displays_as_fraction() {
        assert_eq!(rat(5).to_string(), "5");
        assert_eq!(Rational::new(1, 2).to_string(), "1/2");
    }
}
