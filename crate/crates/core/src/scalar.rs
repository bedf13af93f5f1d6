//! The max-plus semiring carrier: `ℝ ∪ {ε}` with exact rational finite part.
//!
//! `⊕` is `max`, `⊗` is ordinary addition, and `ε` (printed `-inf`) is the
//! neutral element of `⊕` and the absorbing element of `⊗`. The dual
//! addition `⊕'` is `min`. Finite values are arbitrary-precision rationals,
//! so halving and negation never round.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exact rational used for every finite value in the crate.
pub type Rational = BigRational;

/// Shorthand for an integral [`Rational`].
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `num / den`. Panics if `den == 0`.
pub fn qr(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `x / 2`, exact.
pub fn half(x: &Rational) -> Rational {
    x / q(2)
}

/// An element of the max-plus semiring.
///
/// The variant order makes the derived `Ord` treat `ε` as the bottom element,
/// so `max`/`min` on scalars are the semiring `⊕`/`⊕'`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Eps,
    Fin(Rational),
}

impl Scalar {
    pub fn eps() -> Self {
        Scalar::Eps
    }

    /// The multiplicative unit `0`.
    pub fn zero() -> Self {
        Scalar::Fin(Rational::zero())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Fin(q(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Fin(qr(num, den))
    }

    pub fn is_eps(&self) -> bool {
        matches!(self, Scalar::Eps)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Scalar::Fin(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Scalar::Eps => None,
            Scalar::Fin(v) => Some(v),
        }
    }

    /// `a ⊕ b = max(a, b)`.
    pub fn oplus(&self, other: &Scalar) -> Scalar {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// `a ⊗ b = a + b`, with `ε` absorbing.
    pub fn otimes(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Fin(a), Scalar::Fin(b)) => Scalar::Fin(a + b),
            _ => Scalar::Eps,
        }
    }

    /// `a ⊗ c` for a finite rational `c`.
    pub fn shift(&self, c: &Rational) -> Scalar {
        match self {
            Scalar::Fin(a) => Scalar::Fin(a + c),
            Scalar::Eps => Scalar::Eps,
        }
    }

    /// `a ⊕' b = min(a, b)`; `ε` is the bottom, so `min(ε, a) = ε`.
    pub fn oplus_min(&self, other: &Scalar) -> Scalar {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Multiplicative inverse `a⁻¹ = -a`.
    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Fin(a) => Ok(Scalar::Fin(-a)),
            Scalar::Eps => Err(Error::EpsilonInverse),
        }
    }
}

impl From<Rational> for Scalar {
    fn from(v: Rational) -> Self {
        Scalar::Fin(v)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::int(v)
    }
}

/// Formats a rational as an integer when integral, otherwise `p/q`.
pub fn format_rational(v: &Rational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Eps => f.write_str("-inf"),
            Scalar::Fin(v) => f.write_str(&format_rational(v)),
        }
    }
}

/// Parses an exact rational: an integer, a decimal such as `-2.75`, or `p/q`.
pub fn parse_rational(token: &str) -> std::result::Result<Rational, String> {
    let t = token.trim();
    if t.is_empty() {
        return Err("empty number".into());
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| format!("invalid numerator in `{t}`"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| format!("invalid denominator in `{t}`"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in `{t}`"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        let negative = int_part.starts_with('-');
        let digits_int = int_part.trim_start_matches(['-', '+']);
        if frac_part.is_empty() && digits_int.is_empty()
            || !frac_part.chars().all(|c| c.is_ascii_digit())
            || !digits_int.chars().all(|c| c.is_ascii_digit())
        {
            return Err(format!("invalid decimal `{t}`"));
        }
        let whole: BigInt = if digits_int.is_empty() {
            BigInt::zero()
        } else {
            digits_int.parse().map_err(|_| format!("invalid decimal `{t}`"))?
        };
        let frac: BigInt = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            frac_part.parse().map_err(|_| format!("invalid decimal `{t}`"))?
        };
        let scale = num_traits::pow(BigInt::from(10), frac_part.len());
        let mut v = Rational::new(whole * &scale + frac, scale);
        if negative {
            v = -v;
        }
        return Ok(v);
    }
    let n: BigInt = t.parse().map_err(|_| format!("invalid number `{t}`"))?;
    Ok(Rational::from_integer(n))
}

impl FromStr for Scalar {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "-inf" | "*" | "ε" => Ok(Scalar::Eps),
            other => parse_rational(other).map(Scalar::Fin),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_is_max_and_idempotent() {
        assert_eq!(Scalar::int(3).oplus(&Scalar::int(5)), Scalar::int(5));
        assert_eq!(Scalar::int(4).oplus(&Scalar::int(4)), Scalar::int(4));
        assert_eq!(Scalar::Eps.oplus(&Scalar::int(-7)), Scalar::int(-7));
    }

    #[test]
    fn eps_absorbs_products_and_minima() {
        let a = Scalar::ratio(7, 3);
        assert_eq!(a.otimes(&Scalar::Eps), Scalar::Eps);
        assert_eq!(Scalar::Eps.oplus_min(&a), Scalar::Eps);
        assert_eq!(a.otimes(&Scalar::int(1)), Scalar::ratio(10, 3));
    }

    #[test]
    fn inverse_of_eps_is_a_domain_error() {
        assert_eq!(Scalar::Eps.inv(), Err(Error::EpsilonInverse));
        assert_eq!(Scalar::int(4).inv(), Ok(Scalar::int(-4)));
    }

    #[test]
    fn parses_all_number_forms_exactly() {
        assert_eq!("12".parse::<Scalar>().unwrap(), Scalar::int(12));
        assert_eq!("-2.75".parse::<Scalar>().unwrap(), Scalar::ratio(-11, 4));
        assert_eq!("0.1".parse::<Scalar>().unwrap(), Scalar::ratio(1, 10));
        assert_eq!("-.5".parse::<Scalar>().unwrap(), Scalar::ratio(-1, 2));
        assert_eq!("6/4".parse::<Scalar>().unwrap(), Scalar::ratio(3, 2));
        assert_eq!("-inf".parse::<Scalar>().unwrap(), Scalar::Eps);
        assert_eq!("*".parse::<Scalar>().unwrap(), Scalar::Eps);
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
        assert!("1.2.3".parse::<Scalar>().is_err());
    }

    #[test]
    fn display_uses_fractions_never_decimals() {
        assert_eq!(Scalar::ratio(-3, 2).to_string(), "-3/2");
        assert_eq!(Scalar::int(10).to_string(), "10");
        assert_eq!(Scalar::Eps.to_string(), "-inf");
    }
}
