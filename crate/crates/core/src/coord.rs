//! Exact rational coordinates.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

/// Arbitrary-precision rational scalar, always kept in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coord(BigRational);

impl Coord {
    pub fn zero() -> Self {
        Coord(BigRational::zero())
    }

    pub fn one() -> Self {
        Coord(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Coord(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Coord(BigRational::from_integer(n))
    }

    /// `num / den`, reduced. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Coord(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `base^exp` as an exact integer coordinate.
    pub fn pow_int(base: u32, exp: u32) -> Self {
        Coord::from_bigint(num_traits::pow(BigInt::from(base), exp as usize))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn floor(&self) -> Coord {
        Coord(self.0.floor())
    }

    pub fn ceil(&self) -> Coord {
        Coord(self.0.ceil())
    }

    pub fn abs(&self) -> Coord {
        Coord(self.0.abs())
    }

    pub fn min(self, other: Coord) -> Coord {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Coord) -> Coord {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &Coord) -> Coord {
        Coord((&self.0 + &other.0) / BigRational::from_integer(BigInt::from(2)))
    }

    /// Lossy conversion, for plots and human-facing ratios only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    /// Number of decimal digits in the numerator; a size gauge for logs.
    pub fn digits(&self) -> usize {
        self.0.numer().abs().to_string().len()
    }
}

impl From<i64> for Coord {
    fn from(n: i64) -> Self {
        Coord::from_int(n)
    }
}

impl From<BigRational> for Coord {
    fn from(r: BigRational) -> Self {
        Coord(r)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits() > 40 {
            write!(f, "Coord(~{} digits)", self.digits())
        } else {
            write!(f, "{self}")
        }
    }
}

impl FromStr for Coord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseError::Coord(s.to_string());
        match s.split_once('/') {
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Coord::from_bigint(n))
            }
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Ok(Coord(BigRational::new(p, q)))
            }
        }
    }
}

impl Serialize for Coord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Coord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Coord> for &Coord {
            type Output = Coord;
            fn $method(self, rhs: &Coord) -> Coord {
                Coord((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Coord> for Coord {
            type Output = Coord;
            fn $method(self, rhs: Coord) -> Coord {
                Coord(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Coord> for Coord {
            type Output = Coord;
            fn $method(self, rhs: &Coord) -> Coord {
                Coord(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Coord> for &Coord {
            type Output = Coord;
            fn $method(self, rhs: Coord) -> Coord {
                Coord((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        Coord(-self.0)
    }
}

impl Neg for &Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        Coord(-&self.0)
    }
}

/// Compare a coordinate against an integer without allocating a `Coord`.
pub fn cmp_int(c: &Coord, n: i64) -> Ordering {
    c.0.cmp(&BigRational::from_integer(BigInt::from(n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_reduced() {
        let c = Coord::ratio(6, -4);
        assert_eq!(c.to_string(), "-3/2");
        assert_eq!(c.denom(), &BigInt::from(2));
        assert_eq!(Coord::ratio(4, 2).to_string(), "2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-7", "33/4", "-1/3"] {
            let c: Coord = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
        }
        assert_eq!("10/4".parse::<Coord>().unwrap().to_string(), "5/2");
        assert!("1/0".parse::<Coord>().is_err());
        assert!("abc".parse::<Coord>().is_err());
    }

    #[test]
    fn big_powers_are_exact() {
        let big = Coord::pow_int(12, 400);
        let next = &big + &Coord::one();
        assert!(next > big);
        assert_eq!(&next - &big, Coord::one());
        assert!(big.digits() > 400);
    }

    #[test]
    fn ordering_matches_value() {
        assert!(Coord::ratio(1, 3) < Coord::ratio(1, 2));
        assert!(Coord::ratio(-1, 2) < Coord::zero());
        assert_eq!(cmp_int(&Coord::ratio(7, 2), 3), Ordering::Greater);
    }
}
