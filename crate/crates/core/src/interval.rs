use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coord::Coord;
use crate::error::GeometryError;

/// Closed segment `[left, right]` with `left < right`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawInterval", into = "RawInterval")]
pub struct Interval {
    left: Coord,
    right: Coord,
}

#[derive(Serialize, Deserialize)]
struct RawInterval {
    l: Coord,
    r: Coord,
}

impl TryFrom<RawInterval> for Interval {
    type Error = GeometryError;
    fn try_from(raw: RawInterval) -> Result<Self, Self::Error> {
        Interval::new(raw.l, raw.r)
    }
}

impl From<Interval> for RawInterval {
    fn from(iv: Interval) -> Self {
        RawInterval {
            l: iv.left,
            r: iv.right,
        }
    }
}

impl Interval {
    pub fn new(left: Coord, right: Coord) -> Result<Self, GeometryError> {
        if left < right {
            Ok(Interval { left, right })
        } else {
            Err(GeometryError::EmptyInterval {
                left: left.to_string(),
                right: right.to_string(),
            })
        }
    }

    /// Constructor for call sites whose endpoints are ordered by construction.
    pub(crate) fn ordered(left: Coord, right: Coord) -> Self {
        debug_assert!(left < right, "degenerate interval [{left}, {right}]");
        Interval { left, right }
    }

    pub fn from_ints(left: i64, right: i64) -> Result<Self, GeometryError> {
        Interval::new(Coord::from_int(left), Coord::from_int(right))
    }

    /// `[start, start + 1]`.
    pub fn unit(start: Coord) -> Self {
        let right = &start + &Coord::one();
        Interval { left: start, right }
    }

    /// `[start, start + len]`; `len` must be positive.
    pub fn with_length(start: Coord, len: &Coord) -> Self {
        let right = &start + len;
        Interval::ordered(start, right)
    }

    pub fn left(&self) -> &Coord {
        &self.left
    }

    pub fn right(&self) -> &Coord {
        &self.right
    }

    pub fn length(&self) -> Coord {
        &self.right - &self.left
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.left <= other.right && other.left <= self.right
    }

    pub fn contains_point(&self, x: &Coord) -> bool {
        &self.left <= x && x <= &self.right
    }

    /// True when `other` lies inside the open interior of `self`.
    pub fn properly_contains(&self, other: &Interval) -> bool {
        self.left < other.left && other.right < self.right
    }

    pub fn covers(&self, other: &Interval) -> bool {
        self.left <= other.left && other.right <= self.right
    }

    pub fn translate(&self, by: &Coord) -> Interval {
        Interval {
            left: &self.left + by,
            right: &self.right + by,
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            left: self.left.clone().min(other.left.clone()),
            right: self.right.clone().max(other.right.clone()),
        }
    }
}

pub fn intersects(a: &Interval, b: &Interval) -> bool {
    a.intersects(b)
}

pub fn interval_length(a: &Interval) -> Coord {
    a.length()
}

/// Smallest interval covering every member, or `None` for an empty input.
pub fn hull_of<'a>(ivs: impl IntoIterator<Item = &'a Interval>) -> Option<Interval> {
    ivs.into_iter().fold(None, |acc: Option<Interval>, iv| match acc {
        None => Some(iv.clone()),
        Some(h) => Some(h.hull(iv)),
    })
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.left, self.right)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.left, self.right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(l: &str, r: &str) -> Interval {
        Interval::new(l.parse().unwrap(), r.parse().unwrap()).unwrap()
    }

    #[test]
    fn closed_endpoints_touch() {
        assert!(intersects(&iv("0", "1"), &iv("1", "2")));
        assert!(!intersects(&iv("0", "1"), &iv("2", "3")));
        assert!(intersects(&iv("0", "8"), &iv("5", "6")));
    }

    #[test]
    fn lengths_are_exact() {
        assert_eq!(interval_length(&iv("0", "1")), Coord::one());
        assert_eq!(interval_length(&iv("1/2", "5/2")), Coord::from_int(2));
        assert_eq!(interval_length(&iv("0", "33/4")), Coord::ratio(33, 4));
    }

    #[test]
    fn rejects_degenerate() {
        assert!(Interval::from_ints(1, 1).is_err());
        assert!(Interval::from_ints(2, 1).is_err());
    }

    #[test]
    fn serde_shape() {
        let s = serde_json::to_string(&iv("1/2", "3")).unwrap();
        assert_eq!(s, r#"{"l":"1/2","r":"3"}"#);
        let back: Interval = serde_json::from_str(&s).unwrap();
        assert_eq!(back, iv("1/2", "3"));
        assert!(serde_json::from_str::<Interval>(r#"{"l":"3","r":"1"}"#).is_err());
    }
}
