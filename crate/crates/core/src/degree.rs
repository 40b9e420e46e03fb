//! Degrees in the semigroup `N^2`, ordered componentwise.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A degree `(blue, red)` in `N^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Degree {
    pub blue: usize,
    pub red: usize,
}

impl Degree {
    pub const ZERO: Degree = Degree { blue: 0, red: 0 };
    pub const BLUE: Degree = Degree { blue: 1, red: 0 };
    pub const RED: Degree = Degree { blue: 0, red: 1 };

    pub const fn new(blue: usize, red: usize) -> Self {
        Degree { blue, red }
    }

    /// Componentwise `<=`. This is a partial order, so `Degree` deliberately
    /// does not implement `PartialOrd` with a total meaning.
    pub fn le(self, other: Degree) -> bool {
        self.blue <= other.blue && self.red <= other.red
    }

    pub fn partial_cmp(self, other: Degree) -> Option<Ordering> {
        match (self.blue.cmp(&other.blue), self.red.cmp(&other.red)) {
            (a, b) if a == b => Some(a),
            (Ordering::Equal, b) => Some(b),
            (a, Ordering::Equal) => Some(a),
            _ => None,
        }
    }

    pub fn join(self, other: Degree) -> Degree {
        Degree::new(self.blue.max(other.blue), self.red.max(other.red))
    }

    pub fn meet(self, other: Degree) -> Degree {
        Degree::new(self.blue.min(other.blue), self.red.min(other.red))
    }

    /// `self - other`, or `None` unless `other <= self`.
    pub fn checked_sub(self, other: Degree) -> Option<Degree> {
        Some(Degree::new(
            self.blue.checked_sub(other.blue)?,
            self.red.checked_sub(other.red)?,
        ))
    }

    pub fn scale(self, k: usize) -> Degree {
        Degree::new(self.blue * k, self.red * k)
    }

    pub fn total(self) -> usize {
        self.blue + self.red
    }

    pub fn is_zero(self) -> bool {
        self == Degree::ZERO
    }

    /// All degrees `d` with `d <= self`, blue-major.
    pub fn below(self) -> impl Iterator<Item = Degree> {
        (0..=self.blue).flat_map(move |b| (0..=self.red).map(move |r| Degree::new(b, r)))
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        Degree::new(self.blue + rhs.blue, self.red + rhs.red)
    }
}

impl Sub for Degree {
    type Output = Degree;
    /// Panics unless `rhs <= self`; use [`Degree::checked_sub`] otherwise.
    fn sub(self, rhs: Degree) -> Degree {
        self.checked_sub(rhs)
            .unwrap_or_else(|| panic!("degree underflow: {self} - {rhs}"))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.blue, self.red)
    }
}

impl FromStr for Degree {
    type Err = Error;

    /// Accepts `2,3`, `(2,3)` or `2x3`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = t.split([',', 'x']).map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("expected a degree like 2,2 but got {s:?}")));
        }
        let parse = |p: &str| {
            p.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad degree component {p:?}")))
        };
        Ok(Degree::new(parse(parts[0])?, parse(parts[1])?))
    }
}
