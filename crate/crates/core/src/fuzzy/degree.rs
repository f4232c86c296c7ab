use std::fmt;

use super::FuzzyError;

/// A membership or possibility grade in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Degree(f64);

impl Degree {
    pub const ZERO: Degree = Degree(0.0);
    pub const ONE: Degree = Degree(1.0);

    pub fn new(value: f64) -> Result<Self, FuzzyError> {
        if (0.0..=1.0).contains(&value) {
            Ok(Degree(value))
        } else {
            Err(FuzzyError::DegreeOutOfRange(value))
        }
    }

    /// Clamps into `[0, 1]`. NaN maps to zero.
    pub fn saturating(value: f64) -> Self {
        if value.is_nan() {
            Degree(0.0)
        } else {
            Degree(value.clamp(0.0, 1.0))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn min(self, other: Degree) -> Degree {
        if other.0 < self.0 {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Degree) -> Degree {
        if other.0 > self.0 {
            other
        } else {
            self
        }
    }
}

impl TryFrom<f64> for Degree {
    type Error = FuzzyError;

    fn try_from(value: f64) -> Result<Self, Self::Error> {
        Degree::new(value)
    }
}

impl From<Degree> for f64 {
    fn from(d: Degree) -> f64 {
        d.0
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
