//! Fuzzy value representations, trapezoidal membership and the FEQ
//! possibility comparator.
//!
//! Everything here is a pure function of its inputs.

mod compare;
mod degree;
mod similarity;
mod trapezoid;
mod value;

pub use compare::{feq, feq_type3, ComparisonDomain};
pub use degree::Degree;
pub use similarity::{validate_similarity, SimilarityRelation, SimilarityViolation};
pub use trapezoid::{poss_eq_ordered, Trapezoid};
pub use value::{to_trapezoid, Element, FuzzyValue, ValueKind};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FuzzyError {
    #[error("degree {0} is outside [0,1]")]
    DegreeOutOfRange(f64),
    #[error("trapezoid {0:?} must satisfy a <= b <= c <= d with finite parameters")]
    InvalidTrapezoid([f64; 4]),
    #[error("interval [{0},{1}] needs finite bounds with n < m")]
    InvalidInterval(f64, f64),
    #[error("approximate value needs a finite positive margin, got {0}")]
    InvalidMargin(f64),
    #[error("non-finite number {0}")]
    NonFinite(f64),
    #[error("empty label name")]
    EmptyLabel,
    #[error("possibility distribution needs at least one pair")]
    EmptyDistribution,
    #[error("element {0} appears more than once")]
    DuplicateElement(String),
    #[error("element {0} has possibility 0; distribution degrees must be in (0,1]")]
    ZeroPossibility(String),
    #[error("distribution mixes numeric and scalar elements")]
    MixedElements,
    #[error("label {0} cannot be resolved")]
    UnresolvedLabel(String),
    #[error("{0} value has no ordered (trapezoid) form")]
    NotOrdered(ValueKind),
    #[error("{0} value cannot be compared on an unordered domain")]
    NotUnordered(ValueKind),
    #[error("element {0} is not in the similarity domain")]
    ElementNotInDomain(String),
    #[error("similarity matrix has {rows} rows for a domain of {domain} elements")]
    DimensionMismatch { domain: usize, rows: usize },
    #[error("s({0},{0}) is fixed at 1, cannot set {1}")]
    DiagonalPinned(String, f64),
}
