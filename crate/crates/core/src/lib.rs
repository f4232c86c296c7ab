//! Embedded fuzzy relational query engine.
//!
//! - Type 1 attributes hold precise values.
//! - Type 2 attributes hold trapezoidal possibility distributions over an ordered domain.
//! - Type 3 attributes hold distributions over a scalar domain with a similarity relation.
//!
//! Fuzzy cells are stored in conversion-row form and queried with FSQL.
//!
//! ```
//! use fuzzyrel::fuzzy::Trapezoid;
//!
//! let joven = Trapezoid::new(15.0, 20.0, 25.0, 30.0).unwrap();
//! assert_eq!(joven.membership(26.0).value(), 0.8);
//! ```

pub mod catalog;
pub mod cli;
pub mod engine;
pub mod fsql;
pub mod fuzzy;
