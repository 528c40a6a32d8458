//! Exact q-series laboratory: truncated power series over the rationals,
//! partition enumeration oracles, and a catalog of sum-of-tails identities
//! checked coefficient by coefficient.

pub mod catalog;
pub mod cli;
pub mod engine;
pub mod error;
pub mod partition;
pub mod qseries;
pub mod rational;
pub mod report;
pub mod series;

pub use error::{CatalogError, ParseError, PartitionError, SeriesError};
pub use qseries::{Monomial, SumGuard};
pub use rational::Rational;
pub use series::Series;
