//! Jacobi theta functions, Dedekind eta, Eisenstein series and the
//! Rogers–Ramanujan continued fraction on two engines: exact truncated
//! q-series over the rationals, and double-precision complex evaluation.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: brute-force number theory used as independent oracles
//! - [`series`]: truncated series in the nome with rational exponents
//! - [`builders`]: constructors for every named function as a [`series::QSeries`]
//! - [`numeric`]: complex evaluation at a point `(z, τ)`
//! - [`registry`]: the identity catalog and verification engine
//! - [`expr`]: the expression language used by the command line
//! - [`report`]: JSON aggregation of verdicts

pub mod arith;
pub mod builders;
pub mod expr;
pub mod numeric;
pub mod registry;
pub mod report;
pub mod series;

pub use series::{QExp, QSeries, Rational};

/// Crate version, echoed into reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
