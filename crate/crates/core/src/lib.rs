//! Exact-arithmetic kernel for Ulrich bundle computations on complete intersections.

pub mod arith;
pub mod ci;
pub mod closed_forms;
pub mod error;
pub mod poly;
pub mod report;
pub mod symfunc;
pub mod ulrich;

pub use arith::Rational;
pub use ci::{CIConfig, Certificate, Reason, Verdict, Witness};
pub use error::{Error, Result};
pub use poly::{Monomial, MultiPoly, MAX_VARS};
pub use report::{Check, Report, Status};
pub use symfunc::{Partition, SymExpansion};
