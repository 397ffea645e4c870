//! Exact multigraded commutative algebra.

pub mod cache;
pub mod cohomology;
pub mod corpus;
pub mod degree;
pub mod error;
pub mod expr;
pub mod field;
pub mod groebner;
pub mod harness;
pub mod homological;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod rees;
pub mod session;
pub mod report;
pub mod ring;

pub use degree::{compare_degrees, DegSel, Degree, DegreeRelation, GradingMap, Multidegree};
pub use error::{Error, Result};
pub use field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
