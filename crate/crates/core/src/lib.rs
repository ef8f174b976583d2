//! Characteristic numbers of smooth complete intersections in complex
//! projective space, and the singularity count of one-dimensional holomorphic
//! foliations leaving them invariant.
//!
//! The crate is organised bottom-up:
//!
//! - [`symfun`]: binomials and complete homogeneous symmetric ("Wronski")
//!   functions, exact.
//! - [`chern`]: truncated series in the hyperplane class, total Chern class,
//!   Euler characteristics and the twisted top Chern number.
//! - [`invariants`]: polar classes and the singularity-count polynomial.
//! - [`bounds`]: the odd-dimensional degree bound and its diagnostics.
//! - [`verifier`]: exact multivariate polynomials, invariance certificates and
//!   a multistart solver that locates singular points numerically.
//! - [`identities`]: exhaustive grid checks of the combinatorial identities.

pub mod bounds;
pub mod chern;
mod error;
pub mod identities;
pub mod invariants;
pub mod symfun;
pub mod verifier;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use chern::{CompleteIntersectionSpec, FoliationDegree, HSeries};
pub use invariants::{PolarClasses, SingCountPolynomial};
pub use symfun::IntVector;
