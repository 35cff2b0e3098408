//! Splittings, oblique projectors and the non-commutative cross-ratio.
//!
//! Everything is generic over a [`Scalar`] field: exact [`Rational`],
//! exact [`GaussianRational`], or [`ComplexFloat`] with a comparison
//! tolerance. The ambient algebra is always the full matrix algebra of a
//! finite-dimensional coordinate space.
//!
//! - [`linalg`]: matrices, canonical subspaces, projectors, symmetries.
//! - [`crossratio`]: admissible couples, `DV`, `Φ`, `D̃V`, `Ξ`.
//! - [`fourier`]: truncated Fourier model with its polarizations.
//! - [`symbols`]: truncated formal classical symbols on the circle.
//! - [`measures`]: signed measures on finite sets and their partitions.

pub mod crossratio;
pub mod error;
pub mod fourier;
pub mod linalg;
pub mod measures;
pub mod sampling;
pub mod symbols;

pub use crossratio::SplittingPair;
pub use error::{Condition, Error, Result};
pub use linalg::{
    ComplexFloat, ComplexScalar, EndoMap, GaussianRational, Matrix, Rational, RestrictedMap,
    Scalar, Splitting, Subspace,
};
