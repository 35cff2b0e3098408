//! Field-generic matrices, canonical subspaces, projectors and symmetries.

pub mod endo;
pub mod matrix;
pub mod scalar;
pub mod subspace;

pub use endo::{
    anticommutator, commutator, im_ker, is_normal, is_normal_quadratic, is_symmetry_perturbation,
    is_tangent, is_tangent_quadratic, pi_normal, pi_tangent, pol, projector, projector_of,
    splitting_projector, symmetry_of, symmetry_of_splitting, EndoMap, RestrictedMap,
};
pub use matrix::{Echelon, Matrix};
pub use scalar::{
    float_tolerance, powi, set_float_tolerance, ComplexFloat, ComplexScalar, GaussianRational,
    Rational, Scalar, DEFAULT_TOLERANCE,
};
pub use subspace::{is_splitting, Splitting, Subspace};
