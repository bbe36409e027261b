//! Tolerance ladder for the whole crate.
//!
//! Double precision at N ≤ 16 keeps conditioning benign, so exact algebraic
//! identities are held at 1e-12 on matrix entries, eigen-derived quantities
//! at 1e-9, and composite trace identities (two decompositions multiplied
//! together) at 1e-11.

/// Absolute tolerance for exact algebraic identities on matrix entries.
pub const TOL_EXACT: f64 = 1e-12;

/// Tolerance for quantities routed through the eigensolver.
pub const TOL_EIGEN: f64 = 1e-9;

/// Tolerance for composite trace identities (products of two decompositions).
pub const TOL_COMPOSITE: f64 = 1e-11;

/// Smallest admissible eigenvalue of a density matrix.
pub const TOL_POSITIVITY: f64 = -1e-10;

/// Hermiticity pre-check bound for the eigensolver.
pub const TOL_HERMITIAN_INPUT: f64 = 1e-10;
