//! Discrete phase-space toolbox for N-level quantum systems.
//!
//! The crate builds the clock/shift unitary pair and the operator bases they
//! generate (symmetrized dual basis, mod(N)-invariant phase-space basis, and
//! the displaced-parity basis for odd N), the SU(N) generator algebra with its
//! structure constants, and the discrete Wigner / characteristic functions of
//! density matrices, evaluated both by direct traces and by Bloch-vector
//! closed forms.
//!
//! Conventions used throughout:
//! - All operators are dense N×N complex matrices in the clock eigenbasis
//!   `{|u_0>, ..., |u_{N-1}>}`, so the clock operator is diagonal.
//! - Phase-space labels for the symmetrized basis and the mod(N)-invariant
//!   basis live in the canonical window `[0, N-1]`; the displaced-parity
//!   basis (odd N) uses the symmetric window `[-(N-1)/2, (N-1)/2]`.
//! - For odd N the mod(N)-invariant kernel is assembled over the symmetric
//!   label window, which makes it Hermitian and orthonormal; Wigner grids of
//!   Hermitian states are then real to machine precision. For even N ≥ 4 no
//!   Hermitian kernel of this form exists and grid values are generally
//!   complex; see [`wigner`] for what is defined where.

pub mod check;
pub mod io;
pub mod linalg;
pub mod phase_bases;
pub mod schwinger;
pub mod su3;
pub mod sun;
pub mod wigner;

mod tolerance;

pub use linalg::{CharPolyCoeffs, Complex, ComplexMatrix};
pub use phase_bases::{BasisTag, DualPhasePoint, OperatorCoefficients, PhasePoint};
pub use schwinger::{FourierParity, SchwingerPair};
pub use sun::{BlochVector, DensityMatrix, GeneratorIndex, GeneratorSet, StructureConstants};
pub use tolerance::{TOL_COMPOSITE, TOL_EIGEN, TOL_EXACT, TOL_POSITIVITY};
pub use wigner::{CharacteristicGrid, MappedGenerators, WignerBasis, WignerGrid};

/// Errors shared by every module of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("operation requires odd dimension, got {0}")]
    EvenDimension(usize),
    #[error("matrix is not Hermitian (max deviation {0:.3e})")]
    NotHermitian(f64),
    #[error("invalid density matrix: {0}")]
    InvalidState(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("value expected to be real has imaginary residue {0:.3e}")]
    NonReal(f64),
    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
