//! Clock/shift unitary pair, discrete Fourier operator, and discrete parity.
//!
//! The pair `(U, V)` acts on the clock eigenbasis as `U|u_a> = ω^a |u_a>` and
//! `V|u_a> = |u_{a-1}>` with `ω = exp(2πi/N)`, so `V^ξ U^η = ω^{ηξ} U^η V^ξ`
//! and `U^N = V^N = 1`. Integer powers are produced analytically (phases
//! reduced mod N, shifts reduced mod N) rather than by repeated
//! multiplication, so the defining algebra holds to machine precision.

use crate::linalg::{matmul, Complex, ComplexMatrix};
use crate::{Error, Result};
use std::f64::consts::PI;

/// `exp(2πi k / n)` with the exponent reduced mod `n`.
pub(crate) fn root_of_unity(n: usize, k: i64) -> Complex {
    let m = k.rem_euclid(n as i64) as f64;
    Complex::from_polar(1.0, 2.0 * PI * m / n as f64)
}

/// `exp(iπ t / n)` with the exponent reduced mod `2n` (the principal square
/// root of the N-th root of unity raised to `t`).
pub(crate) fn half_root(n: usize, t: i64) -> Complex {
    let m = t.rem_euclid(2 * n as i64) as f64;
    Complex::from_polar(1.0, PI * m / n as f64)
}

/// The clock/shift pair for one dimension, with `ω` and its principal root.
#[derive(Debug, Clone)]
pub struct SchwingerPair {
    dim: usize,
    u: ComplexMatrix,
    v: ComplexMatrix,
    omega: Complex,
    half_omega: Complex,
}

impl SchwingerPair {
    /// Build the pair in the clock eigenbasis; requires `n ≥ 2`.
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        let u = ComplexMatrix::from_fn(n, |r, c| {
            if r == c {
                root_of_unity(n, r as i64)
            } else {
                Complex::new(0.0, 0.0)
            }
        });
        // V|u_c> = |u_{c-1}>, so entry (r, c) = 1 iff r ≡ c−1 (mod N).
        let v = ComplexMatrix::from_fn(n, |r, c| {
            if (r as i64 - (c as i64 - 1)).rem_euclid(n as i64) == 0 {
                Complex::new(1.0, 0.0)
            } else {
                Complex::new(0.0, 0.0)
            }
        });
        Ok(Self {
            dim: n,
            u,
            v,
            omega: root_of_unity(n, 1),
            half_omega: half_root(n, 1),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn u(&self) -> &ComplexMatrix {
        &self.u
    }

    pub fn v(&self) -> &ComplexMatrix {
        &self.v
    }

    pub fn omega(&self) -> Complex {
        self.omega
    }

    /// Principal branch `exp(iπ/N)` of `ω^{1/2}`.
    pub fn half_omega(&self) -> Complex {
        self.half_omega
    }

    /// `ω^k` with any integer exponent.
    pub fn omega_pow(&self, k: i64) -> Complex {
        root_of_unity(self.dim, k)
    }

    /// `U^k` for any integer `k` (negative powers are adjoints).
    pub fn u_pow(&self, k: i64) -> ComplexMatrix {
        let n = self.dim;
        ComplexMatrix::from_fn(n, |r, c| {
            if r == c {
                root_of_unity(n, r as i64 * k)
            } else {
                Complex::new(0.0, 0.0)
            }
        })
    }

    /// `V^k` for any integer `k`.
    pub fn v_pow(&self, k: i64) -> ComplexMatrix {
        let n = self.dim;
        ComplexMatrix::from_fn(n, |r, c| {
            if (r as i64 - (c as i64 - k)).rem_euclid(n as i64) == 0 {
                Complex::new(1.0, 0.0)
            } else {
                Complex::new(0.0, 0.0)
            }
        })
    }

    /// `U^η V^ξ`; entry `(r, c) = ω^{ηr}` iff `r ≡ c−ξ (mod N)`.
    pub fn uv_pow(&self, eta: i64, xi: i64) -> ComplexMatrix {
        let n = self.dim;
        ComplexMatrix::from_fn(n, |r, c| {
            if (r as i64 - (c as i64 - xi)).rem_euclid(n as i64) == 0 {
                root_of_unity(n, eta * r as i64)
            } else {
                Complex::new(0.0, 0.0)
            }
        })
    }

    /// Shift eigenvector `|v_β>` in the clock basis: `<u_α|v_β> = ω^{αβ}/√N`.
    pub fn shift_eigenvector(&self, beta: i64) -> Vec<Complex> {
        let n = self.dim;
        let norm = 1.0 / (n as f64).sqrt();
        (0..n)
            .map(|a| root_of_unity(n, a as i64 * beta) * norm)
            .collect()
    }
}

/// Discrete Fourier operator and the parity operator it squares to.
#[derive(Debug, Clone)]
pub struct FourierParity {
    fourier: ComplexMatrix,
    parity: ComplexMatrix,
}

impl FourierParity {
    /// `F` has entries `ω^{rc}/√N`; `P = F²` reverses clock indices mod N.
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        let norm = 1.0 / (n as f64).sqrt();
        let fourier = ComplexMatrix::from_fn(n, |r, c| root_of_unity(n, (r * c) as i64) * norm);
        let parity = matmul(&fourier, &fourier)?;
        Ok(Self { fourier, parity })
    }

    pub fn fourier(&self) -> &ComplexMatrix {
        &self.fourier
    }

    pub fn parity(&self) -> &ComplexMatrix {
        &self.parity
    }
}
