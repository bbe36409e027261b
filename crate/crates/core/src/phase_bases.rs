//! Operator bases over the N×N discrete phase space.
//!
//! Four families are built from the clock/shift pair:
//!
//! - `S(η,ξ) = ω^{ηξ/2} U^η V^ξ / √N`, the symmetrized dual basis, labels in
//!   the canonical window `[0, N-1]`. It is orthonormal under the trace inner
//!   product and `S(−η,−ξ) = S†(η,ξ)` when the half phase is evaluated at the
//!   raw (unreduced) labels.
//! - `G(μ,ν)`, the discrete Fourier transform of the symmetrized basis. For
//!   odd N the summation runs over the symmetric label window, which makes
//!   every `G(μ,ν)` Hermitian (real Wigner values); for even N the canonical
//!   window is used and `G` is Hermitian only at N = 2.
//! - `D(η,ξ) = ω^{−{2⁻¹ηξ}} U^η V^{−ξ}`, odd N, symmetric window, the basis
//!   whose label-average is the parity operator.
//! - `Δ(μ,ν) = D(μ,ν) P D†(μ,ν)`, displaced parity, Hermitian involutions.
//!
//! Decomposition in either the S or G family is exact: the coefficient grids
//! are `Tr[basis†·O]` and reconstruction inverts to machine precision.

use crate::linalg::{dagger, matmul, trace_adjoint_product, Complex, ComplexMatrix};
use crate::schwinger::{half_root, root_of_unity, FourierParity, SchwingerPair};
use crate::{Error, Result};

/// Dual phase-space point `(η, ξ)`, stored canonically in `[0, N-1]²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualPhasePoint {
    pub eta: i64,
    pub xi: i64,
}

impl DualPhasePoint {
    pub fn new(eta: i64, xi: i64, n: usize) -> Self {
        Self {
            eta: eta.rem_euclid(n as i64),
            xi: xi.rem_euclid(n as i64),
        }
    }
}

/// Phase-space point `(μ, ν)`, stored canonically in `[0, N-1]²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhasePoint {
    pub mu: i64,
    pub nu: i64,
}

impl PhasePoint {
    pub fn new(mu: i64, nu: i64, n: usize) -> Self {
        Self {
            mu: mu.rem_euclid(n as i64),
            nu: nu.rem_euclid(n as i64),
        }
    }
}

/// Reduce a label to the canonical window `[0, N-1]`.
pub fn to_canonical(label: i64, n: usize) -> i64 {
    label.rem_euclid(n as i64)
}

/// Reduce a label to the symmetric window `[-(N-1)/2, (N-1)/2]` (odd N).
pub fn to_symmetric(label: i64, n: usize) -> i64 {
    let ell = (n as i64 - 1) / 2;
    let canon = label.rem_euclid(n as i64);
    if canon > ell {
        canon - n as i64
    } else {
        canon
    }
}

/// Label window the `G` kernel sums over: symmetric for odd N, canonical
/// for even N.
pub(crate) fn g_window(n: usize) -> Vec<i64> {
    if n % 2 == 1 {
        let ell = (n as i64 - 1) / 2;
        (-ell..=ell).collect()
    } else {
        (0..n as i64).collect()
    }
}

/// Symmetrized basis element at raw integer labels.
///
/// The half phase `exp(iπηξ/N)` uses the unreduced product `ηξ`, so
/// `s_basis_raw(-η, -ξ) = s_basis_raw(η, ξ)†` exactly.
pub fn s_basis_raw(pair: &SchwingerPair, eta: i64, xi: i64) -> ComplexMatrix {
    let n = pair.dim();
    let norm = 1.0 / (n as f64).sqrt();
    pair.uv_pow(eta, xi)
        .scale(half_root(n, eta * xi) * norm)
}

/// Symmetrized basis element at a canonical dual point.
pub fn s_basis(pair: &SchwingerPair, p: DualPhasePoint) -> ComplexMatrix {
    s_basis_raw(pair, p.eta, p.xi)
}

/// Compensating phase exponent `Φ(η,ξ;N) = N·I_η·I_ξ − η·I_ξ − ξ·I_η` with
/// `I_ε = ⌊ε/N⌋`. Identically zero on the canonical window.
pub fn phi(eta: i64, xi: i64, n: usize) -> i64 {
    let ie = eta.div_euclid(n as i64);
    let ix = xi.div_euclid(n as i64);
    n as i64 * ie * ix - eta * ix - xi * ie
}

/// mod(N)-invariant kernel at a canonical phase point.
pub fn g_basis(pair: &SchwingerPair, p: PhasePoint) -> ComplexMatrix {
    let n = pair.dim();
    let norm = 1.0 / (n as f64).sqrt();
    let mut acc = ComplexMatrix::zeros(n);
    for &eta in g_window(n).iter() {
        for &xi in g_window(n).iter() {
            let phase = root_of_unity(n, -(p.mu * eta + p.nu * xi));
            acc = acc
                .add(&s_basis_raw(pair, eta, xi).scale(phase))
                .expect("same dims");
        }
    }
    acc.scale(Complex::new(norm, 0.0))
}

/// All N² kernel elements, row-major by `(μ, ν)`.
pub fn g_basis_all(pair: &SchwingerPair) -> Vec<ComplexMatrix> {
    let n = pair.dim();
    let mut out = Vec::with_capacity(n * n);
    for mu in 0..n as i64 {
        for nu in 0..n as i64 {
            out.push(g_basis(pair, PhasePoint { mu, nu }));
        }
    }
    out
}

/// The Fourier sum of Φ-compensated basis elements over the window
/// `[start, start + N - 1]²`.
///
/// The compensating factor `ω^{NΦ/2} = (−1)^Φ` makes the summand invariant
/// under label shifts by N, so the result is independent of `start`;
/// `start = 0` reproduces the canonical-window Fourier sum verbatim.
pub fn g_basis_windowed(pair: &SchwingerPair, p: PhasePoint, start: i64) -> ComplexMatrix {
    let n = pair.dim();
    let norm = 1.0 / (n as f64).sqrt();
    let mut acc = ComplexMatrix::zeros(n);
    for eta in start..start + n as i64 {
        for xi in start..start + n as i64 {
            let sign = if phi(eta, xi, n).rem_euclid(2) == 0 {
                1.0
            } else {
                -1.0
            };
            let phase = root_of_unity(n, -(p.mu * eta + p.nu * xi)) * sign;
            acc = acc
                .add(&s_basis_raw(pair, eta, xi).scale(phase))
                .expect("same dims");
        }
    }
    acc.scale(Complex::new(norm, 0.0))
}

/// Which operator family a coefficient grid refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisTag {
    S,
    G,
}

/// Coefficient grid of an operator in the S or G family; row = first label.
#[derive(Debug, Clone)]
pub struct OperatorCoefficients {
    pub dim: usize,
    pub basis_tag: BasisTag,
    pub values: Vec<Complex>,
}

impl OperatorCoefficients {
    pub fn get(&self, first: usize, second: usize) -> Complex {
        self.values[first * self.dim + second]
    }
}

/// Coefficients `Tr[basis†(a,b)·O]` over the canonical label grid.
pub fn decompose(
    pair: &SchwingerPair,
    o: &ComplexMatrix,
    tag: BasisTag,
) -> Result<OperatorCoefficients> {
    let n = pair.dim();
    if o.dim() != n {
        return Err(Error::DimensionMismatch(o.dim(), n));
    }
    let mut values = Vec::with_capacity(n * n);
    for a in 0..n as i64 {
        for b in 0..n as i64 {
            let basis = match tag {
                BasisTag::S => s_basis(pair, DualPhasePoint { eta: a, xi: b }),
                BasisTag::G => g_basis(pair, PhasePoint { mu: a, nu: b }),
            };
            values.push(trace_adjoint_product(&basis, o)?);
        }
    }
    Ok(OperatorCoefficients {
        dim: n,
        basis_tag: tag,
        values,
    })
}

/// Invert a decomposition: `O = Σ 𝒪 S` or `O = (1/N) Σ O G`.
pub fn reconstruct(pair: &SchwingerPair, c: &OperatorCoefficients) -> ComplexMatrix {
    let n = pair.dim();
    let mut acc = ComplexMatrix::zeros(n);
    for a in 0..n as i64 {
        for b in 0..n as i64 {
            let basis = match c.basis_tag {
                BasisTag::S => s_basis(pair, DualPhasePoint { eta: a, xi: b }),
                BasisTag::G => g_basis(pair, PhasePoint { mu: a, nu: b }),
            };
            acc = acc
                .add(&basis.scale(c.get(a as usize, b as usize)))
                .expect("same dims");
        }
    }
    match c.basis_tag {
        BasisTag::S => acc,
        BasisTag::G => acc.scale(Complex::new(1.0 / n as f64, 0.0)),
    }
}

/// Fourier link from S-family coefficients to G-family coefficients.
///
/// `O(μ,ν) = (1/√N) Σ ω^{μη+νξ} 𝒪_w(η,ξ)` where the sum runs over the same
/// window the `G` kernel uses and `𝒪_w` re-expresses the canonical
/// coefficients at that window's raw labels (a sign flip per wrapped label,
/// from the raw-label half phase). For even N this is the canonical-window
/// transform with the compensating phase identically 1.
pub fn coeff_fourier_link(
    pair: &SchwingerPair,
    c_s: &OperatorCoefficients,
) -> Result<OperatorCoefficients> {
    if c_s.basis_tag != BasisTag::S {
        return Err(Error::InvalidParameter(
            "coefficient Fourier link expects S-family coefficients".into(),
        ));
    }
    let n = pair.dim();
    let transform = |mu: i64, nu: i64| -> Complex {
        let mut acc = Complex::new(0.0, 0.0);
        for &eta in g_window(n).iter() {
            for &xi in g_window(n).iter() {
                let ce = to_canonical(eta, n);
                let cx = to_canonical(xi, n);
                // s_basis_raw(eta, xi) = sign · s_basis_raw(ce, cx)
                let a = if eta < 0 { 1 } else { 0 };
                let b = if xi < 0 { 1 } else { 0 };
                let sign = if (b * ce + a * cx + a * b * n as i64) % 2 == 0 {
                    1.0
                } else {
                    -1.0
                };
                acc += root_of_unity(n, mu * eta + nu * xi)
                    * c_s.get(ce as usize, cx as usize)
                    * sign;
            }
        }
        acc / Complex::new((n as f64).sqrt(), 0.0)
    };
    let mut values = Vec::with_capacity(n * n);
    for mu in 0..n as i64 {
        for nu in 0..n as i64 {
            values.push(transform(mu, nu));
        }
    }
    Ok(OperatorCoefficients {
        dim: n,
        basis_tag: BasisTag::G,
        values,
    })
}

/// Coefficient at reflected labels, `𝒪(−η,−ξ) = Tr[S†(−η,−ξ)·O]`, evaluated
/// through the raw-label identity `S(−η,−ξ) = S†(η,ξ)`.
pub fn s_coeff_reflected(pair: &SchwingerPair, o: &ComplexMatrix, eta: i64, xi: i64) -> Complex {
    let s = s_basis_raw(pair, eta, xi);
    // Tr[S(η,ξ)·O] = Tr[(S†)†·O]
    trace_adjoint_product(&dagger(&s), o).expect("same dims")
}

/// Displaced-dual basis element `D(η,ξ) = ω^{−{2⁻¹ηξ}} U^η V^{−ξ}` (odd N).
///
/// `2⁻¹ = (N+1)/2` is the multiplicative inverse of 2 mod N and the exponent
/// is reduced mod N, so `D` is invariant under label shifts by N; labels are
/// conventionally drawn from the symmetric window.
pub fn d_basis(pair: &SchwingerPair, eta: i64, xi: i64) -> Result<ComplexMatrix> {
    let n = pair.dim();
    if n % 2 == 0 {
        return Err(Error::EvenDimension(n));
    }
    let inv2 = (n as i64 + 1) / 2;
    let exponent = (inv2 * eta * xi).rem_euclid(n as i64);
    Ok(pair
        .uv_pow(eta, -xi)
        .scale(root_of_unity(n, -exponent)))
}

/// Displaced parity `Δ(μ,ν) = D(μ,ν) P D†(μ,ν)` (odd N); Hermitian involution.
pub fn delta_basis(pair: &SchwingerPair, fp: &FourierParity, mu: i64, nu: i64) -> Result<ComplexMatrix> {
    let d = d_basis(pair, mu, nu)?;
    matmul(&matmul(&d, fp.parity())?, &dagger(&d))
}

/// Deviations for the similarity and displacement identities.
///
/// Checks that conjugating `S(η,ξ)` by `√N·S(α,−β)` multiplies it by
/// `ω^{−(βη+αξ)}` (anchor = `(α,β)`, target = `(η,ξ)`), and that the kernel
/// at the anchor point equals the displaced kernel
/// `√N·S(ν,−μ) G(0,0) √N·S†(ν,−μ)`. Returns the larger max-entry deviation.
pub fn similarity_check(
    pair: &SchwingerPair,
    anchor: DualPhasePoint,
    target: DualPhasePoint,
) -> f64 {
    let n = pair.dim();
    let sqrt_n = Complex::new((n as f64).sqrt(), 0.0);
    let conj_op = s_basis_raw(pair, anchor.eta, -anchor.xi).scale(sqrt_n);
    let s_target = s_basis_raw(pair, target.eta, target.xi);
    let lhs = matmul(&matmul(&conj_op, &s_target).unwrap(), &dagger(&conj_op)).unwrap();
    let rhs = s_target.scale(pair.omega_pow(-(anchor.xi * target.eta + anchor.eta * target.xi)));
    let dev_s = lhs.max_abs_diff(&rhs);

    let (mu, nu) = (anchor.eta, anchor.xi);
    let disp = s_basis_raw(pair, nu, -mu).scale(sqrt_n);
    let moved = matmul(
        &matmul(&disp, &g_basis(pair, PhasePoint { mu: 0, nu: 0 })).unwrap(),
        &dagger(&disp),
    )
    .unwrap();
    let dev_g = moved.max_abs_diff(&g_basis(pair, PhasePoint { mu, nu }));

    dev_s.max(dev_g)
}

/// Largest deviation from `Tr[S†(a')S(a)] = δ` over all label pairs.
pub fn s_orthonormality_deviation(pair: &SchwingerPair) -> f64 {
    let n = pair.dim();
    let mut basis = Vec::with_capacity(n * n);
    for eta in 0..n as i64 {
        for xi in 0..n as i64 {
            basis.push(s_basis(pair, DualPhasePoint { eta, xi }));
        }
    }
    let mut dev: f64 = 0.0;
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let t = trace_adjoint_product(a, b).unwrap();
            let want = if i == j { 1.0 } else { 0.0 };
            dev = dev.max((t - Complex::new(want, 0.0)).norm());
        }
    }
    dev
}
