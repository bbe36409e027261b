//! Discrete Wigner and characteristic functions.
//!
//! A state's Wigner grid is the trace of the phase-space kernel against it,
//! `W(μ,ν) = Tr[G†(μ,ν)ρ]`, or equivalently the Bloch-vector form
//! `W = 1/N + (1/2) Σ <g_i> (g_i)(μ,ν)` built from the mapped generators
//! `(g_i)(μ,ν) = Tr[G†(μ,ν) g_i]`. The characteristic function is the same
//! construction in the dual (symmetrized) family. For odd N an alternative
//! grid comes from the displaced-parity kernel.
//!
//! Mapped generators carry two evaluation paths: direct traces against the
//! kernel, and closed forms. The closed form for a transition generator keyed
//! by `(α, β)` uses the symmetric representative `d*` of `β − α`: a Kronecker
//! delta at `μ ≡ α + d*/2` when `d*` is even, and the sine-ratio kernel
//! `(2/N) sin[(μ−α−d*/2)π] / sin[(μ−α−d*/2)π/N]` when `d*` is odd (the
//! half-integer shift keeps the denominator away from zero). Both paths agree
//! to machine precision for odd N and N = 2. The widely tabulated qutrit
//! variant that keys the delta branch on `α + β` instead belongs to a
//! non-orthonormal frame and lives in [`crate::su3`].

use crate::linalg::{matmul, trace, trace_adjoint_product, Complex, ComplexMatrix};
use crate::phase_bases::{
    decompose, delta_basis, g_basis_all, g_window, s_basis_raw, s_coeff_reflected, BasisTag,
};
use crate::schwinger::{root_of_unity, FourierParity, SchwingerPair};
use crate::sun::{bloch_vector, DensityMatrix, GeneratorIndex, GeneratorSet};
use crate::tolerance::{TOL_COMPOSITE, TOL_EXACT};
use crate::{Error, Result};
use std::f64::consts::PI;

/// Which kernel family a Wigner grid was computed against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WignerBasis {
    /// mod(N)-invariant kernel, canonical labels `[0, N-1]`.
    G,
    /// Displaced-parity kernel, symmetric labels (odd N only).
    Delta,
}

/// Real N×N phase-space grid; row-major with the first label outermost.
#[derive(Debug, Clone)]
pub struct WignerGrid {
    dim: usize,
    basis: WignerBasis,
    values: Vec<f64>,
}

impl WignerGrid {
    pub fn from_values(dim: usize, basis: WignerBasis, values: Vec<f64>) -> Result<Self> {
        if values.len() != dim * dim {
            return Err(Error::DimensionMismatch(values.len(), dim * dim));
        }
        Ok(Self { dim, basis, values })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> WignerBasis {
        self.basis
    }

    /// Value by storage index (`0..N` per axis).
    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.dim + j]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The phase-space labels in storage order: canonical for the G kernel,
    /// symmetric for the displaced-parity kernel.
    pub fn labels(&self) -> Vec<i64> {
        match self.basis {
            WignerBasis::G => (0..self.dim as i64).collect(),
            WignerBasis::Delta => {
                let ell = (self.dim as i64 - 1) / 2;
                (-ell..=ell).collect()
            }
        }
    }

    /// `(1/N) Σ W`, equal to `Tr ρ` for a state.
    pub fn normalization(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.dim as f64
    }

    /// `(1/N) Σ W²`; equals `Tr ρ²` for kernel-route grids of a state
    /// (the tabulated closed-form family does not preserve this sum).
    pub fn purity_sum(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>() / self.dim as f64
    }

    pub fn min(&self) -> f64 {
        self.values.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Complex N×N dual grid `χ(η,ξ)`, canonical labels.
#[derive(Debug, Clone)]
pub struct CharacteristicGrid {
    dim: usize,
    values: Vec<Complex>,
}

impl CharacteristicGrid {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn value(&self, eta: usize, xi: usize) -> Complex {
        self.values[eta * self.dim + xi]
    }

    pub fn values(&self) -> &[Complex] {
        &self.values
    }
}

fn collect_real(dim: usize, basis: WignerBasis, raw: Vec<Complex>) -> Result<WignerGrid> {
    let worst = raw.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if worst > TOL_EXACT {
        return Err(Error::NonReal(worst));
    }
    WignerGrid::from_values(dim, basis, raw.into_iter().map(|z| z.re).collect())
}

/// Wigner grid over the G kernel without the reality projection; defined for
/// every N (values are genuinely complex for even N ≥ 4).
pub fn wigner_direct_complex(rho: &ComplexMatrix, pair: &SchwingerPair) -> Result<Vec<Complex>> {
    let n = pair.dim();
    if rho.dim() != n {
        return Err(Error::DimensionMismatch(rho.dim(), n));
    }
    let mut out = Vec::with_capacity(n * n);
    for g in g_basis_all(pair) {
        out.push(trace_adjoint_product(&g, rho)?);
    }
    Ok(out)
}

/// Wigner grid by direct trace, `W = Tr[kernel†·ρ]`.
///
/// The imaginary residue of every value is checked against 1e-12 and then
/// dropped. The displaced-parity kernel requires odd N.
pub fn wigner_direct(
    rho: &DensityMatrix,
    pair: &SchwingerPair,
    basis: WignerBasis,
) -> Result<WignerGrid> {
    let n = pair.dim();
    if rho.dim() != n {
        return Err(Error::DimensionMismatch(rho.dim(), n));
    }
    match basis {
        WignerBasis::G => collect_real(n, basis, wigner_direct_complex(rho.matrix(), pair)?),
        WignerBasis::Delta => {
            if n % 2 == 0 {
                return Err(Error::EvenDimension(n));
            }
            let fp = FourierParity::new(n)?;
            let ell = (n as i64 - 1) / 2;
            let mut raw = Vec::with_capacity(n * n);
            for mu in -ell..=ell {
                for nu in -ell..=ell {
                    let k = delta_basis(pair, &fp, mu, nu)?;
                    raw.push(trace(&matmul(&k, rho.matrix())?));
                }
            }
            collect_real(n, basis, raw)
        }
    }
}

/// State-independent phase-space maps of every generator, cached per
/// dimension. Construction cross-checks the direct traces against the closed
/// forms; real maps exist for odd N and N = 2.
#[derive(Debug, Clone)]
pub struct MappedGenerators {
    dim: usize,
    maps: Vec<Vec<f64>>,
}

impl MappedGenerators {
    pub fn new(gens: &GeneratorSet, pair: &SchwingerPair) -> Result<Self> {
        if gens.dim() != pair.dim() {
            return Err(Error::DimensionMismatch(gens.dim(), pair.dim()));
        }
        let n = pair.dim();
        let kernels = g_basis_all(pair);
        let mut maps = Vec::with_capacity(gens.len());
        for (_, g) in gens.iter() {
            let mut grid = Vec::with_capacity(n * n);
            for k in kernels.iter() {
                let v = trace_adjoint_product(k, g)?;
                if v.im.abs() > TOL_EXACT {
                    return Err(Error::NonReal(v.im.abs()));
                }
                grid.push(v.re);
            }
            maps.push(grid);
        }
        let built = Self { dim: n, maps };
        let closed = closed_form_maps(gens)?;
        let dev = built.max_abs_diff(&closed);
        if dev > TOL_EXACT {
            return Err(Error::Inconsistency(format!(
                "closed-form generator maps deviate from direct traces by {dev:.3e}"
            )));
        }
        Ok(built)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn map(&self, i: usize) -> &[f64] {
        &self.maps[i]
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.maps
            .iter()
            .flatten()
            .zip(other.maps.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Sine-ratio kernel `sin(πx)/sin(πx/N)` at half-integer `x`; asserts the
/// denominator stays away from zero.
fn sine_ratio(x: f64, n: usize) -> f64 {
    let den = (x * PI / n as f64).sin();
    assert!(
        den.abs() > 1e-9,
        "sine-ratio denominator vanished at x = {x}"
    );
    (x * PI).sin() / den
}

/// Closed-form phase-space maps for odd N and N = 2.
pub fn closed_form_maps(gens: &GeneratorSet) -> Result<MappedGenerators> {
    let n = gens.dim();
    if n % 2 == 0 && n != 2 {
        return Err(Error::EvenDimension(n));
    }
    let mut maps = Vec::with_capacity(gens.len());
    for (idx, _) in gens.iter() {
        let mut grid = Vec::with_capacity(n * n);
        for mu in 0..n as i64 {
            for nu in 0..n as i64 {
                grid.push(closed_form_value(*idx, mu, nu, n));
            }
        }
        maps.push(grid);
    }
    Ok(MappedGenerators { dim: n, maps })
}

fn closed_form_value(idx: GeneratorIndex, mu: i64, nu: i64, n: usize) -> f64 {
    match idx {
        GeneratorIndex::W { gamma } => {
            let norm = (2.0 / ((gamma + 1) as f64 * (gamma + 2) as f64)).sqrt();
            let m = mu.rem_euclid(n as i64) as usize;
            let head = if m <= gamma { 1.0 } else { 0.0 };
            let tail = if m == gamma + 1 {
                (gamma + 1) as f64
            } else {
                0.0
            };
            norm * (head - tail)
        }
        GeneratorIndex::U { alpha, beta } | GeneratorIndex::V { alpha, beta } => {
            let d = (beta - alpha) as i64;
            if n == 2 {
                // the qubit's single transition pair: (σx)(μ,ν) = (−1)^ν
                // and (σy)(μ,ν) = (−1)^{μ+ν+1}
                let sgn = |k: i64| if k.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                return match idx {
                    GeneratorIndex::U { .. } => sgn(nu),
                    _ => sgn(mu + nu + 1),
                };
            }
            let angle = 2.0 * PI * (nu * d) as f64 / n as f64;
            let trig = match idx {
                GeneratorIndex::U { .. } => angle.cos(),
                _ => angle.sin(),
            };
            let ell = (n as i64 - 1) / 2;
            let dstar = if d <= ell { d } else { d - n as i64 };
            if dstar.rem_euclid(2) == 0 {
                let eps = (alpha as i64 + dstar / 2).rem_euclid(n as i64);
                if mu.rem_euclid(n as i64) == eps {
                    2.0 * trig
                } else {
                    0.0
                }
            } else {
                let x = mu as f64 - alpha as f64 - dstar as f64 / 2.0;
                (2.0 / n as f64) * sine_ratio(x, n) * trig
            }
        }
    }
}

/// Dual-space maps `(g_i)(η,ξ) = Tr[S†(η,ξ) g_i]` over canonical labels.
pub fn mapped_generators_dual(gens: &GeneratorSet, pair: &SchwingerPair) -> Result<Vec<Vec<Complex>>> {
    let n = pair.dim();
    if gens.dim() != n {
        return Err(Error::DimensionMismatch(gens.dim(), n));
    }
    let mut out = Vec::with_capacity(gens.len());
    for (_, g) in gens.iter() {
        let mut grid = Vec::with_capacity(n * n);
        for eta in 0..n as i64 {
            for xi in 0..n as i64 {
                grid.push(trace_adjoint_product(&s_basis_raw(pair, eta, xi), g)?);
            }
        }
        out.push(grid);
    }
    Ok(out)
}

/// Discrete Fourier transform carrying a dual-space map to its phase-space
/// map, `(g)(μ,ν) = (1/√N) Σ ω^{μη+νξ} (g)(η,ξ)`, summed over the same
/// window the kernel uses (with the dual values continued to raw labels).
pub fn dual_to_phase_space_dft(pair: &SchwingerPair, dual: &[Complex]) -> Vec<Complex> {
    let n = pair.dim();
    let norm = 1.0 / (n as f64).sqrt();
    let mut out = Vec::with_capacity(n * n);
    for mu in 0..n as i64 {
        for nu in 0..n as i64 {
            let mut acc = Complex::new(0.0, 0.0);
            for &eta in g_window(n).iter() {
                for &xi in g_window(n).iter() {
                    let ce = eta.rem_euclid(n as i64);
                    let cx = xi.rem_euclid(n as i64);
                    // raw-label continuation: one sign flip per wrapped label
                    let a = i64::from(eta < 0);
                    let b = i64::from(xi < 0);
                    let sign = if (b * ce + a * cx + a * b * n as i64) % 2 == 0 {
                        1.0
                    } else {
                        -1.0
                    };
                    acc += root_of_unity(n, mu * eta + nu * xi)
                        * dual[(ce * n as i64 + cx) as usize]
                        * sign;
                }
            }
            out.push(acc * norm);
        }
    }
    out
}

/// Wigner grid through the Bloch expansion `1/N + (1/2) Σ <g_i> (g_i)(μ,ν)`.
pub fn wigner_bloch(
    rho: &DensityMatrix,
    gens: &GeneratorSet,
    mapped: &MappedGenerators,
) -> Result<WignerGrid> {
    if rho.dim() != mapped.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), mapped.dim()));
    }
    let n = rho.dim();
    let b = bloch_vector(rho, gens)?;
    let mut values = vec![1.0 / n as f64; n * n];
    for (i, comp) in b.components().iter().enumerate() {
        for (v, m) in values.iter_mut().zip(mapped.map(i)) {
            *v += 0.5 * comp * m;
        }
    }
    WignerGrid::from_values(n, WignerBasis::G, values)
}

/// Characteristic grid by direct trace, `χ(η,ξ) = Tr[S†(η,ξ)ρ]`.
pub fn characteristic(rho: &DensityMatrix, pair: &SchwingerPair) -> Result<CharacteristicGrid> {
    let n = pair.dim();
    if rho.dim() != n {
        return Err(Error::DimensionMismatch(rho.dim(), n));
    }
    let mut values = Vec::with_capacity(n * n);
    for eta in 0..n as i64 {
        for xi in 0..n as i64 {
            values.push(trace_adjoint_product(
                &s_basis_raw(pair, eta, xi),
                rho.matrix(),
            )?);
        }
    }
    Ok(CharacteristicGrid { dim: n, values })
}

/// Characteristic grid through the Bloch expansion
/// `χ(η,ξ) = δ_{η,0}δ_{ξ,0}/√N + (1/2) Σ <g_i> (g_i)(η,ξ)`.
pub fn characteristic_bloch(
    rho: &DensityMatrix,
    gens: &GeneratorSet,
    pair: &SchwingerPair,
) -> Result<CharacteristicGrid> {
    let n = pair.dim();
    let b = bloch_vector(rho, gens)?;
    let duals = mapped_generators_dual(gens, pair)?;
    let mut values = vec![Complex::new(0.0, 0.0); n * n];
    values[0] = Complex::new(1.0 / (n as f64).sqrt(), 0.0);
    for (i, comp) in b.components().iter().enumerate() {
        for (v, m) in values.iter_mut().zip(&duals[i]) {
            *v += Complex::new(0.5 * comp, 0.0) * m;
        }
    }
    Ok(CharacteristicGrid { dim: n, values })
}

/// Fourier map from a characteristic grid to the Wigner grid.
pub fn wigner_from_characteristic(
    pair: &SchwingerPair,
    chi: &CharacteristicGrid,
) -> Result<WignerGrid> {
    let raw = dual_to_phase_space_dft(pair, chi.values());
    collect_real(pair.dim(), WignerBasis::G, raw)
}

/// Mean value from the phase-space grids.
///
/// Evaluates `(1/N) Σ O(μ,ν) W(μ,ν)` and `Σ 𝒪(η,ξ) χ(−η,−ξ)`, checks both
/// against the direct trace at the composite tolerance, returns the direct
/// trace. A disagreement is an internal-consistency failure.
pub fn mean_from_grids(
    o: &ComplexMatrix,
    rho: &DensityMatrix,
    pair: &SchwingerPair,
) -> Result<Complex> {
    let n = pair.dim();
    if o.dim() != n || rho.dim() != n {
        return Err(Error::DimensionMismatch(o.dim(), n));
    }
    let direct = trace(&matmul(o, rho.matrix())?);

    let o_g = decompose(pair, o, BasisTag::G)?;
    let w_g = decompose(pair, rho.matrix(), BasisTag::G)?;
    let via_g: Complex = o_g
        .values
        .iter()
        .zip(&w_g.values)
        .map(|(a, b)| a * b)
        .sum::<Complex>()
        / Complex::new(n as f64, 0.0);

    let o_s = decompose(pair, o, BasisTag::S)?;
    let mut via_s = Complex::new(0.0, 0.0);
    for eta in 0..n as i64 {
        for xi in 0..n as i64 {
            via_s += o_s.get(eta as usize, xi as usize)
                * s_coeff_reflected(pair, rho.matrix(), eta, xi);
        }
    }

    if (via_g - direct).norm() > TOL_COMPOSITE || (via_s - direct).norm() > TOL_COMPOSITE {
        return Err(Error::Inconsistency(format!(
            "grid mean paths deviate from the direct trace by {:.3e} (phase space) / {:.3e} (dual)",
            (via_g - direct).norm(),
            (via_s - direct).norm()
        )));
    }
    Ok(direct)
}

/// Closed-form qubit Wigner grid,
/// `W(μ,ν) = (1/2)[1 + (−1)^ν P_x + (−1)^{μ+ν+1} P_y + (−1)^μ P_z]`.
pub fn su2_wigner_closed(rho: &DensityMatrix) -> Result<WignerGrid> {
    if rho.dim() != 2 {
        return Err(Error::DimensionMismatch(rho.dim(), 2));
    }
    let gens = GeneratorSet::new(2)?;
    let b = bloch_vector(rho, &gens)?;
    let (px, py, pz) = (b.components()[0], b.components()[1], b.components()[2]);
    let sgn = |k: i64| if k % 2 == 0 { 1.0 } else { -1.0 };
    let mut values = Vec::with_capacity(4);
    for mu in 0..2i64 {
        for nu in 0..2i64 {
            values.push(0.5 * (1.0 + sgn(nu) * px + sgn(mu + nu + 1) * py + sgn(mu) * pz));
        }
    }
    WignerGrid::from_values(2, WignerBasis::G, values)
}

/// Max pointwise difference between the G-kernel and displaced-parity grids
/// of the same state (odd N). Reported only; the two kernels carry different
/// phase conventions and no relation between the grids is asserted.
pub fn wigner_basis_difference(rho: &DensityMatrix, pair: &SchwingerPair) -> Result<f64> {
    let wg = wigner_direct(rho, pair, WignerBasis::G)?;
    let wd = wigner_direct(rho, pair, WignerBasis::Delta)?;
    Ok(wg
        .values()
        .iter()
        .zip(wd.values())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}
