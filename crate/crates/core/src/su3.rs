//! Tabulated qutrit closed forms and the three-level toy model.
//!
//! This module carries the widely tabulated closed-form family for the
//! qutrit: per-generator phase-space maps, the nine symbolic grid entries
//! they induce, the closed-form Wigner expression assembled from them, and
//! the equal-population toy model with real transition rates.
//!
//! A warning: the tabulated maps key their Kronecker-delta branch on the
//! integer half of `α + β`, which for the two `(0,2)` transition generators
//! disagrees with the orthonormal kernel's maps (those wrap the label
//! difference to the symmetric window first). The tabulated
//! family is therefore a non-orthonormal frame: grids built here satisfy the
//! normalization sum but not the purity sum, and they deviate from
//! [`crate::wigner::wigner_direct`] exactly in the coefficients multiplying
//! the `(0,2)` coherences. Both families are kept because each reproduces a
//! different set of published reference values; the orthonormal kernel backs
//! every structural identity in the crate, while this module reproduces the
//! tabulated grids bit for bit.

use crate::linalg::{hermitian_eigenvalues, trace_adjoint_product, Complex, ComplexMatrix};
use crate::schwinger::{half_root, root_of_unity};
use crate::sun::DensityMatrix;
use crate::wigner::{WignerBasis, WignerGrid};
use crate::{Error, Result};
use std::f64::consts::PI;

fn ratio(x: f64) -> f64 {
    (PI * x).sin() / (PI * x / 3.0).sin()
}

/// Tabulated phase-space map of the i-th qutrit generator (0-based index,
/// standard ordering) at canonical `(μ, ν)`.
pub fn qutrit_tabulated_map(i: usize, mu: i64, nu: i64) -> f64 {
    let c = (2.0 * PI * nu as f64 / 3.0).cos();
    let s = (2.0 * PI * nu as f64 / 3.0).sin();
    let c2 = (4.0 * PI * nu as f64 / 3.0).cos();
    let s2 = (4.0 * PI * nu as f64 / 3.0).sin();
    let d = |k: i64| if mu.rem_euclid(3) == k { 1.0 } else { 0.0 };
    match i {
        0 => (2.0 / 3.0) * ratio(mu as f64 - 0.5) * c,
        1 => (2.0 / 3.0) * ratio(mu as f64 - 0.5) * s,
        2 => d(0) - d(1),
        3 => 2.0 * d(1) * c2,
        4 => 2.0 * d(1) * s2,
        5 => (2.0 / 3.0) * ratio(mu as f64 - 1.5) * c,
        6 => (2.0 / 3.0) * ratio(mu as f64 - 1.5) * s,
        7 => (3f64.sqrt() / 3.0) * (d(0) + d(1) - 2.0 * d(2)),
        _ => panic!("qutrit generator index out of range: {i}"),
    }
}

/// Tabulated dual-space map of the i-th qutrit generator at canonical
/// `(η, ξ)`; matches the direct traces against the symmetrized basis.
pub fn qutrit_tabulated_dual(i: usize, eta: i64, xi: i64) -> Complex {
    let n = 3usize;
    let w = |k: i64| root_of_unity(n, k);
    let half = half_root(n, -eta * xi);
    let d = |k: i64| xi.rem_euclid(3) == k;
    let r3 = Complex::new(3f64.sqrt() / 3.0, 0.0);
    let i_ = Complex::new(0.0, 1.0);
    let zero = Complex::new(0.0, 0.0);
    let pick = |a: Complex, b: Complex| -> Complex {
        // a at ξ ≡ 1, b at ξ ≡ 2
        if d(1) {
            a
        } else if d(2) {
            b
        } else {
            zero
        }
    };
    match i {
        0 => r3 * pick(Complex::new(1.0, 0.0), w(-eta)) * half,
        1 => -i_ * r3 * pick(Complex::new(1.0, 0.0), -w(-eta)) * half,
        2 => {
            if d(0) {
                r3 * (Complex::new(1.0, 0.0) - w(-eta)) * half
            } else {
                zero
            }
        }
        3 => r3 * pick(w(-2 * eta), Complex::new(1.0, 0.0)) * half,
        4 => -i_ * r3 * pick(-w(-2 * eta), Complex::new(1.0, 0.0)) * half,
        5 => r3 * pick(w(-eta), w(-2 * eta)) * half,
        6 => -i_ * r3 * pick(w(-eta), -w(-2 * eta)) * half,
        7 => {
            if d(0) {
                Complex::new(1.0 / 3.0, 0.0)
                    * (Complex::new(1.0, 0.0) + w(-eta) - w(-2 * eta) * Complex::new(2.0, 0.0))
                    * half
            } else {
                zero
            }
        }
        _ => panic!("qutrit generator index out of range: {i}"),
    }
}

/// The nine tabulated symbolic grid entries as functions of a 3×3 Hermitian
/// matrix's entries.
///
/// These are the per-point evaluations of the closed-form expression (they
/// equal [`su3_wigner_closed`] identically). The commonly reproduced table
/// carries a sign slip in its first three rows — `2ρ12 + ρ23` where the
/// expression it tabulates produces `2ρ12 − ρ23` — so the rows here follow
/// the expression, which the orthonormal kernel's `(1,2)`-coherence map
/// independently confirms.
pub fn qutrit_tabulated_entry(mu: usize, nu: usize, rho: &ComplexMatrix) -> f64 {
    assert_eq!(rho.dim(), 3);
    let r11 = rho.get(0, 0).re;
    let r22 = rho.get(1, 1).re;
    let r33 = rho.get(2, 2).re;
    let r12 = rho.get(0, 1);
    let r13 = rho.get(0, 2);
    let r23 = rho.get(1, 2);
    let s3 = 3f64.sqrt() / 3.0;
    let a = r12 * Complex::new(2.0, 0.0) - r23; // 2ρ12 − ρ23
    let b = r12 + r13 * Complex::new(1.5, 0.0) + r23; // ρ12 + (3/2)ρ13 + ρ23
    let b_im = r12 * Complex::new(2.0, 0.0) - r13 * Complex::new(3.0, 0.0)
        + r23 * Complex::new(2.0, 0.0); // 2ρ12 − 3ρ13 + 2ρ23
    let c = r12 - r23 * Complex::new(2.0, 0.0); // ρ12 − 2ρ23
    match (mu, nu) {
        (0, 0) => r11 + (2.0 / 3.0) * a.re,
        (0, 1) => r11 - a.re / 3.0 - s3 * a.im,
        (0, 2) => r11 - a.re / 3.0 + s3 * a.im,
        (1, 0) => r22 + (4.0 / 3.0) * b.re,
        (1, 1) => r22 - (2.0 / 3.0) * b.re - s3 * b_im.im,
        (1, 2) => r22 - (2.0 / 3.0) * b.re + s3 * b_im.im,
        (2, 0) => r33 - (2.0 / 3.0) * c.re,
        (2, 1) => r33 + c.re / 3.0 + s3 * c.im,
        (2, 2) => r33 + c.re / 3.0 - s3 * c.im,
        _ => panic!("phase point ({mu},{nu}) out of range"),
    }
}

/// Closed-form Bloch components of a 3×3 state: twice the real/imaginary
/// coherences and the two diagonal combinations.
pub fn qutrit_bloch_closed(rho: &ComplexMatrix) -> [f64; 8] {
    assert_eq!(rho.dim(), 3);
    let r12 = rho.get(0, 1);
    let r13 = rho.get(0, 2);
    let r23 = rho.get(1, 2);
    [
        2.0 * r12.re,
        -2.0 * r12.im,
        rho.get(0, 0).re - rho.get(1, 1).re,
        2.0 * r13.re,
        -2.0 * r13.im,
        2.0 * r23.re,
        -2.0 * r23.im,
        (3f64.sqrt() / 3.0) * (rho.get(0, 0).re + rho.get(1, 1).re - 2.0 * rho.get(2, 2).re),
    ]
}

/// Closed-form qutrit Wigner grid from the tabulated maps.
///
/// Equals `1/3 + (1/2) Σ <g_i> (g_i)(μ,ν)` with the tabulated maps; this is
/// the grid whose nine entries are [`qutrit_tabulated_entry`]. It agrees with
/// the orthonormal-kernel grid except in the `(0,2)`-coherence terms (see
/// the module docs).
pub fn su3_wigner_closed(rho: &DensityMatrix) -> Result<WignerGrid> {
    if rho.dim() != 3 {
        return Err(Error::DimensionMismatch(rho.dim(), 3));
    }
    su3_wigner_closed_matrix(rho.matrix())
}

/// Same as [`su3_wigner_closed`] for a raw Hermitian matrix (the toy model
/// admits parameter regimes outside the state space).
pub fn su3_wigner_closed_matrix(rho: &ComplexMatrix) -> Result<WignerGrid> {
    if rho.dim() != 3 {
        return Err(Error::DimensionMismatch(rho.dim(), 3));
    }
    let herm = rho.hermiticity_deviation();
    if herm > crate::tolerance::TOL_EXACT {
        return Err(Error::NotHermitian(herm));
    }
    let r11 = rho.get(0, 0).re;
    let r22 = rho.get(1, 1).re;
    let r33 = rho.get(2, 2).re;
    let r12 = rho.get(0, 1);
    let r13 = rho.get(0, 2);
    let r23 = rho.get(1, 2);
    let mut values = Vec::with_capacity(9);
    for mu in 0..3i64 {
        let d = |k: i64| if mu == k { 1.0 } else { 0.0 };
        for nu in 0..3i64 {
            let c = (2.0 * PI * nu as f64 / 3.0).cos();
            let s = (2.0 * PI * nu as f64 / 3.0).sin();
            let c2 = (4.0 * PI * nu as f64 / 3.0).cos();
            let s2 = (4.0 * PI * nu as f64 / 3.0).sin();
            let mut w = 1.0 / 3.0;
            w += (2.0 * d(0) - d(1) - d(2)) / 3.0 * r11;
            w -= (d(0) - 2.0 * d(1) + d(2)) / 3.0 * r22;
            w -= (d(0) + d(1) - 2.0 * d(2)) / 3.0 * r33;
            w += 2.0 * d(1) * (c2 * r13.re - s2 * r13.im);
            w += (2.0 / 3.0) * ratio(mu as f64 - 0.5) * (c * r12.re - s * r12.im);
            w += (2.0 / 3.0) * ratio(mu as f64 - 1.5) * (c * r23.re - s * r23.im);
            values.push(w);
        }
    }
    WignerGrid::from_values(3, WignerBasis::G, values)
}

/// Equal-population three-level model: unit-trace matrix with diagonal 1/3
/// and real transition rates on the off-diagonals.
#[derive(Debug, Clone, Copy)]
pub struct ToyModelParams {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
}

impl ToyModelParams {
    /// Rates must be non-negative with `p1² + p2² + p3² ≤ 1/3`.
    ///
    /// The square-sum bound caps the purity at 1; it does not by itself
    /// guarantee positive eigenvalues (see [`toy_model`]'s metadata).
    pub fn new(p1: f64, p2: f64, p3: f64) -> Result<Self> {
        if !(p1 >= 0.0 && p2 >= 0.0 && p3 >= 0.0) {
            return Err(Error::InvalidParameter(
                "transition rates must be non-negative".into(),
            ));
        }
        let sq = p1 * p1 + p2 * p2 + p3 * p3;
        if sq > 1.0 / 3.0 + 1e-12 {
            return Err(Error::InvalidParameter(format!(
                "rate square sum {sq:.12} exceeds 1/3"
            )));
        }
        Ok(Self { p1, p2, p3 })
    }

    pub fn matrix(&self) -> ComplexMatrix {
        let t = 1.0 / 3.0;
        ComplexMatrix::from_parts(
            3,
            &[t, self.p1, self.p2, self.p1, t, self.p3, self.p2, self.p3, t],
            &[0.0; 9],
        )
        .expect("static layout")
    }
}

/// Toy-model output: the matrix, its closed-form grid, and state metadata.
#[derive(Debug, Clone)]
pub struct ToyModel {
    pub rho: ComplexMatrix,
    pub grid: WignerGrid,
    pub purity: f64,
    pub bloch_norm_sq: f64,
    pub min_eigenvalue: f64,
}

/// Build the toy state and its closed-form grid
/// `W = 1/3 + (2/3)·R(μ−1/2)·cos(2πν/3)·p1 + 2δ_{μ,1}cos(4πν/3)·p2
///      + (2/3)·R(μ−3/2)·cos(2πν/3)·p3` with `R` the sine-ratio kernel.
///
/// The admissibility predicate is the square-sum bound only; the minimum
/// eigenvalue is reported so callers can see when the matrix leaves the
/// state space (some admissible rate corners do).
pub fn toy_model(params: ToyModelParams) -> Result<ToyModel> {
    let rho = params.matrix();
    let mut values = Vec::with_capacity(9);
    for mu in 0..3i64 {
        for nu in 0..3i64 {
            let c = (2.0 * PI * nu as f64 / 3.0).cos();
            let c2 = (4.0 * PI * nu as f64 / 3.0).cos();
            let d1 = if mu == 1 { 1.0 } else { 0.0 };
            let w = 1.0 / 3.0
                + (2.0 / 3.0) * ratio(mu as f64 - 0.5) * c * params.p1
                + 2.0 * d1 * c2 * params.p2
                + (2.0 / 3.0) * ratio(mu as f64 - 1.5) * c * params.p3;
            values.push(w);
        }
    }
    let grid = WignerGrid::from_values(3, WignerBasis::G, values)?;
    let eig = hermitian_eigenvalues(&rho)?;
    let purity = trace_adjoint_product(&rho, &rho)?.re;
    let bloch_norm_sq: f64 = qutrit_bloch_closed(&rho).iter().map(|x| x * x).sum();
    Ok(ToyModel {
        rho,
        grid,
        purity,
        bloch_norm_sq,
        min_eigenvalue: eig[0],
    })
}

/// Strictly validated toy state; fails for admissible rate corners whose
/// matrix has a negative eigenvalue.
pub fn toy_density(params: ToyModelParams) -> Result<DensityMatrix> {
    DensityMatrix::new(params.matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::random_density;
    use crate::linalg::{matmul, trace};
    use crate::schwinger::SchwingerPair;
    use crate::sun::GeneratorSet;
    use crate::tolerance::TOL_EXACT;
    use crate::wigner::mapped_generators_dual;
    use rand_chacha::ChaCha8Rng;
    use rand_core::SeedableRng;

    #[test]
    fn tabulated_duals_match_direct_traces() {
        let pair = SchwingerPair::new(3).unwrap();
        let gens = GeneratorSet::new(3).unwrap();
        let duals = mapped_generators_dual(&gens, &pair).unwrap();
        for i in 0..8 {
            for eta in 0..3i64 {
                for xi in 0..3i64 {
                    let want = qutrit_tabulated_dual(i, eta, xi);
                    let got = duals[i][(eta * 3 + xi) as usize];
                    assert!((want - got).norm() < TOL_EXACT, "i={i} eta={eta} xi={xi}");
                }
            }
        }
    }

    #[test]
    fn closed_grid_equals_tabulated_entries() {
        let mut rng = ChaCha8Rng::seed_from_u64(91);
        for _ in 0..10 {
            let rho = random_density(3, &mut rng);
            let grid = su3_wigner_closed(&rho).unwrap();
            for mu in 0..3 {
                for nu in 0..3 {
                    let want = qutrit_tabulated_entry(mu, nu, rho.matrix());
                    assert!((grid.value(mu, nu) - want).abs() < TOL_EXACT);
                }
            }
        }
    }

    #[test]
    fn closed_grid_equals_bloch_expansion_over_tabulated_maps() {
        let mut rng = ChaCha8Rng::seed_from_u64(92);
        let rho = random_density(3, &mut rng);
        let b = qutrit_bloch_closed(rho.matrix());
        let grid = su3_wigner_closed(&rho).unwrap();
        for mu in 0..3i64 {
            for nu in 0..3i64 {
                let mut w = 1.0 / 3.0;
                for (i, comp) in b.iter().enumerate() {
                    w += 0.5 * comp * qutrit_tabulated_map(i, mu, nu);
                }
                assert!((grid.value(mu as usize, nu as usize) - w).abs() < TOL_EXACT);
            }
        }
    }

    #[test]
    fn bloch_closed_matches_generator_traces() {
        let gens = GeneratorSet::new(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(93);
        let rho = random_density(3, &mut rng);
        let closed = qutrit_bloch_closed(rho.matrix());
        for (i, (_, g)) in gens.iter().enumerate() {
            let t = trace(&matmul(g, rho.matrix()).unwrap());
            assert!((t.re - closed[i]).abs() < TOL_EXACT && t.im.abs() < TOL_EXACT);
        }
    }

    #[test]
    fn toy_saturated_bloch_components() {
        // equal rates 1/3: components (2/3, 0, 0, 2/3, 0, 2/3, 0, 0)
        let t = 1.0 / 3.0;
        let b = qutrit_bloch_closed(&ToyModelParams::new(t, t, t).unwrap().matrix());
        let want = [2.0 / 3.0, 0.0, 0.0, 2.0 / 3.0, 0.0, 2.0 / 3.0, 0.0, 0.0];
        for (a, w) in b.iter().zip(want.iter()) {
            assert!((a - w).abs() < TOL_EXACT);
        }
    }

    #[test]
    fn diagonal_state_grid() {
        // diag(1,0,0): only the first population block survives
        let mut m = ComplexMatrix::zeros(3);
        m.set(0, 0, Complex::new(1.0, 0.0));
        let rho = DensityMatrix::new(m).unwrap();
        let grid = su3_wigner_closed(&rho).unwrap();
        for nu in 0..3 {
            assert!((grid.value(0, nu) - 1.0).abs() < TOL_EXACT);
            assert!(grid.value(1, nu).abs() < TOL_EXACT);
            assert!(grid.value(2, nu).abs() < TOL_EXACT);
        }
    }

    #[test]
    fn tabulated_entry_spot_values() {
        let mut rng = ChaCha8Rng::seed_from_u64(94);
        let rho = random_density(3, &mut rng);
        let m = rho.matrix();
        let s3 = 3f64.sqrt() / 3.0;
        let a = m.get(0, 1) * Complex::new(2.0, 0.0) - m.get(1, 2);
        let want00 = m.get(0, 0).re + (2.0 / 3.0) * a.re;
        assert!((qutrit_tabulated_entry(0, 0, m) - want00).abs() < TOL_EXACT);
        let c = m.get(0, 1) - m.get(1, 2) * Complex::new(2.0, 0.0);
        let want21 = m.get(2, 2).re + c.re / 3.0 + s3 * c.im;
        assert!((qutrit_tabulated_entry(2, 1, m) - want21).abs() < TOL_EXACT);
    }

    #[test]
    fn toy_saturated_rates_extrema() {
        let t = 1.0 / 3.0;
        let toy = toy_model(ToyModelParams::new(t, t, t).unwrap()).unwrap();
        assert!((toy.grid.value(1, 0) - 17.0 / 9.0).abs() < TOL_EXACT);
        assert!((toy.grid.value(1, 1) + 4.0 / 9.0).abs() < TOL_EXACT);
        assert!((toy.grid.value(1, 2) + 4.0 / 9.0).abs() < TOL_EXACT);
        // the rounded two-decimal captions
        assert!((toy.grid.value(1, 0) - 1.89).abs() < 0.005);
        assert!((toy.grid.value(1, 1) + 0.44).abs() < 0.005);
        // saturated state is pure
        assert!((toy.purity - 1.0).abs() < TOL_EXACT);
        assert!(toy.min_eigenvalue.abs() < 1e-9);
    }

    #[test]
    fn toy_zero_rates_flat_grid() {
        let toy = toy_model(ToyModelParams::new(0.0, 0.0, 0.0).unwrap()).unwrap();
        for v in toy.grid.values() {
            assert!((v - 1.0 / 3.0).abs() < TOL_EXACT);
        }
    }

    #[test]
    fn toy_rejects_inadmissible_rates() {
        assert!(ToyModelParams::new(0.5, 0.5, 0.5).is_err());
        assert!(ToyModelParams::new(-0.1, 0.0, 0.0).is_err());
    }

    #[test]
    fn toy_grid_matches_closed_grid() {
        let t = 1.0 / 3.0;
        for (p1, p2, p3) in [(t, t, t), (0.0, t, t), (t, 0.0, t), (0.1, 0.2, 0.15)] {
            let params = ToyModelParams::new(p1, p2, p3).unwrap();
            let toy = toy_model(params).unwrap();
            let closed = su3_wigner_closed_matrix(&params.matrix()).unwrap();
            for k in 0..9 {
                assert!((toy.grid.values()[k] - closed.values()[k]).abs() < TOL_EXACT);
            }
        }
    }

    #[test]
    fn toy_sign_regimes() {
        let t = 1.0 / 3.0;
        // at least one negative value when two or more transitions are on
        for p in [(t, t, t), (0.0, t, t), (t, 0.0, t), (t, t, 0.0)] {
            let toy = toy_model(ToyModelParams::new(p.0, p.1, p.2).unwrap()).unwrap();
            assert!(toy.grid.min() < 0.0, "{p:?}");
        }
        // single-transition regimes stay non-negative
        for p in [(0.0, t, 0.0), (0.0, 0.0, t)] {
            let toy = toy_model(ToyModelParams::new(p.0, p.1, p.2).unwrap()).unwrap();
            assert!(toy.grid.min() >= -TOL_EXACT, "{p:?}");
        }
    }

    #[test]
    fn toy_positivity_metadata() {
        let t = 1.0 / 3.0;
        // saturated equal rates: pure state, admissible and positive
        assert!(toy_density(ToyModelParams::new(t, t, t).unwrap()).is_ok());
        // two-rate corner is admissible by the square-sum bound yet leaves
        // the state space; the strict constructor must reject it
        let params = ToyModelParams::new(t, t, 0.0).unwrap();
        assert!(toy_density(params).is_err());
        let toy = toy_model(params).unwrap();
        assert!((toy.min_eigenvalue - (1.0 - 2f64.sqrt()) / 3.0).abs() < 1e-9);
    }

    #[test]
    fn tabulated_grid_normalizes_but_is_not_orthonormal() {
        // the closed-form family keeps the normalization sum but not the
        // purity sum; the orthonormal kernel keeps both
        let mut rng = ChaCha8Rng::seed_from_u64(95);
        let rho = random_density(3, &mut rng);
        let grid = su3_wigner_closed(&rho).unwrap();
        assert!((grid.normalization() - 1.0).abs() < TOL_EXACT);
        let t = 1.0 / 3.0;
        let toy = toy_model(ToyModelParams::new(t, t, t).unwrap()).unwrap();
        // pure state, yet the tabulated purity sum overshoots 1
        assert!((toy.grid.purity_sum() - 43.0 / 27.0).abs() < 1e-12);
    }

    #[test]
    fn tabulated_maps_deviate_from_kernel_only_on_wrapped_pair() {
        // generators 3 and 4 (0-based) are the (0,2) transitions whose maps
        // differ between the families; all others coincide
        let pair = SchwingerPair::new(3).unwrap();
        let gens = GeneratorSet::new(3).unwrap();
        let kernels = crate::phase_bases::g_basis_all(&pair);
        for i in 0..8 {
            let mut dev: f64 = 0.0;
            for (k, kernel) in kernels.iter().enumerate() {
                let direct = trace_adjoint_product(kernel, gens.matrix(i)).unwrap();
                let (mu, nu) = ((k / 3) as i64, (k % 3) as i64);
                dev = dev.max((direct - Complex::new(qutrit_tabulated_map(i, mu, nu), 0.0)).norm());
            }
            if i == 3 || i == 4 {
                assert!(dev > 1.0, "wrapped-pair map should differ, i={i}");
            } else {
                assert!(dev < TOL_EXACT, "i={i} dev={dev:.3e}");
            }
        }
    }

    #[test]
    fn closed_matrix_rejects_non_hermitian() {
        let mut m = ComplexMatrix::zeros(3);
        m.set(0, 1, Complex::new(0.3, 0.2));
        m.set(0, 0, Complex::new(1.0, 0.0));
        assert!(matches!(
            su3_wigner_closed_matrix(&m),
            Err(Error::NotHermitian(_))
        ));
    }
}
