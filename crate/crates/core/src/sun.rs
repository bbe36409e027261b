//! SU(N) generator algebra, structure constants, and the state space.
//!
//! Generators follow the standard interleaved ordering: for each `d = 1..N-1`
//! the symmetric/antisymmetric transition pairs `U_{α,d}`, `V_{α,d}` for
//! `α = 0..d-1`, then the diagonal generator `W_{d-1}`. At N = 2 this yields
//! the Pauli matrices, at N = 3 the eight standard traceless matrices in
//! their conventional numbering.

use crate::linalg::{
    anticommutator, commutator, hermitian_eigenvalues, matmul, trace, trace_adjoint_product,
    Complex, ComplexMatrix,
};
use crate::schwinger::SchwingerPair;
use crate::tolerance::{TOL_EXACT, TOL_POSITIVITY};
use crate::{Error, Result};

/// Label of one generator in the interleaved ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorIndex {
    /// Symmetric transition generator `|α><β| + |β><α|` with `α < β`.
    U { alpha: usize, beta: usize },
    /// Antisymmetric transition generator `−i(|α><β| − |β><α|)` with `α < β`.
    V { alpha: usize, beta: usize },
    /// Diagonal generator with head `0..=γ` and tail at `γ+1`.
    W { gamma: usize },
}

/// The ordered N²−1 Hermitian generators of su(N).
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    dim: usize,
    items: Vec<(GeneratorIndex, ComplexMatrix)>,
}

/// Transition operator `|a><b|`.
pub fn transition_op(n: usize, a: usize, b: usize) -> Result<ComplexMatrix> {
    if a >= n || b >= n {
        return Err(Error::IndexOutOfRange(format!(
            "transition ({a},{b}) outside dimension {n}"
        )));
    }
    let mut m = ComplexMatrix::zeros(n);
    m.set(a, b, Complex::new(1.0, 0.0));
    Ok(m)
}

impl GeneratorSet {
    /// Build from transition operators; requires `n ≥ 2`.
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        let mut items = Vec::with_capacity(n * n - 1);
        for d in 1..n {
            for alpha in 0..d {
                let p_ab = transition_op(n, alpha, d)?;
                let p_ba = transition_op(n, d, alpha)?;
                let u = p_ab.add(&p_ba)?;
                let v = p_ab.sub(&p_ba)?.scale(Complex::new(0.0, -1.0));
                items.push((GeneratorIndex::U { alpha, beta: d }, u));
                items.push((GeneratorIndex::V { alpha, beta: d }, v));
            }
            let gamma = d - 1;
            let norm = (2.0 / ((gamma + 1) as f64 * (gamma + 2) as f64)).sqrt();
            let mut w = ComplexMatrix::zeros(n);
            for sigma in 0..=gamma {
                w.set(sigma, sigma, Complex::new(norm, 0.0));
            }
            w.set(gamma + 1, gamma + 1, Complex::new(-(norm * (gamma + 1) as f64), 0.0));
            items.push((GeneratorIndex::W { gamma }, w));
        }
        Ok(Self { dim: n, items })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn matrix(&self, i: usize) -> &ComplexMatrix {
        &self.items[i].1
    }

    pub fn index(&self, i: usize) -> GeneratorIndex {
        self.items[i].0
    }

    pub fn iter(&self) -> impl Iterator<Item = &(GeneratorIndex, ComplexMatrix)> {
        self.items.iter()
    }
}

/// Generators assembled from clock/shift power sums instead of transitions.
///
/// `U_{α,β} = (1/N) Σ_η U^η (ω^{−ηα} V^{β−α} + ω^{−ηβ} V^{N−(β−α)})` and its
/// antisymmetric and diagonal companions; must reproduce [`GeneratorSet::new`]
/// entry for entry.
pub fn generators_via_schwinger(pair: &SchwingerPair) -> Result<GeneratorSet> {
    let n = pair.dim();
    let inv_n = Complex::new(1.0 / n as f64, 0.0);
    let mut items = Vec::with_capacity(n * n - 1);
    for d in 1..n {
        for alpha in 0..d {
            let beta = d;
            let diff = (beta - alpha) as i64;
            let mut u = ComplexMatrix::zeros(n);
            let mut v = ComplexMatrix::zeros(n);
            for eta in 0..n as i64 {
                let up = pair.u_pow(eta);
                let fwd = pair
                    .v_pow(diff)
                    .scale(pair.omega_pow(-eta * alpha as i64));
                let bwd = pair
                    .v_pow(n as i64 - diff)
                    .scale(pair.omega_pow(-eta * beta as i64));
                u = u.add(&matmul(&up, &fwd.add(&bwd)?)?)?;
                v = v.add(&matmul(&up, &fwd.sub(&bwd)?)?)?;
            }
            items.push((
                GeneratorIndex::U { alpha, beta },
                u.scale(inv_n),
            ));
            items.push((
                GeneratorIndex::V { alpha, beta },
                v.scale(inv_n * Complex::new(0.0, -1.0)),
            ));
        }
        let gamma = d - 1;
        let norm = (2.0 / ((gamma + 1) as f64 * (gamma + 2) as f64)).sqrt();
        let mut w = ComplexMatrix::zeros(n);
        for eta in 0..n as i64 {
            let mut coeff = Complex::new(0.0, 0.0);
            for sigma in 0..=gamma as i64 {
                coeff += pair.omega_pow(-eta * sigma);
            }
            coeff -= pair.omega_pow(-eta * (gamma as i64 + 1)) * Complex::new((gamma + 1) as f64, 0.0);
            w = w.add(&pair.u_pow(eta).scale(coeff))?;
        }
        items.push((
            GeneratorIndex::W { gamma },
            w.scale(inv_n * Complex::new(norm, 0.0)),
        ));
    }
    Ok(GeneratorSet { dim: n, items })
}

/// Deviations of the eight qutrit dictionary identities expressing clock/shift
/// power products through the standard generators.
///
/// Returns `(label, max entry deviation)` for `U, V, U², V², UV, U²V, UV², U²V²`.
pub fn schwinger_via_gellmann(pair: &SchwingerPair) -> Result<Vec<(&'static str, f64)>> {
    let n = pair.dim();
    if n != 3 {
        return Err(Error::InvalidParameter(format!(
            "dictionary identities are specific to dimension 3, got {n}"
        )));
    }
    let gens = GeneratorSet::new(3)?;
    let l = |i: usize| gens.matrix(i - 1).clone();
    let w = pair.omega();
    let ws = w.conj();
    let one = Complex::new(1.0, 0.0);
    let i_ = Complex::new(0.0, 1.0);
    let half = Complex::new(0.5, 0.0);
    let s3 = Complex::new(3f64.sqrt(), 0.0);

    let combine = |terms: Vec<(Complex, ComplexMatrix)>| -> ComplexMatrix {
        let mut acc = ComplexMatrix::zeros(3);
        for (c, m) in terms {
            acc = acc.add(&m.scale(c)).unwrap();
        }
        acc.scale(half)
    };

    let checks: Vec<(&'static str, ComplexMatrix, ComplexMatrix)> = vec![
        (
            "U",
            pair.u_pow(1),
            combine(vec![((one - w), l(3)), (-s3 * ws, l(8))]),
        ),
        (
            "V",
            pair.v_pow(1),
            combine(vec![
                (one, l(1)),
                (one, l(4)),
                (one, l(6)),
                (i_, l(2)),
                (-i_, l(5)),
                (i_, l(7)),
            ]),
        ),
        (
            "U2",
            pair.u_pow(2),
            combine(vec![((one - ws), l(3)), (-s3 * w, l(8))]),
        ),
        (
            "V2",
            pair.v_pow(2),
            combine(vec![
                (one, l(1)),
                (one, l(4)),
                (one, l(6)),
                (-i_, l(2)),
                (i_, l(5)),
                (-i_, l(7)),
            ]),
        ),
        (
            "UV",
            pair.uv_pow(1, 1),
            combine(vec![
                (one, l(1)),
                (ws, l(4)),
                (w, l(6)),
                (i_, l(2)),
                (-i_ * ws, l(5)),
                (i_ * w, l(7)),
            ]),
        ),
        (
            "U2V",
            pair.uv_pow(2, 1),
            combine(vec![
                (one, l(1)),
                (w, l(4)),
                (ws, l(6)),
                (i_, l(2)),
                (-i_ * w, l(5)),
                (i_ * ws, l(7)),
            ]),
        ),
        (
            "UV2",
            pair.uv_pow(1, 2),
            combine(vec![
                (w, l(1)),
                (one, l(4)),
                (ws, l(6)),
                (-i_ * w, l(2)),
                (i_, l(5)),
                (-i_ * ws, l(7)),
            ]),
        ),
        (
            "U2V2",
            pair.uv_pow(2, 2),
            combine(vec![
                (ws, l(1)),
                (one, l(4)),
                (w, l(6)),
                (-i_ * ws, l(2)),
                (i_, l(5)),
                (-i_ * w, l(7)),
            ]),
        ),
    ];

    Ok(checks
        .into_iter()
        .map(|(name, direct, expanded)| (name, direct.max_abs_diff(&expanded)))
        .collect())
}

/// Antisymmetric and symmetric structure tensors, stored sparsely at
/// canonical index order with entries below 1e-12 dropped.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    dim: usize,
    f: Vec<(usize, usize, usize, f64)>,
    d: Vec<(usize, usize, usize, f64)>,
}

impl StructureConstants {
    /// `F_ijk = −(i/4) Tr[[g_i,g_j] g_k]`, `D_ijk = (1/4) Tr[{g_i,g_j} g_k]`.
    pub fn new(gens: &GeneratorSet) -> Result<Self> {
        let m = gens.len();
        let mut f = Vec::new();
        let mut d = Vec::new();
        for i in 0..m {
            for j in i..m {
                let comm = commutator(gens.matrix(i), gens.matrix(j))?;
                let anti = anticommutator(gens.matrix(i), gens.matrix(j))?;
                for k in j..m {
                    let fv = (trace(&matmul(&comm, gens.matrix(k))?) * Complex::new(0.0, -0.25)).re;
                    let dv = (trace(&matmul(&anti, gens.matrix(k))?) * Complex::new(0.25, 0.0)).re;
                    if fv.abs() >= TOL_EXACT {
                        f.push((i, j, k, fv));
                    }
                    if dv.abs() >= TOL_EXACT {
                        d.push((i, j, k, dv));
                    }
                }
            }
        }
        Ok(Self {
            dim: gens.dim(),
            f,
            d,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Canonical (i ≤ j ≤ k) nonzero antisymmetric entries, 0-based.
    pub fn f_entries(&self) -> &[(usize, usize, usize, f64)] {
        &self.f
    }

    /// Canonical (i ≤ j ≤ k) nonzero symmetric entries, 0-based.
    pub fn d_entries(&self) -> &[(usize, usize, usize, f64)] {
        &self.d
    }

    /// `F_ijk` at arbitrary index order (sign from permutation parity).
    pub fn f(&self, i: usize, j: usize, k: usize) -> f64 {
        let (sorted, sign) = sort3_signed(i, j, k);
        if sign == 0 {
            return 0.0; // repeated index in a totally antisymmetric tensor
        }
        self.f
            .iter()
            .find(|&&(a, b, c, _)| (a, b, c) == sorted)
            .map(|&(_, _, _, v)| v * sign as f64)
            .unwrap_or(0.0)
    }

    /// `D_ijk` at arbitrary index order.
    pub fn d(&self, i: usize, j: usize, k: usize) -> f64 {
        let mut idx = [i, j, k];
        idx.sort_unstable();
        self.d
            .iter()
            .find(|&&(a, b, c, _)| (a, b, c) == (idx[0], idx[1], idx[2]))
            .map(|&(_, _, _, v)| v)
            .unwrap_or(0.0)
    }
}

/// Sort three indices; returns the permutation sign, 0 on repeats.
fn sort3_signed(i: usize, j: usize, k: usize) -> ((usize, usize, usize), i32) {
    if i == j || j == k || i == k {
        return ((i, j, k), 0);
    }
    let mut arr = [(i, 0usize), (j, 1), (k, 2)];
    arr.sort_unstable_by_key(|&(v, _)| v);
    // permutation parity from the original positions
    let positions = [arr[0].1, arr[1].1, arr[2].1];
    let mut inversions = 0;
    for a in 0..3 {
        for b in (a + 1)..3 {
            if positions[a] > positions[b] {
                inversions += 1;
            }
        }
    }
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    ((arr[0].0, arr[1].0, arr[2].0), sign)
}

/// Validated element of the state space: unit trace, Hermitian, positive
/// semidefinite within tolerance.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    m: ComplexMatrix,
}

impl DensityMatrix {
    /// Validation reports the first violated invariant.
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        let tr = trace(&m);
        if (tr - Complex::new(1.0, 0.0)).norm() > TOL_EXACT {
            return Err(Error::InvalidState(format!(
                "trace is {:.16}{:+.3e}i, expected 1",
                tr.re, tr.im
            )));
        }
        let herm = m.hermiticity_deviation();
        if herm > TOL_EXACT {
            return Err(Error::InvalidState(format!(
                "not Hermitian (max deviation {herm:.3e})"
            )));
        }
        let eig = hermitian_eigenvalues(&m)?;
        if eig[0] < TOL_POSITIVITY {
            return Err(Error::InvalidState(format!(
                "negative eigenvalue {:.6e}",
                eig[0]
            )));
        }
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.m
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        trace_adjoint_product(&self.m, &self.m)
            .expect("same dims")
            .re
    }

    pub fn min_eigenvalue(&self) -> f64 {
        hermitian_eigenvalues(&self.m).expect("validated Hermitian")[0]
    }
}

/// Real expectation values of every generator.
#[derive(Debug, Clone)]
pub struct BlochVector {
    dim: usize,
    components: Vec<f64>,
}

impl BlochVector {
    pub fn from_components(dim: usize, components: Vec<f64>) -> Result<Self> {
        if components.len() != dim * dim - 1 {
            return Err(Error::DimensionMismatch(components.len(), dim * dim - 1));
        }
        Ok(Self { dim, components })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    /// `|g|²`, bounded by `2(1 − 1/N)` for valid states.
    pub fn norm_sq(&self) -> f64 {
        self.components.iter().map(|x| x * x).sum()
    }
}

/// Component i is `Tr[g_i ρ]`; guaranteed real for a valid state.
pub fn bloch_vector(rho: &DensityMatrix, gens: &GeneratorSet) -> Result<BlochVector> {
    if rho.dim() != gens.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), gens.dim()));
    }
    let mut components = Vec::with_capacity(gens.len());
    for (_, g) in gens.iter() {
        let v = trace(&matmul(g, rho.matrix())?);
        if v.im.abs() > TOL_EXACT {
            return Err(Error::NonReal(v.im.abs()));
        }
        components.push(v.re);
    }
    let b = BlochVector {
        dim: gens.dim(),
        components,
    };
    let bound = 2.0 * (1.0 - 1.0 / gens.dim() as f64);
    if b.norm_sq() > bound + 1e-10 {
        return Err(Error::InvalidState(format!(
            "Bloch norm² {:.12} exceeds bound {:.12}",
            b.norm_sq(),
            bound
        )));
    }
    Ok(b)
}

/// `ρ = I/N + (1/2) Σ g_i <g_i>`; positivity is validated, not assumed.
pub fn rho_from_bloch(g: &BlochVector, gens: &GeneratorSet) -> Result<DensityMatrix> {
    if g.dim() != gens.dim() {
        return Err(Error::DimensionMismatch(g.dim(), gens.dim()));
    }
    let n = gens.dim();
    let mut m = ComplexMatrix::identity(n).scale(Complex::new(1.0 / n as f64, 0.0));
    for (i, (_, gen)) in gens.iter().enumerate() {
        m = m.add(&gen.scale(Complex::new(0.5 * g.components()[i], 0.0)))?;
    }
    DensityMatrix::new(m)
}

/// Mean value through the generator expansion,
/// `<O> = Tr[O]/N + (1/2) Σ 𝒪_i <g_i>`; checked against the direct trace.
pub fn mean_value(o: &ComplexMatrix, rho: &DensityMatrix, gens: &GeneratorSet) -> Result<Complex> {
    if o.dim() != rho.dim() {
        return Err(Error::DimensionMismatch(o.dim(), rho.dim()));
    }
    let n = gens.dim() as f64;
    let mut acc = trace(o) / Complex::new(n, 0.0);
    for (_, g) in gens.iter() {
        let coeff = trace(&matmul(g, o)?);
        let expect = trace(&matmul(g, rho.matrix())?);
        acc += coeff * expect * Complex::new(0.5, 0.0);
    }
    let direct = trace(&matmul(o, rho.matrix())?);
    if (acc - direct).norm() > TOL_EXACT {
        return Err(Error::Inconsistency(format!(
            "generator-expansion mean deviates from the direct trace by {:.3e}",
            (acc - direct).norm()
        )));
    }
    Ok(acc)
}

/// Pair mean through the correlation expansion,
/// `<AB> = <A><B> + (1/4) Σ_ij 𝒜_i ℬ_j (<g_i g_j> − <g_i><g_j>)`;
/// checked against `Tr[ABρ]` at the composite-trace tolerance.
pub fn pair_mean(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    rho: &DensityMatrix,
    gens: &GeneratorSet,
) -> Result<Complex> {
    if a.dim() != rho.dim() || b.dim() != rho.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    let mean_a = trace(&matmul(a, rho.matrix())?);
    let mean_b = trace(&matmul(b, rho.matrix())?);
    let m = gens.len();
    let mut ca = Vec::with_capacity(m);
    let mut cb = Vec::with_capacity(m);
    let mut expect = Vec::with_capacity(m);
    for (_, g) in gens.iter() {
        ca.push(trace(&matmul(g, a)?));
        cb.push(trace(&matmul(g, b)?));
        expect.push(trace(&matmul(g, rho.matrix())?));
    }
    let mut acc = mean_a * mean_b;
    for i in 0..m {
        for j in 0..m {
            let gigj = trace(&matmul(&matmul(gens.matrix(i), gens.matrix(j))?, rho.matrix())?);
            acc += ca[i] * cb[j] * (gigj - expect[i] * expect[j]) * Complex::new(0.25, 0.0);
        }
    }
    let direct = trace(&matmul(&matmul(a, b)?, rho.matrix())?);
    if (acc - direct).norm() > crate::tolerance::TOL_COMPOSITE {
        return Err(Error::Inconsistency(format!(
            "correlation expansion deviates from the direct trace by {:.3e}",
            (acc - direct).norm()
        )));
    }
    Ok(acc)
}
