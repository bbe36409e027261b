//! Minimal dense complex linear algebra.
//!
//! Everything in the crate runs through [`ComplexMatrix`]: products, adjoints,
//! traces, commutators, a cyclic-Jacobi Hermitian eigensolver, and the
//! characteristic-polynomial coefficient recurrence used to validate density
//! matrices. Dense row-major storage; matrices never exceed a few dozen rows.

use crate::tolerance::TOL_HERMITIAN_INPUT;
use crate::{Error, Result};

pub type Complex = num_complex::Complex64;

/// Dense square complex matrix, row-major; entry `(r, c)` is `<u_r|O|u_c>`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Complex::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex::new(1.0, 0.0));
        }
        m
    }

    /// Build from a closure over `(row, col)`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    /// Build from row-major real and imaginary parts.
    pub fn from_parts(dim: usize, re: &[f64], im: &[f64]) -> Result<Self> {
        if re.len() != dim * dim || im.len() != dim * dim {
            return Err(Error::DimensionMismatch(re.len(), dim * dim));
        }
        let entries: Vec<Complex> = re
            .iter()
            .zip(im.iter())
            .map(|(&a, &b)| Complex::new(a, b))
            .collect();
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidParameter("non-finite matrix entry".into()));
        }
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex {
        self.entries[r * self.dim + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex) {
        self.entries[r * self.dim + c] = v;
    }

    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Largest entry-wise absolute deviation from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max entry deviation from the adjoint, `‖A − A†‖_max`.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for r in 0..self.dim {
            for c in 0..self.dim {
                dev = dev.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        dev
    }
}

/// Standard matrix product.
pub fn matmul(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    let n = a.dim();
    let mut out = ComplexMatrix::zeros(n);
    for r in 0..n {
        for k in 0..n {
            let av = a.get(r, k);
            if av == Complex::new(0.0, 0.0) {
                continue;
            }
            for c in 0..n {
                let v = out.get(r, c) + av * b.get(k, c);
                out.set(r, c, v);
            }
        }
    }
    Ok(out)
}

/// Conjugate transpose.
pub fn dagger(a: &ComplexMatrix) -> ComplexMatrix {
    let n = a.dim();
    ComplexMatrix::from_fn(n, |r, c| a.get(c, r).conj())
}

/// Sum of diagonal entries.
pub fn trace(a: &ComplexMatrix) -> Complex {
    (0..a.dim()).map(|i| a.get(i, i)).sum()
}

/// `Tr[A† B]` without forming the product.
pub fn trace_adjoint_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Complex> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    Ok(a.entries
        .iter()
        .zip(&b.entries)
        .map(|(x, y)| x.conj() * y)
        .sum())
}

/// `AB − BA`.
pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    matmul(a, b)?.sub(&matmul(b, a)?)
}

/// `AB + BA`.
pub fn anticommutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    matmul(a, b)?.add(&matmul(b, a)?)
}

/// Eigenvalues of a Hermitian matrix, ascending, by cyclic Jacobi sweeps.
///
/// The input must be Hermitian within `1e-10` on entries. The sweep order is
/// fixed, so results are deterministic for a fixed input.
pub fn hermitian_eigenvalues(a: &ComplexMatrix) -> Result<Vec<f64>> {
    let dev = a.hermiticity_deviation();
    if dev > TOL_HERMITIAN_INPUT {
        return Err(Error::NotHermitian(dev));
    }
    let n = a.dim();
    // Work on the exactly-Hermitian average (A + A†)/2.
    let mut m = a.clone();
    for r in 0..n {
        for c in 0..n {
            let v = (a.get(r, c) + a.get(c, r).conj()) * Complex::new(0.5, 0.0);
            m.set(r, c, v);
        }
    }
    let max_sweeps = 60;
    for _ in 0..max_sweeps {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| m.get(p, q).norm_sqr())
            .sum();
        if off.sqrt() < 1e-14 * (1.0 + m.max_abs()) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                jacobi_rotate(&mut m, p, q);
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| m.get(i, i).re).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    Ok(eig)
}

/// One complex Jacobi rotation annihilating the `(p, q)` entry.
fn jacobi_rotate(m: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = m.get(p, q);
    if apq.norm() == 0.0 {
        return;
    }
    let app = m.get(p, p).re;
    let aqq = m.get(q, q).re;
    // Phase that makes the pivot real, then a real 2x2 rotation.
    let phase = apq / Complex::new(apq.norm(), 0.0);
    let g = apq.norm();
    let tau = (app - aqq) / (2.0 * g);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let n = m.dim();
    // Column update: (col_p, col_q) <- (c*col_p + s*phase†*col_q, -s*phase*col_p + c*col_q)
    for r in 0..n {
        let mp = m.get(r, p);
        let mq = m.get(r, q);
        m.set(r, p, mp * c + mq * phase.conj() * s);
        m.set(r, q, mq * c - mp * phase * s);
    }
    for col in 0..n {
        let mp = m.get(p, col);
        let mq = m.get(q, col);
        m.set(p, col, mp * c + mq * phase * s);
        m.set(q, col, mq * c - mp * phase.conj() * s);
    }
    // Clean the annihilated pair against rounding drift.
    let avg = (m.get(p, q) + m.get(q, p).conj()) * Complex::new(0.5, 0.0);
    m.set(p, q, avg);
    m.set(q, p, avg.conj());
}

/// Coefficients `S_0..S_N` of `det(A − x·I) = x^N − S_1 x^{N-1} + S_2 x^{N-2} − …`.
///
/// `S_k` is the k-th elementary symmetric polynomial in the eigenvalues; for a
/// density matrix `S_1 = 1` and `S_N` is the eigenvalue product.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPolyCoeffs {
    s: Vec<f64>,
}

impl CharPolyCoeffs {
    pub fn values(&self) -> &[f64] {
        &self.s
    }

    pub fn get(&self, r: usize) -> f64 {
        self.s[r]
    }
}

/// Newton-identity recurrence `S_r = (1/r) Σ_{s=1..r} (−1)^{s−1} Tr[A^s] S_{r−s}`.
pub fn charpoly_coeffs(a: &ComplexMatrix) -> CharPolyCoeffs {
    let n = a.dim();
    // Power traces Tr[A^s] for s = 1..N.
    let mut power = a.clone();
    let mut power_traces = vec![trace(a)];
    for _ in 2..=n {
        power = matmul(&power, a).expect("same dims");
        power_traces.push(trace(&power));
    }
    let mut s = vec![Complex::new(1.0, 0.0)];
    for r in 1..=n {
        let mut acc = Complex::new(0.0, 0.0);
        for k in 1..=r {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            acc += power_traces[k - 1] * s[r - k] * Complex::new(sign, 0.0);
        }
        s.push(acc / Complex::new(r as f64, 0.0));
    }
    CharPolyCoeffs {
        s: s.into_iter().map(|z| z.re).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tolerance::{TOL_EIGEN, TOL_EXACT};
    use proptest::prelude::*;

    fn pauli_x() -> ComplexMatrix {
        ComplexMatrix::from_parts(2, &[0.0, 1.0, 1.0, 0.0], &[0.0; 4]).unwrap()
    }

    fn pauli_y() -> ComplexMatrix {
        ComplexMatrix::from_parts(2, &[0.0; 4], &[0.0, -1.0, 1.0, 0.0]).unwrap()
    }

    fn pauli_z() -> ComplexMatrix {
        ComplexMatrix::from_parts(2, &[1.0, 0.0, 0.0, -1.0], &[0.0; 4]).unwrap()
    }

    /// Deterministic pseudo-random matrix for oracle comparisons.
    fn det_random(dim: usize, seed: u64) -> ComplexMatrix {
        let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        ComplexMatrix::from_fn(dim, |_, _| Complex::new(next(), next()))
    }

    fn det_random_hermitian(dim: usize, seed: u64) -> ComplexMatrix {
        let a = det_random(dim, seed);
        a.add(&dagger(&a)).unwrap().scale(Complex::new(0.5, 0.0))
    }

    #[test]
    fn matmul_identity() {
        let i = ComplexMatrix::identity(3);
        assert!(matmul(&i, &i).unwrap().max_abs_diff(&i) < TOL_EXACT);
    }

    #[test]
    fn matmul_pauli_product() {
        // σx σy = i σz
        let lhs = matmul(&pauli_x(), &pauli_y()).unwrap();
        let rhs = pauli_z().scale(Complex::new(0.0, 1.0));
        assert!(lhs.max_abs_diff(&rhs) < TOL_EXACT);
    }

    #[test]
    fn matmul_matches_triple_loop_oracle() {
        let a = det_random(3, 7);
        let b = det_random(3, 11);
        let got = matmul(&a, &b).unwrap();
        // independent naive product
        let mut want = ComplexMatrix::zeros(3);
        for r in 0..3 {
            for c in 0..3 {
                let mut acc = Complex::new(0.0, 0.0);
                for k in 0..3 {
                    acc += a.get(r, k) * b.get(k, c);
                }
                want.set(r, c, acc);
            }
        }
        assert!(got.max_abs_diff(&want) < TOL_EXACT);
    }

    #[test]
    fn matmul_dimension_mismatch() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(3);
        assert!(matches!(matmul(&a, &b), Err(Error::DimensionMismatch(2, 3))));
    }

    #[test]
    fn dagger_cases() {
        let i = ComplexMatrix::identity(4);
        assert!(dagger(&i).max_abs_diff(&i) < TOL_EXACT);
        let ii = i.scale(Complex::new(0.0, 1.0));
        assert!(dagger(&ii).max_abs_diff(&i.scale(Complex::new(0.0, -1.0))) < TOL_EXACT);
        let a = det_random(4, 3);
        assert!(dagger(&dagger(&a)).max_abs_diff(&a) < TOL_EXACT);
    }

    #[test]
    fn trace_cases() {
        assert!((trace(&ComplexMatrix::identity(5)) - Complex::new(5.0, 0.0)).norm() < TOL_EXACT);
        assert!(trace(&pauli_x()).norm() < TOL_EXACT);
        let a = det_random(4, 1);
        let b = det_random(4, 2);
        let tab = trace(&matmul(&a, &b).unwrap());
        let tba = trace(&matmul(&b, &a).unwrap());
        assert!((tab - tba).norm() < TOL_EXACT);
    }

    #[test]
    fn commutator_cases() {
        let i = ComplexMatrix::identity(3);
        let a = det_random(3, 5);
        assert!(commutator(&i, &a).unwrap().max_abs() < TOL_EXACT);
        // [σx, σy] = 2i σz
        let lhs = commutator(&pauli_x(), &pauli_y()).unwrap();
        assert!(lhs.max_abs_diff(&pauli_z().scale(Complex::new(0.0, 2.0))) < TOL_EXACT);
        // {σx, σx} = 2I
        let lhs = anticommutator(&pauli_x(), &pauli_x()).unwrap();
        assert!(lhs.max_abs_diff(&ComplexMatrix::identity(2).scale(Complex::new(2.0, 0.0))) < TOL_EXACT);
    }

    #[test]
    fn eigenvalues_diagonal_and_pauli() {
        let third = Complex::new(1.0 / 3.0, 0.0);
        let m = ComplexMatrix::from_fn(3, |r, c| if r == c { third } else { Complex::new(0.0, 0.0) });
        let eig = hermitian_eigenvalues(&m).unwrap();
        for v in eig {
            assert!((v - 1.0 / 3.0).abs() < TOL_EIGEN);
        }
        let eig = hermitian_eigenvalues(&pauli_z()).unwrap();
        assert!((eig[0] + 1.0).abs() < TOL_EIGEN && (eig[1] - 1.0).abs() < TOL_EIGEN);
    }

    /// Root-bisection oracle for the saturated equal-rate three-level state.
    ///
    /// det(ρ − xI) is expanded by cofactors and its sign changes bisected,
    /// independently of the Jacobi path.
    #[test]
    fn eigenvalues_saturated_three_level_state() {
        let third = 1.0 / 3.0;
        let rho = ComplexMatrix::from_fn(3, |_, _| Complex::new(third, 0.0));
        let det = |x: f64| -> f64 {
            let a = third - x;
            // det of [[a,t,t],[t,a,t],[t,t,a]] with t = 1/3
            a * (a * a - third * third) - third * (third * a - third * third)
                + third * (third * third - a * third)
        };
        let mut roots = Vec::new();
        let grid = 40000;
        let (lo, hi) = (-0.5, 1.5);
        let mut prev = det(lo);
        for i in 1..=grid {
            let x = lo + (hi - lo) * i as f64 / grid as f64;
            let cur = det(x);
            if prev == 0.0 {
                roots.push(lo + (hi - lo) * (i - 1) as f64 / grid as f64);
            } else if prev * cur < 0.0 {
                let (mut a, mut b) = (lo + (hi - lo) * (i - 1) as f64 / grid as f64, x);
                for _ in 0..200 {
                    let m = 0.5 * (a + b);
                    if det(a) * det(m) <= 0.0 {
                        b = m;
                    } else {
                        a = m;
                    }
                }
                roots.push(0.5 * (a + b));
            }
            prev = cur;
        }
        // double root at 0 leaves the sign unchanged; det(x) = -x^2 (x - 1)
        // so the scan sees one crossing at 1 and we check 0 directly.
        assert!(det(0.0).abs() < 1e-12);
        assert!(roots.iter().any(|r| (r - 1.0).abs() < 1e-9));
        let eig = hermitian_eigenvalues(&rho).unwrap();
        assert!((eig[0]).abs() < TOL_EIGEN);
        assert!((eig[1]).abs() < TOL_EIGEN);
        assert!((eig[2] - 1.0).abs() < TOL_EIGEN);
    }

    #[test]
    fn eigenvalues_reject_non_hermitian() {
        let a = det_random(3, 9);
        assert!(matches!(hermitian_eigenvalues(&a), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn eigenvalue_sum_equals_trace() {
        for n in 2..=6 {
            let a = det_random_hermitian(n, 21 + n as u64);
            let eig = hermitian_eigenvalues(&a).unwrap();
            let sum: f64 = eig.iter().sum();
            assert!((sum - trace(&a).re).abs() < 1e-10);
        }
    }

    #[test]
    fn charpoly_maximally_mixed_qubit() {
        let m = ComplexMatrix::identity(2).scale(Complex::new(0.5, 0.0));
        let c = charpoly_coeffs(&m);
        // direct expansion of det(ρ − xI) for the 2x2 case
        assert!((c.get(0) - 1.0).abs() < TOL_EXACT);
        assert!((c.get(1) - 1.0).abs() < TOL_EXACT);
        assert!((c.get(2) - 0.25).abs() < TOL_EXACT);
    }

    #[test]
    fn charpoly_pure_projector() {
        let mut m = ComplexMatrix::zeros(3);
        m.set(0, 0, Complex::new(1.0, 0.0));
        let c = charpoly_coeffs(&m);
        let want = [1.0, 1.0, 0.0, 0.0];
        for (a, b) in c.values().iter().zip(want.iter()) {
            assert!((a - b).abs() < TOL_EXACT);
        }
    }

    #[test]
    fn charpoly_saturated_toy_determinant_vanishes() {
        let rho = ComplexMatrix::from_fn(3, |_, _| Complex::new(1.0 / 3.0, 0.0));
        let c = charpoly_coeffs(&rho);
        // S_3 equals the eigenvalue product of [0, 0, 1]
        assert!(c.get(3).abs() < TOL_EXACT);
    }

    #[test]
    fn charpoly_matches_eigenvalue_expansion() {
        for n in 2..=6 {
            let a = det_random_hermitian(n, 100 + n as u64);
            let eig = hermitian_eigenvalues(&a).unwrap();
            let c = charpoly_coeffs(&a);
            // elementary symmetric polynomials of the eigenvalues
            let mut esp = vec![0.0; n + 1];
            esp[0] = 1.0;
            for &lambda in &eig {
                for k in (1..=n).rev() {
                    esp[k] += lambda * esp[k - 1];
                }
            }
            for k in 0..=n {
                assert!(
                    (c.get(k) - esp[k]).abs() < TOL_EIGEN,
                    "n={n} k={k}: {} vs {}",
                    c.get(k),
                    esp[k]
                );
            }
        }
    }

    proptest! {
        #[test]
        fn matmul_associative(seed in 0u64..500) {
            let a = det_random(3, seed);
            let b = det_random(3, seed.wrapping_add(1));
            let c = det_random(3, seed.wrapping_add(2));
            let lhs = matmul(&matmul(&a, &b).unwrap(), &c).unwrap();
            let rhs = matmul(&a, &matmul(&b, &c).unwrap()).unwrap();
            prop_assert!(lhs.max_abs_diff(&rhs) < TOL_EXACT);
        }

        #[test]
        fn dagger_reverses_products(seed in 0u64..500) {
            let a = det_random(4, seed);
            let b = det_random(4, seed.wrapping_add(17));
            let lhs = dagger(&matmul(&a, &b).unwrap());
            let rhs = matmul(&dagger(&b), &dagger(&a)).unwrap();
            prop_assert!(lhs.max_abs_diff(&rhs) < TOL_EXACT);
        }
    }
}
