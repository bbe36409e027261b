//! C ABI for the dwigner library.
//!
//! Conventions:
//! - Handles (`DwMatrix`, `DwState`, `DwGenerators`) are opaque; create with
//!   the `_new` constructors, release with the matching `_free`.
//! - Every fallible call returns a [`DwStatus`] code; output buffers are
//!   written only on `Ok`. Buffer lengths are documented per call and never
//!   inferred.
//! - Matrices cross the boundary as separate row-major `re`/`im` arrays of
//!   length `n*n`.
//! - Grid values are row-major with the first label outermost; labels are
//!   `0..n-1` for the invariant kernel and `-(n-1)/2..=(n-1)/2` for the
//!   displaced-parity kernel.

use dwigner::linalg::ComplexMatrix;
use dwigner::su3::{su3_wigner_closed_matrix, toy_model, ToyModelParams};
use dwigner::sun::{bloch_vector, DensityMatrix, GeneratorSet, StructureConstants};
use dwigner::wigner::{characteristic, wigner_direct, WignerBasis};
use dwigner::{Error, SchwingerPair};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes shared by every call.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DwStatus {
    Ok = 0,
    /// An invariant-suite check failed.
    CheckFailed = 1,
    /// The input is not a valid density matrix.
    InvalidState = 2,
    /// Null pointer, bad dimension, or malformed argument.
    BadInput = 3,
    /// The basis/dimension combination is not defined.
    Unsupported = 4,
    /// Internal failure (library panic caught at the boundary).
    Internal = 5,
}

/// Opaque dense complex matrix handle.
pub struct DwMatrix(ComplexMatrix);

/// Opaque validated density-matrix handle.
pub struct DwState(DensityMatrix);

/// Opaque su(n) generator-set handle.
pub struct DwGenerators(GeneratorSet);

fn status_of(e: &Error) -> DwStatus {
    match e {
        Error::InvalidState(_) => DwStatus::InvalidState,
        Error::EvenDimension(_) | Error::NonReal(_) => DwStatus::Unsupported,
        Error::Inconsistency(_) => DwStatus::Internal,
        _ => DwStatus::BadInput,
    }
}

fn guarded(f: impl FnOnce() -> DwStatus) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status as i32,
        Err(_) => DwStatus::Internal as i32,
    }
}

/// Create an `n`×`n` matrix from row-major real/imaginary arrays of length
/// `n*n`. On success writes a handle to `out`.
///
/// # Safety
/// `re` and `im` must point to `n*n` readable doubles; `out` must be a valid
/// destination for one pointer.
#[no_mangle]
pub unsafe extern "C" fn dw_matrix_new(
    n: usize,
    re: *const f64,
    im: *const f64,
    out: *mut *mut DwMatrix,
) -> i32 {
    guarded(|| {
        if re.is_null() || im.is_null() || out.is_null() || n == 0 {
            return DwStatus::BadInput;
        }
        let re = std::slice::from_raw_parts(re, n * n);
        let im = std::slice::from_raw_parts(im, n * n);
        match ComplexMatrix::from_parts(n, re, im) {
            Ok(m) => {
                *out = Box::into_raw(Box::new(DwMatrix(m)));
                DwStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Release a matrix handle. Null is ignored.
///
/// # Safety
/// `m` must be a handle produced by [`dw_matrix_new`], released once.
#[no_mangle]
pub unsafe extern "C" fn dw_matrix_free(m: *mut DwMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Validate a matrix as a density matrix (unit trace, Hermitian, positive
/// semidefinite within tolerance) and return a state handle.
///
/// # Safety
/// `m` must be a live matrix handle; `out` a valid pointer destination.
#[no_mangle]
pub unsafe extern "C" fn dw_state_new(m: *const DwMatrix, out: *mut *mut DwState) -> i32 {
    guarded(|| {
        if m.is_null() || out.is_null() {
            return DwStatus::BadInput;
        }
        match DensityMatrix::new((*m).0.clone()) {
            Ok(s) => {
                *out = Box::into_raw(Box::new(DwState(s)));
                DwStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Release a state handle. Null is ignored.
///
/// # Safety
/// `s` must be a handle produced by [`dw_state_new`], released once.
#[no_mangle]
pub unsafe extern "C" fn dw_state_free(s: *mut DwState) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Dimension of a state handle; 0 on null.
///
/// # Safety
/// `s` must be a live state handle or null.
#[no_mangle]
pub unsafe extern "C" fn dw_state_dim(s: *const DwState) -> usize {
    if s.is_null() {
        0
    } else {
        (*s).0.dim()
    }
}

/// Wigner grid of a state. `basis` 0 selects the invariant kernel, 1 the
/// displaced-parity kernel (odd n only). Writes `n*n` doubles, first label
/// outermost.
///
/// # Safety
/// `s` must be a live state handle; `out` must hold `n*n` doubles.
#[no_mangle]
pub unsafe extern "C" fn dw_wigner_direct(s: *const DwState, basis: i32, out: *mut f64) -> i32 {
    guarded(|| {
        if s.is_null() || out.is_null() {
            return DwStatus::BadInput;
        }
        let b = match basis {
            0 => WignerBasis::G,
            1 => WignerBasis::Delta,
            _ => return DwStatus::BadInput,
        };
        let n = (*s).0.dim();
        let pair = match SchwingerPair::new(n) {
            Ok(p) => p,
            Err(e) => return status_of(&e),
        };
        match wigner_direct(&(*s).0, &pair, b) {
            Ok(grid) => {
                let dst = std::slice::from_raw_parts_mut(out, n * n);
                dst.copy_from_slice(grid.values());
                DwStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Characteristic grid of a state over canonical dual labels. Writes `n*n`
/// doubles into each of `out_re` and `out_im`.
///
/// # Safety
/// `s` must be a live state handle; both buffers must hold `n*n` doubles.
#[no_mangle]
pub unsafe extern "C" fn dw_characteristic(
    s: *const DwState,
    out_re: *mut f64,
    out_im: *mut f64,
) -> i32 {
    guarded(|| {
        if s.is_null() || out_re.is_null() || out_im.is_null() {
            return DwStatus::BadInput;
        }
        let n = (*s).0.dim();
        let pair = match SchwingerPair::new(n) {
            Ok(p) => p,
            Err(e) => return status_of(&e),
        };
        match characteristic(&(*s).0, &pair) {
            Ok(chi) => {
                let re = std::slice::from_raw_parts_mut(out_re, n * n);
                let im = std::slice::from_raw_parts_mut(out_im, n * n);
                for (k, v) in chi.values().iter().enumerate() {
                    re[k] = v.re;
                    im[k] = v.im;
                }
                DwStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Number of generators for dimension `n` (`n*n − 1`), 0 for `n < 2`.
#[no_mangle]
pub extern "C" fn dw_generator_count(n: usize) -> usize {
    if n < 2 {
        0
    } else {
        n * n - 1
    }
}

/// Build the ordered generator set for dimension `n`.
///
/// # Safety
/// `out` must be a valid pointer destination.
#[no_mangle]
pub unsafe extern "C" fn dw_generators_new(n: usize, out: *mut *mut DwGenerators) -> i32 {
    guarded(|| {
        if out.is_null() {
            return DwStatus::BadInput;
        }
        match GeneratorSet::new(n) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(DwGenerators(g)));
                DwStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Release a generator-set handle. Null is ignored.
///
/// # Safety
/// `g` must be a handle produced by [`dw_generators_new`], released once.
#[no_mangle]
pub unsafe extern "C" fn dw_generators_free(g: *mut DwGenerators) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Copy the `i`-th generator (0-based, standard ordering) into row-major
/// `re`/`im` buffers of length `n*n`.
///
/// # Safety
/// `g` must be a live generator-set handle; both buffers must hold `n*n`
/// doubles.
#[no_mangle]
pub unsafe extern "C" fn dw_generator_matrix(
    g: *const DwGenerators,
    i: usize,
    out_re: *mut f64,
    out_im: *mut f64,
) -> i32 {
    guarded(|| {
        if g.is_null() || out_re.is_null() || out_im.is_null() {
            return DwStatus::BadInput;
        }
        let set = &(*g).0;
        if i >= set.len() {
            return DwStatus::BadInput;
        }
        let n = set.dim();
        let m = set.matrix(i);
        let re = std::slice::from_raw_parts_mut(out_re, n * n);
        let im = std::slice::from_raw_parts_mut(out_im, n * n);
        for r in 0..n {
            for c in 0..n {
                re[r * n + c] = m.get(r, c).re;
                im[r * n + c] = m.get(r, c).im;
            }
        }
        DwStatus::Ok
    })
}

/// Bloch vector of a state: writes `n*n − 1` doubles.
///
/// # Safety
/// `s` and `g` must be live handles of equal dimension; `out` must hold
/// `n*n − 1` doubles.
#[no_mangle]
pub unsafe extern "C" fn dw_bloch_vector(
    s: *const DwState,
    g: *const DwGenerators,
    out: *mut f64,
) -> i32 {
    guarded(|| {
        if s.is_null() || g.is_null() || out.is_null() {
            return DwStatus::BadInput;
        }
        match bloch_vector(&(*s).0, &(*g).0) {
            Ok(b) => {
                let dst = std::slice::from_raw_parts_mut(out, b.components().len());
                dst.copy_from_slice(b.components());
                DwStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Number of canonical nonzero entries of one structure tensor
/// (`tensor` is `'f'` or `'d'` as a byte). Writes the count to `out`.
///
/// # Safety
/// `out` must be a valid pointer destination.
#[no_mangle]
pub unsafe extern "C" fn dw_structure_constant_count(
    n: usize,
    tensor: u8,
    out: *mut usize,
) -> i32 {
    guarded(|| {
        if out.is_null() {
            return DwStatus::BadInput;
        }
        let gens = match GeneratorSet::new(n) {
            Ok(g) => g,
            Err(e) => return status_of(&e),
        };
        let sc = match StructureConstants::new(&gens) {
            Ok(sc) => sc,
            Err(e) => return status_of(&e),
        };
        let count = match tensor {
            b'f' => sc.f_entries().len(),
            b'd' => sc.d_entries().len(),
            _ => return DwStatus::BadInput,
        };
        *out = count;
        DwStatus::Ok
    })
}

/// Fill canonical structure-tensor entries: `idx` receives 1-based triples
/// (3 per entry), `values` one double per entry. `capacity` is the entry
/// capacity of both buffers; fails when smaller than the entry count.
///
/// # Safety
/// `idx` must hold `3*capacity` usizes and `values` `capacity` doubles.
#[no_mangle]
pub unsafe extern "C" fn dw_structure_constants(
    n: usize,
    tensor: u8,
    idx: *mut usize,
    values: *mut f64,
    capacity: usize,
) -> i32 {
    guarded(|| {
        if idx.is_null() || values.is_null() {
            return DwStatus::BadInput;
        }
        let gens = match GeneratorSet::new(n) {
            Ok(g) => g,
            Err(e) => return status_of(&e),
        };
        let sc = match StructureConstants::new(&gens) {
            Ok(sc) => sc,
            Err(e) => return status_of(&e),
        };
        let entries = match tensor {
            b'f' => sc.f_entries(),
            b'd' => sc.d_entries(),
            _ => return DwStatus::BadInput,
        };
        if entries.len() > capacity {
            return DwStatus::BadInput;
        }
        let idx = std::slice::from_raw_parts_mut(idx, 3 * capacity);
        let values = std::slice::from_raw_parts_mut(values, capacity);
        for (k, &(i, j, l, v)) in entries.iter().enumerate() {
            idx[3 * k] = i + 1;
            idx[3 * k + 1] = j + 1;
            idx[3 * k + 2] = l + 1;
            values[k] = v;
        }
        DwStatus::Ok
    })
}

/// Equal-population three-level model. Writes the closed-form 3×3 grid
/// (9 doubles, row-major) and `meta = [purity, bloch_norm_sq,
/// min_eigenvalue]`.
///
/// # Safety
/// `grid` must hold 9 doubles and `meta` 3 doubles.
#[no_mangle]
pub unsafe extern "C" fn dw_toy_model(
    p1: f64,
    p2: f64,
    p3: f64,
    grid: *mut f64,
    meta: *mut f64,
) -> i32 {
    guarded(|| {
        if grid.is_null() || meta.is_null() {
            return DwStatus::BadInput;
        }
        let params = match ToyModelParams::new(p1, p2, p3) {
            Ok(p) => p,
            Err(_) => return DwStatus::InvalidState,
        };
        match toy_model(params) {
            Ok(toy) => {
                std::slice::from_raw_parts_mut(grid, 9).copy_from_slice(toy.grid.values());
                let meta = std::slice::from_raw_parts_mut(meta, 3);
                meta[0] = toy.purity;
                meta[1] = toy.bloch_norm_sq;
                meta[2] = toy.min_eigenvalue;
                DwStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Closed-form qutrit grid (tabulated family) of a 3×3 Hermitian matrix.
/// Writes 9 doubles, row-major.
///
/// # Safety
/// `m` must be a live matrix handle; `grid` must hold 9 doubles.
#[no_mangle]
pub unsafe extern "C" fn dw_su3_wigner_closed(m: *const DwMatrix, grid: *mut f64) -> i32 {
    guarded(|| {
        if m.is_null() || grid.is_null() {
            return DwStatus::BadInput;
        }
        match su3_wigner_closed_matrix(&(*m).0) {
            Ok(g) => {
                std::slice::from_raw_parts_mut(grid, 9).copy_from_slice(g.values());
                DwStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Run the invariant suite for dimension `n` with the given seed. Writes the
/// number of failing invariants to `failures` and returns `CheckFailed` when
/// that count is nonzero.
///
/// # Safety
/// `failures` must be a valid pointer destination.
#[no_mangle]
pub unsafe extern "C" fn dw_check(n: usize, seed: u64, failures: *mut usize) -> i32 {
    guarded(|| {
        if failures.is_null() {
            return DwStatus::BadInput;
        }
        match dwigner::check::run_checks(n, seed) {
            Ok(reports) => {
                let failed = reports.iter().filter(|r| !r.passed()).count();
                *failures = failed;
                if failed == 0 {
                    DwStatus::Ok
                } else {
                    DwStatus::CheckFailed
                }
            }
            Err(e) => status_of(&e),
        }
    })
}
