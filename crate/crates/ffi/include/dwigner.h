#ifndef DWIGNER_H
#define DWIGNER_H

/* Generated by cbindgen from dwigner-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes shared by every call.
 */
enum DwStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  Ok = 0,
  /**
   * An invariant-suite check failed.
   */
  CheckFailed = 1,
  /**
   * The input is not a valid density matrix.
   */
  InvalidState = 2,
  /**
   * Null pointer, bad dimension, or malformed argument.
   */
  BadInput = 3,
  /**
   * The basis/dimension combination is not defined.
   */
  Unsupported = 4,
  /**
   * Internal failure (library panic caught at the boundary).
   */
  Internal = 5,
};
#ifndef __cplusplus
typedef int32_t DwStatus;
#endif // __cplusplus

/**
 * Opaque su(n) generator-set handle.
 */
typedef struct DwGenerators DwGenerators;

/**
 * Opaque dense complex matrix handle.
 */
typedef struct DwMatrix DwMatrix;

/**
 * Opaque validated density-matrix handle.
 */
typedef struct DwState DwState;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Create an `n`×`n` matrix from row-major real/imaginary arrays of length
 * `n*n`. On success writes a handle to `out`.
 *
 * # Safety
 * `re` and `im` must point to `n*n` readable doubles; `out` must be a valid
 * destination for one pointer.
 */
int32_t dw_matrix_new(uintptr_t n, const double *re, const double *im, DwMatrix **out);

/**
 * Release a matrix handle. Null is ignored.
 *
 * # Safety
 * `m` must be a handle produced by [`dw_matrix_new`], released once.
 */
void dw_matrix_free(DwMatrix *m);

/**
 * Validate a matrix as a density matrix (unit trace, Hermitian, positive
 * semidefinite within tolerance) and return a state handle.
 *
 * # Safety
 * `m` must be a live matrix handle; `out` a valid pointer destination.
 */
int32_t dw_state_new(const DwMatrix *m, DwState **out);

/**
 * Release a state handle. Null is ignored.
 *
 * # Safety
 * `s` must be a handle produced by [`dw_state_new`], released once.
 */
void dw_state_free(DwState *s);

/**
 * Dimension of a state handle; 0 on null.
 *
 * # Safety
 * `s` must be a live state handle or null.
 */
uintptr_t dw_state_dim(const DwState *s);

/**
 * Wigner grid of a state. `basis` 0 selects the invariant kernel, 1 the
 * displaced-parity kernel (odd n only). Writes `n*n` doubles, first label
 * outermost.
 *
 * # Safety
 * `s` must be a live state handle; `out` must hold `n*n` doubles.
 */
int32_t dw_wigner_direct(const DwState *s, int32_t basis, double *out);

/**
 * Characteristic grid of a state over canonical dual labels. Writes `n*n`
 * doubles into each of `out_re` and `out_im`.
 *
 * # Safety
 * `s` must be a live state handle; both buffers must hold `n*n` doubles.
 */
int32_t dw_characteristic(const DwState *s, double *out_re, double *out_im);

/**
 * Number of generators for dimension `n` (`n*n − 1`), 0 for `n < 2`.
 */
uintptr_t dw_generator_count(uintptr_t n);

/**
 * Build the ordered generator set for dimension `n`.
 *
 * # Safety
 * `out` must be a valid pointer destination.
 */
int32_t dw_generators_new(uintptr_t n, DwGenerators **out);

/**
 * Release a generator-set handle. Null is ignored.
 *
 * # Safety
 * `g` must be a handle produced by [`dw_generators_new`], released once.
 */
void dw_generators_free(DwGenerators *g);

/**
 * Copy the `i`-th generator (0-based, standard ordering) into row-major
 * `re`/`im` buffers of length `n*n`.
 *
 * # Safety
 * `g` must be a live generator-set handle; both buffers must hold `n*n`
 * doubles.
 */
int32_t dw_generator_matrix(const DwGenerators *g, uintptr_t i, double *out_re, double *out_im);

/**
 * Bloch vector of a state: writes `n*n − 1` doubles.
 *
 * # Safety
 * `s` and `g` must be live handles of equal dimension; `out` must hold
 * `n*n − 1` doubles.
 */
int32_t dw_bloch_vector(const DwState *s, const DwGenerators *g, double *out);

/**
 * Number of canonical nonzero entries of one structure tensor
 * (`tensor` is `'f'` or `'d'` as a byte). Writes the count to `out`.
 *
 * # Safety
 * `out` must be a valid pointer destination.
 */
int32_t dw_structure_constant_count(uintptr_t n, uint8_t tensor, uintptr_t *out);

/**
 * Fill canonical structure-tensor entries: `idx` receives 1-based triples
 * (3 per entry), `values` one double per entry. `capacity` is the entry
 * capacity of both buffers; fails when smaller than the entry count.
 *
 * # Safety
 * `idx` must hold `3*capacity` usizes and `values` `capacity` doubles.
 */
int32_t dw_structure_constants(uintptr_t n,
                               uint8_t tensor,
                               uintptr_t *idx,
                               double *values,
                               uintptr_t capacity);

/**
 * Equal-population three-level model. Writes the closed-form 3×3 grid
 * (9 doubles, row-major) and `meta = [purity, bloch_norm_sq,
 * min_eigenvalue]`.
 *
 * # Safety
 * `grid` must hold 9 doubles and `meta` 3 doubles.
 */
int32_t dw_toy_model(double p1, double p2, double p3, double *grid, double *meta);

/**
 * Closed-form qutrit grid (tabulated family) of a 3×3 Hermitian matrix.
 * Writes 9 doubles, row-major.
 *
 * # Safety
 * `m` must be a live matrix handle; `grid` must hold 9 doubles.
 */
int32_t dw_su3_wigner_closed(const DwMatrix *m, double *grid);

/**
 * Run the invariant suite for dimension `n` with the given seed. Writes the
 * number of failing invariants to `failures` and returns `CheckFailed` when
 * that count is nonzero.
 *
 * # Safety
 * `failures` must be a valid pointer destination.
 */
int32_t dw_check(uintptr_t n, uint64_t seed, uintptr_t *failures);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* DWIGNER_H */
