#ifndef EQUILAYER_H
#define EQUILAYER_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every FFI entry point.
 */
enum EqlStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  EQL_STATUS_OK = 0,
  EQL_STATUS_NULL_POINTER = 1,
  EQL_STATUS_INVALID_ARGUMENT = 2,
  EQL_STATUS_CAP_EXCEEDED = 3,
  EQL_STATUS_BUFFER_TOO_SMALL = 4,
  EQL_STATUS_INDEX_OUT_OF_RANGE = 5,
  EQL_STATUS_VERIFICATION_FAILED = 6,
};
#ifndef __cplusplus
typedef int32_t EqlStatus;
#endif // __cplusplus

/**
 * An opaque full standard basis for one layer shape.
 */
typedef struct EqlBasis EqlBasis;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Writes the n-restricted Bell number of `m` as a decimal string.
 *
 * # Safety
 * `buf` must point to at least `buf_len` writable bytes.
 */
EqlStatus eql_restricted_bell(uint64_t m, uint64_t n, char *buf, uintptr_t buf_len);

/**
 * Writes the dimension of the space of equivariant maps from the k-th to
 * the l-th tensor power as a decimal string.
 *
 * # Safety
 * `buf` must point to at least `buf_len` writable bytes.
 */
EqlStatus eql_hom_dim(uint64_t n, uint64_t k, uint64_t l, char *buf, uintptr_t buf_len);

/**
 * Builds the full standard basis for the layer shape and hands back an
 * opaque handle through `out`.
 *
 * # Safety
 * `out` must be a valid pointer; the returned handle must be released
 * with [`eql_basis_free`].
 */
EqlStatus eql_basis_new(uint64_t n, uint64_t k, uint64_t l, struct EqlBasis **out);

/**
 * Releases a handle returned by [`eql_basis_new`]. Passing null is a no-op.
 *
 * # Safety
 * `basis` must be null or a handle from [`eql_basis_new`] not yet freed.
 */
void eql_basis_free(struct EqlBasis *basis);

/**
 * Writes the number of matrices in the basis.
 *
 * # Safety
 * `basis` and `out` must be valid pointers.
 */
EqlStatus eql_basis_count(const struct EqlBasis *basis, uintptr_t *out);

/**
 * Writes the shape of every matrix in the basis.
 *
 * # Safety
 * All pointers must be valid.
 */
EqlStatus eql_basis_shape(const struct EqlBasis *basis, uintptr_t *rows, uintptr_t *cols);

/**
 * Writes the entry count of matrix `index`.
 *
 * # Safety
 * `basis` and `out` must be valid pointers.
 */
EqlStatus eql_basis_entry_count(const struct EqlBasis *basis, uintptr_t index, uintptr_t *out);

/**
 * Copies the entries of matrix `index` as row/col pairs into two caller
 * buffers of capacity `cap` each; writes the copied count to `written`.
 *
 * # Safety
 * `rows_buf` and `cols_buf` must hold at least `cap` elements each.
 */
EqlStatus eql_basis_entries(const struct EqlBasis *basis,
                            uintptr_t index,
                            uint64_t *rows_buf,
                            uint64_t *cols_buf,
                            uintptr_t cap,
                            uintptr_t *written);

/**
 * Writes the source set partition of matrix `index` in block notation,
 * e.g. `{1, 3 | 2, 4}`.
 *
 * # Safety
 * `buf` must point to at least `buf_len` writable bytes.
 */
EqlStatus eql_basis_partition(const struct EqlBasis *basis,
                              uintptr_t index,
                              char *buf,
                              uintptr_t buf_len);

/**
 * Runs the exact equivariance verifier over the whole basis: the fixed
 * generator set plus `trials` permutations drawn from `seed`. Returns
 * `EQL_STATUS_OK` when every matrix passes.
 *
 * # Safety
 * `basis` must be a valid handle.
 */
EqlStatus eql_basis_verify(const struct EqlBasis *basis, uintptr_t trials, uint64_t seed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EQUILAYER_H */
