#ifndef NEARTRIG_H
#define NEARTRIG_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum NtStatus {
  NT_STATUS_OK = 0,
  NT_STATUS_DOMAIN = 1,
  NT_STATUS_POLE = 2,
  NT_STATUS_UNSUPPORTED_INDEX = 3,
  NT_STATUS_NON_CONVERGENCE = 4,
  NT_STATUS_CANCELLATION = 5,
  NT_STATUS_QUADRATURE = 6,
  NT_STATUS_IO = 7,
  NT_STATUS_NULL_POINTER = 8,
  NT_STATUS_PANIC = 9,
} NtStatus;

/**
 * Opaque Gaussian-smoothed `cos_m`: order plus kernel width.
 */
typedef struct NtConvolution NtConvolution;

/**
 * Opaque `os_{m,ν}` instance.
 */
typedef struct NtLorentzianPower NtLorentzianPower;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread, NUL-terminated and truncated
 * to `len` bytes, into `buf`. Returns the full message length excluding the
 * terminator; 0 when no error has been recorded. `buf` may be null to query
 * the length.
 *
 * # Safety
 * `buf` must be null or valid for `len` bytes of writes.
 */
size_t nt_last_error_message(char *buf, size_t len);

/**
 * Clears the last error of this thread.
 */
void nt_clear_error(void);

/**
 * `cos_m(x)` for `m > −1`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum NtStatus nt_cos_m(double m, double x, double *out);

/**
 * `sin_m(x)` for `m > −1`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum NtStatus nt_sin_m(double m, double x, double *out);

/**
 * `exp_m(x) = cos_m(x) + i sin_m(x)`; the parts go to `re` and `im`.
 *
 * # Safety
 * `re` and `im` must each be null or valid for writes.
 */
enum NtStatus nt_exp_m(double m, double x, double *re, double *im);

/**
 * k-th derivative of `cos_m`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum NtStatus nt_cos_m_deriv(double m, uint32_t k, double x, double *out);

/**
 * k-th derivative of `sin_m`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum NtStatus nt_sin_m_deriv(double m, uint32_t k, double x, double *out);

/**
 * Gaussian-like `e_m(x)`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum NtStatus nt_e_m(double m, double x, double *out);

/**
 * Half-index Gaussian `e_m^{(1/2)}(x)`, `|x| ≤ 40`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum NtStatus nt_e_half(double m, double x, double *out);

/**
 * Lorentzian-power function `os_{m,ν}(x)`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum NtStatus nt_os(double m, double nu, double x, double *out);

/**
 * Closed-form whole-line integral of `os_{m,ν}`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum NtStatus nt_os_integral(double m, double nu, double *out);

/**
 * Small-signal gain curve; total on finite input.
 */
double nt_fel_gain(double x);

/**
 * Creates an `os_{m,ν}` handle in `*out`; release it with
 * [`nt_lorentzian_power_free`].
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum NtStatus nt_lorentzian_power_new(double m, double nu, struct NtLorentzianPower **out);

/**
 * # Safety
 * `h` must be null or a live handle from [`nt_lorentzian_power_new`];
 * `out` must be null or valid for writes.
 */
enum NtStatus nt_lorentzian_power_eval(const struct NtLorentzianPower *h, double x, double *out);

/**
 * Whole-line integral of the handle's function by quadrature (tolerance
 * 1e-9), for comparison with [`nt_os_integral`].
 *
 * # Safety
 * As for [`nt_lorentzian_power_eval`].
 */
enum NtStatus nt_lorentzian_power_integrate(const struct NtLorentzianPower *h, double *out);

/**
 * # Safety
 * `h` must be null or a handle from [`nt_lorentzian_power_new`] not yet freed.
 */
void nt_lorentzian_power_free(struct NtLorentzianPower *h);

/**
 * Creates a handle for `(cos_m ∗ g_α)`; release it with [`nt_convolution_free`].
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum NtStatus nt_convolution_new(double m, double alpha, struct NtConvolution **out);

/**
 * Convolution at `x` from the Hermite series (`hermite != 0`) or by direct
 * quadrature.
 *
 * # Safety
 * `h` must be null or a live handle from [`nt_convolution_new`]; `out` must
 * be null or valid for writes.
 */
enum NtStatus nt_convolution_eval(const struct NtConvolution *h,
                                  double x,
                                  int32_t hermite,
                                  double *out);

/**
 * # Safety
 * `h` must be null or a handle from [`nt_convolution_new`] not yet freed.
 */
void nt_convolution_free(struct NtConvolution *h);

/**
 * Library version, a static NUL-terminated string.
 */
const char *nt_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NEARTRIG_H */
