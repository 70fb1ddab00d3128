#ifndef GHZBELL_H
#define GHZBELL_H

/* Generated by cbindgen from the ghzbell-ffi crate. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call in this API.
 */
typedef enum GhzbellStatus {
  GHZBELL_STATUS_OK = 0,
  GHZBELL_STATUS_NULL_ARGUMENT = 1,
  GHZBELL_STATUS_INVALID_ARGUMENT = 2,
  GHZBELL_STATUS_INVALID_UTF8 = 3,
  GHZBELL_STATUS_INTERNAL = 4,
} GhzbellStatus;

/**
 * How a measured observable's value is extracted.
 */
typedef enum GhzbellMeasureMode {
  GHZBELL_MEASURE_MODE_PRODUCT = 0,
  GHZBELL_MEASURE_MODE_SPIN = 1,
} GhzbellMeasureMode;

/**
 * Which inequality experiment `ghzbell_bell_sim` runs.
 */
typedef enum GhzbellSimMode {
  /**
   * Separate singlet runs per correlation; violation expected.
   */
  GHZBELL_SIM_MODE_INDEPENDENT = 0,
  /**
   * One common run of the hidden-direction model; satisfaction expected.
   */
  GHZBELL_SIM_MODE_LHV_COMMON = 1,
} GhzbellSimMode;

/**
 * Opaque report handle.
 */
typedef struct GhzbellReport GhzbellReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string; do not free.
 */
const char *ghzbell_version(void);

/**
 * Verifies the GHZ operator identities, eigenvalue relations, and
 * product-basis expansion, producing a report handle.
 *
 * # Safety
 * `out_report` must be writable.
 */
enum GhzbellStatus ghzbell_verify_ghz(struct GhzbellReport **out_report);

/**
 * Exhaustively scans the 64 hidden-value assignments.
 *
 * # Safety
 * `out_report` must be writable.
 */
enum GhzbellStatus ghzbell_scan_counterfactuals(struct GhzbellReport **out_report);

/**
 * Runs a measurement sequence such as "A1,A2,A1" (a token may carry a
 * ":spin" or ":product" suffix) for `trials` seeded repetitions.
 *
 * # Safety
 * `sequence` must point to a NUL-terminated string.
 */
enum GhzbellStatus ghzbell_measure(const char *sequence,
                                   enum GhzbellMeasureMode mode,
                                   uint64_t trials,
                                   uint64_t seed,
                                   struct GhzbellReport **out_report);

/**
 * Runs an inequality experiment over `angle_count` analyzer angles in
 * degrees: three angles select the three-dataset form, four the CHSH form.
 *
 * # Safety
 * `angles_deg` must point to `angle_count` readable doubles.
 */
enum GhzbellStatus ghzbell_bell_sim(const double *angles_deg,
                                    size_t angle_count,
                                    enum GhzbellSimMode mode,
                                    uint64_t trials,
                                    uint64_t seed,
                                    struct GhzbellReport **out_report);

/**
 * Evaluates |⟨ab⟩ − ⟨ac⟩| ≤ 1 − ⟨bc⟩ on three caller-supplied ±1 arrays of
 * common length. `out_satisfied` receives 1 or 0.
 *
 * # Safety
 * `a`, `b`, `c` must point to `len` readable int32 values; outputs must be
 * writable or NULL (NULL outputs are skipped).
 */
enum GhzbellStatus ghzbell_bell3_data(const int32_t *a,
                                      const int32_t *b,
                                      const int32_t *c,
                                      size_t len,
                                      double *out_lhs,
                                      double *out_rhs,
                                      int32_t *out_satisfied);

/**
 * Evaluates the CHSH combination |⟨ab⟩ + ⟨ab₂⟩ + ⟨a₂b⟩ − ⟨a₂b₂⟩| ≤ 2 on four
 * caller-supplied ±1 arrays of common length.
 *
 * # Safety
 * As for [`ghzbell_bell3_data`], with four input arrays.
 */
enum GhzbellStatus ghzbell_chsh_data(const int32_t *a,
                                     const int32_t *a2,
                                     const int32_t *b,
                                     const int32_t *b2,
                                     size_t len,
                                     double *out_lhs,
                                     double *out_rhs,
                                     int32_t *out_satisfied);

/**
 * Mean per-index product of two ±1 arrays sharing a common index.
 *
 * # Safety
 * `a` and `b` must point to `len` readable int32 values.
 */
enum GhzbellStatus ghzbell_cross_correlation(const int32_t *a,
                                             const int32_t *b,
                                             size_t len,
                                             double *out_value);

/**
 * Samples seeded singlet pairs at the two analyzer angles (degrees) and
 * writes the estimated correlation; equal angles give exactly −1.
 *
 * # Safety
 * `out_value` must be writable.
 */
enum GhzbellStatus ghzbell_singlet_correlation(double theta1_deg,
                                               double theta2_deg,
                                               uint64_t pairs,
                                               uint64_t seed,
                                               double *out_value);

/**
 * 1 if every check in the report passed, 0 if any failed, −1 on NULL.
 *
 * # Safety
 * `report` must be NULL or a live handle from this library.
 */
int32_t ghzbell_report_passed(const struct GhzbellReport *report);

/**
 * Number of checks carried by the report; 0 on NULL.
 *
 * # Safety
 * `report` must be NULL or a live handle from this library.
 */
size_t ghzbell_report_check_count(const struct GhzbellReport *report);

/**
 * Renders the report to its deterministic textual form. Returns NULL on
 * NULL input; free the result with [`ghzbell_string_free`].
 *
 * # Safety
 * `report` must be NULL or a live handle from this library.
 */
char *ghzbell_report_render(const struct GhzbellReport *report);

/**
 * Frees a report handle; NULL is a no-op.
 *
 * # Safety
 * `report` must come from this library and not be freed twice.
 */
void ghzbell_report_free(struct GhzbellReport *report);

/**
 * Frees a string returned by this library; NULL is a no-op.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void ghzbell_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GHZBELL_H */
