#ifndef LAGRANGE_FIT_H
#define LAGRANGE_FIT_H

/* Generated by cbindgen from the lagrange-fit-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a fallible call.
 */
typedef enum LfStatus {
  LF_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  LF_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  LF_STATUS_INVALID_UTF8 = 2,
  /**
   * The input text could not be parsed.
   */
  LF_STATUS_PARSE = 3,
  /**
   * An argument or dataset was rejected (bad order, empty data, ...).
   */
  LF_STATUS_INVALID_INPUT = 4,
  /**
   * The normal equations have no unique solution.
   */
  LF_STATUS_SINGULAR = 5,
  /**
   * Gradient training produced non-finite coefficients.
   */
  LF_STATUS_DIVERGED = 6,
  /**
   * The operation does not apply to this dataset or model flavor.
   */
  LF_STATUS_UNSUPPORTED = 7,
} LfStatus;

/**
 * Opaque dataset handle.
 */
typedef struct LfDataSet LfDataSet;

/**
 * Opaque fitted-model handle.
 */
typedef struct LfModel LfModel;

/**
 * Gradient-training settings, mirroring the library defaults via
 * [`lf_sgd_config_default`].
 */
typedef struct LfSgdConfig {
  /**
   * Step-size numerator; the effective step is `alpha / order`.
   */
  double alpha;
  /**
   * Upper bound on passes over the data.
   */
  uint64_t max_epochs;
  /**
   * Stop once the cross-entropy change over one epoch is below this.
   */
  double tolerance;
  /**
   * False: sequential per-sample updates. True: one full-sum update per epoch.
   */
  bool batch;
} LfSgdConfig;

/**
 * What a training run did.
 */
typedef struct LfTrainTrace {
  uint64_t epochs_run;
  uint64_t updates_run;
  double final_cross_entropy;
  bool converged;
} LfTrainTrace;

/**
 * Quality summary for a fitted model. For least-squares fits the scores are
 * mean squared errors; for logistic fits they are log-likelihoods.
 */
typedef struct LfFitReport {
  size_t order;
  size_t n;
  double fit_score;
  double baseline_score;
  double r_squared;
  /**
   * NaN when `has_f_factor` is false (order below 2).
   */
  double f_factor;
  bool has_f_factor;
  /**
   * NaN for gradient-trained fits, where no normal matrix exists.
   */
  double rcond;
} LfFitReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the description of the most recent failure on this thread. The
 * pointer stays valid until the next failing `lf_*` call on the same
 * thread. Never null; initially the empty string.
 */
const char *lf_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *lf_version(void);

/**
 * Parses CSV text (`x,y` pairs, optional header) into a dataset.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum LfStatus lf_dataset_from_csv(const char *text, struct LfDataSet **out);

/**
 * Loads one of the bundled datasets (`grades`, `passfail`).
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum LfStatus lf_dataset_builtin(const char *name, struct LfDataSet **out);

/**
 * Builds a dataset from parallel coordinate arrays of length `len`.
 *
 * # Safety
 * `xs` and `ys` must point to `len` readable doubles; `out` must be valid.
 */
enum LfStatus lf_dataset_from_points(const double *xs,
                                     const double *ys,
                                     size_t len,
                                     struct LfDataSet **out);

/**
 * Number of points; 0 for a null handle.
 *
 * # Safety
 * `ds` must be a live dataset handle or null.
 */
size_t lf_dataset_len(const struct LfDataSet *ds);

/**
 * True when every target is exactly 0 or 1.
 *
 * # Safety
 * `ds` must be a live dataset handle or null.
 */
bool lf_dataset_is_binary(const struct LfDataSet *ds);

/**
 * Largest x in the data; NaN for a null handle.
 *
 * # Safety
 * `ds` must be a live dataset handle or null.
 */
double lf_dataset_x_max(const struct LfDataSet *ds);

/**
 * Releases a dataset handle. Null is a no-op.
 *
 * # Safety
 * `ds` must be a handle from this library, not yet freed, or null.
 */
void lf_dataset_free(struct LfDataSet *ds);

/**
 * Least-squares polynomial fit of the given order (number of
 * coefficients). `out_rcond` may be null; otherwise it receives the
 * reciprocal condition number of the normal matrix.
 *
 * # Safety
 * `ds` must be a live dataset handle; `out_model` must be valid;
 * `out_rcond` must be valid or null.
 */
enum LfStatus lf_fit_poly(const struct LfDataSet *ds,
                          size_t order,
                          struct LfModel **out_model,
                          double *out_rcond);

/**
 * Least-squares cosine-kernel fit. `n_dct` is the cosine-domain length and
 * `x_max` the input value mapped to its end.
 *
 * # Safety
 * Same contract as [`lf_fit_poly`].
 */
enum LfStatus lf_fit_dct(const struct LfDataSet *ds,
                         size_t order,
                         size_t n_dct,
                         double x_max,
                         struct LfModel **out_model,
                         double *out_rcond);

/**
 * Library-default training settings for the given step-size numerator.
 */
struct LfSgdConfig lf_sgd_config_default(double alpha);

/**
 * Trains a logistic model on polynomial features by gradient descent.
 * `out_trace` may be null.
 *
 * # Safety
 * `ds` must be a live dataset handle; `config` must be valid; `out_model`
 * must be valid; `out_trace` must be valid or null.
 */
enum LfStatus lf_train_logistic_poly(const struct LfDataSet *ds,
                                     size_t order,
                                     const struct LfSgdConfig *config,
                                     struct LfModel **out_model,
                                     struct LfTrainTrace *out_trace);

/**
 * Trains a logistic model on cosine-kernel features by gradient descent.
 *
 * # Safety
 * Same contract as [`lf_train_logistic_poly`].
 */
enum LfStatus lf_train_logistic_dct(const struct LfDataSet *ds,
                                    size_t order,
                                    size_t n_dct,
                                    double x_max,
                                    const struct LfSgdConfig *config,
                                    struct LfModel **out_model,
                                    struct LfTrainTrace *out_trace);

/**
 * Coefficient count; 0 for a null handle.
 *
 * # Safety
 * `model` must be a live model handle or null.
 */
size_t lf_model_order(const struct LfModel *model);

/**
 * True when the model maps its response through the sigmoid.
 *
 * # Safety
 * `model` must be a live model handle or null.
 */
bool lf_model_is_logistic(const struct LfModel *model);

/**
 * Copies up to `cap` coefficients into `out` and returns the model order.
 * Call with `cap == 0` to query the needed size.
 *
 * # Safety
 * `model` must be a live model handle or null; `out` must point to `cap`
 * writable doubles when `cap > 0`.
 */
size_t lf_model_coefficients(const struct LfModel *model, double *out, size_t cap);

/**
 * Kernel expansion Σ λ_m φ_m(x) before any link; NaN for a null handle.
 *
 * # Safety
 * `model` must be a live model handle or null.
 */
double lf_model_response(const struct LfModel *model, double x);

/**
 * Predicted value of an identity-link (least squares) model.
 *
 * # Safety
 * `model` must be a live model handle or null; `out` must be valid.
 */
enum LfStatus lf_model_predict(const struct LfModel *model, double x, double *out);

/**
 * Predicted probability of category 1 under a sigmoid-link model.
 *
 * # Safety
 * Same contract as [`lf_model_predict`].
 */
enum LfStatus lf_model_predict_proba(const struct LfModel *model, double x, double *out);

/**
 * Hard classification against `threshold`; writes the chosen category
 * (0 or 1) and, when `out_confidence` is non-null, the probability of the
 * chosen category.
 *
 * # Safety
 * `model` must be a live model handle or null; `out_category` must be
 * valid; `out_confidence` must be valid or null.
 */
enum LfStatus lf_model_classify(const struct LfModel *model,
                                double x,
                                double threshold,
                                uint8_t *out_category,
                                double *out_confidence);

/**
 * Releases a model handle. Null is a no-op.
 *
 * # Safety
 * `model` must be a handle from this library, not yet freed, or null.
 */
void lf_model_free(struct LfModel *model);

/**
 * Quality report for a least-squares fit; pass the rcond returned by the
 * fitting call.
 *
 * # Safety
 * `ds` and `model` must be live handles; `out` must be valid.
 */
enum LfStatus lf_report_continuous(const struct LfDataSet *ds,
                                   const struct LfModel *model,
                                   double rcond,
                                   struct LfFitReport *out);

/**
 * Quality report for a gradient-trained logistic fit; pass the trace
 * returned by the training call.
 *
 * # Safety
 * `ds` and `model` must be live handles; `trace` and `out` must be valid.
 */
enum LfStatus lf_report_binary(const struct LfDataSet *ds,
                               const struct LfModel *model,
                               const struct LfTrainTrace *trace,
                               struct LfFitReport *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LAGRANGE_FIT_H */
