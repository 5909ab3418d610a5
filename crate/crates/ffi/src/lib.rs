//! C ABI for the lagrange-fit toolkit.
//!
//! Conventions:
//! - Datasets and models are opaque handles created by `lf_*` constructors
//!   and released with the matching `lf_*_free`; passing null to a free is a
//!   no-op, passing null anywhere else yields `LF_STATUS_NULL_ARGUMENT`.
//! - Every fallible call returns an [`LfStatus`]; on failure,
//!   [`lf_last_error_message`] holds a human-readable description until the
//!   next failing call on the same thread.
//! - Out-parameters are written only when the call returns
//!   `LF_STATUS_OK`. Optional out-parameters are documented as such and may
//!   be null.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use lagrange_fit::basis::BasisSpec;
use lagrange_fit::dataset::{DataSet, Kind};
use lagrange_fit::error::Error;
use lagrange_fit::linreg::{self, FittedModel, Link};
use lagrange_fit::logreg::{self, Mode, SgdConfig, TrainTrace};
use lagrange_fit::metrics::FitReport;

/// Outcome of a fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LfStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input text could not be parsed.
    Parse = 3,
    /// An argument or dataset was rejected (bad order, empty data, ...).
    InvalidInput = 4,
    /// The normal equations have no unique solution.
    Singular = 5,
    /// Gradient training produced non-finite coefficients.
    Diverged = 6,
    /// The operation does not apply to this dataset or model flavor.
    Unsupported = 7,
}

/// Opaque dataset handle.
pub struct LfDataSet(DataSet);

/// Opaque fitted-model handle.
pub struct LfModel(FittedModel);

/// Gradient-training settings, mirroring the library defaults via
/// [`lf_sgd_config_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct LfSgdConfig {
    /// Step-size numerator; the effective step is `alpha / order`.
    pub alpha: f64,
    /// Upper bound on passes over the data.
    pub max_epochs: u64,
    /// Stop once the cross-entropy change over one epoch is below this.
    pub tolerance: f64,
    /// False: sequential per-sample updates. True: one full-sum update per epoch.
    pub batch: bool,
}

/// What a training run did.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct LfTrainTrace {
    pub epochs_run: u64,
    pub updates_run: u64,
    pub final_cross_entropy: f64,
    pub converged: bool,
}

/// Quality summary for a fitted model. For least-squares fits the scores are
/// mean squared errors; for logistic fits they are log-likelihoods.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct LfFitReport {
    pub order: usize,
    pub n: usize,
    pub fit_score: f64,
    pub baseline_score: f64,
    pub r_squared: f64,
    /// NaN when `has_f_factor` is false (order below 2).
    pub f_factor: f64,
    pub has_f_factor: bool,
    /// NaN for gradient-trained fits, where no normal matrix exists.
    pub rcond: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: LfStatus, msg: &str) -> LfStatus {
    let owned = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = owned);
    status
}

fn fail_with(err: &Error) -> LfStatus {
    let status = match err {
        Error::Parse { .. } => LfStatus::Parse,
        Error::SingularMatrix => LfStatus::Singular,
        Error::Diverged { .. } => LfStatus::Diverged,
        Error::WrongLink { .. } | Error::WrongKind { .. } | Error::DegenerateBaseline { .. } => {
            LfStatus::Unsupported
        }
        _ => LfStatus::InvalidInput,
    };
    fail(status, &err.to_string())
}

fn null_argument(name: &str) -> LfStatus {
    fail(LfStatus::NullArgument, &format!("{name} must not be null"))
}

/// Returns the description of the most recent failure on this thread. The
/// pointer stays valid until the next failing `lf_*` call on the same
/// thread. Never null; initially the empty string.
#[no_mangle]
pub extern "C" fn lf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn lf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

unsafe fn read_str<'a>(ptr: *const c_char, name: &str) -> Result<&'a str, LfStatus> {
    if ptr.is_null() {
        return Err(null_argument(name));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| fail(LfStatus::InvalidUtf8, &format!("{name} is not valid UTF-8")))
}

unsafe fn give_dataset(ds: DataSet, out: *mut *mut LfDataSet) -> LfStatus {
    if out.is_null() {
        return null_argument("out");
    }
    *out = Box::into_raw(Box::new(LfDataSet(ds)));
    LfStatus::Ok
}

// ------------------------------------------------------------- datasets

/// Parses CSV text (`x,y` pairs, optional header) into a dataset.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_dataset_from_csv(
    text: *const c_char,
    out: *mut *mut LfDataSet,
) -> LfStatus {
    let text = match read_str(text, "text") {
        Ok(t) => t,
        Err(s) => return s,
    };
    match DataSet::from_csv(text) {
        Ok(ds) => give_dataset(ds, out),
        Err(e) => fail_with(&e),
    }
}

/// Loads one of the bundled datasets (`grades`, `passfail`).
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_dataset_builtin(
    name: *const c_char,
    out: *mut *mut LfDataSet,
) -> LfStatus {
    let name = match read_str(name, "name") {
        Ok(t) => t,
        Err(s) => return s,
    };
    match DataSet::builtin(name) {
        Ok(ds) => give_dataset(ds, out),
        Err(e) => fail_with(&e),
    }
}

/// Builds a dataset from parallel coordinate arrays of length `len`.
///
/// # Safety
/// `xs` and `ys` must point to `len` readable doubles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lf_dataset_from_points(
    xs: *const f64,
    ys: *const f64,
    len: usize,
    out: *mut *mut LfDataSet,
) -> LfStatus {
    if xs.is_null() {
        return null_argument("xs");
    }
    if ys.is_null() {
        return null_argument("ys");
    }
    let xs = std::slice::from_raw_parts(xs, len);
    let ys = std::slice::from_raw_parts(ys, len);
    let pts: Vec<(f64, f64)> = xs.iter().copied().zip(ys.iter().copied()).collect();
    match DataSet::new(pts) {
        Ok(ds) => give_dataset(ds, out),
        Err(e) => fail_with(&e),
    }
}

/// Number of points; 0 for a null handle.
///
/// # Safety
/// `ds` must be a live dataset handle or null.
#[no_mangle]
pub unsafe extern "C" fn lf_dataset_len(ds: *const LfDataSet) -> usize {
    ds.as_ref().map_or(0, |d| d.0.len())
}

/// True when every target is exactly 0 or 1.
///
/// # Safety
/// `ds` must be a live dataset handle or null.
#[no_mangle]
pub unsafe extern "C" fn lf_dataset_is_binary(ds: *const LfDataSet) -> bool {
    ds.as_ref().is_some_and(|d| d.0.kind() == Kind::Binary)
}

/// Largest x in the data; NaN for a null handle.
///
/// # Safety
/// `ds` must be a live dataset handle or null.
#[no_mangle]
pub unsafe extern "C" fn lf_dataset_x_max(ds: *const LfDataSet) -> f64 {
    ds.as_ref().map_or(f64::NAN, |d| d.0.x_max())
}

/// Releases a dataset handle. Null is a no-op.
///
/// # Safety
/// `ds` must be a handle from this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn lf_dataset_free(ds: *mut LfDataSet) {
    if !ds.is_null() {
        drop(Box::from_raw(ds));
    }
}

// -------------------------------------------------------- least squares

unsafe fn fit_with_spec(
    ds: *const LfDataSet,
    spec: Result<BasisSpec, Error>,
    out_model: *mut *mut LfModel,
    out_rcond: *mut f64,
) -> LfStatus {
    let Some(ds) = ds.as_ref() else {
        return null_argument("ds");
    };
    if out_model.is_null() {
        return null_argument("out_model");
    }
    let spec = match spec {
        Ok(s) => s,
        Err(e) => return fail_with(&e),
    };
    match linreg::fit(&ds.0, &spec) {
        Ok((model, rcond)) => {
            *out_model = Box::into_raw(Box::new(LfModel(model)));
            if !out_rcond.is_null() {
                *out_rcond = rcond;
            }
            LfStatus::Ok
        }
        Err(e) => fail_with(&e),
    }
}

/// Least-squares polynomial fit of the given order (number of
/// coefficients). `out_rcond` may be null; otherwise it receives the
/// reciprocal condition number of the normal matrix.
///
/// # Safety
/// `ds` must be a live dataset handle; `out_model` must be valid;
/// `out_rcond` must be valid or null.
#[no_mangle]
pub unsafe extern "C" fn lf_fit_poly(
    ds: *const LfDataSet,
    order: usize,
    out_model: *mut *mut LfModel,
    out_rcond: *mut f64,
) -> LfStatus {
    fit_with_spec(ds, BasisSpec::polynomial(order), out_model, out_rcond)
}

/// Least-squares cosine-kernel fit. `n_dct` is the cosine-domain length and
/// `x_max` the input value mapped to its end.
///
/// # Safety
/// Same contract as [`lf_fit_poly`].
#[no_mangle]
pub unsafe extern "C" fn lf_fit_dct(
    ds: *const LfDataSet,
    order: usize,
    n_dct: usize,
    x_max: f64,
    out_model: *mut *mut LfModel,
    out_rcond: *mut f64,
) -> LfStatus {
    fit_with_spec(ds, BasisSpec::dct(order, n_dct, x_max), out_model, out_rcond)
}

// ------------------------------------------------------------- logistic

/// Library-default training settings for the given step-size numerator.
#[no_mangle]
pub extern "C" fn lf_sgd_config_default(alpha: f64) -> LfSgdConfig {
    let d = SgdConfig::with_alpha(alpha);
    LfSgdConfig {
        alpha: d.alpha,
        max_epochs: d.max_epochs,
        tolerance: d.tolerance,
        batch: d.mode == Mode::Batch,
    }
}

fn core_config(c: &LfSgdConfig) -> SgdConfig {
    SgdConfig {
        alpha: c.alpha,
        max_epochs: c.max_epochs,
        tolerance: c.tolerance,
        mode: if c.batch { Mode::Batch } else { Mode::Sequential },
    }
}

unsafe fn train_with_spec(
    ds: *const LfDataSet,
    spec: Result<BasisSpec, Error>,
    config: *const LfSgdConfig,
    out_model: *mut *mut LfModel,
    out_trace: *mut LfTrainTrace,
) -> LfStatus {
    let Some(ds) = ds.as_ref() else {
        return null_argument("ds");
    };
    let Some(config) = config.as_ref() else {
        return null_argument("config");
    };
    if out_model.is_null() {
        return null_argument("out_model");
    }
    let spec = match spec {
        Ok(s) => s,
        Err(e) => return fail_with(&e),
    };
    match logreg::fit_sgd(&ds.0, &spec, &core_config(config)) {
        Ok((model, trace)) => {
            *out_model = Box::into_raw(Box::new(LfModel(model)));
            if !out_trace.is_null() {
                *out_trace = LfTrainTrace {
                    epochs_run: trace.epochs_run,
                    updates_run: trace.updates_run,
                    final_cross_entropy: trace.final_cross_entropy,
                    converged: trace.converged,
                };
            }
            LfStatus::Ok
        }
        Err(e) => fail_with(&e),
    }
}

/// Trains a logistic model on polynomial features by gradient descent.
/// `out_trace` may be null.
///
/// # Safety
/// `ds` must be a live dataset handle; `config` must be valid; `out_model`
/// must be valid; `out_trace` must be valid or null.
#[no_mangle]
pub unsafe extern "C" fn lf_train_logistic_poly(
    ds: *const LfDataSet,
    order: usize,
    config: *const LfSgdConfig,
    out_model: *mut *mut LfModel,
    out_trace: *mut LfTrainTrace,
) -> LfStatus {
    train_with_spec(ds, BasisSpec::polynomial(order), config, out_model, out_trace)
}

/// Trains a logistic model on cosine-kernel features by gradient descent.
///
/// # Safety
/// Same contract as [`lf_train_logistic_poly`].
#[no_mangle]
pub unsafe extern "C" fn lf_train_logistic_dct(
    ds: *const LfDataSet,
    order: usize,
    n_dct: usize,
    x_max: f64,
    config: *const LfSgdConfig,
    out_model: *mut *mut LfModel,
    out_trace: *mut LfTrainTrace,
) -> LfStatus {
    train_with_spec(ds, BasisSpec::dct(order, n_dct, x_max), config, out_model, out_trace)
}

// --------------------------------------------------------------- models

/// Coefficient count; 0 for a null handle.
///
/// # Safety
/// `model` must be a live model handle or null.
#[no_mangle]
pub unsafe extern "C" fn lf_model_order(model: *const LfModel) -> usize {
    model.as_ref().map_or(0, |m| m.0.coefficients().len())
}

/// True when the model maps its response through the sigmoid.
///
/// # Safety
/// `model` must be a live model handle or null.
#[no_mangle]
pub unsafe extern "C" fn lf_model_is_logistic(model: *const LfModel) -> bool {
    model.as_ref().is_some_and(|m| m.0.link() == Link::Sigmoid)
}

/// Copies up to `cap` coefficients into `out` and returns the model order.
/// Call with `cap == 0` to query the needed size.
///
/// # Safety
/// `model` must be a live model handle or null; `out` must point to `cap`
/// writable doubles when `cap > 0`.
#[no_mangle]
pub unsafe extern "C" fn lf_model_coefficients(
    model: *const LfModel,
    out: *mut f64,
    cap: usize,
) -> usize {
    let Some(model) = model.as_ref() else {
        return 0;
    };
    let coeffs = model.0.coefficients();
    if cap > 0 && !out.is_null() {
        let n = cap.min(coeffs.len());
        std::ptr::copy_nonoverlapping(coeffs.as_ptr(), out, n);
    }
    coeffs.len()
}

/// Kernel expansion Σ λ_m φ_m(x) before any link; NaN for a null handle.
///
/// # Safety
/// `model` must be a live model handle or null.
#[no_mangle]
pub unsafe extern "C" fn lf_model_response(model: *const LfModel, x: f64) -> f64 {
    model.as_ref().map_or(f64::NAN, |m| m.0.response(x))
}

/// Predicted value of an identity-link (least squares) model.
///
/// # Safety
/// `model` must be a live model handle or null; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lf_model_predict(
    model: *const LfModel,
    x: f64,
    out: *mut f64,
) -> LfStatus {
    let Some(model) = model.as_ref() else {
        return null_argument("model");
    };
    if out.is_null() {
        return null_argument("out");
    }
    match model.0.predict(x) {
        Ok(v) => {
            *out = v;
            LfStatus::Ok
        }
        Err(e) => fail_with(&e),
    }
}

/// Predicted probability of category 1 under a sigmoid-link model.
///
/// # Safety
/// Same contract as [`lf_model_predict`].
#[no_mangle]
pub unsafe extern "C" fn lf_model_predict_proba(
    model: *const LfModel,
    x: f64,
    out: *mut f64,
) -> LfStatus {
    let Some(model) = model.as_ref() else {
        return null_argument("model");
    };
    if out.is_null() {
        return null_argument("out");
    }
    match logreg::predict_proba(&model.0, x) {
        Ok(v) => {
            *out = v;
            LfStatus::Ok
        }
        Err(e) => fail_with(&e),
    }
}

/// Hard classification against `threshold`; writes the chosen category
/// (0 or 1) and, when `out_confidence` is non-null, the probability of the
/// chosen category.
///
/// # Safety
/// `model` must be a live model handle or null; `out_category` must be
/// valid; `out_confidence` must be valid or null.
#[no_mangle]
pub unsafe extern "C" fn lf_model_classify(
    model: *const LfModel,
    x: f64,
    threshold: f64,
    out_category: *mut u8,
    out_confidence: *mut f64,
) -> LfStatus {
    let Some(model) = model.as_ref() else {
        return null_argument("model");
    };
    if out_category.is_null() {
        return null_argument("out_category");
    }
    match logreg::classify(&model.0, x, threshold) {
        Ok((category, confidence)) => {
            *out_category = category;
            if !out_confidence.is_null() {
                *out_confidence = confidence;
            }
            LfStatus::Ok
        }
        Err(e) => fail_with(&e),
    }
}

/// Releases a model handle. Null is a no-op.
///
/// # Safety
/// `model` must be a handle from this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn lf_model_free(model: *mut LfModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

// -------------------------------------------------------------- reports

fn report_out(report: FitReport) -> LfFitReport {
    LfFitReport {
        order: report.order,
        n: report.n,
        fit_score: report.fit_score,
        baseline_score: report.baseline_score,
        r_squared: report.r_squared,
        f_factor: report.f_factor.unwrap_or(f64::NAN),
        has_f_factor: report.f_factor.is_some(),
        rcond: report.rcond.unwrap_or(f64::NAN),
    }
}

/// Quality report for a least-squares fit; pass the rcond returned by the
/// fitting call.
///
/// # Safety
/// `ds` and `model` must be live handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lf_report_continuous(
    ds: *const LfDataSet,
    model: *const LfModel,
    rcond: f64,
    out: *mut LfFitReport,
) -> LfStatus {
    let Some(ds) = ds.as_ref() else {
        return null_argument("ds");
    };
    let Some(model) = model.as_ref() else {
        return null_argument("model");
    };
    if out.is_null() {
        return null_argument("out");
    }
    match FitReport::continuous(&ds.0, &model.0, rcond) {
        Ok(report) => {
            *out = report_out(report);
            LfStatus::Ok
        }
        Err(e) => fail_with(&e),
    }
}

/// Quality report for a gradient-trained logistic fit; pass the trace
/// returned by the training call.
///
/// # Safety
/// `ds` and `model` must be live handles; `trace` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lf_report_binary(
    ds: *const LfDataSet,
    model: *const LfModel,
    trace: *const LfTrainTrace,
    out: *mut LfFitReport,
) -> LfStatus {
    let Some(ds) = ds.as_ref() else {
        return null_argument("ds");
    };
    let Some(model) = model.as_ref() else {
        return null_argument("model");
    };
    let Some(trace) = trace.as_ref() else {
        return null_argument("trace");
    };
    if out.is_null() {
        return null_argument("out");
    }
    let core_trace = TrainTrace {
        epochs_run: trace.epochs_run,
        updates_run: trace.updates_run,
        final_cross_entropy: trace.final_cross_entropy,
        converged: trace.converged,
    };
    match FitReport::binary(&ds.0, &model.0, &core_trace) {
        Ok(report) => {
            *out = report_out(report);
            LfStatus::Ok
        }
        Err(e) => fail_with(&e),
    }
}
