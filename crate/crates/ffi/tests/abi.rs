//! Exercises the C ABI from Rust: handle lifecycle, status codes, error
//! messages, and agreement with the core library's own results.

use std::ffi::{CStr, CString};
use std::ptr;

use lagrange_fit_ffi::*;

fn c(text: &str) -> CString {
    CString::new(text).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(lf_last_error_message()) }
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn dataset_lifecycle_and_accessors() {
    unsafe {
        let mut ds: *mut LfDataSet = ptr::null_mut();
        let status = lf_dataset_builtin(c("grades").as_ptr(), &mut ds);
        assert_eq!(status, LfStatus::Ok);
        assert!(!ds.is_null());
        assert_eq!(lf_dataset_len(ds), 9);
        assert!(!lf_dataset_is_binary(ds));
        assert!((lf_dataset_x_max(ds) - 6.2).abs() < 1e-12);
        lf_dataset_free(ds);
    }
}

#[test]
fn csv_parsing_reports_line_numbers() {
    unsafe {
        let mut ds: *mut LfDataSet = ptr::null_mut();
        let status = lf_dataset_from_csv(c("x,y\n1,2\nbroken\n").as_ptr(), &mut ds);
        assert_eq!(status, LfStatus::Parse);
        assert!(ds.is_null());
        assert!(last_error().contains("line 3"), "got: {}", last_error());
    }
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        let mut ds: *mut LfDataSet = ptr::null_mut();
        assert_eq!(lf_dataset_from_csv(ptr::null(), &mut ds), LfStatus::NullArgument);
        assert_eq!(
            lf_dataset_builtin(c("grades").as_ptr(), ptr::null_mut()),
            LfStatus::NullArgument
        );
        let mut out = 0.0f64;
        assert_eq!(lf_model_predict(ptr::null(), 1.0, &mut out), LfStatus::NullArgument);
        assert!(last_error().contains("null"));
        // frees shrug off null
        lf_dataset_free(ptr::null_mut());
        lf_model_free(ptr::null_mut());
    }
}

#[test]
fn poly_fit_matches_core_library() {
    unsafe {
        let mut ds: *mut LfDataSet = ptr::null_mut();
        assert_eq!(lf_dataset_builtin(c("grades").as_ptr(), &mut ds), LfStatus::Ok);

        let mut model: *mut LfModel = ptr::null_mut();
        let mut rcond = 0.0f64;
        assert_eq!(lf_fit_poly(ds, 2, &mut model, &mut rcond), LfStatus::Ok);
        assert_eq!(lf_model_order(model), 2);
        assert!(!lf_model_is_logistic(model));

        let mut coeffs = [0.0f64; 2];
        assert_eq!(lf_model_coefficients(model, coeffs.as_mut_ptr(), 2), 2);
        assert!((coeffs[0] - 0.534166973151894).abs() < 1e-12);
        assert!((coeffs[1] - 0.8190511217359323).abs() < 1e-12);
        assert!((rcond - 6.7255314e-3).abs() < 1e-8);

        let mut pred = 0.0f64;
        assert_eq!(lf_model_predict(model, 5.0, &mut pred), LfStatus::Ok);
        assert!((pred - (coeffs[0] + 5.0 * coeffs[1])).abs() < 1e-12);

        let mut report = std::mem::zeroed::<LfFitReport>();
        assert_eq!(lf_report_continuous(ds, model, rcond, &mut report), LfStatus::Ok);
        assert_eq!(report.order, 2);
        assert_eq!(report.n, 9);
        assert!((report.fit_score - 0.9565166932287195).abs() < 1e-9);
        assert!((report.r_squared - 0.6531877701364088).abs() < 1e-9);
        assert!(report.has_f_factor);
        assert!((report.f_factor - 4.572314390954862).abs() < 1e-9);
        assert!((report.rcond - rcond).abs() < 1e-15);

        lf_model_free(model);
        lf_dataset_free(ds);
    }
}

#[test]
fn size_query_with_zero_capacity() {
    unsafe {
        let mut ds: *mut LfDataSet = ptr::null_mut();
        assert_eq!(lf_dataset_builtin(c("grades").as_ptr(), &mut ds), LfStatus::Ok);
        let mut model: *mut LfModel = ptr::null_mut();
        assert_eq!(lf_fit_poly(ds, 3, &mut model, ptr::null_mut()), LfStatus::Ok);
        assert_eq!(lf_model_coefficients(model, ptr::null_mut(), 0), 3);
        lf_model_free(model);
        lf_dataset_free(ds);
    }
}

#[test]
fn logistic_training_round_trip() {
    unsafe {
        let mut ds: *mut LfDataSet = ptr::null_mut();
        assert_eq!(lf_dataset_builtin(c("passfail").as_ptr(), &mut ds), LfStatus::Ok);
        assert!(lf_dataset_is_binary(ds));
        assert_eq!(lf_dataset_len(ds), 19);

        let config = lf_sgd_config_default(0.2);
        assert_eq!(config.alpha, 0.2);
        assert!(!config.batch);

        let mut model: *mut LfModel = ptr::null_mut();
        let mut trace = std::mem::zeroed::<LfTrainTrace>();
        let status =
            lf_train_logistic_dct(ds, 2, 19, lf_dataset_x_max(ds), &config, &mut model, &mut trace);
        assert_eq!(status, LfStatus::Ok);
        assert!(lf_model_is_logistic(model));
        assert!(trace.converged);
        assert_eq!(trace.epochs_run, 128);
        assert_eq!(trace.updates_run, 128 * 19);
        assert!((trace.final_cross_entropy - 6.8667466848).abs() < 1e-6);

        let mut p = 0.0f64;
        assert_eq!(lf_model_predict_proba(model, 5.0, &mut p), LfStatus::Ok);
        assert!(p > 0.5, "large x should pass: p = {p}");

        // identity prediction on a sigmoid model is a link mismatch
        let mut v = 0.0f64;
        assert_eq!(lf_model_predict(model, 5.0, &mut v), LfStatus::Unsupported);
        assert!(last_error().contains("identity"));

        let mut category = 0u8;
        let mut confidence = 0.0f64;
        assert_eq!(
            lf_model_classify(model, 5.0, 0.5, &mut category, &mut confidence),
            LfStatus::Ok
        );
        assert_eq!(category, 1);
        assert_eq!(confidence, p);

        let mut report = std::mem::zeroed::<LfFitReport>();
        assert_eq!(lf_report_binary(ds, model, &trace, &mut report), LfStatus::Ok);
        assert!((report.fit_score - (-6.8667466848)).abs() < 1e-6);
        assert!((report.baseline_score - (-13.143468478195938)).abs() < 1e-9);
        assert!(report.rcond.is_nan());
        assert!(report.has_f_factor);

        lf_model_free(model);
        lf_dataset_free(ds);
    }
}

#[test]
fn points_constructor_and_underdetermined_fit() {
    unsafe {
        let xs = [1.0f64, 2.0, 3.0];
        let ys = [0.5f64, 1.5, 2.0];
        let mut ds: *mut LfDataSet = ptr::null_mut();
        assert_eq!(lf_dataset_from_points(xs.as_ptr(), ys.as_ptr(), 3, &mut ds), LfStatus::Ok);
        let mut model: *mut LfModel = ptr::null_mut();
        assert_eq!(lf_fit_poly(ds, 5, &mut model, ptr::null_mut()), LfStatus::InvalidInput);
        assert!(last_error().contains("underdetermined"));
        assert!(model.is_null());
        lf_dataset_free(ds);
    }
}

#[test]
fn singular_fit_reports_status() {
    unsafe {
        let xs = [2.0f64, 2.0, 2.0];
        let ys = [0.5f64, 1.5, 2.0];
        let mut ds: *mut LfDataSet = ptr::null_mut();
        assert_eq!(lf_dataset_from_points(xs.as_ptr(), ys.as_ptr(), 3, &mut ds), LfStatus::Ok);
        let mut model: *mut LfModel = ptr::null_mut();
        assert_eq!(lf_fit_poly(ds, 2, &mut model, ptr::null_mut()), LfStatus::Singular);
        lf_dataset_free(ds);
    }
}

#[test]
fn version_and_header_artifacts() {
    unsafe {
        let version = CStr::from_ptr(lf_version()).to_str().unwrap();
        assert_eq!(version, env!("CARGO_PKG_VERSION"));
    }
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/lagrange_fit.h"
    ))
    .expect("generated header present");
    for symbol in [
        "lf_dataset_from_csv",
        "lf_fit_poly",
        "lf_train_logistic_dct",
        "lf_model_classify",
        "lf_report_binary",
        "LF_STATUS_SINGULAR",
        "typedef struct LfDataSet LfDataSet",
    ] {
        assert!(header.contains(symbol), "header missing {symbol}");
    }
}
