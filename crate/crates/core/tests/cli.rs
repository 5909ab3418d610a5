//! End-to-end tests running the actual `lagrange-fit` binary.

use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lagrange-fit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn csv_file(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().expect("temp file");
    f.write_all(content.as_bytes()).expect("write csv");
    f
}

#[test]
fn fit_json_success() {
    let out = run(&[
        "fit", "--data", "builtin:grades", "--basis", "poly", "--order", "2", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((v["mse_fit"].as_f64().unwrap() - 0.9565).abs() < 5e-4);
    assert!((v["r_squared"].as_f64().unwrap() - 0.6532).abs() < 5e-4);
    assert_eq!(v["coefficients"].as_array().unwrap().len(), 2);
}

#[test]
fn fit_table_success() {
    let out = run(&["fit", "--data", "builtin:grades", "--basis", "poly", "--order", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("mse_fit"));
    assert!(text.contains("0.956517"));
}

#[test]
fn missing_file_exits_2_and_names_path() {
    let out = run(&["fit", "--data", "/no/such/file.csv", "--basis", "poly", "--order", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("/no/such/file.csv"));
}

#[test]
fn malformed_csv_exits_2_with_line_number() {
    let f = csv_file("x,y\n1,2\n3;4\n");
    let out = run(&["fit", "--data", f.path().to_str().unwrap(), "--basis", "poly", "--order", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"));
}

#[test]
fn usage_error_exits_2() {
    let out = run(&["fit", "--data", "builtin:grades", "--basis", "nonsense", "--order", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn singular_system_exits_1() {
    // every x identical: the power sums repeat and the normal matrix drops rank
    let f = csv_file("1,1.5\n1,2.5\n1,3.5\n");
    let out = run(&["fit", "--data", f.path().to_str().unwrap(), "--basis", "poly", "--order", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("singular"));
}

#[test]
fn divergent_training_exits_1() {
    // gigantic inputs with a huge step overflow the first coefficient update
    let f = csv_file("1e305,0\n2e305,1\n");
    let out = run(&[
        "logistic",
        "--data",
        f.path().to_str().unwrap(),
        "--basis",
        "poly",
        "--order",
        "2",
        "--alpha",
        "1e6",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("diverged"));
}

#[test]
fn single_class_logistic_exits_2() {
    let f = csv_file("1,1\n2,1\n3,1\n");
    let out = run(&[
        "logistic", "--data", f.path().to_str().unwrap(), "--basis", "poly", "--order", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("baseline"));
}

#[test]
fn logistic_json_matches_training_trace() {
    let out = run(&[
        "logistic",
        "--data",
        "builtin:passfail",
        "--basis",
        "dct",
        "--order",
        "2",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["epochs"], 128);
    assert_eq!(v["updates"], 128 * 19);
    assert_eq!(v["converged"], true);
    assert!((v["ll_fit"].as_f64().unwrap() - (-6.8667)).abs() < 5e-4);
    assert!((v["ll_op"].as_f64().unwrap() - (-13.1435)).abs() < 5e-4);
    assert_eq!(v["alpha"].as_f64().unwrap(), 0.2);
    assert_eq!(v["ndct"], 19);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "logistic",
        "--data",
        "builtin:passfail",
        "--basis",
        "dct",
        "--order",
        "3",
        "--format",
        "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let svg_args = [
        "plot", "--data", "builtin:grades", "--basis", "poly", "--order", "3",
    ];
    let a = run(&svg_args);
    let b = run(&svg_args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sweep_error_rows_do_not_abort() {
    // x values collide, so order 2 is singular while order 1 still fits
    let f = csv_file("1,1.5\n1,2.5\n1,3.5\n");
    let out = run(&[
        "sweep",
        "--data",
        f.path().to_str().unwrap(),
        "--basis",
        "poly",
        "--orders",
        "1..2",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows[0]["mse_fit"].is_number());
    assert!(rows[1]["error"].as_str().unwrap().contains("singular"));
}

#[test]
fn sweep_table_has_header_and_rows() {
    let out = run(&[
        "sweep", "--data", "builtin:grades", "--basis", "both", "--orders", "1..3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7); // header + 3 orders x 2 bases
    assert!(lines[0].contains("order"));
    assert!(lines[0].contains("rcond"));
}

#[test]
fn sweep_orders_beyond_data_exit_2() {
    let out = run(&[
        "sweep", "--data", "builtin:grades", "--basis", "poly", "--orders", "1..9",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("orders"));
}

#[test]
fn plot_svg_structure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("plot.svg");
    let out = run(&[
        "plot",
        "--data",
        "builtin:passfail",
        "--basis",
        "dct",
        "--order",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<circle").count(), 19);
    assert_eq!(svg.matches("<polyline").count(), 1);
    assert!(svg.matches("<text").count() >= 10);
}

#[test]
fn dct_xmax_below_data_max_warns() {
    let out = run(&[
        "fit", "--data", "builtin:grades", "--basis", "dct", "--order", "2", "--xmax", "3",
    ]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("warning"));
    assert!(stderr(&out).contains("extrapolate"));
}

#[test]
fn datasets_listing_and_dump() {
    let out = run(&["datasets"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("grades"));
    assert!(text.contains("passfail"));

    let out = run(&["datasets", "--data", "builtin:passfail"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("x,y\n"));
    assert_eq!(text.lines().count(), 20); // header + 19 points
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "fit",
        "--data",
        "builtin:grades",
        "--basis",
        "poly",
        "--order",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["order"], 2);
}

#[test]
fn unknown_builtin_exits_2_and_lists_names() {
    let out = run(&["fit", "--data", "builtin:nope", "--basis", "poly", "--order", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("nope"));
    assert!(err.contains("grades"));
}
