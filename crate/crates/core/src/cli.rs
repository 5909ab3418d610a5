//! Command-line front-end: argument grammar, dataset loading, report
//! rendering (JSON / aligned table / SVG), and the five subcommands.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::basis::{BasisSpec, Family};
use crate::dataset::{DataSet, Kind};
use crate::error::{Error, Result};
use crate::linreg;
use crate::logreg::{self, Mode, SgdConfig};
use crate::metrics::{self, FitReport};
use crate::plot;

#[derive(Parser, Debug)]
#[command(
    name = "lagrange-fit",
    version,
    about = "Polynomial and cosine-kernel regression with quality reports, sweeps and plots"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Least-squares fit on a continuous dataset
    Fit(FitArgs),
    /// Gradient-trained logistic fit on a binary dataset
    Logistic(LogisticArgs),
    /// One report row per model order, optionally comparing both bases
    Sweep(SweepArgs),
    /// SVG scatter plot with the fitted curve
    Plot(PlotArgs),
    /// List bundled datasets, or dump one as CSV
    Datasets(DatasetsArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisArg {
    Poly,
    Dct,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Seq,
    Batch,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Seq => Mode::Sequential,
            ModeArg::Batch => Mode::Batch,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TextFormat {
    Table,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SvgFormat {
    Svg,
}

#[derive(Args, Debug)]
pub struct DataArg {
    /// Data source: a CSV path or builtin:<name>
    #[arg(long)]
    pub data: String,
}

#[derive(Args, Debug)]
pub struct BasisArgs {
    /// Kernel family
    #[arg(long, value_enum)]
    pub basis: BasisArg,
    /// Cosine-domain length (dct only; default: dataset size)
    #[arg(long)]
    pub ndct: Option<usize>,
    /// Cosine-domain maximum (dct only; default: largest x in the data)
    #[arg(long)]
    pub xmax: Option<f64>,
}

#[derive(Args, Debug)]
pub struct SgdArgs {
    /// Step-size numerator; effective step is alpha/order
    /// (default: family/order schedule)
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Upper bound on training passes over the data
    #[arg(long = "max-epochs", default_value_t = SgdConfig::DEFAULT_MAX_EPOCHS)]
    pub max_epochs: u64,
    /// Stop once the cross-entropy change over one epoch is smaller than this
    #[arg(long = "tol", default_value_t = SgdConfig::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    /// Update scheduling
    #[arg(long, value_enum, default_value_t = ModeArg::Seq)]
    pub mode: ModeArg,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = TextFormat::Table)]
    pub format: TextFormat,
    /// Write output here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FitArgs {
    #[command(flatten)]
    pub data: DataArg,
    #[command(flatten)]
    pub basis: BasisArgs,
    /// Model order (number of coefficients)
    #[arg(long)]
    pub order: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct LogisticArgs {
    #[command(flatten)]
    pub data: DataArg,
    #[command(flatten)]
    pub basis: BasisArgs,
    /// Model order (number of coefficients)
    #[arg(long)]
    pub order: usize,
    #[command(flatten)]
    pub sgd: SgdArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[command(flatten)]
    pub data: DataArg,
    #[command(flatten)]
    pub basis: BasisArgs,
    /// Inclusive order range, e.g. 2..5
    #[arg(long)]
    pub orders: String,
    #[command(flatten)]
    pub sgd: SgdArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct PlotArgs {
    #[command(flatten)]
    pub data: DataArg,
    #[command(flatten)]
    pub basis: BasisArgs,
    /// Model order (number of coefficients)
    #[arg(long)]
    pub order: usize,
    #[command(flatten)]
    pub sgd: SgdArgs,
    #[arg(long, value_enum, default_value_t = SvgFormat::Svg)]
    pub format: SvgFormat,
    /// Write output here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct DatasetsArgs {
    /// Dump this dataset as CSV instead of listing the builtins
    #[arg(long)]
    pub data: Option<String>,
    #[arg(long, value_enum, default_value_t = TextFormat::Table)]
    pub format: TextFormat,
    /// Write output here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Runs one parsed command and returns its rendered output plus the
/// destination it should be written to (None = stdout).
pub fn execute(cli: Cli) -> Result<(String, Option<PathBuf>)> {
    match cli.command {
        Command::Fit(args) => cmd_fit(args),
        Command::Logistic(args) => cmd_logistic(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Plot(args) => cmd_plot(args),
        Command::Datasets(args) => cmd_datasets(args),
    }
}

/// Parses, runs, and writes; the process-level entry point.
pub fn main_entry() -> Result<()> {
    let cli = Cli::parse();
    let (text, dest) = execute(cli)?;
    match dest {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(&path, text).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        }),
    }
}

fn load_data(arg: &str) -> Result<DataSet> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return DataSet::builtin(name);
    }
    let text = std::fs::read_to_string(arg).map_err(|source| Error::Io {
        path: arg.to_string(),
        source,
    })?;
    DataSet::from_csv(&text)
}

/// Resolves one concrete family (rejecting `both`) into a basis spec,
/// filling the cosine-domain defaults from the dataset.
fn resolve_spec(
    family: BasisArg,
    order: usize,
    ndct: Option<usize>,
    xmax: Option<f64>,
    ds: &DataSet,
) -> Result<BasisSpec> {
    match family {
        BasisArg::Poly => BasisSpec::polynomial(order),
        BasisArg::Dct => {
            let n_dct = ndct.unwrap_or(ds.len());
            let x_max = xmax.unwrap_or_else(|| ds.x_max());
            if x_max < ds.x_max() {
                eprintln!(
                    "warning: domain max {x_max} is below the largest x {}; \
                     cosine features will extrapolate",
                    ds.x_max()
                );
            }
            BasisSpec::dct(order, n_dct, x_max)
        }
        BasisArg::Both => Err(Error::Usage {
            msg: "--basis both is only valid for sweep".into(),
        }),
    }
}

fn default_alpha(family: &Family, order: usize) -> f64 {
    match family {
        Family::Dct { .. } => 0.2,
        Family::Polynomial => match order {
            0..=3 => 1e-2,
            4 => 1e-3,
            _ => 1e-4,
        },
    }
}

fn sgd_config(spec: &BasisSpec, sgd: &SgdArgs) -> SgdConfig {
    SgdConfig {
        alpha: sgd.alpha.unwrap_or_else(|| default_alpha(&spec.family(), spec.order())),
        max_epochs: sgd.max_epochs,
        tolerance: sgd.tolerance,
        mode: sgd.mode.into(),
    }
}

fn dct_params(spec: &BasisSpec) -> (Option<usize>, Option<f64>) {
    match spec.family() {
        Family::Polynomial => (None, None),
        Family::Dct { n_dct, x_max } => (Some(n_dct), Some(x_max)),
    }
}

// ---------------------------------------------------------------- fit

#[derive(Serialize)]
struct FitJson<'a> {
    order: usize,
    mse_fit: f64,
    mse_mean: f64,
    r_squared: f64,
    f_factor: Option<f64>,
    rcond: f64,
    coefficients: &'a [f64],
    basis: &'a str,
    ndct: Option<usize>,
    xmax: Option<f64>,
}

fn cmd_fit(args: FitArgs) -> Result<(String, Option<PathBuf>)> {
    let ds = load_data(&args.data.data)?;
    if ds.kind() != Kind::Continuous {
        return Err(Error::WrongKind { expected: "continuous" });
    }
    let spec = resolve_spec(args.basis.basis, args.order, args.basis.ndct, args.basis.xmax, &ds)?;
    let (model, rcond) = linreg::fit(&ds, &spec)?;
    let report = FitReport::continuous(&ds, &model, rcond)?;
    let (ndct, xmax) = dct_params(&spec);
    let text = match args.output.format {
        TextFormat::Json => {
            let json = FitJson {
                order: report.order,
                mse_fit: report.fit_score,
                mse_mean: report.baseline_score,
                r_squared: report.r_squared,
                f_factor: report.f_factor,
                rcond,
                coefficients: model.coefficients(),
                basis: spec.family().name(),
                ndct,
                xmax,
            };
            to_pretty_json(&json)
        }
        TextFormat::Table => {
            let mut rows = vec![
                ("order", report.order.to_string()),
                ("basis", describe_basis(&spec)),
                ("mse_fit", fmt_num(report.fit_score)),
                ("mse_mean", fmt_num(report.baseline_score)),
                ("r_squared", fmt_num(report.r_squared)),
                ("f_factor", opt_num(report.f_factor)),
                ("rcond", fmt_num(rcond)),
            ];
            rows.push(("coefficients", fmt_coeffs(model.coefficients())));
            render_kv(&rows)
        }
    };
    Ok((text, args.output.out))
}

// ----------------------------------------------------------- logistic

#[derive(Serialize)]
struct LogisticJson<'a> {
    order: usize,
    ll_fit: f64,
    ll_op: f64,
    pseudo_r_squared: f64,
    f_factor: Option<f64>,
    epochs: u64,
    updates: u64,
    converged: bool,
    coefficients: &'a [f64],
    basis: &'a str,
    alpha: f64,
    ndct: Option<usize>,
    xmax: Option<f64>,
}

fn cmd_logistic(args: LogisticArgs) -> Result<(String, Option<PathBuf>)> {
    let ds = load_data(&args.data.data)?;
    let spec = resolve_spec(args.basis.basis, args.order, args.basis.ndct, args.basis.xmax, &ds)?;
    let config = sgd_config(&spec, &args.sgd);
    // surface the baseline problem (wrong kind, single class) before training
    let ll_op = metrics::ll_op(&ds)?;
    let (model, trace) = logreg::fit_sgd(&ds, &spec, &config)?;
    let report = FitReport::binary(&ds, &model, &trace)?;
    let (ndct, xmax) = dct_params(&spec);
    let text = match args.output.format {
        TextFormat::Json => {
            let json = LogisticJson {
                order: report.order,
                ll_fit: report.fit_score,
                ll_op,
                pseudo_r_squared: report.r_squared,
                f_factor: report.f_factor,
                epochs: trace.epochs_run,
                updates: trace.updates_run,
                converged: trace.converged,
                coefficients: model.coefficients(),
                basis: spec.family().name(),
                alpha: config.alpha,
                ndct,
                xmax,
            };
            to_pretty_json(&json)
        }
        TextFormat::Table => {
            let rows = vec![
                ("order", report.order.to_string()),
                ("basis", describe_basis(&spec)),
                ("alpha", fmt_num(config.alpha)),
                ("ll_fit", fmt_num(report.fit_score)),
                ("ll_op", fmt_num(ll_op)),
                ("pseudo_r_squared", fmt_num(report.r_squared)),
                ("f_factor", opt_num(report.f_factor)),
                ("epochs", trace.epochs_run.to_string()),
                ("updates", trace.updates_run.to_string()),
                ("converged", trace.converged.to_string()),
                ("coefficients", fmt_coeffs(model.coefficients())),
            ];
            render_kv(&rows)
        }
    };
    Ok((text, args.output.out))
}

// -------------------------------------------------------------- sweep

#[derive(Serialize)]
#[serde(untagged)]
enum SweepRow {
    Continuous {
        order: usize,
        basis: &'static str,
        mse_fit: f64,
        mse_mean: f64,
        r_squared: f64,
        f_factor: Option<f64>,
        rcond: f64,
    },
    Binary {
        order: usize,
        basis: &'static str,
        alpha: f64,
        ll_fit: f64,
        ll_op: f64,
        pseudo_r_squared: f64,
        f_factor: Option<f64>,
        epochs: u64,
        updates: u64,
        converged: bool,
    },
    Failed {
        order: usize,
        basis: &'static str,
        error: String,
    },
}

fn parse_orders(text: &str) -> Result<(usize, usize)> {
    let err = || Error::Usage {
        msg: format!("--orders expects an inclusive range like 2..5, got `{text}`"),
    };
    let (a, b) = text.split_once("..").ok_or_else(err)?;
    let lo: usize = a.trim().parse().map_err(|_| err())?;
    let hi: usize = b.trim().parse().map_err(|_| err())?;
    if lo < 1 || hi < lo {
        return Err(err());
    }
    Ok((lo, hi))
}

fn cmd_sweep(args: SweepArgs) -> Result<(String, Option<PathBuf>)> {
    let ds = load_data(&args.data.data)?;
    let (lo, hi) = parse_orders(&args.orders)?;
    if hi > ds.len() - 1 {
        return Err(Error::Usage {
            msg: format!(
                "orders must stay within 1..{} for {} data points",
                ds.len() - 1,
                ds.len()
            ),
        });
    }
    let families: Vec<BasisArg> = match args.basis.basis {
        BasisArg::Both => vec![BasisArg::Poly, BasisArg::Dct],
        one => vec![one],
    };

    let mut rows = Vec::new();
    for order in lo..=hi {
        for &family in &families {
            let row = sweep_row(&ds, family, order, &args);
            rows.push(row);
        }
    }

    let text = match args.output.format {
        TextFormat::Json => to_pretty_json(&rows),
        TextFormat::Table => render_sweep_table(&ds, &rows),
    };
    Ok((text, args.output.out))
}

fn sweep_row(ds: &DataSet, family: BasisArg, order: usize, args: &SweepArgs) -> SweepRow {
    let family_name = match family {
        BasisArg::Poly => "poly",
        BasisArg::Dct => "dct",
        BasisArg::Both => unreachable!("expanded by caller"),
    };
    let attempt = || -> Result<SweepRow> {
        let spec = resolve_spec(family, order, args.basis.ndct, args.basis.xmax, ds)?;
        match ds.kind() {
            Kind::Continuous => {
                let (model, rcond) = linreg::fit(ds, &spec)?;
                let report = FitReport::continuous(ds, &model, rcond)?;
                Ok(SweepRow::Continuous {
                    order,
                    basis: family_name,
                    mse_fit: report.fit_score,
                    mse_mean: report.baseline_score,
                    r_squared: report.r_squared,
                    f_factor: report.f_factor,
                    rcond,
                })
            }
            Kind::Binary => {
                let config = sgd_config(&spec, &args.sgd);
                let ll_op = metrics::ll_op(ds)?;
                let (model, trace) = logreg::fit_sgd(ds, &spec, &config)?;
                let report = FitReport::binary(ds, &model, &trace)?;
                Ok(SweepRow::Binary {
                    order,
                    basis: family_name,
                    alpha: config.alpha,
                    ll_fit: report.fit_score,
                    ll_op,
                    pseudo_r_squared: report.r_squared,
                    f_factor: report.f_factor,
                    epochs: trace.epochs_run,
                    updates: trace.updates_run,
                    converged: trace.converged,
                })
            }
        }
    };
    attempt().unwrap_or_else(|e| SweepRow::Failed {
        order,
        basis: family_name,
        error: e.to_string(),
    })
}

fn render_sweep_table(ds: &DataSet, rows: &[SweepRow]) -> String {
    let headers: Vec<&str> = match ds.kind() {
        Kind::Continuous => vec![
            "order", "basis", "mse_fit", "mse_mean", "r_squared", "f_factor", "rcond",
        ],
        Kind::Binary => vec![
            "order", "basis", "alpha", "ll_fit", "ll_op", "pseudo_r2", "f_factor", "epochs",
            "updates", "converged",
        ],
    };
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| match row {
            SweepRow::Continuous {
                order,
                basis,
                mse_fit,
                mse_mean,
                r_squared,
                f_factor,
                rcond,
            } => vec![
                order.to_string(),
                basis.to_string(),
                fmt_num(*mse_fit),
                fmt_num(*mse_mean),
                fmt_num(*r_squared),
                opt_num(*f_factor),
                fmt_num(*rcond),
            ],
            SweepRow::Binary {
                order,
                basis,
                alpha,
                ll_fit,
                ll_op,
                pseudo_r_squared,
                f_factor,
                epochs,
                updates,
                converged,
            } => vec![
                order.to_string(),
                basis.to_string(),
                fmt_num(*alpha),
                fmt_num(*ll_fit),
                fmt_num(*ll_op),
                fmt_num(*pseudo_r_squared),
                opt_num(*f_factor),
                epochs.to_string(),
                updates.to_string(),
                converged.to_string(),
            ],
            SweepRow::Failed { order, basis, error } => {
                let mut v = vec![order.to_string(), basis.to_string()];
                v.push(format!("error: {error}"));
                while v.len() < headers.len() {
                    v.push("-".into());
                }
                v
            }
        })
        .collect();
    render_table(&headers, &cells)
}

// --------------------------------------------------------------- plot

fn cmd_plot(args: PlotArgs) -> Result<(String, Option<PathBuf>)> {
    let ds = load_data(&args.data.data)?;
    let spec = resolve_spec(args.basis.basis, args.order, args.basis.ndct, args.basis.xmax, &ds)?;
    let (model, probability_band) = match ds.kind() {
        Kind::Continuous => {
            let (model, _) = linreg::fit(&ds, &spec)?;
            (model, false)
        }
        Kind::Binary => {
            let config = sgd_config(&spec, &args.sgd);
            let (model, _) = logreg::fit_sgd(&ds, &spec, &config)?;
            (model, true)
        }
    };
    let curve = plot::curve_points(&model, &ds);
    Ok((plot::render(&ds, &curve, probability_band), args.out))
}

// ----------------------------------------------------------- datasets

#[derive(Serialize)]
struct DatasetInfo {
    name: &'static str,
    kind: &'static str,
    n: usize,
    x_max: f64,
}

fn cmd_datasets(args: DatasetsArgs) -> Result<(String, Option<PathBuf>)> {
    if let Some(data) = &args.data {
        if args.format == TextFormat::Json {
            return Err(Error::Usage {
                msg: "dataset dumps are CSV; omit --format json".into(),
            });
        }
        let ds = load_data(data)?;
        return Ok((ds.to_csv(), args.out));
    }
    let infos: Vec<DatasetInfo> = DataSet::builtin_names()
        .iter()
        .map(|name| {
            let ds = DataSet::builtin(name).expect("builtin names are loadable");
            DatasetInfo {
                name,
                kind: ds.kind().as_str(),
                n: ds.len(),
                x_max: ds.x_max(),
            }
        })
        .collect();
    let text = match args.format {
        TextFormat::Json => to_pretty_json(&infos),
        TextFormat::Table => {
            let headers = ["name", "kind", "n", "x_max"];
            let cells: Vec<Vec<String>> = infos
                .iter()
                .map(|i| {
                    vec![
                        i.name.to_string(),
                        i.kind.to_string(),
                        i.n.to_string(),
                        fmt_num(i.x_max),
                    ]
                })
                .collect();
            render_table(&headers, &cells)
        }
    };
    Ok((text, args.out))
}

// ---------------------------------------------------------- rendering

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn describe_basis(spec: &BasisSpec) -> String {
    match spec.family() {
        Family::Polynomial => "poly".to_string(),
        Family::Dct { n_dct, x_max } => format!("dct (ndct={n_dct}, xmax={x_max})"),
    }
}

/// Compact float formatting for tables: six significant decimals in the
/// plain range, scientific notation outside it.
fn fmt_num(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let a = v.abs();
    if (1e-4..1e7).contains(&a) {
        let s = format!("{v:.6}");
        let s = s.trim_end_matches('0').trim_end_matches('.');
        s.to_string()
    } else {
        format!("{v:.4e}")
    }
}

fn opt_num(v: Option<f64>) -> String {
    v.map(fmt_num).unwrap_or_else(|| "-".to_string())
}

fn fmt_coeffs(cs: &[f64]) -> String {
    let parts: Vec<String> = cs.iter().map(|&c| fmt_num(c)).collect();
    format!("[{}]", parts.join(", "))
}

/// Two-column key/value table for single-fit reports.
fn render_kv(rows: &[(&str, String)]) -> String {
    let key_w = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<key_w$}  {v}\n"));
    }
    out
}

/// Aligned fixed-width table with a header row.
fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate().take(cols) {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |cells: &[String], out: &mut String| {
        let mut parts = Vec::with_capacity(cols);
        for (i, cell) in cells.iter().enumerate().take(cols) {
            parts.push(format!("{:>width$}", cell, width = widths[i]));
        }
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    let header_cells: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    line(&header_cells, &mut out);
    for row in rows {
        line(row, &mut out);
    }
    out
}
