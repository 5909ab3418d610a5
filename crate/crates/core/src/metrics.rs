//! Fit-quality metrics for both regression kinds: the MSE decomposition,
//! R² and the degrees-of-freedom-normalized F-factor for least squares;
//! log-likelihoods, McFadden's pseudo-R² and the analogous F for logistic
//! fits. All functions are pure so reports can be recomputed from persisted
//! values.

use crate::dataset::{DataSet, Kind};
use crate::error::{Error, Result};
use crate::linreg::{FittedModel, Link};

/// Mean squared residual of an identity-link model over a continuous
/// dataset.
pub fn mse_fit(ds: &DataSet, model: &FittedModel) -> Result<f64> {
    if ds.kind() != Kind::Continuous {
        return Err(Error::WrongKind { expected: "continuous" });
    }
    if model.link() != Link::Identity {
        return Err(Error::WrongLink { expected: "identity", found: model.link().name() });
    }
    let n = ds.len() as f64;
    let sum: f64 = ds
        .points()
        .iter()
        .map(|&(x, y)| {
            let r = model.response(x) - y;
            r * r
        })
        .sum();
    Ok(sum / n)
}

/// Variance of y — the mean squared error of the best explanatory-variable-
/// free model (the mean).
pub fn mse_mean(ds: &DataSet) -> f64 {
    let n = ds.len() as f64;
    let mean = ds.ys().sum::<f64>() / n;
    ds.ys().map(|y| (y - mean) * (y - mean)).sum::<f64>() / n
}

/// Fraction of baseline error removed by the fit:
/// (mse_mean − mse_fit)/mse_mean.
pub fn r_squared(mse_mean: f64, mse_fit: f64) -> Result<f64> {
    // catches NaN as well as nonpositive baselines
    if mse_mean.is_nan() || mse_mean <= 0.0 {
        return Err(Error::DegenerateBaseline {
            msg: format!("baseline MSE must be positive, got {mse_mean}"),
        });
    }
    Ok((mse_mean - mse_fit) / mse_mean)
}

/// Improvement-per-coefficient ratio:
/// [(mse_mean − mse_fit)/(M−1)] / [mse_mean/(N−M)].
///
/// Undefined below order 2 or past the saturation point; exactly at
/// saturation (M = N) it is reported as 0.
pub fn f_factor(mse_mean: f64, mse_fit: f64, m: usize, n: usize) -> Result<f64> {
    if m < 2 || n < m {
        return Err(Error::InvalidDof { m, n });
    }
    if n == m {
        return Ok(0.0);
    }
    Ok(((mse_mean - mse_fit) / (m as f64 - 1.0)) / (mse_mean / (n - m) as f64))
}

/// Log-likelihood of a sigmoid-link model: −cross_entropy.
pub fn ll_fit(ds: &DataSet, model: &FittedModel) -> Result<f64> {
    Ok(-crate::logreg::cross_entropy(ds, model)?)
}

/// Log-likelihood of the best constant-probability model: the empirical
/// class proportions, N₁·ln(N₁/N) + N₀·ln(N₀/N).
pub fn ll_op(ds: &DataSet) -> Result<f64> {
    if ds.kind() != Kind::Binary {
        return Err(Error::WrongKind { expected: "binary" });
    }
    let n = ds.len() as f64;
    let n1 = ds.ys().filter(|&y| y == 1.0).count() as f64;
    let n0 = n - n1;
    if n1 == 0.0 || n0 == 0.0 {
        return Err(Error::DegenerateBaseline {
            msg: "dataset contains a single class; the proportion baseline is saturated".into(),
        });
    }
    Ok(n1 * (n1 / n).ln() + n0 * (n0 / n).ln())
}

/// McFadden's pseudo-R²: 1 − ll_fit/ll_op (saturated log-likelihood is 0).
pub fn pseudo_r_squared(ll_fit: f64, ll_op: f64) -> Result<f64> {
    // catches NaN as well as nonnegative baselines
    if ll_op.is_nan() || ll_op >= 0.0 {
        return Err(Error::DegenerateBaseline {
            msg: format!("baseline log-likelihood must be negative, got {ll_op}"),
        });
    }
    Ok(1.0 - ll_fit / ll_op)
}

/// Logistic analogue of [`f_factor`]:
/// [(ll_fit − ll_op)/(M−1)] / [(0 − ll_op)/(N−M)].
pub fn f_factor_logistic(ll_fit: f64, ll_op: f64, m: usize, n: usize) -> Result<f64> {
    if m < 2 || n < m {
        return Err(Error::InvalidDof { m, n });
    }
    if n == m {
        return Ok(0.0);
    }
    Ok(((ll_fit - ll_op) / (m as f64 - 1.0)) / ((0.0 - ll_op) / (n - m) as f64))
}

/// Iteration counts carried by a trained-model report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Iterations {
    pub epochs: u64,
    pub updates: u64,
}

/// Every quality number for one fit, in baseline-vs-fit form. For
/// continuous fits the scores are MSEs; for binary fits they are
/// log-likelihoods.
#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    pub kind: Kind,
    pub fit_score: f64,
    pub baseline_score: f64,
    pub r_squared: f64,
    /// None below order 2, where the ratio is undefined.
    pub f_factor: Option<f64>,
    /// Normal-matrix conditioning; None for gradient-trained fits.
    pub rcond: Option<f64>,
    /// Training effort; None for closed-form fits.
    pub iterations: Option<Iterations>,
    /// Whether training stopped on tolerance; None for closed-form fits.
    pub converged: Option<bool>,
    pub order: usize,
    pub n: usize,
}

impl FitReport {
    /// Assembles the report for a closed-form least-squares fit.
    pub fn continuous(ds: &DataSet, model: &FittedModel, rcond: f64) -> Result<FitReport> {
        let fit = mse_fit(ds, model)?;
        let baseline = mse_mean(ds);
        let m = model.spec().order();
        let n = ds.len();
        Ok(FitReport {
            kind: Kind::Continuous,
            fit_score: fit,
            baseline_score: baseline,
            r_squared: r_squared(baseline, fit)?,
            f_factor: if m >= 2 { Some(f_factor(baseline, fit, m, n)?) } else { None },
            rcond: Some(rcond),
            iterations: None,
            converged: None,
            order: m,
            n,
        })
    }

    /// Assembles the report for a gradient-trained logistic fit.
    pub fn binary(
        ds: &DataSet,
        model: &FittedModel,
        trace: &crate::logreg::TrainTrace,
    ) -> Result<FitReport> {
        let fit = ll_fit(ds, model)?;
        let baseline = ll_op(ds)?;
        let m = model.spec().order();
        let n = ds.len();
        Ok(FitReport {
            kind: Kind::Binary,
            fit_score: fit,
            baseline_score: baseline,
            r_squared: pseudo_r_squared(fit, baseline)?,
            f_factor: if m >= 2 { Some(f_factor_logistic(fit, baseline, m, n)?) } else { None },
            rcond: None,
            iterations: Some(Iterations {
                epochs: trace.epochs_run,
                updates: trace.updates_run,
            }),
            converged: Some(trace.converged),
            order: m,
            n,
        })
    }
}
