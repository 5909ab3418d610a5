//! Maximum-entropy logistic regression: sigmoid link over a kernel
//! expansion, cross-entropy objective, analytic gradient, and the
//! sequential / batch gradient trainer.

use crate::basis::BasisSpec;
use crate::dataset::{DataSet, Kind};
use crate::error::{Error, Result};
use crate::linreg::{FittedModel, Link};

/// Largest double strictly below 1; the open-interval ceiling for
/// probabilities.
const ONE_MINUS: f64 = 1.0 - f64::EPSILON / 2.0;

/// Numerically stable logistic function, clamped to the open interval
/// (0, 1): saturation never returns an exact 0 or 1, so log-odds stay
/// finite and cross-entropy terms stay well-defined.
pub fn sigmoid(t: f64) -> f64 {
    let s = if t >= 0.0 {
        1.0 / (1.0 + (-t).exp())
    } else {
        let e = t.exp();
        e / (1.0 + e)
    };
    s.clamp(f64::MIN_POSITIVE, ONE_MINUS)
}

/// log(1 + e^t) without overflow; the per-sample cross-entropy is
/// softplus(t) − y·t.
fn softplus(t: f64) -> f64 {
    if t > 0.0 {
        t + (-t).exp().ln_1p()
    } else {
        t.exp().ln_1p()
    }
}

/// Probability that y = 1 at x under a sigmoid-link model.
pub fn predict_proba(model: &FittedModel, x: f64) -> Result<f64> {
    if model.link() != Link::Sigmoid {
        return Err(Error::WrongLink { expected: "sigmoid", found: model.link().name() });
    }
    Ok(sigmoid(model.response(x)))
}

/// Thresholded classification: category 1 iff the probability reaches the
/// threshold; confidence is the probability of the chosen category.
pub fn classify(model: &FittedModel, x: f64, threshold: f64) -> Result<(u8, f64)> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(Error::InvalidThreshold { threshold });
    }
    let p = predict_proba(model, x)?;
    Ok(if p >= threshold { (1, p) } else { (0, 1.0 - p) })
}

fn require_binary(ds: &DataSet) -> Result<()> {
    if ds.kind() != Kind::Binary {
        return Err(Error::WrongKind { expected: "binary" });
    }
    Ok(())
}

/// Cross-entropy −Σ_n [ y_n ln p(x_n) + (1−y_n) ln(1−p(x_n)) ]; always ≥ 0.
/// The fit's log-likelihood is the negative of this value.
pub fn cross_entropy(ds: &DataSet, model: &FittedModel) -> Result<f64> {
    require_binary(ds)?;
    if model.link() != Link::Sigmoid {
        return Err(Error::WrongLink { expected: "sigmoid", found: model.link().name() });
    }
    let mut ce = 0.0;
    for &(x, y) in ds.points() {
        let t = model.response(x);
        ce += softplus(t) - y * t;
    }
    Ok(ce)
}

/// Gradient of the cross-entropy: component m is −Σ_n φ_m(x_n)·(y_n − p(x_n)).
pub fn gradient(ds: &DataSet, model: &FittedModel) -> Result<Vec<f64>> {
    require_binary(ds)?;
    if model.link() != Link::Sigmoid {
        return Err(Error::WrongLink { expected: "sigmoid", found: model.link().name() });
    }
    let m = model.spec().order();
    let mut g = vec![0.0; m];
    for &(x, y) in ds.points() {
        let f = model.spec().features(x);
        let d = y - sigmoid(f.dot(model.coefficients()));
        for (gk, fk) in g.iter_mut().zip(f.values()) {
            *gk -= fk * d;
        }
    }
    Ok(g)
}

/// Update scheduling for the gradient trainer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// One coefficient update per sample, cycling in dataset order.
    Sequential,
    /// One full-gradient update per pass over the data.
    Batch,
}

/// Trainer configuration. The effective step size is `alpha / order`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SgdConfig {
    pub alpha: f64,
    pub max_epochs: u64,
    pub tolerance: f64,
    pub mode: Mode,
}

impl SgdConfig {
    pub const DEFAULT_MAX_EPOCHS: u64 = 2_000_000;
    pub const DEFAULT_TOLERANCE: f64 = 1e-6;

    /// Defaults with an explicit step-size numerator.
    pub fn with_alpha(alpha: f64) -> Self {
        SgdConfig {
            alpha,
            max_epochs: Self::DEFAULT_MAX_EPOCHS,
            tolerance: Self::DEFAULT_TOLERANCE,
            mode: Mode::Sequential,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.alpha.is_finite() && self.alpha > 0.0) {
            return Err(Error::InvalidConfig {
                msg: format!("step-size numerator must be positive and finite, got {}", self.alpha),
            });
        }
        if self.max_epochs < 1 {
            return Err(Error::InvalidConfig { msg: "max_epochs must be at least 1".into() });
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(Error::InvalidConfig {
                msg: format!("tolerance must be positive and finite, got {}", self.tolerance),
            });
        }
        Ok(())
    }
}

/// What training did: pass and update counts, final objective, and whether
/// the stopping tolerance (rather than the epoch cap) ended the run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrainTrace {
    pub epochs_run: u64,
    pub updates_run: u64,
    pub final_cross_entropy: f64,
    pub converged: bool,
}

/// Trains a sigmoid-link model by gradient descent on the cross-entropy.
///
/// Coefficients start at zero (every probability 0.5). Sequential mode
/// applies λ_m ← λ_m + μ·φ_m(x_n)·(y_n − p(x_n)) one sample at a time in
/// dataset order with μ = alpha/M; batch mode applies the full-sum update
/// once per epoch. Training stops once the cross-entropy change over one
/// epoch falls below the tolerance in magnitude — progress and
/// limit-cycle oscillation both count as "no longer improving" — or at
/// max_epochs (converged = false then, as with perfectly separable data,
/// where the optimum sits at infinity).
pub fn fit_sgd(
    ds: &DataSet,
    spec: &BasisSpec,
    config: &SgdConfig,
) -> Result<(FittedModel, TrainTrace)> {
    require_binary(ds)?;
    config.validate()?;
    let m = spec.order();
    let mu = config.alpha / m as f64;
    let feats = crate::basis::design_matrix(ds, spec);
    let ys: Vec<f64> = ds.ys().collect();

    let ce_of = |lam: &[f64]| -> f64 {
        feats
            .iter()
            .zip(&ys)
            .map(|(f, &y)| {
                let t = f.dot(lam);
                softplus(t) - y * t
            })
            .sum()
    };

    let mut lam = vec![0.0; m];
    let mut prev = ce_of(&lam);
    let mut epochs = 0u64;
    let mut converged = false;

    while epochs < config.max_epochs {
        match config.mode {
            Mode::Sequential => {
                for (f, &y) in feats.iter().zip(&ys) {
                    let r = mu * (y - sigmoid(f.dot(&lam)));
                    for (l, fk) in lam.iter_mut().zip(f.values()) {
                        *l += r * fk;
                    }
                }
            }
            Mode::Batch => {
                let mut g = vec![0.0; m];
                for (f, &y) in feats.iter().zip(&ys) {
                    let d = y - sigmoid(f.dot(&lam));
                    for (gk, fk) in g.iter_mut().zip(f.values()) {
                        *gk += d * fk;
                    }
                }
                for (l, gk) in lam.iter_mut().zip(&g) {
                    *l += mu * gk;
                }
            }
        }
        epochs += 1;
        if lam.iter().any(|l| !l.is_finite()) {
            return Err(Error::Diverged { epoch: epochs });
        }
        let cur = ce_of(&lam);
        if (prev - cur).abs() < config.tolerance {
            prev = cur;
            converged = true;
            break;
        }
        prev = cur;
    }

    let updates_run = match config.mode {
        Mode::Sequential => epochs * ds.len() as u64,
        Mode::Batch => epochs,
    };
    let trace = TrainTrace {
        epochs_run: epochs,
        updates_run,
        final_cross_entropy: prev,
        converged,
    };
    Ok((FittedModel::new(*spec, lam, Link::Sigmoid), trace))
}
