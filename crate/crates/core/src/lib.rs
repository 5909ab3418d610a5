//! Polynomial- and cosine-kernel regression with closed-form least squares,
//! gradient-trained logistic models, and a shared quality-report vocabulary.
//!
//! The two model families share one pipeline: a [`basis::BasisSpec`] turns an
//! input into a feature vector, a fit produces a [`linreg::FittedModel`]
//! (coefficients plus an output link), and [`metrics`] scores it. Continuous
//! targets go through the normal equations ([`linreg::fit`]); binary targets
//! through sequential or batch gradient descent ([`logreg::fit_sgd`]).
//!
//! `cli` implements the `lagrange-fit` binary on top of the library and is
//! public so integration tests can drive commands in-process.

pub mod basis;
pub mod cli;
pub mod dataset;
pub mod error;
pub mod linreg;
pub mod logreg;
pub mod matrix;
pub mod metrics;
pub mod plot;

pub use basis::{BasisSpec, Family, FeatureVector};
pub use dataset::{DataSet, Kind};
pub use error::{Error, Result};
pub use linreg::{fit, FittedModel, Link};
pub use logreg::{classify, cross_entropy, fit_sgd, predict_proba, Mode, SgdConfig, TrainTrace};
pub use metrics::FitReport;
