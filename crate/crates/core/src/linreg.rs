//! Minimum-energy regression: the unique curve in the kernel span whose
//! weighted residual sums vanish, found by solving the normal equations.

use crate::basis::BasisSpec;
use crate::dataset::DataSet;
use crate::error::{Error, Result};

/// How model output maps onto predictions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Link {
    /// Prediction is the kernel expansion itself.
    Identity,
    /// Prediction is the sigmoid of the kernel expansion (probability).
    Sigmoid,
}

impl Link {
    pub fn name(self) -> &'static str {
        match self {
            Link::Identity => "identity",
            Link::Sigmoid => "sigmoid",
        }
    }
}

/// A basis plus its fitted coefficients. Immutable once constructed.
#[derive(Debug, Clone, PartialEq)]
pub struct FittedModel {
    spec: BasisSpec,
    coefficients: Vec<f64>,
    link: Link,
}

impl FittedModel {
    pub(crate) fn new(spec: BasisSpec, coefficients: Vec<f64>, link: Link) -> Self {
        assert_eq!(coefficients.len(), spec.order(), "coefficient count must equal order");
        FittedModel { spec, coefficients, link }
    }

    /// Assembles a model from externally supplied coefficients, e.g. one
    /// restored from storage or proposed for evaluation.
    pub fn from_parts(spec: BasisSpec, coefficients: Vec<f64>, link: Link) -> Result<Self> {
        if coefficients.len() != spec.order() {
            return Err(Error::InvalidConfig {
                msg: format!(
                    "expected {} coefficients for order {}, got {}",
                    spec.order(),
                    spec.order(),
                    coefficients.len()
                ),
            });
        }
        if let Some((index, &value)) = coefficients.iter().enumerate().find(|(_, c)| !c.is_finite())
        {
            return Err(Error::NonFiniteValue { index, value });
        }
        Ok(FittedModel { spec, coefficients, link })
    }

    pub fn spec(&self) -> &BasisSpec {
        &self.spec
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn link(&self) -> Link {
        self.link
    }

    /// Kernel expansion Σ λ_m φ_m(x), before any link is applied.
    pub fn response(&self, x: f64) -> f64 {
        self.spec.features(x).dot(&self.coefficients)
    }

    /// Predicted value for an identity-link model.
    pub fn predict(&self, x: f64) -> Result<f64> {
        if self.link != Link::Identity {
            return Err(Error::WrongLink { expected: "identity", found: self.link.name() });
        }
        Ok(self.response(x))
    }
}

/// Fits the least-squares model for `spec` on `ds` and reports the
/// reciprocal condition number of the normal matrix alongside it.
///
/// Badly conditioned systems still produce a model — the caller decides what
/// to make of a small rcond — and only genuine rank deficiency errors out.
pub fn fit(ds: &DataSet, spec: &BasisSpec) -> Result<(FittedModel, f64)> {
    let (gram, moment) = crate::basis::normal_system(ds, spec)?;
    let rcond = gram.rcond();
    let coefficients = gram.solve(&moment)?;
    Ok((FittedModel::new(*spec, coefficients, Link::Identity), rcond))
}

/// Convenience view of the normal matrix's reciprocal condition number
/// without performing the fit.
pub fn gram_rcond(ds: &DataSet, spec: &BasisSpec) -> Result<f64> {
    let (gram, _) = crate::basis::normal_system(ds, spec)?;
    Ok(gram.rcond())
}

pub use crate::matrix::Matrix as NormalMatrix;

#[allow(dead_code)]
fn _assert_send_sync(m: FittedModel) -> impl Send + Sync {
    m
}
