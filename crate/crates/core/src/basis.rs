//! Kernel families for the regression models: polynomial moments and
//! discrete-cosine kernels over a linearly mapped domain, plus design-matrix
//! and normal-equation assembly shared by both regressors.

use crate::dataset::DataSet;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Kernel family, with the cosine family carrying its domain parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// φ_m(x) = x^(m−1)
    Polynomial,
    /// φ_m(x) = cos( π(m−1)(2z − 1) / (2·n_dct) ) with z = dct_map(x)
    Dct { n_dct: usize, x_max: f64 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Polynomial => "poly",
            Family::Dct { .. } => "dct",
        }
    }
}

/// A kernel family plus model order M (the number of basis functions).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisSpec {
    family: Family,
    order: usize,
}

impl BasisSpec {
    pub fn polynomial(order: usize) -> Result<Self> {
        if order < 1 {
            return Err(Error::InvalidOrder { order });
        }
        Ok(BasisSpec { family: Family::Polynomial, order })
    }

    pub fn dct(order: usize, n_dct: usize, x_max: f64) -> Result<Self> {
        if order < 1 {
            return Err(Error::InvalidOrder { order });
        }
        if n_dct < 2 {
            return Err(Error::InvalidDctLength { n_dct });
        }
        if !(x_max.is_finite() && x_max > 0.0) {
            return Err(Error::InvalidDomain { x_max });
        }
        Ok(BasisSpec { family: Family::Dct { n_dct, x_max }, order })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Same family, different order.
    pub fn with_order(&self, order: usize) -> Result<Self> {
        if order < 1 {
            return Err(Error::InvalidOrder { order });
        }
        Ok(BasisSpec { family: self.family, order })
    }

    /// Evaluates all M basis functions at x.
    pub fn features(&self, x: f64) -> FeatureVector {
        let values = match self.family {
            Family::Polynomial => {
                let mut v = Vec::with_capacity(self.order);
                v.push(1.0);
                for _ in 1..self.order {
                    let last = *v.last().unwrap();
                    v.push(last * x);
                }
                v
            }
            Family::Dct { n_dct, x_max } => {
                let z = dct_map(x, n_dct, x_max);
                (0..self.order)
                    .map(|k| {
                        (std::f64::consts::PI * k as f64 * (2.0 * z - 1.0)
                            / (2.0 * n_dct as f64))
                            .cos()
                    })
                    .collect()
            }
        };
        FeatureVector { values }
    }
}

/// The M kernel values φ_1(x)..φ_M(x) at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector {
    values: Vec<f64>,
}

impl FeatureVector {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Inner product with a coefficient vector, accumulated left to right.
    pub fn dot(&self, coefficients: &[f64]) -> f64 {
        debug_assert_eq!(coefficients.len(), self.values.len());
        self.values
            .iter()
            .zip(coefficients)
            .fold(0.0, |acc, (f, c)| acc + f * c)
    }
}

/// Maps x linearly onto the cosine index domain: z = ((n_dct − 1)/x_max)·x,
/// so inputs in [0, x_max] land in [0, n_dct − 1]. Inputs outside that range
/// are allowed (extrapolation applies the same line).
pub fn dct_map(x: f64, n_dct: usize, x_max: f64) -> f64 {
    (n_dct as f64 - 1.0) / x_max * x
}

/// N×M matrix whose row n holds the features of x_n, in dataset order.
pub fn design_matrix(ds: &DataSet, spec: &BasisSpec) -> Vec<FeatureVector> {
    ds.xs().map(|x| spec.features(x)).collect()
}

/// Assembles the normal equations: `gram = ΦᵀΦ` and `moment = Φᵀy`.
///
/// For the polynomial family the gram entry (i, j) is accumulated as the
/// power sum Σ_n x_n^(i+j−2) — bit-for-bit the textbook moment-matrix form —
/// rather than as a dot product of design-matrix columns.
pub fn normal_system(ds: &DataSet, spec: &BasisSpec) -> Result<(Matrix, Vec<f64>)> {
    let n = ds.len();
    let m = spec.order();
    if n < m {
        return Err(Error::Underdetermined { n, m });
    }
    let mut gram = Matrix::zeros(m);
    let mut moment = vec![0.0; m];
    match spec.family() {
        Family::Polynomial => {
            // power sums Σ x^k for k = 0 .. 2M−2, powers by iterated multiplication
            let mut sums = vec![0.0; 2 * m - 1];
            for (x, y) in ds.points().iter().copied() {
                let mut p = 1.0;
                for (k, s) in sums.iter_mut().enumerate() {
                    *s += p;
                    if k < m {
                        moment[k] += p * y;
                    }
                    p *= x;
                }
            }
            for i in 0..m {
                for j in 0..m {
                    gram[(i, j)] = sums[i + j];
                }
            }
        }
        Family::Dct { .. } => {
            for (x, y) in ds.points().iter().copied() {
                let f = spec.features(x);
                let v = f.values();
                for i in 0..m {
                    for j in 0..m {
                        gram[(i, j)] += v[i] * v[j];
                    }
                    moment[i] += v[i] * y;
                }
            }
        }
    }
    Ok((gram, moment))
}
