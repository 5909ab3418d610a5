//! Small dense-matrix helpers: Gaussian elimination with partial pivoting,
//! explicit inversion, and the 1-norm reciprocal condition number.
//!
//! Systems here never exceed a handful of rows (one per model coefficient),
//! so O(n³) with explicit inverses is the right tool.

use crate::error::{Error, Result};

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

/// Pivots smaller than this are treated as exact zeros. Deliberately tiny:
/// badly conditioned systems should still solve (their quality is reported
/// through `rcond`), only genuine rank deficiency should fail.
const PIVOT_EPS: f64 = 1e-300;

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix { n, data: rows.iter().flatten().copied().collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Induced 1-norm: maximum absolute column sum.
    pub fn norm_one(&self) -> f64 {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self[(i, j)].abs()).sum())
            .fold(0.0, f64::max)
    }

    /// Solves `self · x = b` by Gaussian elimination with partial pivoting.
    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        assert_eq!(b.len(), self.n, "right-hand side length mismatch");
        let sols = self.solve_many(&[b.to_vec()])?;
        Ok(sols.into_iter().next().unwrap())
    }

    /// Solves one elimination for several right-hand sides at once.
    fn solve_many(&self, bs: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
        let n = self.n;
        let k = bs.len();
        let mut a = self.data.clone();
        let mut rhs: Vec<Vec<f64>> = bs.to_vec();

        for col in 0..n {
            let pivot_row = (col..n)
                .max_by(|&p, &q| {
                    a[p * n + col]
                        .abs()
                        .total_cmp(&a[q * n + col].abs())
                })
                .unwrap();
            if a[pivot_row * n + col].abs() < PIVOT_EPS {
                return Err(Error::SingularMatrix);
            }
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                }
                for r in rhs.iter_mut() {
                    r.swap(col, pivot_row);
                }
            }
            let pivot = a[col * n + col];
            for row in col + 1..n {
                let factor = a[row * n + col] / pivot;
                if factor == 0.0 {
                    continue;
                }
                a[row * n + col] = 0.0;
                for j in col + 1..n {
                    a[row * n + j] -= factor * a[col * n + j];
                }
                for r in rhs.iter_mut() {
                    r[row] -= factor * r[col];
                }
            }
        }

        let mut out = vec![vec![0.0; n]; k];
        for (r, x) in rhs.iter().zip(out.iter_mut()) {
            for i in (0..n).rev() {
                let mut v = r[i];
                for j in i + 1..n {
                    v -= a[i * n + j] * x[j];
                }
                x[i] = v / a[i * n + i];
            }
        }
        Ok(out)
    }

    /// Explicit inverse via elimination on the identity columns.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.n;
        let cols: Vec<Vec<f64>> = (0..n)
            .map(|j| (0..n).map(|i| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        let solved = self.solve_many(&cols)?;
        let mut inv = Matrix::zeros(n);
        for (j, col) in solved.iter().enumerate() {
            for i in 0..n {
                inv[(i, j)] = col[i];
            }
        }
        Ok(inv)
    }

    /// Reciprocal condition number in the 1-norm, computed from the explicit
    /// inverse: `1 / (‖A‖₁ · ‖A⁻¹‖₁)`. Returns 0 for singular matrices.
    pub fn rcond(&self) -> f64 {
        match self.inverse() {
            Ok(inv) => {
                let denom = self.norm_one() * inv.norm_one();
                if denom.is_finite() && denom > 0.0 {
                    1.0 / denom
                } else {
                    0.0
                }
            }
            Err(_) => 0.0,
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_identity() {
        let m = Matrix::identity(2);
        assert_eq!(m.solve(&[3.0, 7.0]).unwrap(), vec![3.0, 7.0]);
    }

    #[test]
    fn solve_rank_deficient() {
        let m = Matrix::from_rows(&[vec![1.0, 1.0], vec![2.0, 2.0]]);
        assert!(matches!(m.solve(&[1.0, 3.0]), Err(Error::SingularMatrix)));
    }

    #[test]
    fn solve_requires_pivoting() {
        // zero in the leading position only works with row exchange
        let m = Matrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        let x = m.solve(&[2.0, 5.0]).unwrap();
        assert_eq!(x, vec![5.0, 2.0]);
    }

    #[test]
    fn solve_normal_equations_by_hand() {
        // Cramer's rule cross-check on a 2×2 system
        let m = Matrix::from_rows(&[vec![9.0, 33.2], vec![33.2, 146.64]]);
        let x = m.solve(&[32.0, 137.84]).unwrap();
        let det = 9.0 * 146.64 - 33.2 * 33.2;
        let x0 = (32.0 * 146.64 - 33.2 * 137.84) / det;
        let x1 = (9.0 * 137.84 - 33.2 * 32.0) / det;
        assert!((x[0] - x0).abs() < 1e-12);
        assert!((x[1] - x1).abs() < 1e-12);
        assert!((x[0] - 0.534).abs() < 5e-4);
        assert!((x[1] - 0.819).abs() < 5e-4);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(&[vec![4.0, 1.0, 0.0], vec![1.0, 3.0, 1.0], vec![0.0, 1.0, 2.0]]);
        let inv = m.inverse().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let prod: f64 = (0..3).map(|k| m[(i, k)] * inv[(k, j)]).sum();
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((prod - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn rcond_identity_and_scaling() {
        assert_eq!(Matrix::identity(4).rcond(), 1.0);
        let mut m = Matrix::identity(3);
        for i in 0..3 {
            m[(i, i)] = 42.0; // rcond is scale-invariant
        }
        assert!((m.rcond() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rcond_singular_is_zero() {
        let m = Matrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert_eq!(m.rcond(), 0.0);
    }

    #[test]
    fn norm_one_is_max_column_sum() {
        let m = Matrix::from_rows(&[vec![1.0, -7.0], vec![-2.0, 3.0]]);
        assert_eq!(m.norm_one(), 10.0);
    }
}
