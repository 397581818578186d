//! Floating-point cross-check: a cyclic Jacobi eigensolver for dense
//! symmetric matrices and helpers to compare its output with exact spectra.

use crate::error::{Error, Result};
use crate::graph::SquareMatrix;
use crate::spectra::Spectrum;

/// Relative off-diagonal threshold used when callers have no preference.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
/// Maximum number of full row sweeps before giving up.
pub const MAX_SWEEPS: usize = 100;
/// Default distance to the nearest integer accepted by [`numeric_is_integral`].
pub const INTEGRAL_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct NumericSpectrum {
    /// Eigenvalues, descending.
    pub values: Vec<f64>,
    pub order: usize,
    /// `max_i |A v_i - λ_i v_i|` over the computed eigenpairs, when
    /// eigenvectors were accumulated.
    pub residual: Option<f64>,
    pub sweeps: usize,
    /// Frobenius norm of the input.
    pub frobenius: f64,
    /// Largest relative change of the Frobenius norm observed after a sweep.
    pub frobenius_drift: f64,
}

impl NumericSpectrum {
    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

fn frobenius(a: &[f64]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues of a symmetric integer matrix, with eigenvectors
/// accumulated so the residual is reported.
pub fn eigenvalues_symmetric(mat: &SquareMatrix, tol: f64) -> Result<NumericSpectrum> {
    if !mat.is_symmetric() {
        return Err(Error::InvalidMatrix("matrix is not symmetric".into()));
    }
    jacobi(&mat.to_f64(), mat.order(), tol)
}

/// Like [`eigenvalues_symmetric`] but skips the eigenvectors; `residual` is `None`.
pub fn eigenvalues_only(mat: &SquareMatrix, tol: f64) -> Result<NumericSpectrum> {
    if !mat.is_symmetric() {
        return Err(Error::InvalidMatrix("matrix is not symmetric".into()));
    }
    run_jacobi(&mat.to_f64(), mat.order(), tol, false)
}

/// Cyclic Jacobi on a row-major symmetric `n × n` matrix.
///
/// Sweeps rotate every `(p, q)` with `p < q` in row order until the
/// off-diagonal Frobenius norm falls to `tol` times the input norm.
pub fn jacobi(input: &[f64], n: usize, tol: f64) -> Result<NumericSpectrum> {
    run_jacobi(input, n, tol, true)
}

fn run_jacobi(input: &[f64], n: usize, tol: f64, vectors: bool) -> Result<NumericSpectrum> {
    if n == 0 || input.len() != n * n {
        return Err(Error::InvalidMatrix(format!(
            "expected {n}×{n} entries, got {}",
            input.len()
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if input.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidMatrix("matrix has non-finite entries".into()));
    }
    let mut a = input.to_vec();
    let mut v = if vectors {
        vec![0.0; n * n]
    } else {
        Vec::new()
    };
    if vectors {
        for i in 0..n {
            v[i * n + i] = 1.0;
        }
    }
    let norm0 = frobenius(&a);
    let threshold = tol * norm0;
    let mut drift: f64 = 0.0;
    let mut sweeps = 0;

    let mut off = off_diagonal_norm(&a, n);
    while off > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::ConvergenceFailure {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // tan of the rotation angle, smaller root for stability
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // rows p and q mirror columns p and q, so one pass updates both
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[p * n + k];
                    let akq = a[q * n + k];
                    let new_p = c * akp - s * akq;
                    let new_q = s * akp + c * akq;
                    a[p * n + k] = new_p;
                    a[k * n + p] = new_p;
                    a[q * n + k] = new_q;
                    a[k * n + q] = new_q;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                if vectors {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        if norm0 > 0.0 {
            drift = drift.max((frobenius(&a) - norm0).abs() / norm0);
        }
        off = off_diagonal_norm(&a, n);
    }

    let lambdas: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let residual = vectors.then(|| {
        let mut r: f64 = 0.0;
        for (col, &lambda) in lambdas.iter().enumerate() {
            for i in 0..n {
                let av: f64 = (0..n).map(|k| input[i * n + k] * v[k * n + col]).sum();
                r = r.max((av - lambda * v[i * n + col]).abs());
            }
        }
        r
    });
    let mut values = lambdas;
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(NumericSpectrum {
        values,
        order: n,
        residual,
        sweeps,
        frobenius: norm0,
        frobenius_drift: drift,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumComparison {
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Pairs sorted exact values with sorted oracle values.
pub fn compare_spectra(
    exact: &Spectrum,
    numeric: &NumericSpectrum,
    tol: f64,
) -> Result<SpectrumComparison> {
    if exact.order() != numeric.order as u64 {
        return Err(Error::InvalidComparison {
            exact: exact.order(),
            numeric: numeric.order,
        });
    }
    let max_deviation = exact
        .numeric_values()
        .iter()
        .zip(&numeric.values)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    Ok(SpectrumComparison {
        max_deviation,
        tolerance: tol,
        passed: max_deviation <= tol,
    })
}

/// Every oracle eigenvalue lies within `tol` of an integer.
pub fn numeric_is_integral(mat: &SquareMatrix, tol: f64) -> Result<bool> {
    let spec = eigenvalues_only(mat, DEFAULT_TOLERANCE)?;
    Ok(spec.values.iter().all(|x| (x - x.round()).abs() <= tol))
}
