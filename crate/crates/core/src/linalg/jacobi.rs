use crate::error::{Error, Result};
use crate::linalg::DenseSymMatrix;

const MAX_SWEEPS: usize = 100;

/// Full symmetric eigendecomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[k]` is the unit eigenvector for `eigenvalues[k]`.
    pub eigenvectors: Vec<Vec<f64>>,
    /// Frobenius norm of the off-diagonal part at termination.
    pub offdiag_residual: f64,
}

/// Cyclic-by-row Jacobi eigensolver.
///
/// Sweeps over all pairs `p < q` in row order until the off-diagonal
/// Frobenius norm drops to `n·ε·‖A‖_F` or stops decreasing (roundoff floor),
/// giving up after 100 sweeps.
/// Eigenvalues come back ascending; equal eigenvalues keep the order of the
/// final rotated diagonal (stable sort).
pub fn jacobi_eigen(matrix: &DenseSymMatrix) -> Result<EigenDecomposition> {
    let n = matrix.order();
    let mut a: Vec<f64> = (0..n).flat_map(|i| matrix.row(i).to_vec()).collect();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let tol = n as f64 * f64::EPSILON * matrix.frobenius_norm();

    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    let mut residual = off(&a);
    while residual > tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(sweeps));
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.is_infinite() {
                    0.0
                } else {
                    theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // A <- Jᵀ A J, columns then rows.
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        sweeps += 1;
        let previous = residual;
        residual = off(&a);
        if residual >= previous {
            break;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    Ok(EigenDecomposition {
        eigenvalues: order.iter().map(|&i| a[i * n + i]).collect(),
        eigenvectors: order
            .iter()
            .map(|&col| (0..n).map(|k| v[k * n + col]).collect())
            .collect(),
        offdiag_residual: residual,
    })
}
