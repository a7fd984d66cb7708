use crate::error::{Error, Result};
use crate::linalg::DenseSymMatrix;

/// Solves `matrix · x = rhs` for symmetric positive definite `matrix`, using
/// the square-root-free `L D Lᵀ` form of the Cholesky factorization.
///
/// A pivot `d_j` at or below `n · ε · max_i a_ii` is reported as
/// [`Error::NotPositiveDefinite`] with its index.
pub fn cholesky_solve(matrix: &DenseSymMatrix, rhs: &[f64]) -> Result<Vec<f64>> {
    let n = matrix.order();
    if rhs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: rhs.len(),
        });
    }
    let max_diag = (0..n).map(|i| matrix.get(i, i)).fold(0.0, f64::max);
    let threshold = n as f64 * f64::EPSILON * max_diag;

    // Unit lower factor, row-major, and the diagonal `d`.
    let mut l = vec![0.0; n * n];
    let mut d = vec![0.0; n];
    for j in 0..n {
        let mut pivot = matrix.get(j, j);
        for k in 0..j {
            pivot -= l[j * n + k] * l[j * n + k] * d[k];
        }
        if !(pivot > threshold) {
            return Err(Error::NotPositiveDefinite(j));
        }
        d[j] = pivot;
        l[j * n + j] = 1.0;
        for i in j + 1..n {
            let mut s = matrix.get(i, j);
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k] * d[k];
            }
            l[i * n + j] = s / pivot;
        }
    }

    let mut y = rhs.to_vec();
    for i in 0..n {
        for k in 0..i {
            y[i] -= l[i * n + k] * y[k];
        }
    }
    for i in 0..n {
        y[i] /= d[i];
    }
    for i in (0..n).rev() {
        for k in i + 1..n {
            y[i] -= l[k * n + i] * y[k];
        }
    }
    Ok(y)
}
