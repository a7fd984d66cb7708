//! Small dense symmetric linear algebra: storage, Cholesky solves and a
//! cyclic Jacobi eigensolver.

mod cholesky;
mod jacobi;

pub use cholesky::cholesky_solve;
pub use jacobi::{jacobi_eigen, EigenDecomposition};

use crate::error::{Error, Result};

/// Dense symmetric matrix stored in full row-major form.
///
/// Every mutation writes both `(i, j)` and `(j, i)`, so the stored entries
/// are exactly symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl DenseSymMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            data: vec![0.0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::diagonal(&vec![1.0; order])
    }

    pub fn diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Builds from rows, rejecting ragged or non-symmetric input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        let mut m = Self::zeros(order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::DimensionMismatch {
                    expected: order,
                    found: row.len(),
                });
            }
            for (j, &x) in row.iter().enumerate() {
                if rows[j][i] != x {
                    return Err(Error::NotSymmetric(i, j));
                }
                m.data[i * order + j] = x;
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    /// Sets `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: f64) {
        self.data[i * self.order + j] = x;
        self.data[j * self.order + i] = x;
    }

    /// Adds `x` to `(i, j)` and, off the diagonal, to `(j, i)`.
    #[inline]
    pub fn add(&mut self, i: usize, j: usize, x: f64) {
        self.data[i * self.order + j] += x;
        if i != j {
            self.data[j * self.order + i] += x;
        }
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_dim(x)?;
        Ok((0..self.order)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// The principal submatrix on `indices` (in the given order).
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        let k = indices.len();
        let mut m = Self::zeros(k);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                m.data[a * k + b] = self.get(i, j);
            }
        }
        m
    }

    /// `D A D` for the diagonal matrix `D = diag(scale)`.
    pub fn scale_symmetric(&self, scale: &[f64]) -> Result<Self> {
        self.check_dim(scale)?;
        let mut m = self.clone();
        for i in 0..self.order {
            for j in 0..self.order {
                m.data[i * self.order + j] *= scale[i] * scale[j];
            }
        }
        Ok(m)
    }

    fn check_dim(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                found: x.len(),
            });
        }
        Ok(())
    }
}

/// `xᵀ A x`.
pub fn quadratic_form(matrix: &DenseSymMatrix, x: &[f64]) -> Result<f64> {
    let ax = matrix.mul_vec(x)?;
    Ok(ax.iter().zip(x).map(|(a, b)| a * b).sum())
}

pub(crate) fn norm2(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}
