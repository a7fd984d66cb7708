//! Laplacian assembly and the two generalized eigenproblems `Lx = λMx`.
//!
//! The mass matrix is diagonal, so both problems are reduced to a standard
//! symmetric eigenproblem on `M^{-1/2} L M^{-1/2}` and handed to
//! [`jacobi_eigen`].

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexSet, WeightedGraph};
use crate::linalg::{cholesky_solve, jacobi_eigen, norm2, DenseSymMatrix};

/// `L = D − A`, the diagonal mass matrix `M` and the degree matrix `D`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaplacianSystem {
    pub laplacian: DenseSymMatrix,
    pub mass: DenseSymMatrix,
    pub degree: DenseSymMatrix,
}

pub fn laplacian(graph: &WeightedGraph) -> LaplacianSystem {
    LaplacianSystem {
        laplacian: laplacian_matrix(graph),
        mass: DenseSymMatrix::diagonal(graph.masses()),
        degree: DenseSymMatrix::diagonal(&graph.degrees()),
    }
}

pub(crate) fn laplacian_matrix(graph: &WeightedGraph) -> DenseSymMatrix {
    let mut l = DenseSymMatrix::zeros(graph.vertex_count());
    for e in graph.edges() {
        l.add(e.u, e.u, e.conductance);
        l.add(e.v, e.v, e.conductance);
        l.add(e.u, e.v, -e.conductance);
    }
    l
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProblemKind {
    Neumann,
    Dirichlet { boundary: VertexSet },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    pub eigenvalue: f64,
    /// One entry per vertex, zero on a Dirichlet boundary, normalized so that
    /// `xᵀMx = 1` and the entry of largest magnitude is positive.
    pub eigenvector: Vec<f64>,
    /// `‖L x − λ M x‖₂` over the active (non-boundary) rows.
    pub residual: f64,
    pub kind: ProblemKind,
}

impl SpectralResult {
    /// `residual / ‖L x‖₂` over the active rows.
    pub fn relative_residual(&self, graph: &WeightedGraph) -> f64 {
        let lx = laplacian_matrix(graph)
            .mul_vec(&self.eigenvector)
            .expect("eigenvector matches the graph");
        let active: Vec<f64> = match &self.kind {
            ProblemKind::Neumann => lx,
            ProblemKind::Dirichlet { boundary } => lx
                .into_iter()
                .enumerate()
                .filter(|(v, _)| !boundary.contains(*v))
                .map(|(_, y)| y)
                .collect(),
        };
        let scale = norm2(&active);
        if scale == 0.0 {
            self.residual
        } else {
            self.residual / scale
        }
    }
}

/// Flips `x` so that its entry of largest magnitude (lowest index on ties)
/// is positive.
fn fix_sign(x: &mut [f64]) {
    let mut best = 0;
    for (i, v) in x.iter().enumerate() {
        if v.abs() > x[best].abs() {
            best = i;
        }
    }
    if x.get(best).is_some_and(|&v| v < 0.0) {
        x.iter_mut().for_each(|v| *v = -*v);
    }
}

/// Smallest eigenpairs of the whitened principal submatrix on `active`,
/// returning the `rank`-th (0-based) eigenvalue and its vector lifted back
/// to all vertices.
fn whitened_eigenpair(
    graph: &WeightedGraph,
    l: &DenseSymMatrix,
    active: &[VertexId],
    rank: usize,
) -> Result<(f64, Vec<f64>, f64)> {
    let scale: Vec<f64> = active.iter().map(|&v| 1.0 / graph.mass(v).sqrt()).collect();
    let whitened = l.principal_submatrix(active).scale_symmetric(&scale)?;
    let eig = jacobi_eigen(&whitened)?;
    let lambda = eig.eigenvalues[rank];
    let mut x = vec![0.0; graph.vertex_count()];
    for (k, &v) in active.iter().enumerate() {
        x[v] = scale[k] * eig.eigenvectors[rank][k];
    }
    fix_sign(&mut x);

    let lx = l.mul_vec(&x)?;
    let residual = active
        .iter()
        .map(|&v| {
            let r = lx[v] - lambda * graph.mass(v) * x[v];
            r * r
        })
        .sum::<f64>()
        .sqrt();
    Ok((lambda, x, residual))
}

/// The Neumann eigenvalue `λ₂`: the second-smallest generalized eigenvalue.
pub fn neumann_eigenvalue(graph: &WeightedGraph) -> Result<SpectralResult> {
    if graph.vertex_count() < 2 {
        return Err(Error::TooFewVertices);
    }
    if let Some(v) = graph.first_massless() {
        return Err(Error::ZeroMass(v));
    }
    let l = laplacian_matrix(graph);
    let all: Vec<VertexId> = (0..graph.vertex_count()).collect();
    let (eigenvalue, eigenvector, residual) = whitened_eigenpair(graph, &l, &all, 1)?;
    Ok(SpectralResult {
        eigenvalue,
        eigenvector,
        residual,
        kind: ProblemKind::Neumann,
    })
}

/// The Dirichlet eigenvalue `λ(G, S)` for boundary set `S`.
///
/// Boundary masses are irrelevant; interior vertices need positive mass.
pub fn dirichlet_eigenvalue(graph: &WeightedGraph, boundary: &VertexSet) -> Result<SpectralResult> {
    let interior = interior_of(graph, boundary)?;
    if let Some(&v) = interior.iter().find(|&&v| graph.mass(v) <= 0.0) {
        return Err(Error::ZeroMass(v));
    }
    let l = laplacian_matrix(graph);
    let (eigenvalue, eigenvector, residual) = whitened_eigenpair(graph, &l, &interior, 0)?;
    Ok(SpectralResult {
        eigenvalue,
        eigenvector,
        residual,
        kind: ProblemKind::Dirichlet {
            boundary: boundary.clone(),
        },
    })
}

/// Vertices outside a proper nonempty boundary set.
pub(crate) fn interior_of(graph: &WeightedGraph, boundary: &VertexSet) -> Result<Vec<VertexId>> {
    graph.check_set(boundary)?;
    if boundary.is_empty() || boundary.len() >= graph.vertex_count() {
        return Err(Error::BadBoundary);
    }
    Ok(boundary.complement(graph.vertex_count()).members().to_vec())
}

/// Minimum energy extension of `fixed` to all vertices.
///
/// Solves `L_FF x_F = −L_FB x_B` on the free vertices `F`; the system is
/// positive definite because the graph is connected and `B` is nonempty.
pub fn harmonic_extension(graph: &WeightedGraph, fixed: &BTreeMap<VertexId, f64>) -> Result<Vec<f64>> {
    if fixed.is_empty() {
        return Err(Error::EmptyFixedSet);
    }
    let n = graph.vertex_count();
    if let Some((&v, _)) = fixed.range(n..).next() {
        return Err(Error::VertexOutOfRange(v, n));
    }
    let mut x = vec![0.0; n];
    for (&v, &value) in fixed {
        x[v] = value;
    }
    let free: Vec<VertexId> = (0..n).filter(|v| !fixed.contains_key(v)).collect();
    if free.is_empty() {
        return Ok(x);
    }

    let mut position = vec![usize::MAX; n];
    for (k, &v) in free.iter().enumerate() {
        position[v] = k;
    }
    let mut system = DenseSymMatrix::zeros(free.len());
    let mut rhs = vec![0.0; free.len()];
    for e in graph.edges() {
        let (pu, pv) = (position[e.u], position[e.v]);
        let k = e.conductance;
        match (pu != usize::MAX, pv != usize::MAX) {
            (true, true) => {
                system.add(pu, pu, k);
                system.add(pv, pv, k);
                system.add(pu, pv, -k);
            }
            (true, false) => {
                system.add(pu, pu, k);
                rhs[pu] += k * x[e.v];
            }
            (false, true) => {
                system.add(pv, pv, k);
                rhs[pv] += k * x[e.u];
            }
            (false, false) => {}
        }
    }
    let solution = cholesky_solve(&system, &rhs)?;
    for (k, &v) in free.iter().enumerate() {
        x[v] = solution[k];
    }
    Ok(x)
}

/// `xᵀLx / xᵀMx`, optionally checking that `x` vanishes on `boundary`.
pub fn rayleigh_quotient(graph: &WeightedGraph, x: &[f64], boundary: Option<&VertexSet>) -> Result<f64> {
    graph.check_len(x)?;
    if let Some(s) = boundary {
        graph.check_set(s)?;
        if let Some(v) = s.iter().find(|&v| x[v] != 0.0) {
            return Err(Error::BoundaryViolated(v));
        }
    }
    let denominator: f64 = x.iter().zip(graph.masses()).map(|(xi, m)| m * xi * xi).sum();
    if denominator == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(graph.energy(x) / denominator)
}
