//! Effective resistance between disjoint vertex sets.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexSet, WeightedGraph};
use crate::linalg::jacobi_eigen;
use crate::spectral::{harmonic_extension, laplacian_matrix};

/// `1 / R(A, B)`: the minimum energy of a potential held at 1 on `A` and 0
/// on `B`.
///
/// When `A ∪ B` covers every vertex there is nothing to solve and the
/// result is the total conductance of edges between `A` and `B`.
pub fn effective_conductance(graph: &WeightedGraph, a: &VertexSet, b: &VertexSet) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    graph.check_set(a)?;
    graph.check_set(b)?;
    if !a.is_disjoint(b) {
        return Err(Error::SetsOverlap);
    }
    if a.len() + b.len() == graph.vertex_count() {
        return Ok(graph.conductance_between(a, b));
    }
    let fixed: BTreeMap<VertexId, f64> = a.iter().map(|v| (v, 1.0)).chain(b.iter().map(|v| (v, 0.0))).collect();
    let x = harmonic_extension(graph, &fixed)?;
    Ok(graph.energy(&x))
}

/// `R(A, B)`. Masses play no role.
pub fn effective_resistance(graph: &WeightedGraph, a: &VertexSet, b: &VertexSet) -> Result<f64> {
    effective_conductance(graph, a, b).map(f64::recip)
}

/// `R(a, b) = χᵀ L⁺ χ` with `χ = e_a − e_b`, building the pseudoinverse from
/// a full eigendecomposition of `L`. Slow; meant as an independent check on
/// [`effective_resistance`].
pub fn resistance_via_pseudoinverse(graph: &WeightedGraph, a: VertexId, b: VertexId) -> Result<f64> {
    let n = graph.vertex_count();
    for v in [a, b] {
        if v >= n {
            return Err(Error::VertexOutOfRange(v, n));
        }
    }
    if a == b {
        return Err(Error::SameVertex);
    }
    let eig = jacobi_eigen(&laplacian_matrix(graph))?;
    let largest = eig.eigenvalues.last().copied().unwrap_or(0.0);
    let cutoff = 1e-10 * largest;
    Ok(eig
        .eigenvalues
        .iter()
        .zip(&eig.eigenvectors)
        .filter(|(&lambda, _)| lambda > cutoff)
        .map(|(&lambda, q)| {
            let d = q[a] - q[b];
            d * d / lambda
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path_graph, Edge};

    fn s(ids: &[VertexId], n: usize) -> VertexSet {
        VertexSet::new(ids.iter().copied(), n).unwrap()
    }

    fn triangle() -> WeightedGraph {
        WeightedGraph::new(
            vec![1.0; 3],
            vec![Edge::new(0, 1, 1.0), Edge::new(1, 2, 1.0), Edge::new(0, 2, 1.0)],
        )
        .unwrap()
    }

    #[test]
    fn series_law() {
        let g = path_graph(&[1.0; 3], &[1.0; 2]).unwrap();
        let r = effective_resistance(&g, &s(&[0], 3), &s(&[2], 3)).unwrap();
        assert!((r - 2.0).abs() < 1e-14);
        let r = resistance_via_pseudoinverse(&g, 0, 2).unwrap();
        assert!((r - 2.0).abs() < 1e-12);
    }

    #[test]
    fn triangle_values() {
        // Series/parallel: 1/R = 1 + 1/2.
        let g = triangle();
        let r = effective_resistance(&g, &s(&[0], 3), &s(&[1], 3)).unwrap();
        assert!((r - 1.0 / (1.0 + 0.5)).abs() < 1e-14);
        let p = resistance_via_pseudoinverse(&g, 0, 1).unwrap();
        assert!((p - 2.0 / 3.0).abs() < 1e-12);
        // {a,b} contracted: two unit edges in parallel to c.
        let r = effective_resistance(&g, &s(&[0, 1], 3), &s(&[2], 3)).unwrap();
        assert_eq!(r, 0.5);
    }

    #[test]
    fn single_edge_pseudoinverse() {
        let g = path_graph(&[1.0, 1.0], &[1.0]).unwrap();
        assert!((resistance_via_pseudoinverse(&g, 0, 1).unwrap() - 1.0).abs() < 1e-13);
        assert_eq!(resistance_via_pseudoinverse(&g, 1, 1).unwrap_err(), Error::SameVertex);
    }

    #[test]
    fn masses_do_not_matter() {
        let a = path_graph(&[1.0, 1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]).unwrap();
        let b = path_graph(&[0.0, 9.0, 0.1, 5.0], &[1.0, 2.0, 3.0]).unwrap();
        let ra = effective_resistance(&a, &s(&[0], 4), &s(&[3], 4)).unwrap();
        let rb = effective_resistance(&b, &s(&[0], 4), &s(&[3], 4)).unwrap();
        assert_eq!(ra, rb);
    }

    #[test]
    fn set_errors() {
        let g = triangle();
        assert_eq!(
            effective_resistance(&g, &s(&[0, 1], 3), &s(&[1], 3)).unwrap_err(),
            Error::SetsOverlap
        );
        assert_eq!(
            effective_resistance(&g, &VertexSet::empty(), &s(&[1], 3)).unwrap_err(),
            Error::EmptySet
        );
    }
}
