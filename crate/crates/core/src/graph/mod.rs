//! Vertex- and edge-weighted graphs.
//!
//! A [`WeightedGraph`] is a simple, connected, undirected graph whose
//! vertices carry a nonnegative mass and whose edges carry a positive
//! conductance. Instances are validated on construction and immutable
//! afterwards; the surgeries in [`surgery`] return new graphs.

mod generate;
pub mod surgery;
mod vertex_set;

use std::collections::HashSet;

pub use generate::{path_graph, random_graph, random_path};
pub use surgery::{contract, pinch, split_edge, Contraction, Origin, PinchedGraph};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

pub type VertexId = usize;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub conductance: f64,
}

impl Edge {
    pub fn new(u: VertexId, v: VertexId, conductance: f64) -> Self {
        Self { u, v, conductance }
    }

    /// The endpoint opposite to `w`, if `w` is an endpoint.
    pub fn other(&self, w: VertexId) -> Option<VertexId> {
        if w == self.u {
            Some(self.v)
        } else if w == self.v {
            Some(self.u)
        } else {
            None
        }
    }

    fn key(&self) -> (VertexId, VertexId) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    masses: Vec<f64>,
    edges: Vec<Edge>,
    labels: Option<Vec<String>>,
}

/// Checks that `masses` and `edges` describe a simple connected graph with
/// positive conductances and nonnegative masses.
pub fn validate(masses: &[f64], edges: &[Edge]) -> Result<()> {
    let n = masses.len();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut seen = HashSet::with_capacity(edges.len());
    for e in edges {
        for w in [e.u, e.v] {
            if w >= n {
                return Err(Error::VertexOutOfRange(w, n));
            }
        }
        if e.u == e.v {
            return Err(Error::SelfLoop(e.u));
        }
        // NaN fails this comparison too.
        if !(e.conductance > 0.0) || !e.conductance.is_finite() {
            return Err(Error::NonPositiveConductance(e.u, e.v, e.conductance));
        }
        if !seen.insert(e.key()) {
            return Err(Error::DuplicateEdge(e.u, e.v));
        }
    }
    for (v, &m) in masses.iter().enumerate() {
        if !(m >= 0.0) || !m.is_finite() {
            return Err(Error::NegativeMass(v, m));
        }
    }
    let components = components(n, edges);
    if components.len() > 1 {
        return Err(Error::Disconnected(components));
    }
    Ok(())
}

/// Connected components, each sorted, ordered by smallest member.
fn components(n: usize, edges: &[Edge]) -> Vec<Vec<VertexId>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in edges {
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: Vec<Vec<VertexId>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        let root = find(&mut parent, v);
        if slot[root] == usize::MAX {
            slot[root] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[root]].push(v);
    }
    groups
}

impl WeightedGraph {
    /// Builds and validates a graph.
    pub fn new(masses: Vec<f64>, edges: Vec<Edge>) -> Result<Self> {
        validate(&masses, &edges)?;
        Ok(Self {
            masses,
            edges,
            labels: None,
        })
    }

    /// Attaches vertex names. Labels are cosmetic; ids stay `0..n`.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: self.vertex_count(),
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.masses.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn mass(&self, v: VertexId) -> f64 {
        self.masses[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of `v`, defaulting to `v{id}`.
    pub fn label(&self, v: VertexId) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => format!("v{v}"),
        }
    }

    pub fn total_mass(&self) -> f64 {
        self.masses.iter().sum()
    }

    pub fn mass_of(&self, set: &VertexSet) -> f64 {
        set.iter().map(|v| self.masses[v]).sum()
    }

    pub fn all_masses_positive(&self) -> bool {
        self.masses.iter().all(|&m| m > 0.0)
    }

    /// First vertex with zero mass, if any.
    pub fn first_massless(&self) -> Option<VertexId> {
        self.masses.iter().position(|&m| m <= 0.0)
    }

    /// Weighted degree: the sum of conductances of incident edges.
    pub fn degree(&self, v: VertexId) -> f64 {
        self.edges
            .iter()
            .filter(|e| e.u == v || e.v == v)
            .map(|e| e.conductance)
            .sum()
    }

    pub fn degrees(&self) -> Vec<f64> {
        let mut d = vec![0.0; self.vertex_count()];
        for e in &self.edges {
            d[e.u] += e.conductance;
            d[e.v] += e.conductance;
        }
        d
    }

    /// Index into [`edges`](Self::edges) of the edge joining `u` and `v`.
    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.iter().position(|e| e.key() == key)
    }

    /// Neighbor lists as `(neighbor, conductance)` pairs.
    pub fn adjacency(&self) -> Vec<Vec<(VertexId, f64)>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for e in &self.edges {
            adj[e.u].push((e.v, e.conductance));
            adj[e.v].push((e.u, e.conductance));
        }
        adj
    }

    /// `Σ κ_(u,v) (x_u − x_v)²` over all edges.
    pub fn energy(&self, x: &[f64]) -> f64 {
        self.edges
            .iter()
            .map(|e| {
                let d = x[e.u] - x[e.v];
                e.conductance * d * d
            })
            .sum()
    }

    /// Total conductance of edges with exactly one endpoint in `set`.
    pub fn cut_conductance(&self, set: &VertexSet) -> f64 {
        self.edges
            .iter()
            .filter(|e| set.contains(e.u) != set.contains(e.v))
            .map(|e| e.conductance)
            .sum()
    }

    /// Total conductance of edges joining `a` to `b`.
    pub fn conductance_between(&self, a: &VertexSet, b: &VertexSet) -> f64 {
        self.edges
            .iter()
            .filter(|e| {
                (a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u))
            })
            .map(|e| e.conductance)
            .sum()
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        let n = self.vertex_count();
        if set.bound() > n {
            return Err(Error::VertexOutOfRange(set.bound() - 1, n));
        }
        Ok(())
    }

    pub(crate) fn check_len(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: self.vertex_count(),
                found: x.len(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_connected_graph_is_valid() {
        assert!(WeightedGraph::new(vec![1.0, 1.0], vec![Edge::new(0, 1, 1.0)]).is_ok());
    }

    #[test]
    fn two_isolated_vertices_are_disconnected() {
        let err = WeightedGraph::new(vec![1.0, 1.0], vec![]).unwrap_err();
        assert_eq!(err, Error::Disconnected(vec![vec![0], vec![1]]));
    }

    #[test]
    fn zero_conductance_rejected() {
        let err = WeightedGraph::new(vec![1.0, 1.0], vec![Edge::new(0, 1, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::NonPositiveConductance(0, 1, _)));
        let err = WeightedGraph::new(vec![1.0, 1.0], vec![Edge::new(0, 1, f64::NAN)]).unwrap_err();
        assert!(matches!(err, Error::NonPositiveConductance(0, 1, _)));
    }

    #[test]
    fn other_validation_errors() {
        assert_eq!(
            WeightedGraph::new(vec![1.0], vec![Edge::new(0, 0, 1.0)]).unwrap_err(),
            Error::SelfLoop(0)
        );
        assert_eq!(
            WeightedGraph::new(vec![1.0, -1.0], vec![Edge::new(0, 1, 1.0)]).unwrap_err(),
            Error::NegativeMass(1, -1.0)
        );
        assert_eq!(
            WeightedGraph::new(
                vec![1.0, 1.0],
                vec![Edge::new(0, 1, 1.0), Edge::new(1, 0, 2.0)]
            )
            .unwrap_err(),
            Error::DuplicateEdge(1, 0)
        );
        assert_eq!(WeightedGraph::new(vec![], vec![]).unwrap_err(), Error::EmptyGraph);
        assert_eq!(
            WeightedGraph::new(vec![1.0], vec![Edge::new(0, 3, 1.0)]).unwrap_err(),
            Error::VertexOutOfRange(3, 1)
        );
    }

    #[test]
    fn single_vertex_is_connected() {
        assert!(WeightedGraph::new(vec![2.0], vec![]).is_ok());
    }

    #[test]
    fn degrees_and_cuts() {
        let g = WeightedGraph::new(
            vec![1.0, 1.0, 1.0],
            vec![Edge::new(0, 1, 2.0), Edge::new(1, 2, 3.0)],
        )
        .unwrap();
        assert_eq!(g.degrees(), vec![2.0, 5.0, 3.0]);
        assert_eq!(g.degree(1), 5.0);
        assert_eq!(g.cut_conductance(&VertexSet::singleton(2)), 3.0);
        assert_eq!(g.energy(&[0.0, 1.0, 3.0]), 2.0 + 12.0);
        assert_eq!(g.find_edge(2, 1), Some(1));
        assert_eq!(g.find_edge(0, 2), None);
    }
}
