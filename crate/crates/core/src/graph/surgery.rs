//! Graph surgeries: edge splitting, set contraction and pinching at the zero
//! level set of a potential.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, VertexId, VertexSet, WeightedGraph};

const FRACTION_SUM_TOL: f64 = 1e-12;

fn inserted_labels(graph: &WeightedGraph, extra: usize) -> Option<Vec<String>> {
    graph.labels().map(|labels| {
        let n = labels.len();
        let mut out = labels.to_vec();
        out.extend((n..n + extra).map(|id| format!("s{id}")));
        out
    })
}

/// Replaces edge `(u, v)` by a chain of `fractions.len()` segments running
/// from `u` to `v`; segment `i` has conductance `κ / fractions[i]`.
///
/// The `k - 1` inserted vertices have zero mass and get ids `n, n+1, ...` in
/// chain order starting next to `u`. The first segment takes the original
/// edge's slot; the rest are appended.
pub fn split_edge(
    graph: &WeightedGraph,
    (u, v): (VertexId, VertexId),
    fractions: &[f64],
) -> Result<WeightedGraph> {
    let index = graph.find_edge(u, v).ok_or(Error::NoSuchEdge(u, v))?;
    if fractions.is_empty()
        || fractions.iter().any(|&a| !(a > 0.0) || !a.is_finite())
        || (fractions.iter().sum::<f64>() - 1.0).abs() > FRACTION_SUM_TOL
    {
        return Err(Error::FractionsInvalid);
    }
    let kappa = graph.edges()[index].conductance;
    let n = graph.vertex_count();
    let k = fractions.len();

    let mut masses = graph.masses().to_vec();
    masses.resize(n + k - 1, 0.0);
    let chain: Vec<VertexId> = std::iter::once(u)
        .chain(n..n + k - 1)
        .chain(std::iter::once(v))
        .collect();

    let mut edges = graph.edges().to_vec();
    edges[index] = Edge::new(chain[0], chain[1], kappa / fractions[0]);
    for i in 1..k {
        edges.push(Edge::new(chain[i], chain[i + 1], kappa / fractions[i]));
    }
    let out = WeightedGraph::new(masses, edges)?;
    match inserted_labels(graph, k - 1) {
        Some(labels) => out.with_labels(labels),
        None => Ok(out),
    }
}

/// Result of [`contract`].
#[derive(Debug, Clone, PartialEq)]
pub struct Contraction {
    pub graph: WeightedGraph,
    /// Id of the merged vertex in `graph`.
    pub merged: VertexId,
    /// `map[old] = new` for every vertex of the input graph.
    pub map: Vec<VertexId>,
}

/// Merges `set` into a single vertex carrying the set's total mass.
///
/// The merged vertex takes the smallest member's position; the other
/// vertices keep their relative order. Edges inside the set disappear and
/// parallel edges created by the merge are combined by adding conductances.
pub fn contract(graph: &WeightedGraph, set: &VertexSet) -> Result<Contraction> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    graph.check_set(set)?;
    let first = set.members()[0];
    let mut map = vec![0; graph.vertex_count()];
    let mut next = 0;
    let mut masses = Vec::new();
    let mut labels = Vec::new();
    for (v, slot) in map.iter_mut().enumerate() {
        if set.contains(v) && v != first {
            continue;
        }
        *slot = next;
        next += 1;
        if v == first {
            masses.push(graph.mass_of(set));
            labels.push(set.iter().map(|w| graph.label(w)).collect::<Vec<_>>().join("+"));
        } else {
            masses.push(graph.mass(v));
            labels.push(graph.label(v));
        }
    }
    let merged = map[first];
    for v in set.iter() {
        map[v] = merged;
    }

    let mut edges: Vec<Edge> = Vec::new();
    let mut slot: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for e in graph.edges() {
        let (a, b) = (map[e.u], map[e.v]);
        if a == b {
            continue;
        }
        match slot.get(&(a.min(b), a.max(b))) {
            Some(&i) => edges[i].conductance += e.conductance,
            None => {
                slot.insert((a.min(b), a.max(b)), edges.len());
                edges.push(Edge::new(a, b, e.conductance));
            }
        }
    }
    let mut out = WeightedGraph::new(masses, edges)?;
    if graph.labels().is_some() {
        out = out.with_labels(labels)?;
    }
    Ok(Contraction {
        graph: out,
        merged,
        map,
    })
}

/// Where a vertex of a pinched graph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Original(VertexId),
    /// Inserted on the original edge `(negative end, positive end)`.
    Inserted { on_edge: (VertexId, VertexId) },
}

/// A graph pinched at the zero level set of a potential.
#[derive(Debug, Clone, PartialEq)]
pub struct PinchedGraph {
    pub graph: WeightedGraph,
    /// Minimum energy extension of the potential onto the new graph.
    pub f_extended: Vec<f64>,
    /// Vertices where the extended potential is exactly zero.
    pub zero_set: VertexSet,
    /// Vertices where it is `<= 0`.
    pub nonpositive: VertexSet,
    /// Vertices where it is `>= 0`.
    pub nonnegative: VertexSet,
    pub origin: Vec<Origin>,
}

impl PinchedGraph {
    /// Vertices with strictly negative potential.
    pub fn negative(&self) -> VertexSet {
        from_predicate(&self.f_extended, |x| x < 0.0)
    }

    /// Vertices with strictly positive potential.
    pub fn positive(&self) -> VertexSet {
        from_predicate(&self.f_extended, |x| x > 0.0)
    }

    pub fn inserted_count(&self) -> usize {
        self.origin
            .iter()
            .filter(|o| matches!(o, Origin::Inserted { .. }))
            .count()
    }
}

fn from_predicate(f: &[f64], pred: impl Fn(f64) -> bool) -> VertexSet {
    VertexSet::new(
        f.iter().enumerate().filter(|(_, &x)| pred(x)).map(|(i, _)| i),
        f.len(),
    )
    .expect("ids are in range")
}

/// Pinches `graph` at the zero level set of `f`.
///
/// Every edge `(u, v)` with `f_u < 0 < f_v` gets a new zero-mass vertex `s`
/// placed where the linear interpolation of `f` crosses zero: with
/// `α = -f_u / (f_v - f_u)`, `κ(u, s) = κ / α` and `κ(s, v) = κ / (1 - α)`.
/// The sign tests are strict; vertices with `f = 0.0` exactly land in the
/// zero set.
pub fn pinch(graph: &WeightedGraph, f: &[f64]) -> Result<PinchedGraph> {
    graph.check_len(f)?;
    if let Some(v) = graph.first_massless() {
        return Err(Error::ZeroMass(v));
    }
    if !f.iter().any(|&x| x > 0.0) || !f.iter().any(|&x| x < 0.0) || f.iter().any(|x| !x.is_finite()) {
        return Err(Error::SignCondition);
    }
    let n = graph.vertex_count();
    let mut masses = graph.masses().to_vec();
    let mut f_extended = f.to_vec();
    let mut origin: Vec<Origin> = (0..n).map(Origin::Original).collect();
    let mut edges = graph.edges().to_vec();

    for index in 0..graph.edge_count() {
        let e = graph.edges()[index];
        let (neg, pos) = if f[e.u] < 0.0 && f[e.v] > 0.0 {
            (e.u, e.v)
        } else if f[e.v] < 0.0 && f[e.u] > 0.0 {
            (e.v, e.u)
        } else {
            continue;
        };
        // Both fractions computed directly so that neither suffers cancellation.
        let alpha = -f[neg] / (f[pos] - f[neg]);
        let beta = f[pos] / (f[pos] - f[neg]);
        let s = masses.len();
        masses.push(0.0);
        f_extended.push(0.0);
        origin.push(Origin::Inserted {
            on_edge: (neg, pos),
        });
        edges[index] = Edge::new(neg, s, e.conductance / alpha);
        edges.push(Edge::new(s, pos, e.conductance / beta));
    }

    let inserted = masses.len() - n;
    let mut pinched = WeightedGraph::new(masses, edges)?;
    if let Some(labels) = inserted_labels(graph, inserted) {
        pinched = pinched.with_labels(labels)?;
    }
    Ok(PinchedGraph {
        zero_set: from_predicate(&f_extended, |x| x == 0.0),
        nonpositive: from_predicate(&f_extended, |x| x <= 0.0),
        nonnegative: from_predicate(&f_extended, |x| x >= 0.0),
        graph: pinched,
        f_extended,
        origin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path_graph;

    fn unit_triangle() -> WeightedGraph {
        WeightedGraph::new(
            vec![1.0; 3],
            vec![Edge::new(0, 1, 1.0), Edge::new(1, 2, 1.0), Edge::new(0, 2, 1.0)],
        )
        .unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * b.abs().max(1.0)
    }

    #[test]
    fn split_in_halves() {
        let g = path_graph(&[1.0, 1.0], &[1.0]).unwrap();
        let s = split_edge(&g, (0, 1), &[0.5, 0.5]).unwrap();
        assert_eq!(s.vertex_count(), 3);
        assert_eq!(s.mass(2), 0.0);
        assert_eq!(s.edges(), &[Edge::new(0, 2, 2.0), Edge::new(2, 1, 2.0)]);
    }

    #[test]
    fn split_quarter() {
        let g = path_graph(&[1.0, 1.0], &[1.0]).unwrap();
        let s = split_edge(&g, (0, 1), &[0.25, 0.75]).unwrap();
        assert!(close(s.edges()[0].conductance, 4.0));
        assert!(close(s.edges()[1].conductance, 4.0 / 3.0));
    }

    #[test]
    fn split_identity() {
        let g = unit_triangle();
        assert_eq!(split_edge(&g, (1, 2), &[1.0]).unwrap(), g);
    }

    #[test]
    fn split_errors() {
        let g = path_graph(&[1.0, 1.0, 1.0], &[1.0, 1.0]).unwrap();
        assert_eq!(split_edge(&g, (0, 2), &[1.0]).unwrap_err(), Error::NoSuchEdge(0, 2));
        assert_eq!(split_edge(&g, (0, 1), &[0.5, 0.6]).unwrap_err(), Error::FractionsInvalid);
        assert_eq!(split_edge(&g, (0, 1), &[1.5, -0.5]).unwrap_err(), Error::FractionsInvalid);
        assert_eq!(split_edge(&g, (0, 1), &[]).unwrap_err(), Error::FractionsInvalid);
    }

    #[test]
    fn contract_singleton_is_identity() {
        let g = unit_triangle();
        let c = contract(&g, &VertexSet::singleton(1)).unwrap();
        assert_eq!(c.graph, g);
        assert_eq!(c.merged, 1);
        assert_eq!(c.map, vec![0, 1, 2]);
    }

    #[test]
    fn contract_triangle_pair() {
        // Oracle: the edges crossing {0,1} -> {2} are (1,2) and (0,2).
        let g = unit_triangle();
        let set = VertexSet::new([0, 1], 3).unwrap();
        let crossing: f64 = g
            .edges()
            .iter()
            .filter(|e| set.contains(e.u) != set.contains(e.v))
            .map(|e| e.conductance)
            .sum();
        let c = contract(&g, &set).unwrap();
        assert_eq!(c.graph.vertex_count(), 2);
        assert_eq!(c.graph.edges(), &[Edge::new(0, 1, crossing)]);
        assert_eq!(crossing, 2.0);
        assert_eq!(c.graph.masses(), &[2.0, 1.0]);
    }

    #[test]
    fn contract_path_ends() {
        let g = path_graph(&[1.0, 1.0, 1.0], &[1.0, 1.0]).unwrap();
        let c = contract(&g, &VertexSet::new([0, 2], 3).unwrap()).unwrap();
        assert_eq!(c.graph.edges(), &[Edge::new(0, 1, 2.0)]);
        assert_eq!(c.map, vec![0, 1, 0]);
        assert_eq!(c.graph.total_mass(), g.total_mass());
        assert_eq!(contract(&g, &VertexSet::empty()).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn pinch_asymmetric_crossing() {
        let g = path_graph(&[1.0, 1.0], &[1.0]).unwrap();
        let p = pinch(&g, &[-1.0, 3.0]).unwrap();
        assert_eq!(p.graph.vertex_count(), 3);
        assert!(close(p.graph.edges()[0].conductance, 4.0));
        assert!(close(p.graph.edges()[1].conductance, 4.0 / 3.0));
        assert_eq!(p.f_extended[2], 0.0);
        assert_eq!(p.zero_set.members(), &[2]);
        assert_eq!(p.nonpositive.members(), &[0, 2]);
        assert_eq!(p.nonnegative.members(), &[1, 2]);
        assert_eq!(p.origin[2], Origin::Inserted { on_edge: (0, 1) });
    }

    #[test]
    fn pinch_symmetric_crossing() {
        let g = path_graph(&[1.0, 1.0], &[1.0]).unwrap();
        let p = pinch(&g, &[1.0, -1.0]).unwrap();
        assert_eq!(p.graph.edges(), &[Edge::new(1, 2, 2.0), Edge::new(2, 0, 2.0)]);
    }

    #[test]
    fn pinch_without_crossing() {
        let g = path_graph(&[1.0, 1.0, 1.0], &[1.0, 1.0]).unwrap();
        let p = pinch(&g, &[1.0, 0.0, -1.0]).unwrap();
        assert_eq!(p.inserted_count(), 0);
        assert_eq!(p.zero_set.members(), &[1]);
        assert_eq!(p.graph, g);
    }

    #[test]
    fn pinch_needs_both_signs() {
        let g = path_graph(&[1.0, 1.0], &[1.0]).unwrap();
        assert_eq!(pinch(&g, &[1.0, 0.0]).unwrap_err(), Error::SignCondition);
        let massless = path_graph(&[0.0, 1.0], &[1.0]).unwrap();
        assert_eq!(pinch(&massless, &[1.0, -1.0]).unwrap_err(), Error::ZeroMass(0));
    }
}
