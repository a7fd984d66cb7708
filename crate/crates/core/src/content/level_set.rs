use crate::error::{Error, Result};
use crate::graph::{path_graph, split_edge, VertexSet, WeightedGraph};
use crate::spectral::interior_of;

/// Relative tolerance used to group values of `x` into levels.
const LEVEL_TOL: f64 = 1e-9;

/// A graph collapsed onto the level sets of a nonnegative potential.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSetQuotient {
    /// Path `l0 - l1 - ... - lN`; vertex `i` carries the mass of level `i`
    /// and edge `(i-1, i)` the total conductance between levels `i-1` and `i`.
    pub path: WeightedGraph,
    /// Distinct values `0 = l0 < l1 < ... < lN`.
    pub levels: Vec<f64>,
    /// The input graph after splitting every edge that spans several levels.
    pub split_graph: WeightedGraph,
    /// Level index of every vertex of `split_graph`.
    pub vertex_level: Vec<usize>,
}

/// Collapses `graph` onto the level sets of `x`, which must vanish on
/// `boundary` and have a single sign (it is flipped if nonpositive).
///
/// Values within `1e-9 · max|x|` of each other share a level; values that
/// close to zero join level 0. Every edge spanning levels `i < j` with
/// `j - i ≥ 2` is split into `j - i` segments whose lengths follow the
/// level gaps, so the inserted zero-mass vertices sit exactly on the
/// intermediate levels. With `x` a Dirichlet ground state, the returned path
/// (boundary at level 0) has the same Dirichlet eigenvalue as `graph`.
pub fn level_set_quotient(graph: &WeightedGraph, boundary: &VertexSet, x: &[f64]) -> Result<LevelSetQuotient> {
    interior_of(graph, boundary)?;
    graph.check_len(x)?;
    let scale = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(Error::ZeroVector);
    }
    let tol = LEVEL_TOL * scale;
    let positive = x.iter().any(|&v| v > tol);
    let negative = x.iter().any(|&v| v < -tol);
    if positive && negative {
        return Err(Error::MixedSigns);
    }
    let sign = if negative { -1.0 } else { 1.0 };
    let x: Vec<f64> = x.iter().map(|&v| sign * v).collect();
    if boundary.iter().any(|v| x[v].abs() > tol) {
        return Err(Error::BoundaryNotZero);
    }

    // Group sorted positive values; a group spans at most `tol` from its
    // first value and is represented by its mean.
    let mut order: Vec<usize> = (0..x.len()).filter(|&v| x[v] > tol).collect();
    order.sort_by(|&a, &b| x[a].total_cmp(&x[b]));
    let mut levels = vec![0.0];
    let mut vertex_level = vec![0usize; x.len()];
    let mut start = 0;
    while start < order.len() {
        let first = x[order[start]];
        let mut end = start;
        while end < order.len() && x[order[end]] - first <= tol {
            end += 1;
        }
        let group = &order[start..end];
        levels.push(group.iter().map(|&v| x[v]).sum::<f64>() / group.len() as f64);
        for &v in group {
            vertex_level[v] = levels.len() - 1;
        }
        start = end;
    }

    let mut split = graph.clone();
    for e in graph.edges() {
        let (lo, hi) = if vertex_level[e.u] <= vertex_level[e.v] {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        };
        let (i, j) = (vertex_level[lo], vertex_level[hi]);
        if j - i < 2 {
            continue;
        }
        let span = levels[j] - levels[i];
        let fractions: Vec<f64> = (i + 1..=j).map(|t| (levels[t] - levels[t - 1]) / span).collect();
        split = split_edge(&split, (lo, hi), &fractions)?;
        vertex_level.extend(i + 1..j);
    }

    let top = levels.len() - 1;
    let mut masses = vec![0.0; top + 1];
    for (v, &level) in vertex_level.iter().enumerate() {
        masses[level] += split.mass(v);
    }
    let mut conductances = vec![0.0; top];
    for e in split.edges() {
        let (a, b) = (vertex_level[e.u], vertex_level[e.v]);
        if a.abs_diff(b) == 1 {
            conductances[a.max(b) - 1] += e.conductance;
        }
    }
    Ok(LevelSetQuotient {
        path: path_graph(&masses, &conductances)?,
        levels,
        split_graph: split,
        vertex_level,
    })
}
