use crate::content::{par_min, Candidate, ContentMethod, ContentResult};
use crate::error::{Error, Result};
use crate::graph::{VertexSet, WeightedGraph};
use crate::resistance::effective_conductance;
use crate::spectral::interior_of;

/// Largest interior size accepted by [`dirichlet_content_exact`].
pub const MAX_DIRICHLET_FREE: usize = 20;

/// Dirichlet content of a path `v0 - ... - vN` with boundary `{v0}`.
///
/// Only tail sets `A_k = {v_k, ..., v_N}` need to be examined: the Hardy
/// quantity is `H = max_k (Σ_{i≤k} 1/κ_i) · μ(A_k)`, computed in one pass
/// from prefix resistances and suffix masses. On ties the larger `k` (the
/// tail set with the smaller canonical key) wins.
pub fn hardy_path(path: &WeightedGraph) -> Result<ContentResult> {
    let n = path.vertex_count();
    if n < 2 || path.edge_count() != n - 1 {
        return Err(Error::NotAPath);
    }
    let mut conductances = Vec::with_capacity(n - 1);
    for i in 1..n {
        let e = path.find_edge(i - 1, i).ok_or(Error::NotAPath)?;
        conductances.push(path.edges()[e].conductance);
    }

    let mut tail_mass = vec![0.0; n + 1];
    for i in (1..n).rev() {
        tail_mass[i] = tail_mass[i + 1] + path.mass(i);
    }
    let mut resistance = 0.0;
    let mut best: Option<(f64, usize)> = None;
    for k in 1..n {
        resistance += 1.0 / conductances[k - 1];
        let h = resistance * tail_mass[k];
        if h > 0.0 && best.is_none_or(|(b, _)| h >= b) {
            best = Some((h, k));
        }
    }
    let (h, k) = best.ok_or(Error::ZeroInteriorMass)?;
    Ok(ContentResult {
        value: h.recip(),
        witness_a: VertexSet::new(k..n, n)?,
        witness_b: None,
        method: ContentMethod::PathTailSet,
    })
}

/// Exact Dirichlet content by enumerating every nonempty `A ⊆ V ∖ S`.
///
/// Subsets of zero mass have an infinite ratio and are skipped.
pub fn dirichlet_content_exact(graph: &WeightedGraph, boundary: &VertexSet) -> Result<ContentResult> {
    let interior = interior_of(graph, boundary)?;
    if interior.len() > MAX_DIRICHLET_FREE {
        return Err(Error::TooLarge(interior.len(), MAX_DIRICHLET_FREE));
    }
    let n = graph.vertex_count();
    let best = par_min(1..1u64 << interior.len(), |mask| {
        let a = VertexSet::new(
            interior
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, &v)| v),
            n,
        )?;
        let mass = graph.mass_of(&a);
        if mass <= 0.0 {
            return Ok(None);
        }
        let value = effective_conductance(graph, boundary, &a)? / mass;
        Ok(Some(Candidate { value, a, b: None }))
    })?;
    best.map(|c| c.into_result(ContentMethod::ExactEnumeration))
        .ok_or(Error::ZeroInteriorMass)
}
