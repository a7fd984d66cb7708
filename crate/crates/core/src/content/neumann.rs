use crate::content::{keep_min, par_min, seq_min, Candidate, ContentMethod, ContentResult};
use crate::error::{Error, Result};
use crate::graph::{VertexSet, WeightedGraph};
use crate::resistance::effective_conductance;
use crate::spectral::neumann_eigenvalue;

/// Largest vertex count accepted by [`neumann_content_exact`] (3ⁿ pairs).
pub const MAX_NEUMANN: usize = 12;
/// Largest vertex count accepted by [`isoperimetric_exact`].
pub const MAX_ISOPERIMETRIC: usize = 20;

fn require_positive_masses(graph: &WeightedGraph) -> Result<()> {
    match graph.first_massless() {
        Some(v) => Err(Error::ZeroMass(v)),
        None => Ok(()),
    }
}

fn pair_value(graph: &WeightedGraph, a: &VertexSet, b: &VertexSet) -> Result<f64> {
    let mass_term = graph.mass_of(a).recip() + graph.mass_of(b).recip();
    Ok(mass_term * effective_conductance(graph, a, b)?)
}

/// Exact Neumann content over all disjoint nonempty pairs `(A, B)`.
///
/// Each unordered pair is visited once, as the ordering whose `A` has the
/// smaller canonical key.
pub fn neumann_content_exact(graph: &WeightedGraph) -> Result<ContentResult> {
    let n = graph.vertex_count();
    if n > MAX_NEUMANN {
        return Err(Error::TooLarge(n, MAX_NEUMANN));
    }
    if n < 2 {
        return Err(Error::TooFewVertices);
    }
    require_positive_masses(graph)?;
    let full = (1u64 << n) - 1;
    let best = par_min(1..full, |a_mask| {
        let a = VertexSet::from_mask(a_mask);
        let rest = full & !a_mask;
        let mut best: Option<Candidate> = None;
        // Walk the nonempty submasks of the complement.
        let mut b_mask = rest;
        while b_mask != 0 {
            if b_mask > a_mask {
                let b = VertexSet::from_mask(b_mask);
                let value = pair_value(graph, &a, &b)?;
                keep_min(
                    &mut best,
                    Candidate {
                        value,
                        a: a.clone(),
                        b: Some(b),
                    },
                );
            }
            b_mask = (b_mask - 1) & rest;
        }
        Ok(best)
    })?;
    Ok(best
        .expect("a graph with two vertices has a candidate pair")
        .into_result(ContentMethod::ExactEnumeration))
}

/// Upper estimate of the Neumann content from level sets of the Neumann
/// eigenvector `x`.
///
/// For thresholds `t⁻ < 0 ≤ t⁺` taken from the distinct values of `x`, the
/// pair `A = {x ≤ t⁻}`, `B = {x ≥ t⁺}` is scored; the best pair is returned.
/// Never below the exact value, not guaranteed to reach it.
pub fn neumann_content_sweep(graph: &WeightedGraph) -> Result<ContentResult> {
    require_positive_masses(graph)?;
    let x = neumann_eigenvalue(graph)?.eigenvector;
    let mut levels = x.clone();
    levels.sort_by(f64::total_cmp);
    levels.dedup();
    let n = graph.vertex_count();
    let below = |t: f64| VertexSet::new((0..n).filter(|&v| x[v] <= t), n);
    let above = |t: f64| VertexSet::new((0..n).filter(|&v| x[v] >= t), n);

    let mut candidates = Vec::new();
    for &lo in levels.iter().filter(|&&t| t < 0.0) {
        let a = below(lo)?;
        for &hi in levels.iter().filter(|&&t| t >= 0.0) {
            let b = above(hi)?;
            let value = pair_value(graph, &a, &b)?;
            candidates.push(Candidate {
                value,
                a: a.clone(),
                b: Some(b),
            });
        }
    }
    seq_min(candidates)
        .map(|c| c.into_result(ContentMethod::SweepHeuristic))
        .ok_or(Error::SignCondition)
}

/// Exact isoperimetric constant
/// `Φ = min_A cut(A) / min(μ(A), μ(Ā))` over bipartitions, with vertex 0
/// always placed in `A`.
pub fn isoperimetric_exact(graph: &WeightedGraph) -> Result<ContentResult> {
    let n = graph.vertex_count();
    if n > MAX_ISOPERIMETRIC {
        return Err(Error::TooLarge(n, MAX_ISOPERIMETRIC));
    }
    if n < 2 {
        return Err(Error::TooFewVertices);
    }
    require_positive_masses(graph)?;
    let others = (1u64 << (n - 1)) - 1;
    let best = par_min(0..others, |mask| {
        let a = VertexSet::from_mask(mask << 1 | 1);
        let complement = a.complement(n);
        let smaller = graph.mass_of(&a).min(graph.mass_of(&complement));
        let value = graph.cut_conductance(&a) / smaller;
        Ok(Some(Candidate {
            value,
            a,
            b: Some(complement),
        }))
    })?;
    Ok(best
        .expect("at least one bipartition")
        .into_result(ContentMethod::ExactEnumeration))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path_graph, Edge};
    use crate::resistance::effective_resistance;

    fn triangle() -> WeightedGraph {
        WeightedGraph::new(
            vec![1.0; 3],
            vec![Edge::new(0, 1, 1.0), Edge::new(1, 2, 1.0), Edge::new(0, 2, 1.0)],
        )
        .unwrap()
    }

    /// Brute force over ordered assignments of each vertex to A, B or neither.
    fn assignment_oracle(g: &WeightedGraph) -> f64 {
        let n = g.vertex_count();
        let mut best = f64::INFINITY;
        for code in 0..3usize.pow(n as u32) {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            let mut c = code;
            for v in 0..n {
                match c % 3 {
                    1 => a.push(v),
                    2 => b.push(v),
                    _ => {}
                }
                c /= 3;
            }
            if a.is_empty() || b.is_empty() {
                continue;
            }
            let (a, b) = (VertexSet::new(a, n).unwrap(), VertexSet::new(b, n).unwrap());
            let r = effective_resistance(g, &a, &b).unwrap();
            best = best.min((1.0 / g.mass_of(&a) + 1.0 / g.mass_of(&b)) / r);
        }
        best
    }

    #[test]
    fn two_node_formula() {
        let g = WeightedGraph::new(vec![1.0, 2.0], vec![Edge::new(0, 1, 3.0)]).unwrap();
        let r = neumann_content_exact(&g).unwrap();
        assert_eq!(r.value, (1.0 + 0.5) * 3.0);
        assert_eq!(r.witness_a, VertexSet::singleton(0));
        assert_eq!(r.witness_b, Some(VertexSet::singleton(1)));
        let s = neumann_content_sweep(&g).unwrap();
        assert_eq!(s.value, r.value);
        assert_eq!(s.method, ContentMethod::SweepHeuristic);
    }

    #[test]
    fn p3_is_tight() {
        let g = path_graph(&[1.0; 3], &[1.0; 2]).unwrap();
        let r = neumann_content_exact(&g).unwrap();
        assert!((r.value - 1.0).abs() < 1e-14);
        assert_eq!(r.witness_a, VertexSet::singleton(0));
        assert_eq!(r.witness_b, Some(VertexSet::singleton(2)));
        assert!((assignment_oracle(&g) - 1.0).abs() < 1e-14);
        let s = neumann_content_sweep(&g).unwrap();
        assert!((s.value - 1.0).abs() < 1e-14);
    }

    #[test]
    fn triangle_value() {
        // Singleton pairs: 2 / (2/3) = 3; singleton vs pair: 1.5 / (1/2) = 3.
        let g = triangle();
        let r = neumann_content_exact(&g).unwrap();
        let oracle = assignment_oracle(&g);
        assert!((oracle - 3.0).abs() < 1e-13);
        assert!((r.value - oracle).abs() < 1e-13);
    }

    #[test]
    fn isoperimetric_examples() {
        let g = path_graph(&[1.0, 1.0], &[1.0]).unwrap();
        assert_eq!(isoperimetric_exact(&g).unwrap().value, 1.0);
        // P3 cuts: {0} -> 1, {0,1} -> 1, {0,2} -> 2.
        let g = path_graph(&[1.0; 3], &[1.0; 2]).unwrap();
        let r = isoperimetric_exact(&g).unwrap();
        assert_eq!(r.value, 1.0);
        assert_eq!(r.witness_a, VertexSet::singleton(0));
        assert_eq!(r.witness_b, Some(VertexSet::new([1, 2], 3).unwrap()));
    }

    #[test]
    fn guards() {
        let g = path_graph(&[1.0; 13], &[1.0; 12]).unwrap();
        assert_eq!(neumann_content_exact(&g).unwrap_err(), Error::TooLarge(13, MAX_NEUMANN));
        let g = path_graph(&[1.0; 21], &[1.0; 20]).unwrap();
        assert_eq!(isoperimetric_exact(&g).unwrap_err(), Error::TooLarge(21, MAX_ISOPERIMETRIC));
        let g = path_graph(&[1.0, 0.0], &[1.0]).unwrap();
        assert_eq!(neumann_content_exact(&g).unwrap_err(), Error::ZeroMass(1));
        assert_eq!(neumann_content_sweep(&g).unwrap_err(), Error::ZeroMass(1));
        assert_eq!(isoperimetric_exact(&g).unwrap_err(), Error::ZeroMass(1));
    }
}
