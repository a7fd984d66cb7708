use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Edge, WeightedGraph};
use crate::rng::Rng;

/// The path `v0 - v1 - ... - vN` where edge `(v(i-1), vi)` has conductance
/// `conductances[i-1]` and `vi` has mass `masses[i]`.
pub fn path_graph(masses: &[f64], conductances: &[f64]) -> Result<WeightedGraph> {
    if masses.len() != conductances.len() + 1 {
        return Err(Error::LengthMismatch {
            masses: masses.len(),
            conductances: conductances.len(),
        });
    }
    let edges = conductances
        .iter()
        .enumerate()
        .map(|(i, &k)| Edge::new(i, i + 1, k))
        .collect();
    WeightedGraph::new(masses.to_vec(), edges)
}

fn check_range((lo, hi): (f64, f64)) -> Result<()> {
    if lo > 0.0 && lo <= hi && hi.is_finite() {
        Ok(())
    } else {
        Err(Error::BadRange(lo, hi))
    }
}

/// Random connected graph on `n` vertices.
///
/// Draw order, all from one [`Rng`] seeded with `seed`:
/// 1. a Prüfer sequence of `n - 2` values via `below(n)`, decoded into a
///    uniformly random labelled spanning tree (edges in decoding order);
/// 2. for every pair `(i, j)`, `i < j`, in lexicographic order that is not a
///    tree edge, one `bernoulli(edge_probability)` draw; hits are appended;
/// 3. `n` masses via `uniform_in(mass_range)`;
/// 4. one conductance per edge, in edge order, via `uniform_in(conductance_range)`.
pub fn random_graph(
    n: usize,
    edge_probability: f64,
    mass_range: (f64, f64),
    conductance_range: (f64, f64),
    seed: u64,
) -> Result<WeightedGraph> {
    if n < 2 {
        return Err(Error::TooFewVertices);
    }
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(Error::BadRange(edge_probability, edge_probability));
    }
    check_range(mass_range)?;
    check_range(conductance_range)?;

    let mut rng = Rng::new(seed);
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
    let mut pairs = decode_prufer(&prufer, n);

    let tree: HashSet<(usize, usize)> = pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    for i in 0..n {
        for j in i + 1..n {
            if !tree.contains(&(i, j)) && rng.bernoulli(edge_probability) {
                pairs.push((i, j));
            }
        }
    }

    let masses: Vec<f64> = (0..n).map(|_| rng.uniform_in(mass_range.0, mass_range.1)).collect();
    let edges = pairs
        .into_iter()
        .map(|(u, v)| Edge::new(u, v, rng.uniform_in(conductance_range.0, conductance_range.1)))
        .collect();
    WeightedGraph::new(masses, edges)
}

/// Random path on `n` vertices: `n` masses, then `n - 1` conductances, all
/// via `uniform_in` from one [`Rng`] seeded with `seed`.
pub fn random_path(n: usize, mass_range: (f64, f64), conductance_range: (f64, f64), seed: u64) -> Result<WeightedGraph> {
    if n < 2 {
        return Err(Error::TooFewVertices);
    }
    check_range(mass_range)?;
    check_range(conductance_range)?;
    let mut rng = Rng::new(seed);
    let masses: Vec<f64> = (0..n).map(|_| rng.uniform_in(mass_range.0, mass_range.1)).collect();
    let conductances: Vec<f64> = (1..n)
        .map(|_| rng.uniform_in(conductance_range.0, conductance_range.1))
        .collect();
    path_graph(&masses, &conductances)
}

/// Standard Prüfer decoding; edges come out as `(leaf, parent)` with the
/// final edge joining the two remaining vertices (smaller id first).
fn decode_prufer(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}
