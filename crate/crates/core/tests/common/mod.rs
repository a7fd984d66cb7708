#![allow(dead_code)]

use hardy_spectral::graph::{random_graph, random_path};
use hardy_spectral::{VertexSet, WeightedGraph};
use proptest::prelude::*;

pub const WEIGHTS: (f64, f64) = (0.1, 10.0);

pub fn graphs(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = WeightedGraph> {
    (n, 0.0f64..1.0, any::<u64>()).prop_map(|(n, p, seed)| random_graph(n, p, WEIGHTS, WEIGHTS, seed).unwrap())
}

pub fn paths(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = WeightedGraph> {
    (n, any::<u64>()).prop_map(|(n, seed)| random_path(n, WEIGHTS, WEIGHTS, seed).unwrap())
}

/// A graph together with a proper nonempty boundary set.
pub fn graphs_with_boundary(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (WeightedGraph, VertexSet)> {
    graphs(n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), 1u64..(1u64 << n) - 1).prop_map(|(g, mask)| (g, VertexSet::from_mask(mask)))
    })
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

/// Dense Laplacian built entry by entry.
pub fn laplacian(g: &WeightedGraph) -> Vec<Vec<f64>> {
    let n = g.vertex_count();
    let mut l = vec![vec![0.0; n]; n];
    for e in g.edges() {
        l[e.u][e.u] += e.conductance;
        l[e.v][e.v] += e.conductance;
        l[e.u][e.v] -= e.conductance;
        l[e.v][e.u] -= e.conductance;
    }
    l
}

/// Gaussian elimination with partial pivoting.
pub fn gauss_solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        a.swap(col, pivot);
        b.swap(col, pivot);
        let pivot_row = a[col].clone();
        for row in col + 1..n {
            let f = a[row][col] / pivot_row[col];
            for (x, p) in a[row][col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * p;
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    x
}

/// `1 / R(A, B)` from the reduced Laplacian system and the matrix form of
/// the energy.
pub fn oracle_conductance(g: &WeightedGraph, a: &VertexSet, b: &VertexSet) -> f64 {
    let n = g.vertex_count();
    let l = laplacian(g);
    let free: Vec<usize> = (0..n).filter(|&v| !a.contains(v) && !b.contains(v)).collect();
    let mut x: Vec<f64> = (0..n).map(|v| if a.contains(v) { 1.0 } else { 0.0 }).collect();
    if !free.is_empty() {
        let m: Vec<Vec<f64>> = free.iter().map(|&i| free.iter().map(|&j| l[i][j]).collect()).collect();
        let rhs: Vec<f64> = free.iter().map(|&i| -a.iter().map(|j| l[i][j]).sum::<f64>()).collect();
        for (k, value) in gauss_solve(m, rhs).into_iter().enumerate() {
            x[free[k]] = value;
        }
    }
    (0..n).map(|i| x[i] * (0..n).map(|j| l[i][j] * x[j]).sum::<f64>()).sum()
}

/// Every way to assign vertices to `A`, `B` or neither with both nonempty,
/// minimized over `(μ(A)⁻¹ + μ(B)⁻¹) · C(A, B)` for `C` = `oracle_conductance`.
pub fn oracle_neumann_content(g: &WeightedGraph) -> f64 {
    let n = g.vertex_count();
    let mut best = f64::INFINITY;
    for code in 0..3usize.pow(n as u32) {
        let (mut a, mut b, mut c) = (Vec::new(), Vec::new(), code);
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
        let value = (g.mass_of(&a).recip() + g.mass_of(&b).recip()) * oracle_conductance(g, &a, &b);
        best = best.min(value);
    }
    best
}

pub fn scale_conductances(g: &WeightedGraph, c: f64) -> WeightedGraph {
    let edges = g
        .edges()
        .iter()
        .map(|e| hardy_spectral::Edge::new(e.u, e.v, e.conductance * c))
        .collect();
    WeightedGraph::new(g.masses().to_vec(), edges).unwrap()
}

pub fn scale_masses(g: &WeightedGraph, c: f64) -> WeightedGraph {
    WeightedGraph::new(g.masses().iter().map(|m| m * c).collect(), g.edges().to_vec()).unwrap()
}
