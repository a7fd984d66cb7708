mod common;

use std::f64::consts::PI;

use common::{graphs, graphs_with_boundary, rel_close};
use hardy_spectral::graph::{path_graph, split_edge};
use hardy_spectral::linalg::quadratic_form;
use hardy_spectral::rng::Rng;
use hardy_spectral::spectral::{dirichlet_eigenvalue, laplacian, neumann_eigenvalue, rayleigh_quotient};
use hardy_spectral::{Edge, VertexSet, WeightedGraph};
use proptest::prelude::*;

fn cycle(n: usize) -> WeightedGraph {
    let edges = (0..n).map(|i| Edge::new(i, (i + 1) % n, 1.0)).collect();
    WeightedGraph::new(vec![1.0; n], edges).unwrap()
}

#[test]
fn unit_path_and_cycle_closed_forms() {
    for n in 2..=12 {
        let path = path_graph(&vec![1.0; n], &vec![1.0; n - 1]).unwrap();
        let expected = 2.0 - 2.0 * (PI / n as f64).cos();
        assert!(rel_close(neumann_eigenvalue(&path).unwrap().eigenvalue, expected, 1e-12), "path {n}");
    }
    for n in 3..=12 {
        let expected = 2.0 - 2.0 * (2.0 * PI / n as f64).cos();
        assert!(rel_close(neumann_eigenvalue(&cycle(n)).unwrap().eigenvalue, expected, 1e-12), "cycle {n}");
    }
}

#[test]
fn unit_path_with_one_fixed_end() {
    // Dirichlet at v0 on the unit path with n free vertices: 2 - 2cos(π / (2n + 1)).
    for n in 1..=10 {
        let path = path_graph(&vec![1.0; n + 1], &vec![1.0; n]).unwrap();
        let lambda = dirichlet_eigenvalue(&path, &VertexSet::singleton(0)).unwrap().eigenvalue;
        let expected = 2.0 - 2.0 * (PI / (2 * n + 1) as f64).cos();
        assert!(rel_close(lambda, expected, 1e-12), "n = {n}");
    }
}

#[test]
fn two_node_closed_form() {
    let g = path_graph(&[1.0, 2.0], &[3.0]).unwrap();
    assert!(rel_close(neumann_eigenvalue(&g).unwrap().eigenvalue, 4.5, 1e-14));
}

fn random_vector(rng: &mut Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gaussian_like()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn neumann_eigenpair_is_consistent(g in graphs(2..=10)) {
        let r = neumann_eigenvalue(&g).unwrap();
        let x = &r.eigenvector;
        let mass_norm: f64 = x.iter().zip(g.masses()).map(|(a, m)| m * a * a).sum();
        let mass_mean: f64 = x.iter().zip(g.masses()).map(|(a, m)| m * a).sum();
        prop_assert!((mass_norm - 1.0).abs() < 1e-10);
        prop_assert!(mass_mean.abs() < 1e-10);
        prop_assert!(rel_close(rayleigh_quotient(&g, x, None).unwrap(), r.eigenvalue, 1e-10));
        prop_assert!(r.relative_residual(&g) < 1e-9);
        let top = x.iter().copied().fold(0.0f64, |m, v| if v.abs() > m.abs() { v } else { m });
        prop_assert!(top > 0.0);
    }

    #[test]
    fn neumann_minimizes_over_mean_zero_vectors(g in graphs(2..=10), seed in any::<u64>()) {
        let lambda = neumann_eigenvalue(&g).unwrap().eigenvalue;
        let mut rng = Rng::new(seed);
        let total = g.total_mass();
        for _ in 0..20 {
            let mut x = random_vector(&mut rng, g.vertex_count());
            let mean: f64 = x.iter().zip(g.masses()).map(|(a, m)| a * m).sum::<f64>() / total;
            x.iter_mut().for_each(|a| *a -= mean);
            prop_assert!(rayleigh_quotient(&g, &x, None).unwrap() >= lambda * (1.0 - 1e-10));
        }
    }

    #[test]
    fn dirichlet_minimizes_over_boundary_vanishing_vectors((g, s) in graphs_with_boundary(2..=9), seed in any::<u64>()) {
        let r = dirichlet_eigenvalue(&g, &s).unwrap();
        prop_assert!(s.iter().all(|v| r.eigenvector[v] == 0.0));
        prop_assert!(rel_close(rayleigh_quotient(&g, &r.eigenvector, Some(&s)).unwrap(), r.eigenvalue, 1e-10));
        let mut rng = Rng::new(seed);
        for _ in 0..20 {
            let mut x = random_vector(&mut rng, g.vertex_count());
            s.iter().for_each(|v| x[v] = 0.0);
            prop_assert!(rayleigh_quotient(&g, &x, Some(&s)).unwrap() >= r.eigenvalue * (1.0 - 1e-10));
        }
    }

    #[test]
    fn growing_the_boundary_raises_the_eigenvalue((g, s) in graphs_with_boundary(3..=9), pick in any::<usize>()) {
        let outside = s.complement(g.vertex_count());
        prop_assume!(outside.len() >= 2);
        let v = outside.members()[pick % outside.len()];
        let bigger = s.union(&VertexSet::singleton(v));
        let before = dirichlet_eigenvalue(&g, &s).unwrap().eigenvalue;
        let after = dirichlet_eigenvalue(&g, &bigger).unwrap().eigenvalue;
        prop_assert!(after >= before * (1.0 - 1e-10));
    }

    #[test]
    fn dirichlet_lies_below_the_neumann_gap_for_single_boundary(g in graphs(2..=9), v in any::<usize>()) {
        // Interlacing: λ(G, {v}) ≤ λ₂ for any single boundary vertex.
        let s = VertexSet::singleton(v % g.vertex_count());
        let d = dirichlet_eigenvalue(&g, &s).unwrap().eigenvalue;
        let n = neumann_eigenvalue(&g).unwrap().eigenvalue;
        prop_assert!(d <= n * (1.0 + 1e-10));
    }

    #[test]
    fn eigenvalues_scale_with_weights(g in graphs(2..=9)) {
        let base = neumann_eigenvalue(&g).unwrap().eigenvalue;
        let stiff = neumann_eigenvalue(&common::scale_conductances(&g, 4.0)).unwrap().eigenvalue;
        let heavy = neumann_eigenvalue(&common::scale_masses(&g, 4.0)).unwrap().eigenvalue;
        prop_assert!(rel_close(stiff, 4.0 * base, 1e-10));
        prop_assert!(rel_close(heavy, base / 4.0, 1e-10));
    }

    #[test]
    fn split_edge_preserves_interpolated_energy(g in graphs(2..=8), k in any::<usize>(), t in 0.05f64..0.95, seed in any::<u64>()) {
        let e = g.edges()[k % g.edge_count()];
        let split = split_edge(&g, (e.u, e.v), &[t, 1.0 - t]).unwrap();
        let mut x = random_vector(&mut Rng::new(seed), g.vertex_count());
        let before = quadratic_form(&laplacian(&g).laplacian, &x).unwrap();
        x.push(x[e.u] + t * (x[e.v] - x[e.u]));
        let after = quadratic_form(&laplacian(&split).laplacian, &x).unwrap();
        prop_assert!(rel_close(before, after, 1e-10) || (before - after).abs() < 1e-12);
    }
}
