mod common;

use common::{bipartite_graph, edge_sums};
use edgering::classifier::connected_bipartite_graphs;
use edgering::graph::even_girth;
use edgering::resolution::reduced_homology_dims;
use edgering::{
    betti_table, divisor_complex, hstar_profile, ideal_generators, regularity_and_linearity, semigroup_member,
    EdgePolytope, Limits, SimpleGraph,
};
use proptest::prelude::*;

fn rho_sum(g: &SimpleGraph, labels: &[usize]) -> Vec<i64> {
    let mut b = vec![0; g.n_vertices()];
    for &e in labels {
        let (u, v) = g.edge(e);
        b[u - 1] += 1;
        b[v - 1] += 1;
    }
    b
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `Σ_i (-1)^i β_{i,j}` must be the degree-`j` coefficient of
/// `(1 - λ)^|E| Σ_t |edge sums of t edges| λ^t`.
fn check_hilbert_series(g: &SimpleGraph, j_max: usize) -> Result<(), TestCaseError> {
    let t = betti_table(g, j_max, &Limits::default()).unwrap();
    let counts: Vec<i64> = (0..=j_max).map(|s| edge_sums(g, s).len() as i64).collect();
    let e = g.n_edges() as i64;
    for j in 0..=j_max {
        let want: i64 = (0..=j).map(|s| counts[j - s] * binom(e, s as i64) * if s % 2 == 0 { 1 } else { -1 }).sum();
        let got: i64 = (0..=g.n_edges()).map(|i| t.get(i, j) as i64 * if i % 2 == 0 { 1 } else { -1 }).sum();
        prop_assert_eq!(got, want, "j = {}", j);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn binomials_are_homogeneous(g in bipartite_graph(4)) {
        for f in ideal_generators(&g, &Limits::default()).unwrap() {
            prop_assert_eq!(rho_sum(&g, &f.plus), rho_sum(&g, &f.minus));
            prop_assert_eq!(f.plus.len(), f.degree);
        }
    }

    #[test]
    fn betti_numbers_match_hilbert_series(g in bipartite_graph(3)) {
        check_hilbert_series(&g, g.n_edges().min(7))?;
    }

    #[test]
    fn semigroup_matches_multisets(g in bipartite_graph(4), t in 0usize..=3, seed in any::<u64>()) {
        prop_assume!(g.n_edges() <= 8);
        let n = g.n_vertices();
        let reachable = edge_sums(&g, t);
        // a random vector with coordinate sum 2t
        let mut b = vec![0i64; n];
        let mut s = seed;
        for _ in 0..2 * t {
            b[(s % n as u64) as usize] += 1;
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407) >> 7;
        }
        let got = semigroup_member(&g, &b).unwrap();
        prop_assert_eq!(got.is_some(), reachable.contains(&b));
        if let Some(labels) = got {
            prop_assert_eq!(rho_sum(&g, &labels), b.clone());
            prop_assert_eq!(labels.len(), t);
        }
        // every reachable vector decomposes
        for r in &reachable {
            prop_assert!(semigroup_member(&g, r).unwrap().is_some());
        }
    }

    #[test]
    fn divisor_complex_euler_characteristic(g in bipartite_graph(3), t in 1usize..=4, pick in any::<prop::sample::Index>()) {
        let pts: Vec<Vec<i64>> = edge_sums(&g, t).into_iter().collect();
        let b = &pts[pick.index(pts.len())];
        let k = divisor_complex(&g, b, &Limits::default()).unwrap();
        let f = k.face_counts();
        // reduced: the empty face is counted at index 0, dimension -1
        let chi: i64 = f.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { -(c as i64) } else { c as i64 }).sum();
        let h = reduced_homology_dims(&k, g.n_edges());
        let alt: i64 = h.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { -(c as i64) } else { c as i64 }).sum();
        prop_assert_eq!(chi, alt);
    }
}

#[test]
fn corpus_resolution_facts() {
    let l = Limits::default();
    let mut checked = 0;
    for n in 2..=6 {
        for g in connected_bipartite_graphs(n).unwrap() {
            let t = betti_table(&g, g.n_edges(), &l).unwrap();
            assert!(t.is_complete());
            let s = g.structure();
            let deg = hstar_profile(&EdgePolytope::new(&g).unwrap(), &l).unwrap().degree;
            let (reg, _) = regularity_and_linearity(&t, 0);
            // the edge ring is Cohen-Macaulay, so regularity is exactly deg h*
            assert_eq!(reg, deg, "{g:?}");
            assert_eq!(t.minimal_generators() == 1, s.cycle_rank == 1, "{g:?}");
            match even_girth(&g) {
                Some(len) => assert_eq!(t.min_generator_degree(), Some(len / 2), "{g:?}"),
                None => assert_eq!(t.entries().count(), 0, "{g:?}"),
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 1 + 3 + 5 + 17);
}

#[test]
fn hilbert_series_on_families() {
    let hexagon_with_chord_path = SimpleGraph::new(8, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 7), (7, 8), (8, 4)]).unwrap();
    check_hilbert_series(&hexagon_with_chord_path, 6).unwrap();
}
