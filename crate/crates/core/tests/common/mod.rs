#![allow(dead_code)]

use edgering::SimpleGraph;
use proptest::prelude::*;

pub fn cycle_graph(n: usize) -> SimpleGraph {
    SimpleGraph::new(n, (1..=n).map(|i| (i, i % n + 1))).unwrap()
}

/// Random permutation of `1..=n`.
pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
}

/// Bipartite graph with sides of sizes `a, b` (vertices shuffled), at
/// least one edge.
pub fn bipartite_graph(max_side: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_side, 1..=max_side)
        .prop_flat_map(|(a, b)| (Just(a), Just(b), 1u64..1 << (a * b), permutation(a + b)))
        .prop_map(|(a, b, mask, perm)| {
            let edges = (0..a * b)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| (perm[i / b], perm[a + i % b]));
            SimpleGraph::new(a + b, edges).unwrap()
        })
}

/// Edge-count-`t` sums of edge vectors, by exhausting multisets.
pub fn edge_sums(g: &SimpleGraph, t: usize) -> std::collections::BTreeSet<Vec<i64>> {
    fn go(g: &SimpleGraph, t: usize, from: usize, b: &mut Vec<i64>, out: &mut std::collections::BTreeSet<Vec<i64>>) {
        if t == 0 {
            out.insert(b.clone());
            return;
        }
        for e in from..=g.n_edges() {
            let (u, v) = g.edge(e);
            b[u - 1] += 1;
            b[v - 1] += 1;
            go(g, t - 1, e, b, out);
            b[u - 1] -= 1;
            b[v - 1] -= 1;
        }
    }
    let mut out = std::collections::BTreeSet::new();
    go(g, t, 1, &mut vec![0; g.n_vertices()], &mut out);
    out
}
