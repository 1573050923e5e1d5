mod common;

use common::{cycle_graph, permutation};
use edgering::classifier::{classify, classify_window, connected_bipartite_graphs, extract_witness, scan};
use edgering::graph::even_girth;
use edgering::{betti_table, hstar_profile, EdgePolytope, FamilyKind, FamilySpec, Limits, SimpleGraph};
use proptest::prelude::*;

/// Connected bipartite graphs on up to 7 vertices with at most 9 edges and
/// at least one cycle.
fn corpus() -> Vec<SimpleGraph> {
    (4..=7)
        .flat_map(|n| connected_bipartite_graphs(n).unwrap())
        .filter(|g| g.n_edges() <= 9 && g.structure().cycle_rank >= 1)
        .collect()
}

fn ear_spec() -> impl Strategy<Value = FamilySpec> {
    (3usize..=4, 0usize..4, 1usize..=5, 1usize..=5)
        .prop_filter_map("invalid parameters", |(q, kind, k, m)| {
            let kind = [FamilyKind::DisjointPair, FamilyKind::OneCommonVertex, FamilyKind::EvenEar, FamilyKind::OddEar][kind];
            FamilySpec::new(kind, q, k, m).ok()
        })
}

/// `spec`'s graph with a pendant path of `tail` vertices at `anchor`, then
/// relabelled by `perm` over the enlarged vertex set.
fn decorate(spec: &FamilySpec, anchor: prop::sample::Index, tail: usize, seed: u64) -> SimpleGraph {
    let g = spec.build().unwrap();
    let n = g.n_vertices();
    let mut edges = g.edges().to_vec();
    let mut prev = anchor.index(n) + 1;
    for i in 0..tail {
        edges.push((prev, n + i + 1));
        prev = n + i + 1;
    }
    let total = n + tail;
    let mut perm: Vec<usize> = (1..=total).collect();
    perm.sort_by_key(|&v| (v as u64 ^ seed).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    SimpleGraph::new(total, edges).unwrap().relabeled(&perm).unwrap()
}

#[test]
fn prediction_agrees_with_betti_tables() {
    let l = Limits::default();
    let r = scan(8, l.edges, &l).unwrap();
    assert!(r.is_clean(), "{r:?}");
    assert_eq!(r.total_graphs, 254);
    assert_eq!(r.unverified, 0);
    for n in 6..=8 {
        for g in connected_bipartite_graphs(n).unwrap() {
            if even_girth(&g).is_some_and(|len| len >= 6) {
                let c = classify(&g, true, &l).unwrap();
                assert_eq!(c.predicted_linear, c.verified_linear, "{g:?}");
                assert!(c.anomalies.is_empty(), "{:?}", c.anomalies);
            }
        }
    }
}

#[test]
fn single_cycle_graphs_are_hypersurfaces() {
    let l = Limits::default();
    for g in corpus().into_iter().filter(|g| g.structure().cycle_rank == 1) {
        let c = classify(&g, true, &l).unwrap();
        assert!(c.is_hypersurface);
        assert_eq!(c.minimal_generators, Some(1));
        assert_eq!(betti_table(&g, g.n_edges(), &l).unwrap().minimal_generators(), 1);
    }
}

#[test]
fn two_linear_graphs_are_reported_not_predicted() {
    let k33 = SimpleGraph::new(6, (1..=3).flat_map(|i| (4..=6).map(move |j| (i, j)))).unwrap();
    let c = classify(&k33, true, &Limits::default()).unwrap();
    assert_eq!(c.q, 2);
    assert_eq!(c.predicted_linear, None);
    assert!(c.witness.is_none());
    let c4 = classify(&cycle_graph(4), true, &Limits::default()).unwrap();
    assert_eq!(c4.verified_linear, Some(true));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn classification_ignores_labels(pick in any::<prop::sample::Index>(), perm in permutation(7)) {
        let graphs = corpus();
        let g = &graphs[pick.index(graphs.len())];
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v <= g.n_vertices()).collect();
        let h = g.relabeled(&perm).unwrap();
        let l = Limits::default();
        let mut a = classify(g, true, &l).unwrap();
        let mut b = classify(&h, true, &l).unwrap();
        let (wa, wb) = (a.witness.take(), b.witness.take());
        prop_assert_eq!(a, b);
        prop_assert_eq!(wa.map(|w| (w.kind, w.spec, w.degree)), wb.map(|w| (w.kind, w.spec, w.degree)));
    }

    #[test]
    fn witnesses_are_sound(spec in ear_spec(), anchor in any::<prop::sample::Index>(), tail in 0usize..3, seed in any::<u64>()) {
        let g = decorate(&spec, anchor, tail, seed);
        let l = Limits::default();
        let q = spec.q();
        let w = extract_witness(&g, q, &l).unwrap();
        prop_assert!(w.spec.validate().is_ok());
        prop_assert_eq!(w.spec.q(), q);
        // the claimed embedding is a subgraph of the host
        for &(a, b) in w.subgraph.edges() {
            prop_assert!(g.edge_between(w.vertex_map[a - 1], w.vertex_map[b - 1]).is_some());
        }
        let mut image = w.vertex_map.clone();
        image.sort_unstable();
        image.dedup();
        prop_assert_eq!(image.len(), w.vertex_map.len());
        let sub_deg = hstar_profile(&EdgePolytope::new(&w.subgraph).unwrap(), &l).unwrap().degree;
        prop_assert_eq!(sub_deg, w.degree);
        prop_assert!(w.degree >= q);
        let host_deg = hstar_profile(&EdgePolytope::new(&g).unwrap(), &l).unwrap().degree;
        prop_assert!(host_deg >= w.degree);
        if spec.kind() == FamilyKind::DisjointPair && tail == 0 {
            // two components: classify demands connectivity
            prop_assert!(classify(&g, false, &l).is_err());
        } else if spec.kind() != FamilyKind::DisjointPair {
            let c = classify_window(&g, None, &l).unwrap();
            prop_assert_eq!(c.predicted_linear, Some(false));
            prop_assert_eq!(c.witness.map(|w| w.kind), Some(w.kind));
        }
    }
}
