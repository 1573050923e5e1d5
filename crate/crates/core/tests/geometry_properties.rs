mod common;

use common::{bipartite_graph, edge_sums};
use edgering::classifier::{lemma_combination, lemma_point};
use edgering::geometry::{count_lattice_points, lattice_points_with};
use edgering::lp::Q;
use edgering::{
    codegree_by_search, hstar_profile, hstar_profile_with, membership, CountMethod, EdgePolytope, FamilyKind,
    FamilySpec, LatticeMethod, Limits, SimpleGraph,
};
use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn small_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    // arbitrary simple graphs, possibly non-bipartite
    (2usize..=max_n)
        .prop_flat_map(|n| (Just(n), 1u32..1 << (n * (n - 1) / 2)))
        .prop_map(|(n, mask)| {
            let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
            let edges = pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            SimpleGraph::new(n, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn codegree_duality(g in small_graph(5)) {
        let l = Limits::default();
        let p = EdgePolytope::new(&g).unwrap();
        let h = hstar_profile(&p, &l).unwrap();
        prop_assert!(h.hstar[0].is_one());
        prop_assert_eq!(codegree_by_search(&p, &l).unwrap(), h.dim + 1 - h.degree);
        prop_assert_eq!(h.codegree, h.dim + 1 - h.degree);
    }

    #[test]
    fn dimension_formula(g in small_graph(7)) {
        let p = EdgePolytope::new(&g).unwrap();
        // bipartite components include isolated vertices
        let s = g.structure();
        prop_assert_eq!(p.dimension() as i64, g.n_vertices() as i64 - s.bipartite_components as i64 - 1);
    }

    #[test]
    fn counting_routes_agree(g in bipartite_graph(3)) {
        let l = Limits::default();
        let p = EdgePolytope::new(&g).unwrap();
        let a = hstar_profile_with(&p, CountMethod::InitialComplex, &l).unwrap();
        let b = hstar_profile_with(&p, CountMethod::Enumeration, &l).unwrap();
        prop_assert_eq!(&a, &b);
        // the interpolated polynomial keeps predicting counts past the dimension
        let t = a.dim + 1;
        let direct = count_lattice_points(&p, t, LatticeMethod::Auto, &l).unwrap();
        prop_assert_eq!(a.ehrhart_count(t), BigUint::from(direct));
    }

    #[test]
    fn lattice_points_are_edge_sums(g in bipartite_graph(3), t in 0usize..=3) {
        let p = EdgePolytope::new(&g).unwrap();
        let pts: Vec<Vec<i64>> = lattice_points_with(&p, t, LatticeMethod::FastPath, &Limits::default())
            .unwrap()
            .into_iter()
            .map(|v| v.into_inner())
            .collect();
        let sums: Vec<Vec<i64>> = edge_sums(&g, t).into_iter().collect();
        prop_assert_eq!(pts, sums);
    }

    #[test]
    fn membership_certificates_are_exact(g in small_graph(6), t in 1usize..=3, pick in any::<prop::sample::Index>()) {
        let p = EdgePolytope::new(&g).unwrap();
        let pts = lattice_points_with(&p, t, LatticeMethod::Auto, &Limits::default()).unwrap();
        let b = pts[pick.index(pts.len())].clone().into_inner();
        let cert = membership(&p, &b, t).unwrap();
        prop_assert!(cert.is_member());
        let w = cert.weights.unwrap();
        let total: Q = w.iter().sum();
        prop_assert_eq!(total, Q::from_integer(t.into()));
        let mut sum = vec![Q::zero(); g.n_vertices()];
        for (&(u, v), x) in g.edges().iter().zip(&w) {
            prop_assert!(!x.is_negative());
            sum[u - 1] += x;
            sum[v - 1] += x;
        }
        for (s, &bi) in sum.iter().zip(&b) {
            prop_assert_eq!(s, &Q::from_integer(bi.into()));
        }
    }

    #[test]
    fn deletion_never_raises_degree(g in bipartite_graph(4), e in any::<prop::sample::Index>()) {
        prop_assume!(g.n_edges() >= 2);
        let l = Limits::default();
        let e = e.index(g.n_edges()) + 1;
        let d = |h: &SimpleGraph| hstar_profile(&EdgePolytope::new(h).unwrap(), &l).unwrap().degree;
        prop_assert!(d(&g.without_edge(e)) <= d(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn fast_path_matches_lp_filter(g in bipartite_graph(4), t in 0usize..=4) {
        let l = Limits::default();
        let p = EdgePolytope::new(&g).unwrap();
        let fast = lattice_points_with(&p, t, LatticeMethod::FastPath, &l).unwrap();
        let generic = lattice_points_with(&p, t, LatticeMethod::Generic, &l).unwrap();
        prop_assert_eq!(fast, generic);
    }
}

#[test]
fn lemma_combinations_sum_to_their_points() {
    for q in 3..=6 {
        for kind in [FamilyKind::DisjointPair, FamilyKind::OneCommonVertex, FamilyKind::EvenEar, FamilyKind::OddEar] {
            for k in 0..=q + 1 {
                for m in 0..=q + 2 {
                    let Ok(spec) = FamilySpec::new(kind, q, k, m) else { continue };
                    let g = spec.build().unwrap();
                    let lambda = lemma_combination(&spec);
                    let (b, r) = lemma_point(&spec);
                    let mut sum = vec![Q::zero(); g.n_vertices()];
                    for (&(u, v), x) in g.edges().iter().zip(&lambda) {
                        assert!(x.is_positive(), "{spec:?}");
                        sum[u - 1] += x;
                        sum[v - 1] += x;
                    }
                    let want: Vec<Q> = b.iter().map(|&x| Q::from_integer(x.into())).collect();
                    assert_eq!(sum, want, "{spec:?}");
                    assert_eq!(lambda.iter().sum::<Q>(), Q::from_integer(r.into()), "{spec:?}");
                    // the stated points
                    let n = g.n_vertices();
                    match spec {
                        FamilySpec::EvenEar { k, .. } => {
                            let mut e = vec![1; n];
                            e[2 * k] += 1;
                            assert_eq!(b, e);
                        }
                        FamilySpec::OddEar { .. } | FamilySpec::DisjointPair { .. } => assert_eq!(b, vec![1; n]),
                        FamilySpec::OneCommonVertex { .. } => assert_eq!(b[0], 2),
                    }
                }
            }
        }
    }
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn disjoint_union_counts_convolve() {
    // a point of tP splits as s edges on one hexagon and t - s on the other;
    // a hexagon's ring is a cubic hypersurface in six variables
    let hexagon = |s: u64| binom(s + 5, 5) - binom(s + 2, 5);
    let pair = FamilySpec::DisjointPair { q: 3 }.build().unwrap();
    let h = hstar_profile(&EdgePolytope::new(&pair).unwrap(), &Limits::default()).unwrap();
    for t in 0..=12u64 {
        let want: u64 = (0..=t).map(|s| hexagon(s) * hexagon(t - s)).sum();
        assert_eq!(h.ehrhart_count(t as usize), BigUint::from(want), "t = {t}");
    }
    assert_eq!(h.ehrhart_count(9), BigUint::from(143_572u32));
}
