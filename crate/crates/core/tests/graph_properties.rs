mod common;

use common::{bipartite_graph, permutation};
use edgering::graph::{canonical_rotation, enumerate_even_cycles, even_girth};
use edgering::{FamilyKind, FamilySpec, Limits};
use proptest::prelude::*;

fn all_specs(max_q: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for q in 3..=max_q {
        for kind in [FamilyKind::DisjointPair, FamilyKind::OneCommonVertex, FamilyKind::EvenEar, FamilyKind::OddEar] {
            for k in 0..=q + 2 {
                for m in 0..=q + 3 {
                    if let Ok(s) = FamilySpec::new(kind, q, k, m) {
                        if !out.contains(&s) {
                            out.push(s);
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn family_closed_forms() {
    for spec in all_specs(5) {
        let g = spec.build().unwrap();
        assert!(g.is_bipartite(), "{spec:?}");
        let (n, e) = match spec {
            FamilySpec::DisjointPair { q } => (4 * q, 4 * q),
            FamilySpec::OneCommonVertex { q } => (4 * q - 1, 4 * q),
            FamilySpec::EvenEar { q, m, .. } => (2 * q + 2 * m - 1, 2 * q + 2 * m),
            FamilySpec::OddEar { q, m, .. } => (2 * q + 2 * m - 2, 2 * q + 2 * m - 1),
        };
        assert_eq!((g.n_vertices(), g.n_edges()), (n, e), "{spec:?}");
    }
}

#[test]
fn ear_cycle_lengths() {
    for spec in all_specs(5).into_iter().filter(|s| s.ear().is_some()) {
        let g = spec.build().unwrap();
        let mut lengths: Vec<usize> = enumerate_even_cycles(&g, g.n_vertices(), 1 << 20)
            .unwrap()
            .iter()
            .map(|c| c.len())
            .collect();
        lengths.sort_unstable();
        lengths.dedup();
        let want = match spec {
            FamilySpec::EvenEar { q, k, m } => vec![2 * q, 2 * k + 2 * m, 2 * (q - k) + 2 * m],
            FamilySpec::OddEar { q, k, m } => vec![2 * q, 2 * k + 2 * m - 2, 2 * q - 2 * k + 2 * m],
            _ => unreachable!(),
        };
        let mut want = want;
        want.sort_unstable();
        want.dedup();
        assert_eq!(lengths, want, "{spec:?}");
        assert_eq!(even_girth(&g), Some(2 * spec.q()));
    }
}

proptest! {
    #[test]
    fn cycles_are_canonical(g in bipartite_graph(4)) {
        let cycles = enumerate_even_cycles(&g, g.n_vertices(), Limits::default().cycles).unwrap();
        for c in &cycles {
            prop_assert_eq!(canonical_rotation(c.vertices()), c.vertices().to_vec());
        }
        if let Some(min) = cycles.iter().map(|c| c.len()).min() {
            prop_assert_eq!(even_girth(&g), Some(min));
        } else {
            prop_assert_eq!(even_girth(&g), None);
        }
        let s = g.structure();
        if s.cycle_rank == 1 {
            prop_assert_eq!(cycles.len(), 1);
        }
        prop_assert_eq!(cycles.is_empty(), s.cycle_rank == 0);
    }

    #[test]
    fn rotation_is_idempotent(seq in permutation(7).prop_flat_map(|p| (Just(p), 3usize..=7))) {
        let (p, len) = seq;
        let once = canonical_rotation(&p[..len]);
        prop_assert_eq!(canonical_rotation(&once), once.clone());
        let mut rev = p[..len].to_vec();
        rev.reverse();
        rev.rotate_left(len / 2);
        prop_assert_eq!(canonical_rotation(&rev), once);
    }

    #[test]
    fn relabeling_preserves_structure(g in bipartite_graph(4), seed in any::<u64>()) {
        let n = g.n_vertices();
        let mut perm: Vec<usize> = (1..=n).collect();
        perm.sort_by_key(|&v| (v as u64).wrapping_mul(seed | 1).rotate_left(17));
        let h = g.relabeled(&perm).unwrap();
        let (a, b) = (g.structure(), h.structure());
        prop_assert_eq!((a.components, a.bipartite_components, a.cycle_rank), (b.components, b.bipartite_components, b.cycle_rank));
        prop_assert_eq!(even_girth(&g), even_girth(&h));
    }
}
