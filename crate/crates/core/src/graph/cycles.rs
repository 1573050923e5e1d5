use std::collections::VecDeque;

use serde::Serialize;

use super::SimpleGraph;
use crate::error::{Error, Result};

/// A simple cycle `v_1, ..., v_L` in canonical form: `v_1` is the least
/// vertex and `v_2 < v_L`. `edges[i]` is the label of the edge joining
/// `vertices[i]` and `vertices[(i + 1) % L]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Cycle {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl Cycle {
    /// Builds a cycle from a closed vertex sequence of `g`, canonicalizing it.
    pub fn from_vertices(g: &SimpleGraph, sequence: &[usize]) -> Result<Cycle> {
        let len = sequence.len();
        if len < 3 {
            return Err(Error::Anomaly(format!("cycle of length {len}")));
        }
        let mut sorted = sequence.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Anomaly(format!("repeated vertex in {sequence:?}")));
        }
        let vertices = canonical_rotation(sequence);
        let edges = (0..len)
            .map(|i| {
                let (a, b) = (vertices[i], vertices[(i + 1) % len]);
                g.edge_between(a, b)
                    .ok_or_else(|| Error::Anomaly(format!("{a} and {b} are not adjacent")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Cycle { vertices, edges })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Edge labels in traversal order.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Number of vertices shared with `other`.
    pub fn common_vertices(&self, other: &Cycle) -> usize {
        self.vertices
            .iter()
            .filter(|v| other.contains_vertex(**v))
            .count()
    }
}

/// Rotates and reflects a cyclic sequence so that the least element comes
/// first and the smaller of its two neighbours second.
pub fn canonical_rotation(sequence: &[usize]) -> Vec<usize> {
    let len = sequence.len();
    let start = (0..len).min_by_key(|&i| sequence[i]).unwrap_or(0);
    let forward: Vec<usize> = (0..len).map(|i| sequence[(start + i) % len]).collect();
    if len > 2 && forward[len - 1] < forward[1] {
        std::iter::once(forward[0])
            .chain(forward[1..].iter().rev().copied())
            .collect()
    } else {
        forward
    }
}

/// Every even cycle of length at most `max_length`, each once, sorted by
/// length and then by vertex sequence.
pub fn enumerate_even_cycles(g: &SimpleGraph, max_length: usize, cap: usize) -> Result<Vec<Cycle>> {
    let mut found = Vec::new();
    let n = g.n_vertices();
    let mut on_path = vec![false; n + 1];
    let mut path = Vec::with_capacity(n);
    let mut edge_path = Vec::with_capacity(n);
    for start in 1..=n {
        on_path[start] = true;
        path.push(start);
        extend(
            g,
            start,
            max_length,
            cap,
            &mut on_path,
            &mut path,
            &mut edge_path,
            &mut found,
        )?;
        path.pop();
        on_path[start] = false;
    }
    found.sort_by(|a: &Cycle, b: &Cycle| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &SimpleGraph,
    start: usize,
    max_length: usize,
    cap: usize,
    on_path: &mut [bool],
    path: &mut Vec<usize>,
    edge_path: &mut Vec<usize>,
    found: &mut Vec<Cycle>,
) -> Result<()> {
    let tip = *path.last().expect("path starts at `start`");
    for &(w, e) in g.neighbors(tip) {
        if w == start {
            let len = path.len();
            // second vertex below the last one: each cycle is seen once
            if len >= 4 && len % 2 == 0 && path[1] < path[len - 1] {
                if found.len() >= cap {
                    return Err(Error::CycleBudgetExceeded { cap });
                }
                let mut edges = edge_path.clone();
                edges.push(e);
                found.push(Cycle {
                    vertices: path.clone(),
                    edges,
                });
            }
            continue;
        }
        if w < start || on_path[w] || path.len() >= max_length {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        edge_path.push(e);
        extend(g, start, max_length, cap, on_path, path, edge_path, found)?;
        edge_path.pop();
        path.pop();
        on_path[w] = false;
    }
    Ok(())
}

/// Length of a shortest even cycle, if the graph has one.
pub fn even_girth(g: &SimpleGraph) -> Option<usize> {
    if g.is_bipartite() {
        return bfs_girth(g);
    }
    (4..=g.n_vertices())
        .step_by(2)
        .find(|&len| has_cycle_of_length(g, len))
}

// In a bipartite graph every cycle is even, so the plain girth is the even
// girth. BFS from every root: a non-tree edge closing at depth d_u + d_w + 1
// bounds a closed walk through the root that contains a cycle at most that long,
// and the minimum over all roots is attained by a vertex on a shortest cycle.
fn bfs_girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.n_vertices();
    let mut best: Option<usize> = None;
    for root in 1..=n {
        let mut dist = vec![usize::MAX; n + 1];
        let mut parent_edge = vec![0usize; n + 1];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(w, e) in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent_edge[w] = e;
                    queue.push_back(w);
                } else if parent_edge[u] != e && parent_edge[w] != e {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

fn has_cycle_of_length(g: &SimpleGraph, len: usize) -> bool {
    fn walk(g: &SimpleGraph, start: usize, len: usize, on_path: &mut [bool], depth: usize, tip: usize) -> bool {
        for &(w, _) in g.neighbors(tip) {
            if w == start && depth == len {
                return true;
            }
            if w > start && !on_path[w] && depth < len {
                on_path[w] = true;
                let hit = walk(g, start, len, on_path, depth + 1, w);
                on_path[w] = false;
                if hit {
                    return true;
                }
            }
        }
        false
    }
    let mut on_path = vec![false; g.n_vertices() + 1];
    (1..=g.n_vertices()).any(|start| {
        on_path[start] = true;
        let hit = walk(g, start, len, &mut on_path, 1, start);
        on_path[start] = false;
        hit
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph_from_edges;

    const CAP: usize = 1_000_000;

    fn cycle_graph(n: usize) -> SimpleGraph {
        SimpleGraph::new(n, (1..=n).map(|i| (i, i % n + 1))).unwrap()
    }

    fn k23() -> SimpleGraph {
        graph_from_edges(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap()
    }

    // Independent oracle: every vertex sequence (as a set of permutations)
    // that closes up, reduced to its canonical rotation.
    fn brute_force_cycles(g: &SimpleGraph, max_len: usize) -> Vec<Vec<usize>> {
        fn rec(g: &SimpleGraph, seq: &mut Vec<usize>, max_len: usize, out: &mut Vec<Vec<usize>>) {
            let len = seq.len();
            if len >= 4 && len % 2 == 0 && g.edge_between(seq[len - 1], seq[0]).is_some() {
                out.push(canonical_rotation(seq));
            }
            if len == max_len {
                return;
            }
            for v in 1..=g.n_vertices() {
                if !seq.contains(&v) && g.edge_between(seq[len - 1], v).is_some() {
                    seq.push(v);
                    rec(g, seq, max_len, out);
                    seq.pop();
                }
            }
        }
        let mut out = Vec::new();
        for v in 1..=g.n_vertices() {
            rec(g, &mut vec![v], max_len, &mut out);
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn c6_has_one_cycle() {
        let cycles = enumerate_even_cycles(&cycle_graph(6), 12, CAP).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices(), &[1, 2, 3, 4, 5, 6]);
        assert_eq!(cycles[0].edges(), &[1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn k23_has_three_four_cycles() {
        let g = k23();
        let cycles = enumerate_even_cycles(&g, 8, CAP).unwrap();
        assert_eq!(cycles.len(), 3);
        assert!(cycles.iter().all(|c| c.len() == 4));
        let mut oracle = brute_force_cycles(&g, 8);
        oracle.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let ours: Vec<Vec<usize>> = cycles.iter().map(|c| c.vertices().to_vec()).collect();
        assert_eq!(ours, oracle);
    }

    #[test]
    fn tree_has_no_cycles() {
        let g = graph_from_edges(5, &[(1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert!(enumerate_even_cycles(&g, 10, CAP).unwrap().is_empty());
        assert_eq!(even_girth(&g), None);
    }

    #[test]
    fn even_girth_values() {
        assert_eq!(even_girth(&cycle_graph(6)), Some(6));
        assert_eq!(even_girth(&k23()), Some(4));
        // K4 is not bipartite; it still has 4-cycles
        let k4 = graph_from_edges(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(even_girth(&k4), Some(4));
        assert_eq!(even_girth(&cycle_graph(5)), None);
    }

    #[test]
    fn odd_cycles_are_skipped_and_budget_enforced() {
        let k4 = graph_from_edges(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        let cycles = enumerate_even_cycles(&k4, 8, CAP).unwrap();
        assert_eq!(cycles.len(), 3);
        assert_eq!(
            enumerate_even_cycles(&k4, 8, 2),
            Err(Error::CycleBudgetExceeded { cap: 2 })
        );
    }

    #[test]
    fn max_length_prunes() {
        let g = graph_from_edges(
            6,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 4)],
        )
        .unwrap();
        let all = enumerate_even_cycles(&g, 6, CAP).unwrap();
        assert_eq!(all.iter().map(Cycle::len).collect::<Vec<_>>(), vec![4, 4, 6]);
        assert_eq!(enumerate_even_cycles(&g, 4, CAP).unwrap().len(), 2);
    }

    #[test]
    fn canonical_rotation_examples() {
        assert_eq!(canonical_rotation(&[3, 4, 1, 2]), vec![1, 2, 3, 4]);
        assert_eq!(canonical_rotation(&[3, 2, 1, 4]), vec![1, 2, 3, 4]);
        assert_eq!(canonical_rotation(&[5, 1, 6, 2]), vec![1, 5, 2, 6]);
    }
}
