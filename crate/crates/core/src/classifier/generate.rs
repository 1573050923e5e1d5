//! Connected bipartite graphs on few vertices, one per isomorphism class.
//!
//! Canonical forms come from colour refinement with individualization: the
//! form is the largest upper-triangle adjacency code over all leaves of the
//! search tree. Graphs on `n` vertices are grown from those on `n - 1` by
//! attaching a vertex to a nonempty subset of one side; every connected
//! graph arises this way because deleting a leaf of a spanning tree keeps it
//! connected.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Side, SimpleGraph};

/// Largest vertex count whose upper triangle fits the 64-bit code.
pub const MAX_CANONICAL_VERTICES: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    pub n: usize,
    pub code: u64,
}

impl CanonicalCode {
    /// The canonical representative, with edges in lexicographic order.
    pub fn graph(&self) -> SimpleGraph {
        let n = self.n;
        let total = n * (n - 1) / 2;
        let mut edges = Vec::new();
        let mut idx = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                if self.code >> (total - 1 - idx) & 1 == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        SimpleGraph::new(n, edges).expect("code decodes to a simple graph")
    }
}

fn adjacency(g: &SimpleGraph) -> Vec<u32> {
    let mut adj = vec![0u32; g.n_vertices()];
    for &(u, v) in g.edges() {
        adj[u - 1] |= 1 << (v - 1);
        adj[v - 1] |= 1 << (u - 1);
    }
    adj
}

/// Replaces colours by the rank of (colour, sorted neighbour colours) until
/// the partition is stable. Ranks preserve the previous order.
fn refine(adj: &[u32], colours: &mut [usize]) {
    let n = adj.len();
    let mut classes = distinct(colours);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|u| {
                let mut nb: Vec<usize> = (0..n).filter(|&v| adj[u] >> v & 1 == 1).map(|v| colours[v]).collect();
                nb.sort_unstable();
                (colours[u], nb)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        for (u, sig) in sigs.iter().enumerate() {
            colours[u] = sorted.binary_search(&sig).unwrap();
        }
        let now = sorted.len();
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn distinct(colours: &[usize]) -> usize {
    colours.iter().collect::<BTreeSet<_>>().len()
}

fn leaf_code(adj: &[u32], colours: &[usize]) -> u64 {
    let n = adj.len();
    let mut order = vec![0usize; n];
    for (u, &c) in colours.iter().enumerate() {
        order[c] = u;
    }
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | u64::from(adj[order[i]] >> order[j] & 1);
        }
    }
    code
}

fn search(adj: &[u32], mut colours: Vec<usize>, best: &mut u64) {
    refine(adj, &mut colours);
    let n = adj.len();
    let mut size = vec![0usize; n];
    for &c in &colours {
        size[c] += 1;
    }
    // smallest non-singleton cell, lowest colour on ties
    let Some(target) = (0..n).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c)) else {
        *best = (*best).max(leaf_code(adj, &colours));
        return;
    };
    for v in (0..n).filter(|&v| colours[v] == target) {
        let split = (0..n)
            .map(|u| 2 * colours[u] + usize::from(colours[u] == target && u != v))
            .collect();
        search(adj, split, best);
    }
}

pub fn canonical_code(g: &SimpleGraph) -> Result<CanonicalCode> {
    let n = g.n_vertices();
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::ScanBudgetExceeded {
            requested: n,
            cap: MAX_CANONICAL_VERTICES,
        });
    }
    let adj = adjacency(g);
    let colours: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    let mut best = 0;
    search(&adj, colours, &mut best);
    Ok(CanonicalCode { n, code: best })
}

/// Canonical codes of all connected bipartite graphs on `n` vertices.
pub fn connected_bipartite_codes(n: usize) -> Result<BTreeSet<CanonicalCode>> {
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::ScanBudgetExceeded {
            requested: n,
            cap: MAX_CANONICAL_VERTICES,
        });
    }
    let mut level: BTreeSet<CanonicalCode> = match n {
        0 => return Ok(BTreeSet::new()),
        _ => [CanonicalCode { n: 1, code: 0 }].into(),
    };
    for size in 2..=n {
        let mut next = BTreeSet::new();
        for c in &level {
            let h = c.graph();
            let parts = h.structure().bipartition.expect("generated graphs are bipartite");
            for side in [Side::Left, Side::Right] {
                let members = parts.members(0, side);
                for subset in 1u32..1 << members.len() {
                    let mut edges = h.edges().to_vec();
                    edges.extend(
                        members
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| subset >> i & 1 == 1)
                            .map(|(_, &v)| (v, size)),
                    );
                    next.insert(canonical_code(&SimpleGraph::new(size, edges)?)?);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Canonical representatives of all connected bipartite graphs on `n`
/// vertices, sorted by edge count and then by code.
pub fn connected_bipartite_graphs(n: usize) -> Result<Vec<SimpleGraph>> {
    let mut graphs: Vec<SimpleGraph> = connected_bipartite_codes(n)?.iter().map(|c| c.graph()).collect();
    graphs.sort_by_key(|g| g.n_edges());
    Ok(graphs)
}
