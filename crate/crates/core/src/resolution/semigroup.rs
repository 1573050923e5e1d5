//! Membership in the affine semigroup generated by the edge vectors of a
//! bipartite graph, decided by a degree-constrained flow.

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{Bipartition, Side, SimpleGraph};

/// Reusable membership oracle for one bipartite graph.
#[derive(Debug, Clone)]
pub struct Semigroup<'g> {
    graph: &'g SimpleGraph,
    bipartition: Bipartition,
}

impl<'g> Semigroup<'g> {
    pub fn new(graph: &'g SimpleGraph) -> Result<Self> {
        let bipartition = graph.structure().bipartition.ok_or(Error::NonBipartite)?;
        Ok(Semigroup { graph, bipartition })
    }

    pub fn graph(&self) -> &SimpleGraph {
        self.graph
    }

    pub fn bipartition(&self) -> &Bipartition {
        &self.bipartition
    }

    // Cheap necessary conditions: nonnegative, zero on isolated vertices,
    // equal side sums in every component.
    fn balanced(&self, b: &[i64]) -> bool {
        if b.len() != self.graph.n_vertices() {
            return false;
        }
        let mut diff = vec![0i64; self.bipartition.n_components()];
        for (i, &x) in b.iter().enumerate() {
            let v = i + 1;
            if x < 0 || (x > 0 && self.graph.degree(v) == 0) {
                return false;
            }
            let c = self.bipartition.component(v);
            match self.bipartition.side(v) {
                Side::Left => diff[c] += x,
                Side::Right => diff[c] -= x,
            }
        }
        diff.iter().all(|&d| d == 0)
    }

    /// Edge multiplicities summing to `b` using only edges with label
    /// `>= min_label`, if any exist.
    fn multiplicities(&self, b: &[i64], min_label: usize) -> Option<Vec<i64>> {
        if !self.balanced(b) {
            return None;
        }
        let n = self.graph.n_vertices();
        let (source, sink) = (0, n + 1);
        let mut net = FlowNetwork::new(n + 2);
        let mut demand = 0;
        for v in 1..=n {
            let x = b[v - 1];
            if x == 0 {
                continue;
            }
            match self.bipartition.side(v) {
                Side::Left => {
                    net.add_arc(source, v, x);
                    demand += x;
                }
                Side::Right => {
                    net.add_arc(v, sink, x);
                }
            }
        }
        let mut arcs = Vec::with_capacity(self.graph.n_edges());
        for (i, &(u, w)) in self.graph.edges().iter().enumerate() {
            let label = i + 1;
            let (l, r) = match self.bipartition.side(u) {
                Side::Left => (u, w),
                Side::Right => (w, u),
            };
            if label < min_label || b[l - 1] == 0 || b[r - 1] == 0 {
                arcs.push(None);
                continue;
            }
            arcs.push(Some(net.add_arc(l, r, b[l - 1].min(b[r - 1]))));
        }
        if net.max_flow(source, sink) != demand {
            return None;
        }
        Some(arcs.iter().map(|a| a.map_or(0, |id| net.flow(id))).collect())
    }

    pub fn contains(&self, b: &[i64]) -> bool {
        self.multiplicities(b, 1).is_some()
    }

    /// Lexicographically least multiset of edge labels whose vectors sum to
    /// `b`, listed in ascending order.
    pub fn decompose(&self, b: &[i64]) -> Option<Vec<usize>> {
        self.multiplicities(b, 1)?;
        let mut residual = b.to_vec();
        let mut out = Vec::new();
        for label in 1..=self.graph.n_edges() {
            let (u, v) = self.graph.edge(label);
            let most = residual[u - 1].min(residual[v - 1]);
            // more copies of a smaller label give a lexicographically smaller list
            let take = (0..=most)
                .rev()
                .find(|&m| {
                    let mut rest = residual.clone();
                    rest[u - 1] -= m;
                    rest[v - 1] -= m;
                    rest.iter().all(|&x| x == 0) || self.multiplicities(&rest, label + 1).is_some()
                })
                .expect("a decomposition survives every greedy step");
            residual[u - 1] -= take;
            residual[v - 1] -= take;
            out.extend(std::iter::repeat(label).take(take as usize));
        }
        debug_assert!(residual.iter().all(|&x| x == 0));
        Some(out)
    }
}

/// Decomposes `b` as a sum of edge vectors of the bipartite graph `g`.
pub fn semigroup_member(g: &SimpleGraph, b: &[i64]) -> Result<Option<Vec<usize>>> {
    let s = Semigroup::new(g)?;
    if b.len() != g.n_vertices() {
        return Err(Error::DimensionMismatch {
            expected: g.n_vertices(),
            got: b.len(),
        });
    }
    Ok(s.decompose(b))
}
