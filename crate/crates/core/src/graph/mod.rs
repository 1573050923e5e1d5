//! Finite simple graphs on the vertex set `1..=N`.
//!
//! Vertex labels and edge labels are 1-based everywhere in the public API:
//! edge label `i` is the `i`-th pair handed to [`SimpleGraph::new`], and it
//! stays attached to that pair through polytopes, binomials and witnesses.

mod cycles;
mod family;
pub mod format;

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cycles::{canonical_rotation, enumerate_even_cycles, even_girth, Cycle};
pub use family::{build_family, FamilyKind, FamilySpec};

/// A finite simple graph. Edges are stored as `(u, v)` with `u < v`, in the
/// order they were supplied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // adjacency[v - 1] = (neighbour, edge label)
    adjacency: Vec<Vec<(usize, usize)>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for SimpleGraph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        SimpleGraph::new(raw.n_vertices, raw.edges)
    }
}

impl From<SimpleGraph> for RawGraph {
    fn from(g: SimpleGraph) -> Self {
        RawGraph {
            n_vertices: g.n,
            edges: g.edges,
        }
    }
}

impl SimpleGraph {
    /// Validates and builds a graph. Edge order is preserved.
    pub fn new<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut edges = Vec::new();
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        let mut adjacency = vec![Vec::new(); n];
        for (i, (a, b)) in pairs.into_iter().enumerate() {
            let index = i + 1;
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge { index, u: a, v: b });
            }
            let key = (a.min(b), a.max(b));
            if let Some(&first) = seen.get(&key) {
                return Err(Error::DuplicateEdge {
                    index,
                    first,
                    u: a,
                    v: b,
                });
            }
            seen.insert(key, index);
            adjacency[key.0 - 1].push((key.1, index));
            adjacency[key.1 - 1].push((key.0, index));
            edges.push(key);
        }
        Ok(SimpleGraph {
            n,
            edges,
            adjacency,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`; position `i` holds edge label `i + 1`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of the edge with 1-based label `label`.
    pub fn edge(&self, label: usize) -> (usize, usize) {
        self.edges[label - 1]
    }

    /// `(neighbour, edge label)` pairs of vertex `v`.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v - 1].len()
    }

    /// Label of the edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adjacency[u - 1]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    /// The graph with the edge labelled `label` removed; later labels shift
    /// down by one.
    pub fn without_edge(&self, label: usize) -> SimpleGraph {
        let pairs = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i + 1 != label)
            .map(|(_, &e)| e);
        SimpleGraph::new(self.n, pairs).expect("subgraph of a valid graph is valid")
    }

    /// Relabel vertices: vertex `v` becomes `perm[v - 1]`. Edge order is kept.
    pub fn relabeled(&self, perm: &[usize]) -> Result<SimpleGraph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: perm.len(),
            });
        }
        SimpleGraph::new(
            self.n,
            self.edges.iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])),
        )
    }

    pub fn structure(&self) -> Structure {
        analyze_structure(self)
    }

    pub fn is_bipartite(&self) -> bool {
        self.structure().bipartition.is_some()
    }

    pub fn is_connected(&self) -> bool {
        self.structure().components == 1
    }
}

/// Convenience wrapper around [`SimpleGraph::new`].
pub fn graph_from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<SimpleGraph> {
    SimpleGraph::new(n, pairs.iter().copied())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// A proper 2-colouring, one per connected component. The smallest vertex of
/// each component is placed on the left.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    sides: Vec<Side>,
    component: Vec<usize>,
    n_components: usize,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> Side {
        self.sides[v - 1]
    }

    /// 0-based component index of `v`, ordered by smallest member.
    pub fn component(&self, v: usize) -> usize {
        self.component[v - 1]
    }

    pub fn n_components(&self) -> usize {
        self.n_components
    }

    /// Vertices of component `c` on side `side`, ascending.
    pub fn members(&self, c: usize, side: Side) -> Vec<usize> {
        (1..=self.sides.len())
            .filter(|&v| self.component[v - 1] == c && self.sides[v - 1] == side)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Structure {
    pub components: usize,
    /// Number of bipartite connected components (isolated vertices count).
    pub bipartite_components: usize,
    pub bipartition: Option<Bipartition>,
    pub cycle_rank: usize,
}

pub fn analyze_structure(g: &SimpleGraph) -> Structure {
    let n = g.n_vertices();
    let mut component = vec![usize::MAX; n];
    let mut sides = vec![Side::Left; n];
    let mut components = 0;
    let mut bipartite_components = 0;
    let mut queue = VecDeque::new();
    for root in 1..=n {
        if component[root - 1] != usize::MAX {
            continue;
        }
        let c = components;
        components += 1;
        component[root - 1] = c;
        sides[root - 1] = Side::Left;
        queue.push_back(root);
        let mut bipartite = true;
        while let Some(u) = queue.pop_front() {
            let other = match sides[u - 1] {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            };
            for &(w, _) in g.neighbors(u) {
                if component[w - 1] == usize::MAX {
                    component[w - 1] = c;
                    sides[w - 1] = other;
                    queue.push_back(w);
                } else if sides[w - 1] == sides[u - 1] {
                    bipartite = false;
                }
            }
        }
        if bipartite {
            bipartite_components += 1;
        }
    }
    let bipartition = (bipartite_components == components).then(|| Bipartition {
        sides,
        component,
        n_components: components,
    });
    Structure {
        components,
        bipartite_components,
        bipartition,
        cycle_rank: g.n_edges() + components - n,
    }
}
