//! Exact polyhedral computations on edge polytopes.

mod ehrhart;
mod lattice;
mod membership;

use std::ops::Deref;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::linalg;

pub use ehrhart::{
    codegree_by_search, hstar_from_counts, hstar_profile, hstar_profile_with, lattice_counts,
    CountMethod, HStarProfile,
};
pub use lattice::{count_lattice_points, lattice_points, lattice_points_with, LatticeMethod};
pub use membership::{membership, MembershipCertificate, MembershipStatus};

/// A point of `Z^N`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct LatticeVector(Vec<i64>);

impl LatticeVector {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticeVector(coords)
    }

    pub fn zero(n: usize) -> Self {
        LatticeVector(vec![0; n])
    }

    /// `e_1 + ... + e_n`.
    pub fn ones(n: usize) -> Self {
        LatticeVector(vec![1; n])
    }

    /// Unit vector `e_i` (1-based).
    pub fn unit(i: usize, n: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        LatticeVector(v)
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Deref for LatticeVector {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(v: Vec<i64>) -> Self {
        LatticeVector(v)
    }
}

impl std::ops::Add for &LatticeVector {
    type Output = LatticeVector;

    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

/// `e_u + e_v` in `Z^n`.
pub fn rho(edge: (usize, usize), n: usize) -> Result<LatticeVector> {
    let (u, v) = edge;
    for x in [u, v] {
        if x == 0 || x > n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    let mut coords = vec![0; n];
    coords[u - 1] += 1;
    coords[v - 1] += 1;
    Ok(LatticeVector(coords))
}

/// Convex hull of `rho(e_1), ..., rho(e_n)`; vertex `i` is `rho(e_{i+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePolytope {
    graph: SimpleGraph,
    vertices: Vec<LatticeVector>,
}

impl EdgePolytope {
    pub fn new(graph: &SimpleGraph) -> Result<EdgePolytope> {
        if graph.n_edges() == 0 {
            return Err(Error::EmptyPolytope);
        }
        let n = graph.n_vertices();
        let vertices = graph
            .edges()
            .iter()
            .map(|&e| rho(e, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(EdgePolytope {
            graph: graph.clone(),
            vertices,
        })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn ambient_dim(&self) -> usize {
        self.graph.n_vertices()
    }

    pub fn dimension(&self) -> usize {
        polytope_dimension(self)
    }

    /// The closed form `N - c0(G) - 1`.
    pub fn expected_dimension(&self) -> usize {
        let s = self.graph.structure();
        self.graph.n_vertices() - s.bipartite_components - 1
    }
}

/// Affine dimension: the rank of `{v_i - v_1}`.
pub fn polytope_dimension(p: &EdgePolytope) -> usize {
    let base = &p.vertices[0];
    let rows: Vec<Vec<i64>> = p.vertices[1..]
        .iter()
        .map(|v| v.iter().zip(base.iter()).map(|(a, b)| a - b).collect())
        .collect();
    linalg::rank(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{graph_from_edges, FamilySpec};

    #[test]
    fn rho_examples() {
        assert_eq!(rho((1, 2), 4).unwrap(), LatticeVector::new(vec![1, 1, 0, 0]));
        assert_eq!(rho((2, 4), 4).unwrap(), LatticeVector::new(vec![0, 1, 0, 1]));
        assert_eq!(rho((1, 5), 4), Err(Error::VertexOutOfRange { vertex: 5, n: 4 }));
    }

    #[test]
    fn dimensions() {
        let c6 = SimpleGraph::new(6, (1..=6).map(|i| (i, i % 6 + 1))).unwrap();
        assert_eq!(polytope_dimension(&EdgePolytope::new(&c6).unwrap()), 4);
        let dp = FamilySpec::DisjointPair { q: 3 }.build().unwrap();
        assert_eq!(polytope_dimension(&EdgePolytope::new(&dp).unwrap()), 9);
        let edge = graph_from_edges(2, &[(1, 2)]).unwrap();
        assert_eq!(polytope_dimension(&EdgePolytope::new(&edge).unwrap()), 0);
        // odd cycle: no bipartite component, full dimension N - 1
        let c5 = SimpleGraph::new(5, (1..=5).map(|i| (i, i % 5 + 1))).unwrap();
        let p = EdgePolytope::new(&c5).unwrap();
        assert_eq!((p.dimension(), p.expected_dimension()), (4, 4));
        // isolated vertices count as bipartite components
        let g = graph_from_edges(5, &[(1, 2), (2, 3)]).unwrap();
        let p = EdgePolytope::new(&g).unwrap();
        assert_eq!((p.dimension(), p.expected_dimension()), (1, 1));
    }

    #[test]
    fn empty_polytope() {
        let g = SimpleGraph::new(3, []).unwrap();
        assert_eq!(EdgePolytope::new(&g), Err(Error::EmptyPolytope));
    }
}
