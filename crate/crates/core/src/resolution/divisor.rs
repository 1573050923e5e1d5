//! Squarefree divisor complexes `Δ_b = {F : b - Σ_{i∈F} ρ(e_i) ∈ NA}`.
//! Their reduced homology computes the multigraded Betti numbers of the
//! edge ring: `β_{i,b} = dim H̃_{i-1}(Δ_b)`.

use std::collections::HashSet;

use serde::Serialize;

use super::Semigroup;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::limits::Limits;

/// Faces stored as bitmasks over edge labels (bit `i - 1` for label `i`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorComplex {
    n_ground: usize,
    faces: Vec<u64>,
}

impl DivisorComplex {
    /// Builds a complex from explicit faces; they must form a downward-closed
    /// family containing the empty face.
    pub fn from_faces(n_ground: usize, faces: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut faces: Vec<u64> = faces.into_iter().collect();
        faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
        faces.dedup();
        let set: HashSet<u64> = faces.iter().copied().collect();
        if !set.contains(&0) {
            return Err(Error::Anomaly("complex lacks the empty face".into()));
        }
        for &f in &faces {
            let mut bits = f;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                if !set.contains(&(f & !low)) {
                    return Err(Error::Anomaly(format!("face {f:#b} is missing a facet")));
                }
                bits &= !low;
            }
        }
        Ok(DivisorComplex { n_ground, faces })
    }

    pub fn n_ground(&self) -> usize {
        self.n_ground
    }

    /// Faces sorted by size, then by mask.
    pub fn face_masks(&self) -> &[u64] {
        &self.faces
    }

    /// Faces as ascending lists of edge labels.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.faces
            .iter()
            .map(|&f| (0..64).filter(|i| f >> i & 1 == 1).map(|i| i + 1).collect())
            .collect()
    }

    /// `f[k]` = number of faces with `k` elements (`f[0] = 1` for the empty face).
    pub fn face_counts(&self) -> Vec<usize> {
        let top = self.faces.last().map_or(0, |f| f.count_ones() as usize);
        let mut counts = vec![0; top + 1];
        for f in &self.faces {
            counts[f.count_ones() as usize] += 1;
        }
        counts
    }

    pub fn maximal_faces(&self) -> Vec<u64> {
        let set: HashSet<u64> = self.faces.iter().copied().collect();
        self.faces
            .iter()
            .copied()
            .filter(|&f| (0..self.n_ground).all(|i| f >> i & 1 == 1 || !set.contains(&(f | 1 << i))))
            .collect()
    }

    /// True when some vertex lies in every maximal face, making the complex
    /// a cone (hence acyclic).
    pub fn is_cone(&self) -> bool {
        self.faces.len() > 1 && self.maximal_faces().iter().fold(u64::MAX, |acc, &f| acc & f) != 0
    }
}

/// Builds `Δ_b`, testing membership with `contains`. Faces are grown from
/// smaller faces, which suffices because the family is downward closed.
pub(crate) fn build_divisor_complex(
    g: &SimpleGraph,
    b: &[i64],
    contains: &mut dyn FnMut(&[i64]) -> bool,
) -> DivisorComplex {
    let n = g.n_edges();
    let mut faces = vec![0u64];
    let mut frontier = vec![(0u64, b.to_vec())];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (mask, rest) in &frontier {
            let start = if *mask == 0 { 0 } else { 64 - mask.leading_zeros() as usize };
            for i in start..n {
                let (u, v) = g.edge(i + 1);
                if rest[u - 1] == 0 || rest[v - 1] == 0 {
                    continue;
                }
                let mut smaller = rest.clone();
                smaller[u - 1] -= 1;
                smaller[v - 1] -= 1;
                if contains(&smaller) {
                    let f = mask | 1 << i;
                    faces.push(f);
                    next.push((f, smaller));
                }
            }
        }
        frontier = next;
    }
    faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
    DivisorComplex { n_ground: n, faces }
}

pub fn divisor_complex(g: &SimpleGraph, b: &[i64], limits: &Limits) -> Result<DivisorComplex> {
    let sg = Semigroup::new(g)?;
    if g.n_edges() > limits.edges {
        return Err(Error::SubsetBudgetExceeded {
            edges: g.n_edges(),
            cap: limits.edges,
        });
    }
    if b.len() != g.n_vertices() {
        return Err(Error::DimensionMismatch {
            expected: g.n_vertices(),
            got: b.len(),
        });
    }
    if !sg.contains(b) {
        return Err(Error::Anomaly(format!("{b:?} is not in the semigroup")));
    }
    let k = build_divisor_complex(g, b, &mut |c| sg.contains(c));
    // downward closure is structural; re-validate
    DivisorComplex::from_faces(k.n_ground, k.faces)
}
