//! Graded Betti numbers of `K[G] = S / I_G` from divisor-complex homology.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::{build_divisor_complex, reduced_homology_dims};
use crate::error::{Error, Result};
use crate::geometry::{lattice_points_with, EdgePolytope, LatticeMethod};
use crate::graph::SimpleGraph;
use crate::limits::Limits;

/// `β_{i,j}` for `0 <= j <= j_max`. Entries outside the window are unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
    j_max: usize,
    max_homological: usize,
    complete: bool,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        if (i, j) == (0, 0) {
            1
        } else {
            self.entries.get(&(i, j)).copied().unwrap_or(0)
        }
    }

    /// Nonzero `β_{i,j}` with `i >= 1`, sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn j_max(&self) -> usize {
        self.j_max
    }

    /// Homological indices range over `0..=max_homological` (the edge count).
    pub fn max_homological(&self) -> usize {
        self.max_homological
    }

    /// True when the window provably holds every nonzero entry.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// `Σ_j β_{1,j}`: the number of minimal generators seen in the window.
    pub fn minimal_generators(&self) -> u64 {
        self.entries().filter(|e| e.0 == 1).map(|e| e.2).sum()
    }

    /// Smallest `j` with `β_{1,j} != 0`.
    pub fn min_generator_degree(&self) -> Option<usize> {
        self.entries().find(|e| e.0 == 1).map(|e| e.1)
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<[u64; 3]> = self
            .entries()
            .map(|(i, j, b)| [i as u64, j as u64, b])
            .collect();
        let mut st = s.serialize_struct("BettiTable", 3)?;
        st.serialize_field("complete", &self.complete)?;
        st.serialize_field("entries", &entries)?;
        st.serialize_field("j_max", &self.j_max)?;
        st.end()
    }
}

pub fn betti_table(g: &SimpleGraph, j_max: usize, limits: &Limits) -> Result<BettiTable> {
    if !g.is_bipartite() {
        return Err(Error::NonBipartite);
    }
    let n = g.n_edges();
    if n > limits.edges {
        return Err(Error::SubsetBudgetExceeded {
            edges: n,
            cap: limits.edges,
        });
    }
    // The cycle binomials are a Gröbner basis with squarefree leading terms,
    // and β_{i,j}(S/I) <= β_{i,j}(S/in(I)) vanishes for j > n.
    let complete = j_max >= n;
    let mut entries = BTreeMap::new();
    if n == 0 {
        return Ok(BettiTable {
            entries,
            j_max,
            max_homological: 0,
            complete,
        });
    }
    let p = EdgePolytope::new(g)?;
    let levels: Vec<HashSet<Vec<i64>>> = (0..=j_max)
        .map(|t| {
            lattice_points_with(&p, t, LatticeMethod::FastPath, limits)
                .map(|pts| pts.into_iter().map(|v| v.into_inner()).collect())
        })
        .collect::<Result<_>>()?;

    // degree-1 multidegrees give a single point, which is contractible
    for j in 2..=j_max {
        let points: Vec<&Vec<i64>> = levels[j].iter().collect();
        let sums = points
            .par_iter()
            .map(|b| {
                let mut lookup = |c: &[i64]| {
                    let deg = (c.iter().sum::<i64>() / 2) as usize;
                    levels[deg].contains(c)
                };
                let k = build_divisor_complex(g, b, &mut lookup);
                reduced_homology_dims(&k, n)
            })
            .reduce(
                || vec![0usize; n + 2],
                |mut acc, h| {
                    for (a, x) in acc.iter_mut().zip(h) {
                        *a += x;
                    }
                    acc
                },
            );
        // sums[i] = Σ_b dim H̃_{i-1}(Δ_b) = β_{i,j}
        for (i, &beta) in sums.iter().enumerate().skip(1) {
            if beta > 0 {
                entries.insert((i, j), beta as u64);
            }
        }
        if sums[0] > 0 {
            return Err(Error::Anomaly(format!("β_(0,{j}) = {} is nonzero", sums[0])));
        }
    }
    Ok(BettiTable {
        entries,
        j_max,
        max_homological: n,
        complete,
    })
}

/// `reg_lower = max(j - i)` over the nonzero entries with `i >= 1` (0 when
/// there are none), and whether every such entry sits on `j = q + i - 1`.
pub fn regularity_and_linearity(t: &BettiTable, q: usize) -> (usize, bool) {
    let reg = t.entries().map(|(i, j, _)| j - i).max().unwrap_or(0);
    let linear = t.entries().all(|(i, j, _)| j + 1 == q + i);
    (reg, linear)
}
