//! The four graph families used to bound the h*-degree from below.
//!
//! All four contain a `2q`-cycle on `1..=2q` with edges
//! `e_i = {i, i+1}` (`i < 2q`) and `e_{2q} = {2q, 1}`.

use serde::{Deserialize, Serialize};

use super::SimpleGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    DisjointPair,
    OneCommonVertex,
    EvenEar,
    OddEar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FamilySpec {
    /// Two vertex-disjoint `2q`-cycles.
    DisjointPair { q: usize },
    /// Two `2q`-cycles sharing exactly vertex 1.
    OneCommonVertex { q: usize },
    /// A `2q`-cycle with an ear of length `2m` from vertex 1 to `2k + 1`.
    EvenEar { q: usize, k: usize, m: usize },
    /// A `2q`-cycle with an ear of length `2m - 1` from vertex 1 to `2k`.
    OddEar { q: usize, k: usize, m: usize },
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, q: usize, k: usize, m: usize) -> Result<FamilySpec> {
        let spec = match kind {
            FamilyKind::DisjointPair => FamilySpec::DisjointPair { q },
            FamilyKind::OneCommonVertex => FamilySpec::OneCommonVertex { q },
            FamilyKind::EvenEar => FamilySpec::EvenEar { q, k, m },
            FamilyKind::OddEar => FamilySpec::OddEar { q, k, m },
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::DisjointPair { .. } => FamilyKind::DisjointPair,
            FamilySpec::OneCommonVertex { .. } => FamilyKind::OneCommonVertex,
            FamilySpec::EvenEar { .. } => FamilyKind::EvenEar,
            FamilySpec::OddEar { .. } => FamilyKind::OddEar,
        }
    }

    pub fn q(&self) -> usize {
        match *self {
            FamilySpec::DisjointPair { q }
            | FamilySpec::OneCommonVertex { q }
            | FamilySpec::EvenEar { q, .. }
            | FamilySpec::OddEar { q, .. } => q,
        }
    }

    /// `(k, m)` for the ear families.
    pub fn ear(&self) -> Option<(usize, usize)> {
        match *self {
            FamilySpec::EvenEar { k, m, .. } | FamilySpec::OddEar { k, m, .. } => Some((k, m)),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamilyParameters(msg));
        let q = self.q();
        if q < 3 {
            return bad(format!("q = {q} must be at least 3"));
        }
        match *self {
            FamilySpec::DisjointPair { .. } | FamilySpec::OneCommonVertex { .. } => Ok(()),
            FamilySpec::EvenEar { k, m, .. } => {
                if k == 0 || m == 0 {
                    bad(format!("k = {k} and m = {m} must be positive"))
                } else if k > m {
                    bad(format!("k = {k} exceeds m = {m}"))
                } else if k + m < q {
                    bad(format!("k + m = {} is below q = {q}", k + m))
                } else if k >= q {
                    // the ear must land on 2k + 1 <= 2q - 1
                    bad(format!("k = {k} must be below q = {q}"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::OddEar { k, m, .. } => {
                if k == 0 || m == 0 {
                    bad(format!("k = {k} and m = {m} must be positive"))
                } else if k > m {
                    bad(format!("k = {k} exceeds m = {m}"))
                } else if k + m < q + 1 {
                    bad(format!("k + m - 1 = {} is below q = {q}", k + m - 1))
                } else if k > q {
                    bad(format!("k = {k} exceeds q = {q}"))
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn n_vertices(&self) -> usize {
        match *self {
            FamilySpec::DisjointPair { q } => 4 * q,
            FamilySpec::OneCommonVertex { q } => 4 * q - 1,
            FamilySpec::EvenEar { q, m, .. } => 2 * q + 2 * m - 1,
            FamilySpec::OddEar { q, m, .. } => 2 * q + 2 * m - 2,
        }
    }

    pub fn n_edges(&self) -> usize {
        match *self {
            FamilySpec::DisjointPair { q } | FamilySpec::OneCommonVertex { q } => 4 * q,
            FamilySpec::EvenEar { q, m, .. } => 2 * q + 2 * m,
            FamilySpec::OddEar { q, m, .. } => 2 * q + 2 * m - 1,
        }
    }

    /// Lengths of all cycles of the graph, ascending, duplicates merged.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut lengths = match *self {
            FamilySpec::DisjointPair { q } | FamilySpec::OneCommonVertex { q } => vec![2 * q],
            FamilySpec::EvenEar { q, k, m } => vec![2 * q, 2 * k + 2 * m, 2 * (q - k) + 2 * m],
            FamilySpec::OddEar { q, k, m } => vec![
                2 * q,
                (2 * k - 1) + (2 * m - 1),
                (2 * q - 2 * k + 1) + (2 * m - 1),
            ],
        };
        lengths.sort_unstable();
        lengths.dedup();
        lengths
    }

    pub fn build(&self) -> Result<SimpleGraph> {
        self.validate()?;
        let q = self.q();
        let mut edges: Vec<(usize, usize)> = (1..2 * q).map(|i| (i, i + 1)).collect();
        edges.push((2 * q, 1));
        match *self {
            FamilySpec::DisjointPair { q } => {
                edges.extend((2 * q + 1..4 * q).map(|i| (i, i + 1)));
                edges.push((4 * q, 2 * q + 1));
            }
            FamilySpec::OneCommonVertex { q } => {
                edges.push((1, 2 * q + 1));
                edges.extend((2 * q + 2..4 * q).map(|i| (i - 1, i)));
                edges.push((4 * q - 1, 1));
            }
            FamilySpec::EvenEar { q, k, m } => {
                edges.push((1, 2 * q + 1));
                edges.extend((2 * q + 2..2 * q + 2 * m).map(|i| (i - 1, i)));
                edges.push((2 * q + 2 * m - 1, 2 * k + 1));
            }
            FamilySpec::OddEar { q, k, m } => {
                edges.push((1, 2 * q + 1));
                edges.extend((2 * q + 2..2 * q + 2 * m - 1).map(|i| (i - 1, i)));
                edges.push((2 * q + 2 * m - 2, 2 * k));
            }
        }
        SimpleGraph::new(self.n_vertices(), edges)
    }
}

/// Shorthand for [`FamilySpec::build`].
pub fn build_family(spec: &FamilySpec) -> Result<SimpleGraph> {
    spec.build()
}
