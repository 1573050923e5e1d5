//! Subgraphs certifying `deg P_G >= q` for graphs whose shortest even
//! cycles come in multiples.

use std::collections::VecDeque;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{hstar_profile, EdgePolytope};
use crate::graph::format::write_graph;
use crate::graph::{enumerate_even_cycles, Cycle, FamilySpec, SimpleGraph};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum WitnessKind {
    DisjointCycles,
    OneCommonVertex,
    EvenEar,
    OddEar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub spec: FamilySpec,
    /// The family graph in its own labelling.
    pub subgraph: SimpleGraph,
    /// `vertex_map[i]` is the host vertex playing family vertex `i + 1`.
    pub vertex_map: Vec<usize>,
    /// Certifying cycles, in host labels.
    pub cycles: Vec<Cycle>,
    /// The ear `w_1, ..., w_2`, in host labels.
    pub path: Option<Vec<usize>>,
    /// `deg h*` of the subgraph's edge polytope.
    pub degree: usize,
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let cycles: Vec<&[usize]> = self.cycles.iter().map(|c| c.vertices()).collect();
        let mut st = s.serialize_struct("Witness", 7)?;
        st.serialize_field("cycles", &cycles)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("path", &self.path)?;
        st.serialize_field("spec", &self.spec)?;
        st.serialize_field("subgraph", &write_graph(&self.subgraph))?;
        st.serialize_field("vertex_map", &self.vertex_map)?;
        st.end()
    }
}

/// Finds a family subgraph of `g`, whose even girth must be `2q`.
///
/// Cases are tried in order: two disjoint `2q`-cycles, two sharing one
/// vertex, then a `2q`-cycle with an ear. Ears are ranked by length, then
/// by the shorter arc between their endpoints, so the family parameters do
/// not depend on vertex labels; remaining ties go to the lexicographically
/// least endpoints.
pub fn extract_witness(g: &SimpleGraph, q: usize, limits: &Limits) -> Result<Witness> {
    if !g.is_bipartite() {
        return Err(Error::NonBipartite);
    }
    let cycles: Vec<Cycle> = enumerate_even_cycles(g, 2 * q, limits.cycles)?;
    if cycles.iter().any(|c| c.len() < 2 * q) {
        return Err(Error::Anomaly(format!("even girth is below {}", 2 * q)));
    }
    let pairs = || {
        (0..cycles.len()).flat_map(|i| (i + 1..cycles.len()).map(move |j| (i, j)))
    };
    let witness = if let Some((i, j)) = pairs().find(|&(i, j)| cycles[i].common_vertices(&cycles[j]) == 0) {
        disjoint(q, &cycles[i], &cycles[j])
    } else if let Some((i, j)) = pairs().find(|&(i, j)| cycles[i].common_vertices(&cycles[j]) == 1) {
        one_common(q, &cycles[i], &cycles[j])
    } else {
        let ear = cycles
            .iter()
            .filter_map(|c| shortest_ear(g, c).map(|e| (e, c)))
            .min_by(|a, b| a.0.key().cmp(&b.0.key()))
            .ok_or(Error::NoSecondCycle { length: 2 * q })?;
        with_ear(q, ear.1, ear.0)?
    };
    certify(g, witness, limits)
}

struct Ear {
    path: Vec<usize>,
    // positions of the endpoints on the cycle
    start: usize,
    end: usize,
    arc: usize,
}

impl Ear {
    fn key(&self) -> (usize, usize, usize, usize, &[usize]) {
        let (a, b) = (self.path[0], self.path[self.path.len() - 1]);
        (self.path.len() - 1, self.arc, a.min(b), a.max(b), &self.path)
    }
}

/// The best ear of `c`: a path between two cycle vertices whose interior
/// avoids the cycle.
fn shortest_ear(g: &SimpleGraph, c: &Cycle) -> Option<Ear> {
    let n = g.n_vertices();
    let len = c.len();
    let mut pos = vec![None; n + 1];
    for (i, &v) in c.vertices().iter().enumerate() {
        pos[v] = Some(i);
    }
    let sorted_neighbors = |v: usize| {
        let mut nb: Vec<(usize, usize)> = g.neighbors(v).to_vec();
        nb.sort_unstable();
        nb
    };
    let mut best: Option<Ear> = None;
    for (i, &w1) in c.vertices().iter().enumerate() {
        let mut parent = vec![0usize; n + 1];
        let mut seen = vec![false; n + 1];
        let mut queue = VecDeque::new();
        let mut found: Vec<Vec<usize>> = Vec::new();
        seen[w1] = true;
        queue.push_back(w1);
        while let Some(u) = queue.pop_front() {
            for (x, e) in sorted_neighbors(u) {
                if c.edges().contains(&e) {
                    continue;
                }
                if pos[x].is_some() {
                    if x != w1 && x > w1 {
                        let mut path = vec![x];
                        let mut y = u;
                        while y != w1 {
                            path.push(y);
                            y = parent[y];
                        }
                        path.push(w1);
                        path.reverse();
                        found.push(path);
                    }
                } else if !seen[x] {
                    seen[x] = true;
                    parent[x] = u;
                    queue.push_back(x);
                }
            }
        }
        for path in found {
            let end = pos[path[path.len() - 1]].unwrap();
            let d = (end + len - i) % len;
            let ear = Ear {
                path,
                start: i,
                end,
                arc: d.min(len - d),
            };
            if best.as_ref().is_none_or(|b| ear.key() < b.key()) {
                best = Some(ear);
            }
        }
    }
    best
}

/// Cycle vertices read from position `start`, forwards or backwards.
fn read_from(c: &Cycle, start: usize, forward: bool) -> Vec<usize> {
    let len = c.len();
    (0..len)
        .map(|t| {
            let i = if forward {
                (start + t) % len
            } else {
                (start + len - t) % len
            };
            c.vertices()[i]
        })
        .collect()
}

fn disjoint(q: usize, c1: &Cycle, c2: &Cycle) -> Draft {
    let mut map = c1.vertices().to_vec();
    map.extend_from_slice(c2.vertices());
    draft(WitnessKind::DisjointCycles, FamilySpec::DisjointPair { q }, map, vec![c1.clone(), c2.clone()], None)
}

fn one_common(q: usize, c1: &Cycle, c2: &Cycle) -> Draft {
    let s = *c1.vertices().iter().find(|v| c2.contains_vertex(**v)).unwrap();
    let at = |c: &Cycle| c.vertices().iter().position(|&v| v == s).unwrap();
    let mut map = read_from(c1, at(c1), true);
    map.extend_from_slice(&read_from(c2, at(c2), true)[1..]);
    draft(WitnessKind::OneCommonVertex, FamilySpec::OneCommonVertex { q }, map, vec![c1.clone(), c2.clone()], None)
}

fn with_ear(q: usize, c: &Cycle, ear: Ear) -> Result<Draft> {
    let len = c.len();
    let forward = (ear.end + len - ear.start) % len == ear.arc;
    let mut map = read_from(c, ear.start, forward);
    let l = ear.path.len() - 1;
    if map[ear.arc] != ear.path[l] {
        return Err(Error::Anomaly("ear endpoint misplaced on its cycle".into()));
    }
    map.extend_from_slice(&ear.path[1..l]);
    let (kind, spec) = if l % 2 == 0 {
        if ear.arc % 2 != 0 {
            return Err(Error::Anomaly(format!("even ear spans an odd arc of {}", ear.arc)));
        }
        (WitnessKind::EvenEar, FamilySpec::EvenEar { q, k: ear.arc / 2, m: l / 2 })
    } else {
        if ear.arc % 2 != 1 {
            return Err(Error::Anomaly(format!("odd ear spans an even arc of {}", ear.arc)));
        }
        (WitnessKind::OddEar, FamilySpec::OddEar { q, k: ear.arc.div_ceil(2), m: l.div_ceil(2) })
    };
    Ok(draft(kind, spec, map, vec![c.clone()], Some(ear.path)))
}

struct Draft {
    kind: WitnessKind,
    spec: FamilySpec,
    vertex_map: Vec<usize>,
    cycles: Vec<Cycle>,
    path: Option<Vec<usize>>,
}

fn draft(kind: WitnessKind, spec: FamilySpec, vertex_map: Vec<usize>, cycles: Vec<Cycle>, path: Option<Vec<usize>>) -> Draft {
    Draft {
        kind,
        spec,
        vertex_map,
        cycles,
        path,
    }
}

/// Checks the family hypotheses and the embedding, then fills in the
/// subgraph and its h*-degree.
fn certify(g: &SimpleGraph, w: Draft, limits: &Limits) -> Result<Witness> {
    let q = w.spec.q();
    w.spec
        .validate()
        .map_err(|e| Error::Anomaly(format!("extracted {:?} breaks the family hypotheses: {e}", w.spec)))?;
    let sub = w.spec.build()?;
    if w.vertex_map.len() != sub.n_vertices() {
        return Err(Error::Anomaly(format!(
            "{:?} maps {} vertices, family has {}",
            w.kind,
            w.vertex_map.len(),
            sub.n_vertices()
        )));
    }
    for &(a, b) in sub.edges() {
        let (u, v) = (w.vertex_map[a - 1], w.vertex_map[b - 1]);
        if g.edge_between(u, v).is_none() {
            return Err(Error::Anomaly(format!("family edge {{{a},{b}}} maps to non-edge {{{u},{v}}}")));
        }
    }
    let degree = hstar_profile(&EdgePolytope::new(&sub)?, limits)?.degree;
    if degree < q {
        return Err(Error::Anomaly(format!("{:?} has h*-degree {degree} below q = {q}", w.spec)));
    }
    Ok(Witness {
        kind: w.kind,
        spec: w.spec,
        subgraph: sub,
        vertex_map: w.vertex_map,
        cycles: w.cycles,
        path: w.path,
        degree,
    })
}
