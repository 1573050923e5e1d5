//! Linear-resolution predictions for bipartite edge rings, checked against
//! computed Betti tables.
//!
//! For `q >= 3` a `q`-linear resolution is predicted exactly when the graph
//! has a single cycle, so that the toric ideal is principal.

mod generate;
mod lemma;
mod scan;
mod witness;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{hstar_profile, EdgePolytope};
use crate::graph::{even_girth, SimpleGraph};
use crate::limits::Limits;
use crate::resolution::{betti_table, regularity_and_linearity};

pub use generate::{
    canonical_code, connected_bipartite_codes, connected_bipartite_graphs, CanonicalCode,
    MAX_CANONICAL_VERTICES,
};
pub use lemma::{lemma_combination, lemma_point, lemma_witness, LemmaRecord};
pub use scan::{scan, ScanEntry, ScanOrder, ScanReport};
pub use witness::{extract_witness, Witness, WitnessKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub cycle_rank: usize,
    pub even_girth: usize,
    pub q: usize,
    /// False for `q <= 2`, where no prediction is made.
    pub theorem_applies: bool,
    pub predicted_linear: Option<bool>,
    /// `Some(false)` once an off-diagonal entry is seen; `Some(true)` only
    /// for a complete linear table.
    pub verified_linear: Option<bool>,
    pub betti_window: Option<usize>,
    pub betti_complete: Option<bool>,
    pub minimal_generators: Option<u64>,
    pub is_hypersurface: bool,
    pub dim: usize,
    pub deg: usize,
    pub codeg: usize,
    pub reg_lower: Option<usize>,
    pub witness: Option<Witness>,
    /// Theory violations found while classifying. Empty in practice.
    pub anomalies: Vec<String>,
}

/// Classifies `g`, verifying with the complete Betti table when `verify`.
pub fn classify(g: &SimpleGraph, verify: bool, limits: &Limits) -> Result<ClassificationReport> {
    classify_window(g, verify.then_some(g.n_edges()), limits)
}

/// As [`classify`], verifying with the Betti window `0..=j_max` if given.
pub fn classify_window(g: &SimpleGraph, j_max: Option<usize>, limits: &Limits) -> Result<ClassificationReport> {
    let s = g.structure();
    if s.components != 1 {
        return Err(Error::NotConnected);
    }
    if s.bipartition.is_none() {
        return Err(Error::NonBipartite);
    }
    if s.cycle_rank == 0 {
        return Err(Error::Forest);
    }
    let girth = even_girth(g).ok_or_else(|| Error::Anomaly("cyclic bipartite graph without an even cycle".into()))?;
    let q = girth / 2;
    let theorem_applies = q >= 3;
    let h = hstar_profile(&EdgePolytope::new(g)?, limits)?;
    let mut anomalies = Vec::new();

    let predicted_linear = theorem_applies.then_some(s.cycle_rank == 1);
    let mut report = ClassificationReport {
        n_vertices: g.n_vertices(),
        n_edges: g.n_edges(),
        cycle_rank: s.cycle_rank,
        even_girth: girth,
        q,
        theorem_applies,
        predicted_linear,
        verified_linear: None,
        betti_window: j_max,
        betti_complete: None,
        minimal_generators: None,
        is_hypersurface: s.cycle_rank == 1,
        dim: h.dim,
        deg: h.degree,
        codeg: h.codegree,
        reg_lower: None,
        witness: None,
        anomalies: Vec::new(),
    };

    if let Some(j) = j_max {
        let t = betti_table(g, j, limits)?;
        let (reg, linear) = regularity_and_linearity(&t, q);
        let complete = t.is_complete();
        report.verified_linear = match (linear, complete) {
            (false, _) => Some(false),
            (true, true) => Some(true),
            (true, false) => None,
        };
        report.betti_complete = Some(complete);
        report.reg_lower = Some(reg);
        // every minimal generator has degree at most the edge count
        report.minimal_generators = (j >= g.n_edges()).then(|| t.minimal_generators());
        if complete {
            let gens = t.minimal_generators();
            report.is_hypersurface = gens == 1;
            if (gens == 1) != (s.cycle_rank == 1) {
                anomalies.push(format!("{gens} minimal generators with cycle rank {}", s.cycle_rank));
            }
            if let (Some(p), Some(v)) = (predicted_linear, report.verified_linear) {
                if p != v {
                    anomalies.push(format!("predicted linear = {p}, Betti table says {v}"));
                }
            }
            if reg < h.degree {
                anomalies.push(format!("regularity {reg} is below deg h* = {}", h.degree));
            }
        }
    }

    if theorem_applies && s.cycle_rank >= 2 {
        match extract_witness(g, q, limits) {
            Ok(w) => {
                if report.reg_lower.is_some_and(|r| r < q) && report.betti_complete == Some(true) {
                    anomalies.push(format!("witness forces regularity >= {q}, table gives {:?}", report.reg_lower));
                }
                report.witness = Some(w);
            }
            Err(Error::NoSecondCycle { .. }) => {}
            Err(Error::Anomaly(msg)) => anomalies.push(msg),
            Err(e) => return Err(e),
        }
    }
    report.anomalies = anomalies;
    Ok(report)
}
