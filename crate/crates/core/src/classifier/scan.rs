//! Exhaustive classification of small connected bipartite graphs.

use rayon::prelude::*;
use serde::Serialize;

use super::{classify, connected_bipartite_graphs, ClassificationReport};
use crate::error::{Error, Result};
use crate::graph::format::write_graph;
use crate::graph::{even_girth, SimpleGraph};
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ScanEntry {
    pub n_vertices: usize,
    pub n_edges: usize,
    /// The canonical representative in the graph text format.
    pub graph: String,
    pub q: usize,
    pub cycle_rank: usize,
    pub is_hypersurface: bool,
    pub verified_linear: Option<bool>,
    pub reg_lower: Option<usize>,
    pub anomalies: Vec<String>,
}

impl ScanEntry {
    fn new(g: &SimpleGraph, r: &ClassificationReport) -> ScanEntry {
        ScanEntry {
            n_vertices: r.n_vertices,
            n_edges: r.n_edges,
            graph: write_graph(g),
            q: r.q,
            cycle_rank: r.cycle_rank,
            is_hypersurface: r.is_hypersurface,
            verified_linear: r.verified_linear,
            reg_lower: r.reg_lower,
            anomalies: r.anomalies.clone(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanOrder {
    pub n: usize,
    pub graphs: usize,
    /// Graphs with even girth at least 6.
    pub in_range: usize,
    pub verified: usize,
    pub verified_linear: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub n_max: usize,
    pub verify_budget: usize,
    pub orders: Vec<ScanOrder>,
    pub total_graphs: usize,
    pub in_range: usize,
    /// In-range graphs whose complete Betti table was computed.
    pub verified: usize,
    /// In-range graphs skipped for exceeding the edge budget.
    pub unverified: usize,
    /// In-range graphs with a verified `q`-linear resolution.
    pub linear: Vec<ScanEntry>,
    /// Verified `q`-linear but not a hypersurface.
    pub counterexamples: Vec<ScanEntry>,
    /// Single-cycle in-range graphs whose resolution was not verified linear.
    pub rank_one_not_linear: Vec<ScanEntry>,
    pub anomalies: Vec<ScanEntry>,
}

impl ScanReport {
    /// True when nothing contradicts the theorem.
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty() && self.rank_one_not_linear.is_empty() && self.anomalies.is_empty()
    }
}

/// Classifies every connected bipartite graph on at most `n_max` vertices
/// with even girth at least 6, verifying those with at most `verify_budget`
/// edges.
pub fn scan(n_max: usize, verify_budget: usize, limits: &Limits) -> Result<ScanReport> {
    if n_max > limits.scan_vertices {
        return Err(Error::ScanBudgetExceeded {
            requested: n_max,
            cap: limits.scan_vertices,
        });
    }
    let mut report = ScanReport {
        n_max,
        verify_budget,
        ..ScanReport::default()
    };
    for n in 1..=n_max {
        let graphs = connected_bipartite_graphs(n)?;
        let in_range: Vec<&SimpleGraph> = graphs.iter().filter(|g| even_girth(g).is_some_and(|l| l >= 6)).collect();
        let results = in_range
            .par_iter()
            .map(|g| {
                let verify = g.n_edges() <= verify_budget.min(limits.edges);
                classify(g, verify, limits).map(|r| (ScanEntry::new(g, &r), r.betti_complete == Some(true)))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut order = ScanOrder {
            n,
            graphs: graphs.len(),
            in_range: in_range.len(),
            ..ScanOrder::default()
        };
        for (entry, complete) in results {
            if complete {
                order.verified += 1;
            }
            if entry.verified_linear == Some(true) {
                order.verified_linear += 1;
                if !entry.is_hypersurface {
                    report.counterexamples.push(entry.clone());
                }
                report.linear.push(entry.clone());
            } else if complete && entry.cycle_rank == 1 {
                report.rank_one_not_linear.push(entry.clone());
            }
            if !entry.anomalies.is_empty() {
                report.anomalies.push(entry);
            }
        }
        report.total_graphs += order.graphs;
        report.in_range += order.in_range;
        report.verified += order.verified;
        report.unverified += order.in_range - order.verified;
        report.orders.push(order);
    }
    for list in [
        &mut report.linear,
        &mut report.counterexamples,
        &mut report.rank_one_not_linear,
        &mut report.anomalies,
    ] {
        list.sort();
    }
    Ok(report)
}
