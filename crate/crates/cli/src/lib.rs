//! Command implementations behind the `edgering` binary. Each command
//! produces a JSON record and an exit code; rendering is left to the caller.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use edgering::classifier::{classify_window, lemma_witness, scan};
use edgering::graph::format::parse_graph;
use edgering::graph::Side;
use edgering::{
    betti_table, hstar_profile, ideal_generators, EdgePolytope, Error, FamilyKind, FamilySpec, Limits, SimpleGraph,
};
use serde_json::{json, Value};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_BUDGET: u8 = 2;
pub const EXIT_ANOMALY: u8 = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub record: Value,
    pub code: u8,
}

impl Outcome {
    fn ok(record: Value) -> Outcome {
        Outcome { record, code: EXIT_OK }
    }

    fn flagged(record: Value, clean: bool) -> Outcome {
        let code = if clean { EXIT_OK } else { EXIT_ANOMALY };
        Outcome { record, code }
    }
}

#[derive(Debug)]
pub enum CliError {
    Io(String, std::io::Error),
    Core(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(..) => EXIT_INPUT,
            CliError::Core(e) if e.is_budget() => EXIT_BUDGET,
            CliError::Core(e) if e.is_anomaly() => EXIT_ANOMALY,
            CliError::Core(Error::EmptyPolytope | Error::DimensionMismatch { .. }) => EXIT_BUDGET,
            CliError::Core(_) => EXIT_INPUT,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn read_graph(path: &Path) -> CliResult<SimpleGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    Ok(parse_graph(&text)?)
}

/// Structure, polytope and ideal summary of a graph.
pub fn analyze(g: &SimpleGraph, limits: &Limits) -> CliResult<Outcome> {
    let s = g.structure();
    let bipartition = s.bipartition.as_ref().map(|b| {
        (1..=g.n_vertices())
            .map(|v| match b.side(v) {
                Side::Left => "L",
                Side::Right => "R",
            })
            .collect::<Vec<_>>()
    });
    let mut notices = Vec::new();
    if s.cycle_rank == 0 {
        notices.push("forest: the toric ideal is zero and the edge polytope is a simplex");
    }
    let geometry = if g.n_edges() == 0 {
        notices.push("no edges: the edge polytope is empty");
        json!({ "dim": -1, "hstar": [1], "deg": 0, "codeg": 0, "normalized_volume": 1 })
    } else {
        let h = hstar_profile(&EdgePolytope::new(g)?, limits)?;
        json!({
            "dim": h.dim,
            "hstar": serde_json::to_value(&h)?["hstar"],
            "deg": h.degree,
            "codeg": h.codegree,
            "normalized_volume": serde_json::to_value(&h)?["normalized_volume"],
        })
    };
    let generators = if s.bipartition.is_some() {
        let gens = ideal_generators(g, limits)?;
        let mut by_degree: BTreeMap<String, usize> = BTreeMap::new();
        for f in &gens {
            *by_degree.entry(f.degree.to_string()).or_default() += 1;
        }
        json!({ "count": gens.len(), "by_degree": by_degree })
    } else {
        Value::Null
    };
    let mut record = json!({
        "n_vertices": g.n_vertices(),
        "n_edges": g.n_edges(),
        "components": s.components,
        "c0": s.bipartite_components,
        "bipartition": bipartition,
        "cycle_rank": s.cycle_rank,
        "even_girth": edgering::graph::even_girth(g),
        "generators": generators,
        "notices": notices,
    });
    merge(&mut record, geometry);
    Ok(Outcome::ok(record))
}

/// Betti table over `0..=j_max`, defaulting to the complete window.
pub fn betti(g: &SimpleGraph, j_max: Option<usize>, limits: &Limits) -> CliResult<Outcome> {
    let t = betti_table(g, j_max.unwrap_or(g.n_edges()), limits)?;
    Ok(Outcome::ok(serde_json::to_value(&t)?))
}

pub fn classify(g: &SimpleGraph, verify: bool, j_max: Option<usize>, limits: &Limits) -> CliResult<Outcome> {
    let window = verify.then(|| j_max.unwrap_or(g.n_edges()));
    let r = classify_window(g, window, limits)?;
    let clean = r.anomalies.is_empty();
    Ok(Outcome::flagged(serde_json::to_value(&r)?, clean))
}

pub fn family_spec(kind: FamilyKind, q: usize, k: Option<usize>, m: Option<usize>) -> CliResult<FamilySpec> {
    let ear = matches!(kind, FamilyKind::EvenEar | FamilyKind::OddEar);
    if ear && (k.is_none() || m.is_none()) {
        return Err(Error::InvalidFamilyParameters(format!("{kind:?} needs both k and m")).into());
    }
    Ok(FamilySpec::new(kind, q, k.unwrap_or(0), m.unwrap_or(0))?)
}

/// Re-derives a family's interior point; exit 3 if any check fails.
pub fn lemma(spec: &FamilySpec, limits: &Limits) -> CliResult<Outcome> {
    let r = lemma_witness(spec, limits)?;
    let passed = r.passed;
    Ok(Outcome::flagged(serde_json::to_value(&r)?, passed))
}

pub fn scan_graphs(n_max: usize, verify_budget: usize, limits: &Limits) -> CliResult<Outcome> {
    let r = scan(n_max, verify_budget, limits)?;
    let clean = r.is_clean();
    Ok(Outcome::flagged(serde_json::to_value(&r)?, clean))
}

pub fn family(spec: &FamilySpec) -> CliResult<String> {
    Ok(edgering::graph::format::write_graph(&spec.build()?))
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Core(Error::Anomaly(format!("serialization failed: {e}")))
    }
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

/// Keys are sorted because `serde_json` maps are ordered.
pub fn render_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values always serialize")
}

/// `key: value` lines, with Betti tables drawn as a grid.
pub fn render_table(v: &Value) -> String {
    let mut out = String::new();
    let Value::Object(map) = v else {
        let _ = writeln!(out, "{v}");
        return out;
    };
    if let (Some(Value::Array(entries)), Some(j_max)) = (map.get("entries"), map.get("j_max")) {
        return betti_grid(entries, j_max.as_u64().unwrap_or(0), map.get("complete"));
    }
    for (k, val) in map {
        match val {
            Value::String(s) if s.contains('\n') => {
                let _ = writeln!(out, "{k}:");
                for line in s.lines() {
                    let _ = writeln!(out, "    {line}");
                }
            }
            Value::String(s) => {
                let _ = writeln!(out, "{k}: {s}");
            }
            other => {
                let _ = writeln!(out, "{k}: {other}");
            }
        }
    }
    out
}

fn betti_grid(entries: &[Value], j_max: u64, complete: Option<&Value>) -> String {
    // rows j - i, columns i, as in the usual Betti diagram
    let mut cells = BTreeMap::new();
    let mut max_i = 0;
    let mut max_row = 0;
    for e in entries {
        let (i, j, b) = (e[0].as_u64().unwrap(), e[1].as_u64().unwrap(), e[2].as_u64().unwrap());
        cells.insert((j - i, i), b);
        max_i = max_i.max(i);
        max_row = max_row.max(j - i);
    }
    cells.insert((0, 0), 1);
    let mut out = String::new();
    let _ = write!(out, "{:>4}", "");
    for i in 0..=max_i {
        let _ = write!(out, "{i:>6}");
    }
    out.push('\n');
    for row in 0..=max_row {
        let _ = write!(out, "{row:>3}:");
        for i in 0..=max_i {
            match cells.get(&(row, i)) {
                Some(b) => {
                    let _ = write!(out, "{b:>6}");
                }
                None => {
                    let _ = write!(out, "{:>6}", "-");
                }
            }
        }
        out.push('\n');
    }
    let _ = writeln!(out, "window j <= {j_max}, complete: {}", complete.unwrap_or(&Value::Bool(false)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use edgering::graph_from_edges;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Core(Error::Parse { line: 2, message: String::new() }).exit_code(), EXIT_INPUT);
        assert_eq!(CliError::Core(Error::ScanBudgetExceeded { requested: 20, cap: 9 }).exit_code(), EXIT_BUDGET);
        assert_eq!(CliError::Core(Error::Anomaly(String::new())).exit_code(), EXIT_ANOMALY);
    }

    #[test]
    fn grid_layout() {
        let g = graph_from_edges(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        let out = betti(&g, Some(4), &Limits::default()).unwrap();
        let grid = render_table(&out.record);
        assert_eq!(
            grid,
            "         0     1     2\n  0:     1     -     -\n  1:     -     3     2\nwindow j <= 4, complete: false\n"
        );
    }
}
