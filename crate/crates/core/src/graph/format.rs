//! Plain-text graph files.
//!
//! ```text
//! # comment
//! p <N> <M>
//! <u> <v>      (M lines, 1 <= u < v <= N)
//! ```

use std::fmt::Write as _;

use super::SimpleGraph;
use crate::error::{Error, Result};

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if fields.len() != 3 || fields[0] != "p" {
                    return Err(err(format!("expected `p <N> <M>`, found `{line}`")));
                }
                let n = parse_int(fields[1]).map_err(err)?;
                let m = parse_int(fields[2]).map_err(err)?;
                if n == 0 {
                    return Err(err("vertex count must be positive".into()));
                }
                header = Some((n, m));
            }
            Some((n, _)) => {
                if fields.len() != 2 {
                    return Err(err(format!("expected `<u> <v>`, found `{line}`")));
                }
                let u = parse_int(fields[0]).map_err(err)?;
                let v = parse_int(fields[1]).map_err(err)?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(format!("edge {u} {v} leaves the range 1..={n}")));
                }
                if u >= v {
                    return Err(err(format!("edge {u} {v} must satisfy u < v")));
                }
                pairs.push((u, v));
                lines.push(line_no);
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing `p <N> <M>` header".into(),
    })?;
    if pairs.len() != m {
        return Err(Error::Parse {
            line: lines.last().copied().unwrap_or(0),
            message: format!("header announces {m} edges, found {}", pairs.len()),
        });
    }
    SimpleGraph::new(n, pairs).map_err(|e| match e {
        Error::DuplicateEdge { index, .. } | Error::LoopEdge { index, .. } => Error::Parse {
            line: lines[index - 1],
            message: e.to_string(),
        },
        other => other,
    })
}

fn parse_int(field: &str) -> std::result::Result<usize, String> {
    field
        .parse::<usize>()
        .map_err(|_| format!("`{field}` is not a nonnegative integer"))
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.n_vertices(), g.n_edges()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
