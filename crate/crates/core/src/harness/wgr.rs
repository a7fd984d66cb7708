//! The `.wgr` text format.
//!
//! ```text
//! # comment
//! vertex <name> <mass>
//! edge <name> <name> <conductance>
//! boundary <name>
//! ```
//!
//! Vertex ids follow declaration order. Edges and boundary lines may name
//! vertices declared later in the file. Numbers are decimal doubles; written
//! files use the shortest representation that parses back to the same bits.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, VertexSet, WeightedGraph};

/// A parsed `.wgr` file.
#[derive(Debug, Clone, PartialEq)]
pub struct WgrFile {
    pub graph: WeightedGraph,
    pub boundary: Option<VertexSet>,
}

fn parse_number(token: &str, line: usize) -> Result<f64> {
    match token.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(Error::Parse {
            line,
            reason: format!("invalid number `{token}`"),
        }),
    }
}

fn arity(tokens: &[&str], want: usize, line: usize) -> Result<()> {
    if tokens.len() == want {
        Ok(())
    } else {
        Err(Error::Parse {
            line,
            reason: format!("`{}` takes {} arguments, found {}", tokens[0], want - 1, tokens.len() - 1),
        })
    }
}

pub fn parse_wgr(text: &str) -> Result<WgrFile> {
    let mut names: Vec<String> = Vec::new();
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut masses = Vec::new();
    let mut edge_lines: Vec<(&str, &str, f64, usize)> = Vec::new();
    let mut boundary_lines: Vec<(&str, usize)> = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens[0] {
            "vertex" => {
                arity(&tokens, 3, line)?;
                let name = tokens[1];
                if ids.contains_key(name) {
                    return Err(Error::DuplicateVertex {
                        name: name.to_string(),
                        line,
                    });
                }
                masses.push(parse_number(tokens[2], line)?);
                ids.insert(name, names.len());
                names.push(name.to_string());
            }
            "edge" => {
                arity(&tokens, 4, line)?;
                edge_lines.push((tokens[1], tokens[2], parse_number(tokens[3], line)?, line));
            }
            "boundary" => {
                arity(&tokens, 2, line)?;
                boundary_lines.push((tokens[1], line));
            }
            other => {
                return Err(Error::Parse {
                    line,
                    reason: format!("unknown directive `{other}`"),
                })
            }
        }
    }

    let resolve = |name: &str, line: usize| {
        ids.get(name).copied().ok_or_else(|| Error::UnknownVertex {
            name: name.to_string(),
            line,
        })
    };
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(edge_lines.len());
    for &(a, b, conductance, line) in &edge_lines {
        let (u, v) = (resolve(a, line)?, resolve(b, line)?);
        if u != v && !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdgeDecl {
                a: a.to_string(),
                b: b.to_string(),
                line,
            });
        }
        edges.push(Edge::new(u, v, conductance));
    }
    let mut boundary = Vec::new();
    for &(name, line) in &boundary_lines {
        let v = resolve(name, line)?;
        if boundary.contains(&v) {
            return Err(Error::Parse {
                line,
                reason: format!("boundary vertex `{name}` listed twice"),
            });
        }
        boundary.push(v);
    }

    let n = names.len();
    let graph = WeightedGraph::new(masses, edges)?.with_labels(names)?;
    let boundary = if boundary_lines.is_empty() {
        None
    } else {
        Some(VertexSet::new(boundary, n)?)
    };
    Ok(WgrFile { graph, boundary })
}

/// Labels usable as `.wgr` names, or `v{id}` for every vertex when the
/// graph's own labels are missing, duplicated or contain whitespace.
fn writable_labels(graph: &WeightedGraph) -> Vec<String> {
    let fallback = || (0..graph.vertex_count()).map(|v| format!("v{v}")).collect();
    let Some(labels) = graph.labels() else {
        return fallback();
    };
    let mut seen = HashSet::new();
    let ok = labels.iter().all(|l| {
        !l.is_empty() && !l.starts_with('#') && !l.contains(char::is_whitespace) && seen.insert(l.as_str())
    });
    if ok {
        labels.to_vec()
    } else {
        fallback()
    }
}

pub fn write_wgr(graph: &WeightedGraph, boundary: Option<&VertexSet>) -> String {
    let labels = writable_labels(graph);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {} vertices, {} edges",
        graph.vertex_count(),
        graph.edge_count()
    );
    for (v, label) in labels.iter().enumerate() {
        let _ = writeln!(out, "vertex {label} {:?}", graph.mass(v));
    }
    for e in graph.edges() {
        let _ = writeln!(out, "edge {} {} {:?}", labels[e.u], labels[e.v], e.conductance);
    }
    if let Some(boundary) = boundary {
        for v in boundary.iter() {
            let _ = writeln!(out, "boundary {}", labels[v]);
        }
    }
    out
}
