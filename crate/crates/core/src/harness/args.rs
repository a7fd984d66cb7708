use crate::error::{Error, Result};
use crate::graph::{VertexSet, WeightedGraph};

use super::suite::Suite;

/// Resolves a comma-separated list of vertex labels.
pub fn parse_vertex_list(graph: &WeightedGraph, list: &str) -> Result<VertexSet> {
    let n = graph.vertex_count();
    let labels: Vec<String> = (0..n).map(|v| graph.label(v)).collect();
    let mut ids = Vec::new();
    for name in list.split(',').map(str::trim) {
        if name.is_empty() {
            return Err(Error::InvalidArgument(format!("empty vertex name in `{list}`")));
        }
        let v = labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))?;
        ids.push(v);
    }
    VertexSet::new(ids, n)
}

/// Parses `lo,hi` with `0 < lo <= hi`, both finite.
pub fn parse_range(text: &str) -> Result<(f64, f64)> {
    let bad = || Error::InvalidArgument(format!("expected `lo,hi`, found `{text}`"));
    let (lo, hi) = text.split_once(',').ok_or_else(bad)?;
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    if !(lo > 0.0 && lo <= hi && hi.is_finite()) {
        return Err(Error::BadRange(lo, hi));
    }
    Ok((lo, hi))
}

/// Parses `all` or a comma-separated list of suite names, keeping the
/// canonical suite order and dropping repeats.
pub fn parse_suites(text: &str) -> Result<Vec<Suite>> {
    if text.trim() == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    let mut wanted = Vec::new();
    for name in text.split(',').map(str::trim) {
        let suite = Suite::from_name(name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{name}`")))?;
        wanted.push(suite);
    }
    Ok(Suite::ALL.iter().copied().filter(|s| wanted.contains(s)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path_graph;

    #[test]
    fn vertex_lists() {
        let g = path_graph(&[1.0; 3], &[1.0; 2]).unwrap();
        assert_eq!(parse_vertex_list(&g, "v2,v0").unwrap().members(), &[0, 2]);
        assert_eq!(parse_vertex_list(&g, "v1").unwrap(), VertexSet::singleton(1));
        assert_eq!(
            parse_vertex_list(&g, "v0,v9").unwrap_err(),
            Error::UnknownLabel("v9".into())
        );
        assert!(parse_vertex_list(&g, "v0,,v1").is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0.1,10").unwrap(), (0.1, 10.0));
        assert_eq!(parse_range(" 2 , 2 ").unwrap(), (2.0, 2.0));
        assert!(parse_range("3,1").is_err());
        assert!(parse_range("0,1").is_err());
        assert!(parse_range("1").is_err());
        assert!(parse_range("1,inf").is_err());
        assert!(parse_range("a,b").is_err());
    }

    #[test]
    fn suites() {
        assert_eq!(parse_suites("all").unwrap(), Suite::ALL.to_vec());
        assert_eq!(
            parse_suites("pinch,neumann,pinch").unwrap(),
            vec![Suite::Neumann, Suite::Pinch]
        );
        assert!(parse_suites("bogus").is_err());
    }
}
