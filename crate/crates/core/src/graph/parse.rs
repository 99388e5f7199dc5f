//! Edge-list and DIMACS parsers.
//!
//! Edge-list format: UTF-8 lines `u v` with 0-based ids, `#` starts a
//! comment, blank lines ignored. DIMACS: `c` comment lines, one
//! `p edge n m` line, then `m` lines `e u v` with 1-based ids.

use super::{Graph, GraphError};

fn parse_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses a whitespace-separated edge list. Vertex count is `1 + max id`;
/// duplicate edges are tolerated and deduplicated; self-loops are errors.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut max_id = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(parse_err(lineno, format!("expected `u v`, got `{line}`"))),
        };
        let u: usize = u
            .parse()
            .map_err(|_| parse_err(lineno, format!("invalid vertex id `{u}`")))?;
        let v: usize = v
            .parse()
            .map_err(|_| parse_err(lineno, format!("invalid vertex id `{v}`")))?;
        if u == v {
            return Err(parse_err(lineno, format!("self-loop at vertex {u}")));
        }
        max_id = Some(max_id.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }
    let n = max_id.map_or(0, |m| m + 1);
    Graph::from_edges(n, edges)
}

/// Parses DIMACS edge format. Isolated vertices are allowed; connectivity is
/// checked separately by consumers that need it.
pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut edge_lines = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(lineno, "duplicate problem line"));
                }
                let fmt = parts.next().unwrap_or("");
                if fmt != "edge" {
                    return Err(parse_err(
                        lineno,
                        format!("expected `p edge`, got `p {fmt}`"),
                    ));
                }
                let n = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| parse_err(lineno, "invalid vertex count"))?;
                let m = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| parse_err(lineno, "invalid edge count"))?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(lineno, "edge before problem line"))?;
                let u: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| parse_err(lineno, "invalid edge endpoint"))?;
                let v: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| parse_err(lineno, "invalid edge endpoint"))?;
                for w in [u, v] {
                    if w < 1 || w > n {
                        return Err(parse_err(lineno, format!("vertex id {w} outside [1, {n}]")));
                    }
                }
                if u == v {
                    return Err(parse_err(lineno, format!("self-loop at vertex {u}")));
                }
                edge_lines += 1;
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(parse_err(
                    lineno,
                    format!("unrecognized line kind `{other}`"),
                ))
            }
            None => unreachable!("non-empty line"),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing problem line"))?;
    if edge_lines != m {
        return Err(parse_err(
            0,
            format!("problem line declares {m} edges, found {edge_lines}"),
        ));
    }
    Graph::from_edges(n, edges)
}
