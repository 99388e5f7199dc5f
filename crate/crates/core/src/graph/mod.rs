//! Simple undirected graphs: representation, validation, parsing and
//! generation, plus the edge-counting queries used by every other module.

mod generate;
mod parse;

pub use generate::{generate, GeneratorSpec, RANDOM_RETRY_LIMIT};
pub use parse::{parse_dimacs, parse_edge_list};

use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Error, Debug)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid generator parameters: {0}")]
    InvalidSpec(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("no connected sample found after {0} attempts")]
    RetriesExhausted(usize),
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted, edges are stored normalized (`u < v`) and
/// deduplicated, and the maximum degree is cached. Construction validates
/// against self-loops; duplicate edges are silently dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    max_degree: usize,
}

impl Graph {
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut set = std::collections::BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        Ok(Self {
            n,
            edges,
            adj,
            max_degree,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges normalized as `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// All vertices as a set.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// True iff a traversal from vertex 0 reaches every vertex. The empty
    /// graph is rejected; a single vertex is connected.
    pub fn is_connected(&self) -> Result<bool, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        Ok(count == self.n)
    }

    /// Number of edges with one endpoint in `x` and the other in `y`.
    ///
    /// The sets may overlap; an edge inside the intersection is counted once,
    /// so `cross_edges(a, a)` is the number of edges internal to `a`.
    pub fn cross_edges(&self, x: &VertexSet, y: &VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| (x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u)))
            .count()
    }

    /// `|adj(v) ∩ s|`.
    pub fn degree_into(&self, v: usize, s: &VertexSet) -> Result<usize, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(self.adj[v].iter().filter(|&&u| s.contains(u)).count())
    }

    /// Edge-list rendering, one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// DIMACS rendering with a `p edge n m` header and 1-based ids.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }
}
