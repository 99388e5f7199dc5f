//! The folklore bipartition for odd-degree graphs: repeatedly move any
//! vertex with at least as many neighbors on its own side to the other side.
//! Odd degrees rule out ties, every move raises the cut by at least one, and
//! the cut is capped by `|E|`, so at most `|E|` moves happen.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use super::EngineError;

#[derive(Clone, Debug)]
pub struct FolkloreRun {
    pub a: VertexSet,
    pub b: VertexSet,
    /// Vertices moved before stabilizing; at most `|E|`.
    pub moves: usize,
}

/// Partitions a graph in which every vertex has odd degree into `(A, B)`
/// such that every vertex has strictly more neighbors in the opposite set.
pub fn folklore_partition(g: &Graph) -> Result<FolkloreRun, EngineError> {
    if g.n() == 0 {
        return Err(EngineError::EmptyGraph);
    }
    for v in 0..g.n() {
        if g.degree(v).is_multiple_of(2) {
            return Err(EngineError::EvenDegree(v, g.degree(v)));
        }
    }

    // Deterministic start: everything in B. `in_a[v]` flips as vertices move.
    let mut in_a = vec![false; g.n()];
    let mut moves = 0usize;
    let cut = |in_a: &[bool]| -> usize {
        g.edges()
            .iter()
            .filter(|&&(u, v)| in_a[u] != in_a[v])
            .count()
    };
    let mut current_cut = cut(&in_a);
    loop {
        let bad = (0..g.n()).find(|&v| {
            let same = g
                .neighbors(v)
                .iter()
                .filter(|&&u| in_a[u] == in_a[v])
                .count();
            2 * same > g.degree(v)
        });
        let Some(v) = bad else { break };
        in_a[v] = !in_a[v];
        moves += 1;
        let new_cut = cut(&in_a);
        if new_cut <= current_cut || moves > g.edge_count() {
            return Err(EngineError::Fault {
                detail: format!(
                    "folklore move {moves} on vertex {v} did not raise the cut ({current_cut} -> {new_cut})"
                ),
                trace_json: String::new(),
            });
        }
        current_cut = new_cut;
    }
    let a: VertexSet = (0..g.n()).filter(|&v| in_a[v]).collect();
    let b = a.complement_in(g.n());
    Ok(FolkloreRun { a, b, moves })
}
