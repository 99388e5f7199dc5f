//! Brute-force ground truth at desk scale: exhaustive MaxCut, exhaustive
//! decomposition enumeration, and Monte-Carlo randomized rounding.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::circle::Configuration;
use crate::engine::Decomposition;
use crate::graph::Graph;
use crate::scalar::Rational;
use crate::vertex_set::VertexSet;

#[derive(Error, Debug)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("need at least one sample")]
    NoSamples,
    #[error("configuration has {config} angles for {graph} vertices")]
    SizeMismatch { config: usize, graph: usize },
}

/// Default vertex cap for the `2^(n-1)` MaxCut sweep.
pub const DEFAULT_MAXCUT_CAP: usize = 28;

/// Default vertex cap for the `3^n` decomposition enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 14;

/// Masks are `u64`-backed, so the sweeps cannot go past this many vertices.
const HARD_MASK_LIMIT: usize = 48;

/// An oracle answer with the size of the search space it examined.
#[derive(Clone, Debug)]
pub struct OracleResult<T> {
    pub value: T,
    pub instances_examined: usize,
    pub elapsed: Duration,
}

/// Exhaustive MaxCut over all `2^(n-1)` bipartitions with vertex 0 pinned to
/// side A, walked in Gray-code order with O(1) incremental cut updates.
/// Ties prefer the lexicographically smallest A (as a sorted vertex list).
pub fn maxcut_bruteforce(
    g: &Graph,
    cap: Option<usize>,
) -> Result<OracleResult<(usize, VertexSet)>, OracleError> {
    let n = g.n();
    if n == 0 {
        return Err(OracleError::EmptyGraph);
    }
    let cap = cap.unwrap_or(DEFAULT_MAXCUT_CAP).min(HARD_MASK_LIMIT);
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    let start = Instant::now();
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u)))
        .collect();
    let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };

    // side bit set = vertex in A; start with A = {0, .., n-1}? No: Gray code
    // starts at A = everything on one side with vertex 0 fixed in A.
    let mut side: u64 = 1; // A = {0}
    let mut cut: i64 = g.neighbors(0).len() as i64;
    let mut best_cut = cut;
    let mut best_mask = side;
    let total = 1usize << (n - 1);
    for i in 1..total {
        let v = (i.trailing_zeros() as usize) + 1; // vertex 0 never flips
        let in_a = side & (1 << v) != 0;
        let same_mask = if in_a { side } else { !side & full };
        let same = (adj[v] & same_mask).count_ones() as i64;
        let opposite = g.degree(v) as i64 - same;
        // Moving v to the other side cuts its same-side edges and mends the
        // others.
        cut += same - opposite;
        side ^= 1 << v;
        if cut > best_cut || (cut == best_cut && lex_less(side, best_mask, n)) {
            best_cut = cut;
            best_mask = side;
        }
    }

    let a: VertexSet = (0..n).filter(|&v| best_mask & (1 << v) != 0).collect();
    Ok(OracleResult {
        value: (best_cut as usize, a),
        instances_examined: total,
        elapsed: start.elapsed(),
    })
}

/// True iff mask `a`, read as a sorted vertex list, is lexicographically
/// smaller than `b`.
fn lex_less(a: u64, b: u64, n: usize) -> bool {
    let list = |m: u64| (0..n).filter(move |&v| m & (1 << v) != 0);
    list(a).cmp(list(b)) == std::cmp::Ordering::Less
}

/// Everything `enumerate_decompositions` finds, with the total independent
/// of any output cap.
#[derive(Clone, Debug)]
pub struct EnumerationOutcome {
    pub total: usize,
    /// Valid decompositions in lexicographic assignment order (A < B < C per
    /// vertex), truncated to the requested limit.
    pub decompositions: Vec<Decomposition>,
}

/// All assignments `V -> {A, B, C}` that pass the property checks, by
/// depth-first search over vertices in id order. Intra-C edges prune
/// subtrees; the remaining properties are finalized per vertex as soon as
/// its last neighbor is assigned. Survivors are confirmed against
/// [`crate::verify::check_properties`].
pub fn enumerate_decompositions(
    g: &Graph,
    cap: Option<usize>,
    limit: Option<usize>,
) -> Result<OracleResult<EnumerationOutcome>, OracleError> {
    let n = g.n();
    if n == 0 {
        return Err(OracleError::EmptyGraph);
    }
    let cap = cap.unwrap_or(DEFAULT_ENUMERATION_CAP);
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    let start = Instant::now();
    let limit = limit.unwrap_or(usize::MAX);

    // finalize_at[v]: vertices whose neighborhood completes when v is
    // assigned, i.e. those u with max(u, max neighbor of u) = v.
    let mut finalize_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for u in 0..n {
        let last = g.neighbors(u).iter().copied().max().unwrap_or(0).max(u);
        finalize_at[last].push(u);
    }

    struct Search<'g> {
        g: &'g Graph,
        finalize_at: Vec<Vec<usize>>,
        assign: Vec<u8>, // 0 = A, 1 = B, 2 = C
        d: [Vec<i64>; 3],
        total: usize,
        limit: usize,
        out: Vec<Decomposition>,
    }

    impl Search<'_> {
        fn vertex_ok(&self, v: usize) -> bool {
            let (da, db, dc) = (self.d[0][v], self.d[1][v], self.d[2][v]);
            match self.assign[v] {
                0 => db >= da + 1.max(dc),
                1 => da >= db + 1.max(dc),
                _ => dc == 0 && da == db,
            }
        }

        fn dfs(&mut self, v: usize) {
            if v == self.g.n() {
                let mut d = Decomposition {
                    a: VertexSet::new(),
                    b: VertexSet::new(),
                    c: VertexSet::new(),
                };
                for (u, &side) in self.assign.iter().enumerate() {
                    match side {
                        0 => d.a.insert(u),
                        1 => d.b.insert(u),
                        _ => d.c.insert(u),
                    }
                }
                // The incremental checks already enforce everything; the
                // full report is the independent confirmation.
                let confirmed = crate::verify::check_properties(self.g, &d)
                    .map(|r| r.pass())
                    .unwrap_or(false);
                assert!(confirmed, "pruned search accepted an invalid assignment");
                self.total += 1;
                if self.out.len() < self.limit {
                    self.out.push(d);
                }
                return;
            }
            for side in 0u8..3 {
                if side == 2
                    && self
                        .g
                        .neighbors(v)
                        .iter()
                        .any(|&u| u < v && self.assign[u] == 2)
                {
                    // Property (3): no two C vertices share an edge.
                    continue;
                }
                self.assign[v] = side;
                for &u in self.g.neighbors(v) {
                    self.d[side as usize][u] += 1;
                }
                let ok = self.finalize_at[v].iter().all(|&u| self.vertex_ok(u));
                if ok {
                    self.dfs(v + 1);
                }
                for &u in self.g.neighbors(v) {
                    self.d[side as usize][u] -= 1;
                }
            }
        }
    }

    let mut search = Search {
        g,
        finalize_at,
        assign: vec![0; n],
        d: [vec![0; n], vec![0; n], vec![0; n]],
        total: 0,
        limit,
        out: Vec::new(),
    };
    search.dfs(0);

    Ok(OracleResult {
        value: EnumerationOutcome {
            total: search.total,
            decompositions: search.out,
        },
        instances_examined: 3usize.pow(n as u32),
        elapsed: start.elapsed(),
    })
}

/// Cut value of the partition induced by the diameter at `u` turns: side one
/// is the half-open arc `[u, u + 1/2)` (mod 1). Angles are turns in `[0, 1)`.
pub(crate) fn cut_for_line(g: &Graph, turns: &[f64], u: f64) -> usize {
    let side = |a: f64| -> bool { (a - u).rem_euclid(1.0) < 0.5 };
    g.edges()
        .iter()
        .filter(|&&(x, y)| side(turns[x]) != side(turns[y]))
        .count()
}

/// Monte-Carlo randomized rounding: draws `samples` uniform diameters and
/// returns the mean cut and the unbiased sample variance.
pub fn monte_carlo_round<R: Rational>(
    g: &Graph,
    c: &Configuration<R>,
    samples: usize,
    seed: u64,
) -> Result<OracleResult<(f64, f64)>, OracleError> {
    if samples == 0 {
        return Err(OracleError::NoSamples);
    }
    if c.len() != g.n() {
        return Err(OracleError::SizeMismatch {
            config: c.len(),
            graph: g.n(),
        });
    }
    let start = Instant::now();
    let turns: Vec<f64> = c.angles().iter().map(|a| a.approx_f64()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sum = 0.0f64;
    let mut sum_sq = 0.0f64;
    for _ in 0..samples {
        let u: f64 = rng.gen();
        let cut = cut_for_line(g, &turns, u) as f64;
        sum += cut;
        sum_sq += cut * cut;
    }
    let k = samples as f64;
    let mean = sum / k;
    let variance = if samples > 1 {
        (sum_sq - k * mean * mean).max(0.0) / (k - 1.0)
    } else {
        0.0
    };
    Ok(OracleResult {
        value: (mean, variance),
        instances_examined: samples,
        elapsed: start.elapsed(),
    })
}
