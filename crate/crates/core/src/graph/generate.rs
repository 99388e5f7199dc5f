//! Named and random graph generators.

use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError};

/// How many resamples random generators attempt before giving up on finding
/// a connected (and, for regular graphs, simple) sample.
pub const RANDOM_RETRY_LIMIT: usize = 1000;

/// A graph to generate. Random variants are reproducible from their seed.
#[derive(Clone, Debug, PartialEq)]
pub enum GeneratorSpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    /// `k` triangles sharing vertex 0; spokes of triangle `i` are
    /// `2i+1, 2i+2`.
    Friendship(usize),
    Petersen,
    Frucht,
    Thomassen32,
    Gnp {
        n: usize,
        p: f64,
        seed: u64,
    },
    RandomRegular {
        n: usize,
        degree: usize,
        seed: u64,
    },
}

impl GeneratorSpec {
    /// Replaces the seed of a random spec; no-op for deterministic specs.
    pub fn with_seed(self, seed: u64) -> Self {
        match self {
            Self::Gnp { n, p, .. } => Self::Gnp { n, p, seed },
            Self::RandomRegular { n, degree, .. } => Self::RandomRegular { n, degree, seed },
            other => other,
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = GraphError;

    /// Accepts `complete:N`, `cycle:N`, `path:N`, `friendship:K`,
    /// `petersen`, `frucht`, `thomassen32`, `gnp:N:P`, `regular:N:D`.
    fn from_str(s: &str) -> Result<Self, GraphError> {
        let bad = |msg: String| GraphError::InvalidSpec(msg);
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or("");
        let args: Vec<&str> = parts.collect();
        let usize_arg = |i: usize| -> Result<usize, GraphError> {
            args.get(i)
                .and_then(|a| a.parse().ok())
                .ok_or_else(|| bad(format!("`{s}` needs an integer argument")))
        };
        match (name, args.len()) {
            ("complete", 1) => Ok(Self::Complete(usize_arg(0)?)),
            ("cycle", 1) => Ok(Self::Cycle(usize_arg(0)?)),
            ("path", 1) => Ok(Self::Path(usize_arg(0)?)),
            ("friendship", 1) => Ok(Self::Friendship(usize_arg(0)?)),
            ("petersen", 0) => Ok(Self::Petersen),
            ("frucht", 0) => Ok(Self::Frucht),
            ("thomassen32", 0) => Ok(Self::Thomassen32),
            ("gnp", 2) => {
                let n = usize_arg(0)?;
                let p: f64 = args[1]
                    .parse()
                    .map_err(|_| bad(format!("invalid probability `{}`", args[1])))?;
                Ok(Self::Gnp { n, p, seed: 0 })
            }
            ("regular", 2) => Ok(Self::RandomRegular {
                n: usize_arg(0)?,
                degree: usize_arg(1)?,
                seed: 0,
            }),
            _ => Err(bad(format!("unknown generator `{s}`"))),
        }
    }
}

impl std::fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Complete(n) => write!(f, "complete:{n}"),
            Self::Cycle(n) => write!(f, "cycle:{n}"),
            Self::Path(n) => write!(f, "path:{n}"),
            Self::Friendship(k) => write!(f, "friendship:{k}"),
            Self::Petersen => write!(f, "petersen"),
            Self::Frucht => write!(f, "frucht"),
            Self::Thomassen32 => write!(f, "thomassen32"),
            Self::Gnp { n, p, .. } => write!(f, "gnp:{n}:{p}"),
            Self::RandomRegular { n, degree, .. } => write!(f, "regular:{n}:{degree}"),
        }
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GraphError> {
    let bad = |msg: String| GraphError::InvalidSpec(msg);
    match *spec {
        GeneratorSpec::Complete(n) => {
            if n < 1 {
                return Err(bad("complete graph needs n >= 1".into()));
            }
            let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
            Graph::from_edges(n, edges)
        }
        GeneratorSpec::Cycle(n) => {
            if n < 3 {
                return Err(bad("cycle needs n >= 3".into()));
            }
            Graph::from_edges(n, (0..n).map(|u| (u, (u + 1) % n)))
        }
        GeneratorSpec::Path(n) => {
            if n < 1 {
                return Err(bad("path needs n >= 1".into()));
            }
            Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
        }
        GeneratorSpec::Friendship(k) => {
            if k < 1 {
                return Err(bad("friendship graph needs k >= 1".into()));
            }
            let edges = (0..k).flat_map(|i| {
                let (a, b) = (2 * i + 1, 2 * i + 2);
                [(0, a), (0, b), (a, b)]
            });
            Graph::from_edges(2 * k + 1, edges)
        }
        GeneratorSpec::Petersen => {
            let edges = (0..5).flat_map(|i| {
                [
                    (i, (i + 1) % 5),         // outer cycle
                    (i, i + 5),               // spoke
                    (5 + i, 5 + (i + 2) % 5), // inner pentagram
                ]
            });
            Graph::from_edges(10, edges)
        }
        GeneratorSpec::Frucht => {
            // LCF notation on a 12-cycle.
            lcf(12, &[-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2])
        }
        GeneratorSpec::Thomassen32 => {
            // Fixed 4-regular test graph on 32 vertices: the circulant
            // C32(1, 6).
            let n = 32usize;
            let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, (i + 6) % n)]);
            Graph::from_edges(n, edges)
        }
        GeneratorSpec::Gnp { n, p, seed } => {
            if n < 1 {
                return Err(bad("gnp needs n >= 1".into()));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(bad(format!("gnp probability {p} outside [0, 1]")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..RANDOM_RETRY_LIMIT {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in (u + 1)..n {
                        if rng.gen::<f64>() < p {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::from_edges(n, edges)?;
                if g.is_connected()? {
                    return Ok(g);
                }
            }
            Err(GraphError::RetriesExhausted(RANDOM_RETRY_LIMIT))
        }
        GeneratorSpec::RandomRegular { n, degree, seed } => {
            if n < 1 {
                return Err(bad("regular graph needs n >= 1".into()));
            }
            if degree >= n && !(n == 1 && degree == 0) {
                return Err(bad(format!("degree {degree} too large for n = {n}")));
            }
            if (n * degree) % 2 == 1 {
                return Err(bad(format!("n*d = {} is odd", n * degree)));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..RANDOM_RETRY_LIMIT {
                if let Some(g) = pairing_model_sample(n, degree, &mut rng)? {
                    if g.is_connected()? {
                        return Ok(g);
                    }
                }
            }
            Err(GraphError::RetriesExhausted(RANDOM_RETRY_LIMIT))
        }
    }
}

/// One pairing-model draw; `None` when the pairing has a loop or a repeated
/// edge and must be redrawn.
fn pairing_model_sample(
    n: usize,
    degree: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Option<Graph>, GraphError> {
    let mut stubs: Vec<usize> = (0..n)
        .flat_map(|v| std::iter::repeat_n(v, degree))
        .collect();
    stubs.shuffle(rng);
    let mut seen = std::collections::BTreeSet::new();
    for pair in stubs.chunks(2) {
        let (u, v) = (pair[0], pair[1]);
        if u == v || !seen.insert((u.min(v), u.max(v))) {
            return Ok(None);
        }
    }
    Ok(Some(Graph::from_edges(n, seen)?))
}

/// Hamiltonian cycle `0..n` plus chords `i -> i + shift[i] (mod n)`.
fn lcf(n: usize, shifts: &[i64]) -> Result<Graph, GraphError> {
    assert_eq!(shifts.len(), n);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|u| (u, (u + 1) % n)).collect();
    for (i, &s) in shifts.iter().enumerate() {
        let j = (i as i64 + s).rem_euclid(n as i64) as usize;
        edges.push((i, j));
    }
    Graph::from_edges(n, edges)
}
