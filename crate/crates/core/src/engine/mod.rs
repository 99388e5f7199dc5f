//! The descent engine: alternating rotation and refinement phases that turn
//! any starting configuration into a valid A/B/C decomposition, recording a
//! replayable trace with exact energies.

mod folklore;
mod refine;
mod rotation;
mod trace;

pub use folklore::{folklore_partition, FolkloreRun};
pub use refine::{refine_antipodal, RefineOutcome};
pub use rotation::{collision_delta, rotate_to_antipodal, rotation_imbalance};
pub use trace::{DescentTrace, Direction, StepData, StepKind, TraceStep};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::circle::{energy, Angle, Configuration};
use crate::graph::Graph;
use crate::scalar::Rational;
use crate::vertex_set::VertexSet;

#[derive(Error, Debug)]
pub enum EngineError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not connected")]
    NotConnected,
    #[error("initial configuration has {config} angles for {graph} vertices")]
    InitSizeMismatch { config: usize, graph: usize },
    #[error("cut initializer mentions vertex {vertex}, graph has {n} vertices")]
    InitOutOfRange { vertex: usize, n: usize },
    #[error("refinement requires an antipodal configuration")]
    NonAntipodal,
    #[error("vertex {0} has even degree {1}")]
    EvenDegree(usize, usize),
    #[error("collision budget of {budget} steps exceeded")]
    BudgetExceeded { budget: usize, trace_json: String },
    #[error("engine fault: {detail}")]
    Fault { detail: String, trace_json: String },
}

/// Builds an engine fault carrying the trace so far in export form.
pub(crate) fn fault<R: Rational>(detail: String, trace: &DescentTrace<R>) -> EngineError {
    EngineError::Fault {
        detail,
        trace_json: trace.to_json_lines(),
    }
}

/// Collision-step budget. The theory bounds a run by well under `16 |E| n`
/// collisions, so exhausting the default budget signals an engine bug, not
/// a hard input.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: usize,
    used: usize,
}

impl Budget {
    pub fn new(limit: usize) -> Self {
        Self { limit, used: 0 }
    }

    pub fn used(&self) -> usize {
        self.used
    }

    pub(crate) fn charge<R: Rational>(
        &mut self,
        trace: &DescentTrace<R>,
    ) -> Result<(), EngineError> {
        self.used += 1;
        if self.used > self.limit {
            return Err(EngineError::BudgetExceeded {
                budget: self.limit,
                trace_json: trace.to_json_lines(),
            });
        }
        Ok(())
    }
}

/// Disjoint vertex sets covering the graph; the engine's output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
}

impl Decomposition {
    pub fn sizes(&self) -> (usize, usize, usize) {
        (self.a.len(), self.b.len(), self.c.len())
    }

    /// True iff the three sets are disjoint and cover `0..n` exactly.
    pub fn is_partition_of(&self, n: usize) -> bool {
        self.a.is_disjoint(&self.b)
            && self.a.is_disjoint(&self.c)
            && self.b.is_disjoint(&self.c)
            && self.a.union(&self.b).union(&self.c) == VertexSet::full(n)
    }

    /// The cut the decomposition induces: `A ∪ C` against `B`.
    pub fn cut_value(&self, g: &Graph) -> usize {
        g.cross_edges(&self.a.union(&self.c), &self.b)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "A": self.a.to_vec(),
            "B": self.b.to_vec(),
            "C": self.c.to_vec(),
        })
    }

    /// Reads the `{"A": [...], "B": [...], "C": [...]}` shape produced by
    /// [`Self::to_json`].
    pub fn from_json(value: &serde_json::Value) -> Result<Self, String> {
        let pull = |key: &str| -> Result<VertexSet, String> {
            let arr = value
                .get(key)
                .and_then(|v| v.as_array())
                .ok_or_else(|| format!("missing array `{key}`"))?;
            arr.iter()
                .map(|x| {
                    x.as_u64()
                        .map(|u| u as usize)
                        .ok_or_else(|| format!("non-integer vertex in `{key}`"))
                })
                .collect()
        };
        Ok(Self {
            a: pull("A")?,
            b: pull("B")?,
            c: pull("C")?,
        })
    }
}

/// Where a run starts.
#[derive(Clone, Debug)]
pub enum InitStrategy<R: Rational> {
    /// Every vertex at angle 0 (the default).
    AllZero,
    /// An explicit configuration.
    Given(Configuration<R>),
    /// A bipartition: `cut_side` at 0, its complement at 1/2.
    FromCut(VertexSet),
    /// Seeded uniform draw from the quarter grid `{0, 1/4, 1/2, 3/4}`.
    RandomQuarterGrid { seed: u64 },
}

impl<R: Rational> InitStrategy<R> {
    fn build(&self, g: &Graph) -> Result<Configuration<R>, EngineError> {
        let n = g.n();
        match self {
            Self::AllZero => Ok(Configuration::uniform(n, Angle::zero())),
            Self::Given(c) => {
                if c.len() != n {
                    return Err(EngineError::InitSizeMismatch {
                        config: c.len(),
                        graph: n,
                    });
                }
                Ok(c.clone())
            }
            Self::FromCut(cut_side) => {
                if let Some(v) = cut_side.iter().find(|&v| v >= n) {
                    return Err(EngineError::InitOutOfRange { vertex: v, n });
                }
                Ok(Configuration::new(
                    (0..n)
                        .map(|v| {
                            if cut_side.contains(v) {
                                Angle::zero()
                            } else {
                                Angle::half()
                            }
                        })
                        .collect(),
                ))
            }
            Self::RandomQuarterGrid { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                Ok(Configuration::new(
                    (0..n)
                        .map(|_| Angle::from_ratio(rng.gen_range(0..4), 4))
                        .collect(),
                ))
            }
        }
    }
}

/// Default collision budget for a graph.
pub fn default_budget(g: &Graph) -> usize {
    16 * g.edge_count().max(1) * g.n().max(1)
}

/// Runs the full descent on a simple connected graph and returns a
/// decomposition satisfying the five properties together with the trace
/// that produced it.
///
/// The loop alternates the rotation phase (to an antipodal configuration)
/// with one refinement pass until refinement reports no applicable move.
/// Energy decreases weakly along the trace and every strict-descent move
/// costs at least 2 exactly, which bounds the number of refinement rounds.
pub fn decompose<R: Rational>(
    g: &Graph,
    init: &InitStrategy<R>,
    budget: Option<usize>,
) -> Result<(Decomposition, DescentTrace<R>), EngineError> {
    if g.n() == 0 {
        return Err(EngineError::EmptyGraph);
    }
    if !g.is_connected().map_err(|_| EngineError::EmptyGraph)? {
        return Err(EngineError::NotConnected);
    }
    let initial = init.build(g)?;
    let initial_energy = energy(g, &initial).expect("sizes checked");
    let mut trace = DescentTrace::new(initial.clone(), initial_energy);

    // The single-vertex graph has no valid (A, B) margin; by convention it
    // decomposes as A = B = empty, C = the vertex, which every property
    // check treats as vacuously valid.
    if g.n() == 1 {
        let d = Decomposition {
            a: VertexSet::new(),
            b: VertexSet::new(),
            c: VertexSet::singleton(0),
        };
        return Ok((d, trace));
    }

    let mut budget = Budget::new(budget.unwrap_or_else(|| default_budget(g)));
    let max_strict = 2 * g.edge_count();
    let mut cur = initial;
    loop {
        cur = rotate_to_antipodal(g, cur, &mut trace, &mut budget)?;
        match refine_antipodal(g, &cur, &mut trace)? {
            RefineOutcome::Descended(next) => cur = next,
            RefineOutcome::Done(d) => {
                if !d.is_partition_of(g.n()) {
                    return Err(fault("output is not a partition".into(), &trace));
                }
                // The refinement exit conditions are exactly the properties
                // the verifier checks; a failing report here is a bug.
                match crate::verify::check_properties(g, &d) {
                    Ok(report) if report.pass() => return Ok((d, trace)),
                    Ok(_) => return Err(fault("output failed verification".into(), &trace)),
                    Err(e) => return Err(fault(e.to_string(), &trace)),
                }
            }
        }
        if trace.strict_descents() > max_strict {
            return Err(fault(
                format!("more than {max_strict} strict descents"),
                &trace,
            ));
        }
    }
}
