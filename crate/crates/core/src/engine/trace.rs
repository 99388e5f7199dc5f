//! Replayable record of a descent run.
//!
//! Every step stores the move data, the full configuration snapshot and the
//! exact energy after the step, so a trace can be validated independently:
//! replaying the step data from the initial configuration must reproduce
//! every snapshot, energies must be weakly decreasing, and strict-descent
//! moves must each cost at least 2 in double-sum units.

use std::fmt;

use crate::circle::{energy, Angle, Configuration, Energy};
use crate::graph::Graph;
use crate::scalar::Rational;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    RotationCollision,
    StrictDescentMove,
    NeutralMoveToC,
    PhaseARestart,
}

impl StepKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::RotationCollision => "rotation-collision",
            Self::StrictDescentMove => "strict-descent-move",
            Self::NeutralMoveToC => "neutral-move-to-C",
            Self::PhaseARestart => "phase-A-restart",
        }
    }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Ccw,
    Cw,
}

impl Direction {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Ccw => "ccw",
            Self::Cw => "cw",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Payload of a single step.
#[derive(Clone, Debug)]
pub enum StepData<R: Rational> {
    /// Rigid rotation of `moved` by `turn` in `direction`, stopped by
    /// `collider` reaching the pivot position or its antipode.
    Rotation {
        pivot: usize,
        direction: Direction,
        turn: R,
        moved: VertexSet,
        collider: usize,
        imbalance: i64,
    },
    /// Relocation of one vertex; `energy_delta` is exact.
    Move {
        vertex: usize,
        target: Angle<R>,
        energy_delta: R,
    },
    /// Marker: the refinement loop restarted without a rotation phase.
    Restart,
}

#[derive(Clone, Debug)]
pub struct TraceStep<R: Rational> {
    pub kind: StepKind,
    pub data: StepData<R>,
    pub config: Configuration<R>,
    pub energy: Energy<R>,
}

#[derive(Clone, Debug)]
pub struct DescentTrace<R: Rational> {
    pub initial_config: Configuration<R>,
    pub initial_energy: Energy<R>,
    pub steps: Vec<TraceStep<R>>,
}

impl<R: Rational> DescentTrace<R> {
    pub fn new(initial_config: Configuration<R>, initial_energy: Energy<R>) -> Self {
        Self {
            initial_config,
            initial_energy,
            steps: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        kind: StepKind,
        data: StepData<R>,
        config: Configuration<R>,
        energy: Energy<R>,
    ) {
        self.steps.push(TraceStep {
            kind,
            data,
            config,
            energy,
        });
    }

    pub fn last_config(&self) -> &Configuration<R> {
        self.steps
            .last()
            .map(|s| &s.config)
            .unwrap_or(&self.initial_config)
    }

    pub fn final_energy(&self) -> &Energy<R> {
        self.steps
            .last()
            .map(|s| &s.energy)
            .unwrap_or(&self.initial_energy)
    }

    fn count(&self, kind: StepKind) -> usize {
        self.steps.iter().filter(|s| s.kind == kind).count()
    }

    pub fn collisions(&self) -> usize {
        self.count(StepKind::RotationCollision)
    }

    pub fn strict_descents(&self) -> usize {
        self.count(StepKind::StrictDescentMove)
    }

    pub fn neutral_moves(&self) -> usize {
        self.count(StepKind::NeutralMoveToC)
    }

    pub fn restarts(&self) -> usize {
        self.count(StepKind::PhaseARestart)
    }

    /// Lengths of the maximal runs of consecutive rotation-collision steps,
    /// one entry per rotation-phase invocation that performed any work.
    pub fn rotation_run_lengths(&self) -> Vec<usize> {
        let mut runs = Vec::new();
        let mut current = 0usize;
        for step in &self.steps {
            if step.kind == StepKind::RotationCollision {
                current += 1;
            } else if current > 0 {
                runs.push(current);
                current = 0;
            }
        }
        if current > 0 {
            runs.push(current);
        }
        runs
    }

    /// JSON-lines export, one step per line. The first line carries the
    /// initial energy; rotation lines use `delta` for the rotation amount in
    /// turns, move lines for the exact energy change.
    pub fn to_json_lines(&self) -> String {
        use serde_json::json;
        let mut out = String::new();
        let line = |v: serde_json::Value| format!("{v}\n");
        out.push_str(&line(json!({
            "kind": "initial",
            "energy": self.initial_energy.ratio_string(),
        })));
        for step in &self.steps {
            let value = match &step.data {
                StepData::Rotation {
                    pivot,
                    direction,
                    turn,
                    collider,
                    imbalance,
                    ..
                } => json!({
                    "kind": step.kind.as_str(),
                    "pivot": pivot,
                    "vertex": collider,
                    "direction": direction.as_str(),
                    "imbalance": imbalance,
                    "delta": turn.ratio_string(),
                    "energy": step.energy.ratio_string(),
                }),
                StepData::Move {
                    vertex,
                    target,
                    energy_delta,
                } => json!({
                    "kind": step.kind.as_str(),
                    "vertex": vertex,
                    "target": target.turns().ratio_string(),
                    "delta": energy_delta.ratio_string(),
                    "energy": step.energy.ratio_string(),
                }),
                StepData::Restart => json!({
                    "kind": step.kind.as_str(),
                    "delta": R::zero().ratio_string(),
                    "energy": step.energy.ratio_string(),
                }),
            };
            out.push_str(&line(value));
        }
        out
    }

    /// Replays the trace from its initial configuration and checks every
    /// invariant a valid descent must satisfy:
    ///
    /// - each snapshot is exactly the result of applying the recorded step,
    /// - recorded energies equal recomputed energies and weakly decrease,
    /// - strict-descent moves drop the energy by at least 2 exactly,
    /// - neutral moves leave it unchanged,
    /// - rotation steps never break coincident or antipodal vertex pairs,
    /// - no rotation phase performs more than `n - 1` collisions.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let recomputed =
            energy(g, &self.initial_config).map_err(|e| format!("initial config: {e}"))?;
        if recomputed != self.initial_energy {
            return Err(format!(
                "initial energy mismatch: recorded {}, recomputed {}",
                self.initial_energy, recomputed
            ));
        }
        let two = R::from_int(2);
        let mut cur = self.initial_config.clone();
        let mut cur_energy = self.initial_energy.clone();
        for (i, step) in self.steps.iter().enumerate() {
            let next = match &step.data {
                StepData::Rotation {
                    direction,
                    turn,
                    moved,
                    ..
                } => {
                    let delta = match direction {
                        Direction::Ccw => turn.clone(),
                        Direction::Cw => -turn.clone(),
                    };
                    let next = cur.rotate_subset(moved, &delta);
                    check_pairs_preserved(&cur, &next).map_err(|e| format!("step {i}: {e}"))?;
                    next
                }
                StepData::Move { vertex, target, .. } => {
                    cur.with_vertex_at(*vertex, target.clone())
                }
                StepData::Restart => cur.clone(),
            };
            if next != step.config {
                return Err(format!("step {i}: replayed configuration differs"));
            }
            let next_energy = energy(g, &next).map_err(|e| format!("step {i}: {e}"))?;
            if next_energy != step.energy {
                return Err(format!(
                    "step {i}: recorded energy {} but recomputed {}",
                    step.energy, next_energy
                ));
            }
            let drop = cur_energy.value().clone() - next_energy.value().clone();
            if drop < R::zero() {
                return Err(format!("step {i}: energy increased by {}", -drop));
            }
            match step.kind {
                StepKind::StrictDescentMove => {
                    if drop < two {
                        return Err(format!("step {i}: strict descent dropped only {drop}"));
                    }
                }
                StepKind::NeutralMoveToC | StepKind::PhaseARestart => {
                    if !drop.is_zero() {
                        return Err(format!("step {i}: neutral step changed energy by {drop}"));
                    }
                }
                StepKind::RotationCollision => {}
            }
            cur = next;
            cur_energy = next_energy;
        }
        let limit = g.n().saturating_sub(1);
        for (run_idx, len) in self.rotation_run_lengths().iter().enumerate() {
            if *len > limit {
                return Err(format!(
                    "rotation phase {run_idx} performed {len} collisions, limit {limit}"
                ));
            }
        }
        Ok(())
    }
}

/// Coincident pairs stay coincident and antipodal pairs stay antipodal.
fn check_pairs_preserved<R: Rational>(
    before: &Configuration<R>,
    after: &Configuration<R>,
) -> Result<(), String> {
    let n = before.len();
    for u in 0..n {
        for v in (u + 1)..n {
            if before.angle(u) == before.angle(v) && after.angle(u) != after.angle(v) {
                return Err(format!("rotation broke coincident pair ({u}, {v})"));
            }
            if *before.angle(u) == before.angle(v).antipode()
                && *after.angle(u) != after.angle(v).antipode()
            {
                return Err(format!("rotation broke antipodal pair ({u}, {v})"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{decompose, InitStrategy};
    use crate::graph::generate;
    use crate::Rat;

    fn traced_run(spec: &str) -> (crate::graph::Graph, DescentTrace<Rat>) {
        let g = generate(&spec.parse().unwrap()).unwrap();
        let (_, trace) = decompose::<Rat>(&g, &InitStrategy::AllZero, None).unwrap();
        (g, trace)
    }

    #[test]
    fn validator_rejects_tampered_energy() {
        let (g, mut trace) = traced_run("complete:5");
        assert!(trace.validate(&g).is_ok());
        let last = trace.steps.len() - 1;
        trace.steps[last].energy =
            Energy::new(trace.steps[last].energy.value().clone() - Rat::from_int(2));
        let err = trace.validate(&g).unwrap_err();
        assert!(err.contains("recorded energy"), "{err}");
    }

    #[test]
    fn validator_rejects_tampered_snapshot() {
        let (g, mut trace) = traced_run("complete:5");
        let last = trace.steps.len() - 1;
        let broken = trace.steps[last]
            .config
            .with_vertex_at(0, Angle::from_ratio(1, 3));
        trace.steps[last].config = broken;
        let err = trace.validate(&g).unwrap_err();
        assert!(err.contains("replayed configuration differs"), "{err}");
    }

    #[test]
    fn validator_rejects_fake_strict_descent() {
        let (g, mut trace) = traced_run("complete:5");
        // Relabel a neutral move as a strict descent: the quantum check
        // must fire.
        let idx = trace
            .steps
            .iter()
            .position(|s| s.kind == StepKind::NeutralMoveToC)
            .expect("K5 run has a neutral move");
        trace.steps[idx].kind = StepKind::StrictDescentMove;
        let err = trace.validate(&g).unwrap_err();
        assert!(err.contains("strict descent dropped only"), "{err}");
    }

    #[test]
    fn validator_rejects_pair_breaking_rotation() {
        let g = generate(&"complete:3".parse().unwrap()).unwrap();
        let start = Configuration::<Rat>::from_ratios(&[(0, 1), (0, 1), (1, 3)]);
        let mut trace = DescentTrace::new(start.clone(), energy(&g, &start).unwrap());
        // A "rotation" that moves only one member of the coincident pair.
        let moved = crate::vertex_set::VertexSet::singleton(1);
        let turn = Rat::from_ratio(1, 6);
        let next = start.rotate_subset(&moved, &turn);
        trace.push(
            StepKind::RotationCollision,
            StepData::Rotation {
                pivot: 0,
                direction: Direction::Ccw,
                turn,
                moved,
                collider: 1,
                imbalance: 0,
            },
            next.clone(),
            energy(&g, &next).unwrap(),
        );
        let err = trace.validate(&g).unwrap_err();
        assert!(err.contains("coincident pair"), "{err}");
    }

    #[test]
    fn json_lines_carry_every_step() {
        let (_, trace) = traced_run("complete:5");
        let text = trace.to_json_lines();
        assert_eq!(text.lines().count(), trace.steps.len() + 1);
        assert!(text.lines().next().unwrap().contains("\"initial\""));
    }
}
