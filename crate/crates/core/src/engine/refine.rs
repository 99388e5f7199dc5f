//! Phase A: refinement of an antipodal configuration.
//!
//! With the base class at some angle `θ` (the position we call A) and its
//! antipode at `θ + 1/2` (B), the midpoint `θ + 1/4` is the C position and
//! `θ + 3/4` its reflection C'. Relative to the base angle, a relocation of
//! a single vertex changes the energy by an exact integer:
//!
//! - A or B vertex to C:    `2 δ_C` with `δ_C = d_C + d_other - d_own`,
//! - A or B vertex to C':   `2 (d_other - d_own - d_C)`,
//! - C vertex to C':        `-4 d_C`,
//! - C vertex to A or B:    `-2 |d_A - d_B|` toward the smaller side.
//!
//! The steps run in the fixed order A1 (strict move to C), A2 (neutral moves
//! to C, ascending ids), A3 (far-side escape to C'), A4 (reflection of one
//! endpoint of an intra-C edge), A5 (rebalancing a C vertex, which keeps the
//! A/B axis intact and restarts at A1). Any strict move exits back to the
//! rotation phase. If nothing applies, the position classes at A, B and C
//! are the decomposition. Every applied move is cross-checked against
//! [`move_delta`] and the recomputed energy; disagreement is an engine
//! fault, not a silent state.

use crate::circle::{energy, move_delta, Angle, Configuration, Energy};
use crate::graph::Graph;
use crate::scalar::Rational;
use crate::vertex_set::VertexSet;

use super::trace::{DescentTrace, StepData, StepKind};
use super::{fault, Decomposition, EngineError};

/// Result of one refinement call.
#[derive(Clone, Debug)]
pub enum RefineOutcome<R: Rational> {
    /// A strict-descent move was applied; the caller must re-run the
    /// rotation phase on the returned configuration.
    Descended(Configuration<R>),
    /// No move applies; the classes at the A, B and C positions form the
    /// decomposition.
    Done(Decomposition),
}

struct Positions<R: Rational> {
    a: Angle<R>,
    b: Angle<R>,
    c: Angle<R>,
    c_reflect: Angle<R>,
}

impl<R: Rational> Positions<R> {
    fn from_base(base: Angle<R>) -> Self {
        Self {
            a: base.clone(),
            b: base.antipode(),
            c: base.offset(&R::from_ratio(1, 4)),
            c_reflect: base.offset(&R::from_ratio(3, 4)),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Side {
    A,
    B,
    C,
}

struct Classified {
    side: Vec<Side>,
    a: VertexSet,
    b: VertexSet,
    c: VertexSet,
    /// Per-vertex neighbor tallies into A, B, C.
    d_a: Vec<i64>,
    d_b: Vec<i64>,
    d_c: Vec<i64>,
}

impl Classified {
    /// Energy delta (double-sum units) of moving `v` from A or B to C.
    fn delta_to_c(&self, v: usize) -> i64 {
        match self.side[v] {
            Side::A => 2 * (self.d_c[v] + self.d_b[v] - self.d_a[v]),
            Side::B => 2 * (self.d_c[v] + self.d_a[v] - self.d_b[v]),
            Side::C => unreachable!("delta_to_c on a C vertex"),
        }
    }

    /// Energy delta of moving `v` from A or B to the reflected C position.
    fn delta_to_c_reflect(&self, v: usize) -> i64 {
        match self.side[v] {
            Side::A => 2 * (self.d_b[v] - self.d_a[v] - self.d_c[v]),
            Side::B => 2 * (self.d_a[v] - self.d_b[v] - self.d_c[v]),
            Side::C => unreachable!("delta_to_c_reflect on a C vertex"),
        }
    }
}

fn classify<R: Rational>(
    g: &Graph,
    c: &Configuration<R>,
    pos: &Positions<R>,
    trace: &DescentTrace<R>,
) -> Result<Classified, EngineError> {
    let n = g.n();
    let mut side = Vec::with_capacity(n);
    for v in 0..n {
        let angle = c.angle(v);
        let s = if *angle == pos.a {
            Side::A
        } else if *angle == pos.b {
            Side::B
        } else if *angle == pos.c {
            Side::C
        } else {
            return Err(fault(
                format!("vertex {v} at {angle} is off the refinement grid"),
                trace,
            ));
        };
        side.push(s);
    }
    let mut out = Classified {
        a: VertexSet::new(),
        b: VertexSet::new(),
        c: VertexSet::new(),
        d_a: vec![0; n],
        d_b: vec![0; n],
        d_c: vec![0; n],
        side,
    };
    for v in 0..n {
        match out.side[v] {
            Side::A => out.a.insert(v),
            Side::B => out.b.insert(v),
            Side::C => out.c.insert(v),
        }
        for &u in g.neighbors(v) {
            match out.side[u] {
                Side::A => out.d_a[v] += 1,
                Side::B => out.d_b[v] += 1,
                Side::C => out.d_c[v] += 1,
            }
        }
    }
    Ok(out)
}

/// Applies a single-vertex relocation whose tally-predicted energy change is
/// `expected`, verifying it against [`move_delta`] and a full recomputation.
#[allow(clippy::too_many_arguments)]
fn apply_move<R: Rational>(
    g: &Graph,
    cur: &Configuration<R>,
    cur_energy: &Energy<R>,
    v: usize,
    target: Angle<R>,
    expected: i64,
    kind: StepKind,
    trace: &mut DescentTrace<R>,
) -> Result<(Configuration<R>, Energy<R>), EngineError> {
    let predicted = R::from_int(expected);
    let delta = move_delta(g, cur, v, &target).map_err(|e| fault(e.to_string(), trace))?;
    if delta != predicted {
        return Err(fault(
            format!(
                "tally delta {} disagrees with move_delta {} for vertex {v}",
                predicted.ratio_string(),
                delta.ratio_string()
            ),
            trace,
        ));
    }
    let next = cur.with_vertex_at(v, target.clone());
    let next_energy = energy(g, &next).map_err(|e| fault(e.to_string(), trace))?;
    if next_energy.value().clone() != cur_energy.value().clone() + delta.clone() {
        return Err(fault(
            format!("recomputed energy disagrees with delta for vertex {v}"),
            trace,
        ));
    }
    trace.push(
        kind,
        StepData::Move {
            vertex: v,
            target,
            energy_delta: delta,
        },
        next.clone(),
        next_energy.clone(),
    );
    Ok((next, next_energy))
}

/// One pass of antipodal refinement. The input must be antipodal; special
/// positions are anchored at the base angle of the lowest-id vertex for the
/// whole call.
pub fn refine_antipodal<R: Rational>(
    g: &Graph,
    c: &Configuration<R>,
    trace: &mut DescentTrace<R>,
) -> Result<RefineOutcome<R>, EngineError> {
    let base = c.is_antipodal().ok_or(EngineError::NonAntipodal)?;
    let pos = Positions::from_base(base);
    let mut cur = c.clone();
    let mut cur_energy = energy(g, &cur).map_err(|e| fault(e.to_string(), trace))?;

    loop {
        let mut tallies = classify(g, &cur, &pos, trace)?;

        // A1: strict single-vertex move to C.
        let strict_to_c = (0..g.n())
            .filter(|&v| tallies.side[v] != Side::C)
            .find(|&v| tallies.delta_to_c(v) < 0);
        if let Some(v) = strict_to_c {
            let expected = tallies.delta_to_c(v);
            let (next, _) = apply_move(
                g,
                &cur,
                &cur_energy,
                v,
                pos.c.clone(),
                expected,
                StepKind::StrictDescentMove,
                trace,
            )?;
            return Ok(RefineOutcome::Descended(next));
        }

        // A2: neutral moves to C, ascending ids, retallying after each move.
        loop {
            let neutral = (0..g.n())
                .filter(|&v| tallies.side[v] != Side::C)
                .find(|&v| tallies.delta_to_c(v) == 0);
            let Some(v) = neutral else { break };
            let (next, next_energy) = apply_move(
                g,
                &cur,
                &cur_energy,
                v,
                pos.c.clone(),
                0,
                StepKind::NeutralMoveToC,
                trace,
            )?;
            cur = next;
            cur_energy = next_energy;
            tallies = classify(g, &cur, &pos, trace)?;
            // Neutral moves never uncover a strict move to C; a negative
            // delta here means the tally bookkeeping is wrong.
            if let Some(bad) = (0..g.n())
                .filter(|&v| tallies.side[v] != Side::C)
                .find(|&v| tallies.delta_to_c(v) < 0)
            {
                return Err(fault(
                    format!("neutral move exposed strict descent at vertex {bad}"),
                    trace,
                ));
            }
        }

        // A3: escape along the far side of the circle.
        let escape = (0..g.n())
            .filter(|&v| tallies.side[v] != Side::C)
            .find(|&v| tallies.delta_to_c_reflect(v) < 0);
        if let Some(v) = escape {
            let expected = tallies.delta_to_c_reflect(v);
            let (next, _) = apply_move(
                g,
                &cur,
                &cur_energy,
                v,
                pos.c_reflect.clone(),
                expected,
                StepKind::StrictDescentMove,
                trace,
            )?;
            return Ok(RefineOutcome::Descended(next));
        }

        // A4: reflect the higher endpoint of an intra-C edge.
        let intra_c = g
            .edges()
            .iter()
            .find(|&&(u, v)| tallies.side[u] == Side::C && tallies.side[v] == Side::C);
        if let Some(&(_, v)) = intra_c {
            let expected = -4 * tallies.d_c[v];
            let (next, _) = apply_move(
                g,
                &cur,
                &cur_energy,
                v,
                pos.c_reflect.clone(),
                expected,
                StepKind::StrictDescentMove,
                trace,
            )?;
            return Ok(RefineOutcome::Descended(next));
        }

        // A5: rebalance a C vertex toward its smaller side. The A/B axis is
        // untouched, so refinement restarts at A1 without a rotation phase.
        let unbalanced = tallies.c.iter().find(|&v| tallies.d_a[v] != tallies.d_b[v]);
        if let Some(v) = unbalanced {
            let (target, expected) = if tallies.d_a[v] < tallies.d_b[v] {
                (pos.a.clone(), 2 * (tallies.d_a[v] - tallies.d_b[v]))
            } else {
                (pos.b.clone(), 2 * (tallies.d_b[v] - tallies.d_a[v]))
            };
            let (next, next_energy) = apply_move(
                g,
                &cur,
                &cur_energy,
                v,
                target,
                expected,
                StepKind::StrictDescentMove,
                trace,
            )?;
            cur = next;
            cur_energy = next_energy;
            trace.push(
                StepKind::PhaseARestart,
                StepData::Restart,
                cur.clone(),
                cur_energy.clone(),
            );
            continue;
        }

        return Ok(RefineOutcome::Done(Decomposition {
            a: tallies.a,
            b: tallies.b,
            c: tallies.c,
        }));
    }
}
