//! Phase R: rigid rotations that drive any configuration to an antipodal one
//! without increasing the energy.
//!
//! With the pivot class and its antipodes held fixed, rotating everything
//! else by `t` turns changes the energy at the constant rate `-8s` per turn
//! (counterclockwise), where `s` is the imbalance below. We rotate in the
//! non-increasing direction exactly until some moving vertex lands on the
//! pivot position or its antipode. Movers join the fixed classes one
//! collision at a time and never leave, so at most `n - 1` collisions occur.

use crate::circle::{energy, Configuration, PositionSplit};
use crate::graph::Graph;
use crate::scalar::Rational;

use super::trace::{DescentTrace, Direction, StepData, StepKind};
use super::{fault, Budget, EngineError};

/// The signed edge imbalance `s` of a split:
/// `[#E(P, R) + #E(P', L)] - [#E(P, L) + #E(P', R)]`
/// where `P` is the pivot class and `P'` its antipode class.
///
/// `s > 0` means a counterclockwise rotation of `left ∪ right` strictly
/// decreases the energy, `s < 0` clockwise, and `s = 0` makes both
/// directions energy-neutral.
pub fn rotation_imbalance<R: Rational>(g: &Graph, split: &PositionSplit<R>) -> i64 {
    let pr = g.cross_edges(&split.pivot_class, &split.right) as i64;
    let pl = g.cross_edges(&split.pivot_class, &split.left) as i64;
    let ar = g.cross_edges(&split.antipode_class, &split.right) as i64;
    let al = g.cross_edges(&split.antipode_class, &split.left) as i64;
    (pr + al) - (pl + ar)
}

/// Smallest positive rigid rotation of `left ∪ right` in `direction` after
/// which at least one mover sits exactly on the pivot angle or its antipode,
/// together with every simultaneous collider.
///
/// Requires a non-antipodal split (`left ∪ right` nonempty).
pub fn collision_delta<R: Rational>(
    c: &Configuration<R>,
    split: &PositionSplit<R>,
    direction: Direction,
) -> (R, Vec<usize>) {
    let pivot = &split.pivot_angle;
    let antipode = pivot.antipode();
    let mut best: Option<R> = None;
    let mut colliders = Vec::new();
    for v in split.movers().iter() {
        let angle = c.angle(v);
        let to_pivot = match direction {
            Direction::Ccw => angle.ccw_gap(pivot),
            Direction::Cw => pivot.ccw_gap(angle),
        };
        let to_antipode = match direction {
            Direction::Ccw => angle.ccw_gap(&antipode),
            Direction::Cw => antipode.ccw_gap(angle),
        };
        for gap in [to_pivot, to_antipode] {
            debug_assert!(!gap.is_zero(), "mover already on the pivot axis");
            match &best {
                Some(b) if gap > *b => {}
                Some(b) if gap == *b => colliders.push(v),
                _ => {
                    best = Some(gap);
                    colliders.clear();
                    colliders.push(v);
                }
            }
        }
    }
    colliders.dedup();
    (best.expect("split has movers"), colliders)
}

/// Phase R driver: repeatedly rotates around the pivot axis of vertex 0
/// until the configuration is antipodal. Appends one rotation-collision step
/// per collision; the energy bookkeeping is verified exactly at every step.
pub fn rotate_to_antipodal<R: Rational>(
    g: &Graph,
    mut c: Configuration<R>,
    trace: &mut DescentTrace<R>,
    budget: &mut Budget,
) -> Result<Configuration<R>, EngineError> {
    let mut collisions = 0usize;
    while c.is_antipodal().is_none() {
        // Any vertex is a valid pivot of a non-antipodal configuration; the
        // lowest id keeps runs deterministic.
        let split = c
            .split_at_pivot(0)
            .map_err(|e| fault(format!("split failed: {e}"), trace))?;
        let s = rotation_imbalance(g, &split);
        let direction = if s >= 0 {
            Direction::Ccw
        } else {
            Direction::Cw
        };
        let (turn, colliders) = collision_delta(&c, &split, direction);
        let movers = split.movers();
        let signed = match direction {
            Direction::Ccw => turn.clone(),
            Direction::Cw => -turn.clone(),
        };
        let next = c.rotate_subset(&movers, &signed);

        let before = energy(g, &c).map_err(|e| fault(e.to_string(), trace))?;
        let after = energy(g, &next).map_err(|e| fault(e.to_string(), trace))?;
        let expected = before.value().clone() - R::from_int(8 * s.abs()) * turn.clone();
        if after.value() != &expected {
            return Err(fault(
                format!(
                    "rotation energy mismatch: expected {}, got {} (s = {s}, turn = {})",
                    expected.ratio_string(),
                    after.ratio_string(),
                    turn.ratio_string()
                ),
                trace,
            ));
        }

        let collider = *colliders.first().expect("at least one collider");
        trace.push(
            StepKind::RotationCollision,
            StepData::Rotation {
                pivot: split.pivot,
                direction,
                turn,
                moved: movers,
                collider,
                imbalance: s,
            },
            next.clone(),
            after,
        );
        c = next;
        collisions += 1;
        if collisions > g.n().saturating_sub(1) {
            return Err(fault(
                format!("rotation phase exceeded {} collisions", g.n() - 1),
                trace,
            ));
        }
        budget.charge(trace)?;
    }
    Ok(c)
}
