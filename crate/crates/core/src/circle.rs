//! Exact configurations on the circle and the piecewise-linear energy.
//!
//! Angles are rational numbers of *turns* (full revolutions) in `[0, 1)`.
//! In these units the tent function becomes `g(d) = 1 - 4d` on geodesic
//! distances `d` in `[0, 1/2]`, and an edge is cut by a random diameter with
//! probability `2d`, so every identity the descent relies on is checkable by
//! exact rational equality.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::scalar::Rational;
use crate::vertex_set::VertexSet;

#[derive(Error, Debug)]
pub enum CircleError {
    #[error("configuration has {config} angles but the graph has {graph} vertices")]
    SizeMismatch { config: usize, graph: usize },
    #[error("vertex {vertex} out of range for a configuration of {n} angles")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("distance {0} outside [0, 1/2]")]
    DistanceOutOfRange(String),
    #[error("malformed configuration JSON: {0}")]
    Json(String),
}

/// A point on the circle, measured in turns, normalized to `[0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Angle<R: Rational> {
    turns: R,
}

impl<R: Rational> Angle<R> {
    pub fn new(turns: R) -> Self {
        Self {
            turns: turns.mod_one(),
        }
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::new(R::from_ratio(numer, denom))
    }

    pub fn zero() -> Self {
        Self::from_ratio(0, 1)
    }

    pub fn quarter() -> Self {
        Self::from_ratio(1, 4)
    }

    pub fn half() -> Self {
        Self::from_ratio(1, 2)
    }

    pub fn three_quarters() -> Self {
        Self::from_ratio(3, 4)
    }

    pub fn turns(&self) -> &R {
        &self.turns
    }

    /// The diametrically opposite point.
    pub fn antipode(&self) -> Self {
        self.offset(&R::from_ratio(1, 2))
    }

    /// Rotates by `delta` turns (any sign), wrapping into `[0, 1)`.
    pub fn offset(&self, delta: &R) -> Self {
        Self::new(self.turns.clone() + delta.clone())
    }

    /// Counterclockwise arc length from `self` to `to`, in `[0, 1)`.
    pub fn ccw_gap(&self, to: &Self) -> R {
        (to.turns.clone() - self.turns.clone()).mod_one()
    }

    /// Geodesic distance in turns, in `[0, 1/2]`.
    pub fn distance(&self, other: &Self) -> R {
        let gap = self.ccw_gap(other);
        let complement = R::one() - gap.clone();
        gap.min(complement)
    }

    pub fn approx_f64(&self) -> f64 {
        self.turns.approx_f64()
    }
}

impl<R: Rational> fmt::Display for Angle<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.turns.ratio_string())
    }
}

/// Geodesic circle distance between two angles, in turns.
pub fn circle_distance<R: Rational>(a: &Angle<R>, b: &Angle<R>) -> R {
    a.distance(b)
}

/// The tent function in turn units: `g(d) = 1 - 4d` for `d` in `[0, 1/2]`,
/// so `g(0) = 1`, `g(1/4) = 0`, `g(1/2) = -1`.
pub fn g_eval<R: Rational>(d: &R) -> Result<R, CircleError> {
    if d < &R::zero() || d > &R::from_ratio(1, 2) {
        return Err(CircleError::DistanceOutOfRange(d.to_string()));
    }
    Ok(g_tent(d))
}

fn g_tent<R: Rational>(d: &R) -> R {
    R::one() - R::from_int(4) * d.clone()
}

/// Exact energy of a configuration: a rational in `[-2|E|, 2|E|]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Energy<R: Rational>(R);

impl<R: Rational> Energy<R> {
    pub fn new(value: R) -> Self {
        Self(value)
    }

    pub fn value(&self) -> &R {
        &self.0
    }

    pub fn into_inner(self) -> R {
        self.0
    }

    pub fn ratio_string(&self) -> String {
        self.0.ratio_string()
    }

    pub fn approx_f64(&self) -> f64 {
        self.0.approx_f64()
    }
}

impl<R: Rational> fmt::Display for Energy<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ratio_string())
    }
}

/// One angle per vertex, with the maximal coincident groups cached.
#[derive(Clone, Debug)]
pub struct Configuration<R: Rational> {
    angles: Vec<Angle<R>>,
    classes: Vec<(Angle<R>, Vec<usize>)>,
}

impl<R: Rational> PartialEq for Configuration<R> {
    fn eq(&self, other: &Self) -> bool {
        self.angles == other.angles
    }
}

impl<R: Rational> Eq for Configuration<R> {}

impl<R: Rational> Configuration<R> {
    pub fn new(angles: Vec<Angle<R>>) -> Self {
        let mut groups: BTreeMap<Angle<R>, Vec<usize>> = BTreeMap::new();
        for (v, a) in angles.iter().enumerate() {
            groups.entry(a.clone()).or_default().push(v);
        }
        Self {
            angles,
            classes: groups.into_iter().collect(),
        }
    }

    /// All `n` vertices at the same angle.
    pub fn uniform(n: usize, angle: Angle<R>) -> Self {
        Self::new(vec![angle; n])
    }

    pub fn from_turns(turns: Vec<R>) -> Self {
        Self::new(turns.into_iter().map(Angle::new).collect())
    }

    /// Test helper: angles given as `(numer, denom)` pairs.
    pub fn from_ratios(ratios: &[(i64, i64)]) -> Self {
        Self::new(
            ratios
                .iter()
                .map(|&(n, d)| Angle::from_ratio(n, d))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    pub fn angle(&self, v: usize) -> &Angle<R> {
        &self.angles[v]
    }

    pub fn angles(&self) -> &[Angle<R>] {
        &self.angles
    }

    /// Position classes sorted by angle, members ascending.
    pub fn classes(&self) -> &[(Angle<R>, Vec<usize>)] {
        &self.classes
    }

    /// Vertices whose angle equals `at`, as a set.
    pub fn members_at(&self, at: &Angle<R>) -> VertexSet {
        self.classes
            .iter()
            .find(|(a, _)| a == at)
            .map(|(_, members)| members.iter().copied().collect())
            .unwrap_or_default()
    }

    /// New configuration with vertex `v` relocated to `target`.
    pub fn with_vertex_at(&self, v: usize, target: Angle<R>) -> Self {
        let mut angles = self.angles.clone();
        angles[v] = target;
        Self::new(angles)
    }

    /// Rigidly rotates every vertex in `set` by `delta` turns.
    pub fn rotate_subset(&self, set: &VertexSet, delta: &R) -> Self {
        let mut angles = self.angles.clone();
        for v in set.iter() {
            angles[v] = angles[v].offset(delta);
        }
        Self::new(angles)
    }

    /// Rigidly rotates the whole configuration.
    pub fn rotate_all(&self, delta: &R) -> Self {
        Self::new(self.angles.iter().map(|a| a.offset(delta)).collect())
    }

    /// When all vertices lie at some `θ` or its antipode, returns the base
    /// angle `θ` — canonically the angle of the lowest-id vertex.
    pub fn is_antipodal(&self) -> Option<Angle<R>> {
        let base = self.angles.first()?.clone();
        let anti = base.antipode();
        if self.angles.iter().all(|a| *a == base || *a == anti) {
            Some(base)
        } else {
            None
        }
    }

    /// Partitions vertices around the pivot's position: its coincident
    /// class, the exact antipodes, and the two open half-turn arcs.
    pub fn split_at_pivot(&self, pivot: usize) -> Result<PositionSplit<R>, CircleError> {
        if pivot >= self.len() {
            return Err(CircleError::VertexOutOfRange {
                vertex: pivot,
                n: self.len(),
            });
        }
        let pivot_angle = self.angles[pivot].clone();
        let half = R::from_ratio(1, 2);
        let mut split = PositionSplit {
            pivot,
            pivot_angle: pivot_angle.clone(),
            pivot_class: VertexSet::new(),
            antipode_class: VertexSet::new(),
            left: VertexSet::new(),
            right: VertexSet::new(),
        };
        for (v, a) in self.angles.iter().enumerate() {
            let gap = pivot_angle.ccw_gap(a);
            if gap.is_zero() {
                split.pivot_class.insert(v);
            } else if gap == half {
                split.antipode_class.insert(v);
            } else if gap < half {
                split.right.insert(v);
            } else {
                split.left.insert(v);
            }
        }
        Ok(split)
    }

    /// JSON array of `"num/den"` strings, index = vertex id.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.angles
                .iter()
                .map(|a| serde_json::Value::String(a.turns().ratio_string()))
                .collect(),
        )
    }

    pub fn from_json_str(text: &str) -> Result<Self, CircleError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| CircleError::Json(e.to_string()))?;
        let items = value
            .as_array()
            .ok_or_else(|| CircleError::Json("expected a JSON array".into()))?;
        let mut angles = Vec::with_capacity(items.len());
        for (i, item) in items.iter().enumerate() {
            let s = item
                .as_str()
                .ok_or_else(|| CircleError::Json(format!("entry {i} is not a string")))?;
            let r = R::parse_ratio(s)
                .ok_or_else(|| CircleError::Json(format!("entry {i}: bad rational `{s}`")))?;
            angles.push(Angle::new(r));
        }
        Ok(Self::new(angles))
    }
}

/// The four-way split around a pivot position. The four sets partition the
/// vertices and the pivot class is never empty. `right` is the open
/// half-turn counterclockwise from the pivot angle, `left` the other one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionSplit<R: Rational> {
    pub pivot: usize,
    pub pivot_angle: Angle<R>,
    pub pivot_class: VertexSet,
    pub antipode_class: VertexSet,
    pub left: VertexSet,
    pub right: VertexSet,
}

impl<R: Rational> PositionSplit<R> {
    /// The vertices a rotation step moves: everything off the pivot axis.
    pub fn movers(&self) -> VertexSet {
        self.left.union(&self.right)
    }
}

fn check_size<R: Rational>(g: &Graph, c: &Configuration<R>) -> Result<(), CircleError> {
    if c.len() != g.n() {
        return Err(CircleError::SizeMismatch {
            config: c.len(),
            graph: g.n(),
        });
    }
    Ok(())
}

/// Exact energy: the double sum over adjacent ordered pairs of `g` of the
/// angular distance, i.e. `2 Σ_edges g(d)`.
pub fn energy<R: Rational>(g: &Graph, c: &Configuration<R>) -> Result<Energy<R>, CircleError> {
    check_size(g, c)?;
    let mut total = R::zero();
    for &(u, v) in g.edges() {
        let d = c.angle(u).distance(c.angle(v));
        total = total + R::from_int(2) * g_tent(&d);
    }
    Ok(Energy::new(total))
}

/// Exact expected number of edges cut by a uniformly random diameter:
/// `Σ_edges 2 d(θ_u, θ_v)` in turn units.
pub fn expected_cut<R: Rational>(g: &Graph, c: &Configuration<R>) -> Result<R, CircleError> {
    check_size(g, c)?;
    let mut total = R::zero();
    for &(u, v) in g.edges() {
        let d = c.angle(u).distance(c.angle(v));
        total = total + R::from_int(2) * d;
    }
    Ok(total)
}

/// Exact energy change from relocating vertex `v` to `target`, counting both
/// ordered-pair contributions of each incident edge.
pub fn move_delta<R: Rational>(
    g: &Graph,
    c: &Configuration<R>,
    v: usize,
    target: &Angle<R>,
) -> Result<R, CircleError> {
    check_size(g, c)?;
    if v >= g.n() {
        return Err(CircleError::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let mut delta = R::zero();
    for &u in g.neighbors(v) {
        let before = g_tent(&c.angle(v).distance(c.angle(u)));
        let after = g_tent(&target.distance(c.angle(u)));
        delta = delta + R::from_int(2) * (after - before);
    }
    Ok(delta)
}
