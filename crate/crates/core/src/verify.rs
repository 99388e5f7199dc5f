//! Independent verification of decompositions.
//!
//! Everything here is plain counting over graph queries — no engine state,
//! no trace — so a passing report is evidence about the decomposition
//! itself. The five properties checked for a partition `V = A ∪ B ∪ C`:
//!
//! 1. every `a ∈ A` has `d_B(a) >= d_A(a) + max(1, d_C(a))`,
//! 2. every `b ∈ B` has `d_A(b) >= d_B(b) + max(1, d_C(b))`,
//! 3. `C` is independent,
//! 4. every `c ∈ C` has `d_A(c) = d_B(c)`,
//! 5. `#E(A∪B, C) + 2 #E(A,A) + 2 #E(B,B) <= 2 #E(A,B)`.
//!
//! Property 5 follows from 1 and 2 but is checked directly anyway: a bug
//! that breaks the implication is exactly what an independent checker is
//! for. The module also audits the subset inequalities implied by 1 and 2
//! and the judicious cut bounds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::engine::Decomposition;
use crate::graph::Graph;
use crate::scalar::Rational;
use crate::vertex_set::VertexSet;

#[derive(Error, Debug)]
pub enum VerifyError {
    #[error("A, B, C do not partition the {n} vertices")]
    NotAPartition { n: usize },
    #[error("decomposition fails the property checks; bounds are undefined")]
    PropertiesNotSatisfied,
}

/// Outcome of one property with the violating witnesses, empty iff passing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check<W> {
    pub witnesses: Vec<W>,
}

impl<W> Check<W> {
    pub fn pass(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Full audit of properties (1)-(5) plus the standard edge counts.
#[derive(Clone, Debug)]
pub struct PropertyReport {
    /// Property (1); witnesses are offending `A`-vertices.
    pub majority_a: Check<usize>,
    /// Property (2); witnesses are offending `B`-vertices.
    pub majority_b: Check<usize>,
    /// Property (3); witnesses are intra-`C` edges.
    pub c_independent: Check<(usize, usize)>,
    /// Property (4); witnesses are unbalanced `C`-vertices.
    pub c_balanced: Check<usize>,
    /// Property (5), with both sides of the inequality.
    pub edge_budget_holds: bool,
    pub edge_budget_lhs: usize,
    pub edge_budget_rhs: usize,
    /// Per-vertex neighbor tallies into A, B, C.
    pub d_a: Vec<usize>,
    pub d_b: Vec<usize>,
    pub d_c: Vec<usize>,
    pub e_aa: usize,
    pub e_bb: usize,
    pub e_ab: usize,
    /// `#E(A ∪ B, C)`.
    pub e_ab_to_c: usize,
    /// Edges of the restricted graph on `A ∪ B`.
    pub e_restricted: usize,
}

impl PropertyReport {
    pub fn pass(&self) -> bool {
        self.majority_a.pass()
            && self.majority_b.pass()
            && self.c_independent.pass()
            && self.c_balanced.pass()
            && self.edge_budget_holds
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "pass": self.pass(),
            "majority_a": { "pass": self.majority_a.pass(), "witnesses": self.majority_a.witnesses },
            "majority_b": { "pass": self.majority_b.pass(), "witnesses": self.majority_b.witnesses },
            "c_independent": {
                "pass": self.c_independent.pass(),
                "witnesses": self.c_independent.witnesses
                    .iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
            },
            "c_balanced": { "pass": self.c_balanced.pass(), "witnesses": self.c_balanced.witnesses },
            "edge_budget": {
                "pass": self.edge_budget_holds,
                "lhs": self.edge_budget_lhs,
                "rhs": self.edge_budget_rhs,
            },
            "edge_counts": {
                "e_aa": self.e_aa,
                "e_bb": self.e_bb,
                "e_ab": self.e_ab,
                "e_ab_to_c": self.e_ab_to_c,
                "e_restricted": self.e_restricted,
            },
        })
    }
}

/// Checks properties (1)-(5) for a partition of the vertices.
pub fn check_properties(g: &Graph, d: &Decomposition) -> Result<PropertyReport, VerifyError> {
    if !d.is_partition_of(g.n()) {
        return Err(VerifyError::NotAPartition { n: g.n() });
    }
    let n = g.n();
    let mut d_a = vec![0usize; n];
    let mut d_b = vec![0usize; n];
    let mut d_c = vec![0usize; n];
    for v in 0..n {
        for &u in g.neighbors(v) {
            if d.a.contains(u) {
                d_a[v] += 1;
            } else if d.b.contains(u) {
                d_b[v] += 1;
            } else {
                d_c[v] += 1;
            }
        }
    }

    let majority_a = Check {
        witnesses: d
            .a
            .iter()
            .filter(|&v| d_b[v] < d_a[v] + 1.max(d_c[v]))
            .collect(),
    };
    let majority_b = Check {
        witnesses: d
            .b
            .iter()
            .filter(|&v| d_a[v] < d_b[v] + 1.max(d_c[v]))
            .collect(),
    };
    let c_independent = Check {
        witnesses: g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| d.c.contains(u) && d.c.contains(v))
            .collect(),
    };
    let c_balanced = Check {
        witnesses: d.c.iter().filter(|&v| d_a[v] != d_b[v]).collect(),
    };

    let e_aa = g.cross_edges(&d.a, &d.a);
    let e_bb = g.cross_edges(&d.b, &d.b);
    let e_ab = g.cross_edges(&d.a, &d.b);
    let ab = d.a.union(&d.b);
    let e_ab_to_c = g.cross_edges(&ab, &d.c);
    let e_restricted = g.cross_edges(&ab, &ab);
    let edge_budget_lhs = e_ab_to_c + 2 * e_aa + 2 * e_bb;
    let edge_budget_rhs = 2 * e_ab;

    Ok(PropertyReport {
        majority_a,
        majority_b,
        c_independent,
        c_balanced,
        edge_budget_holds: edge_budget_lhs <= edge_budget_rhs,
        edge_budget_lhs,
        edge_budget_rhs,
        d_a,
        d_b,
        d_c,
        e_aa,
        e_bb,
        e_ab,
        e_ab_to_c,
        e_restricted,
    })
}

/// A violated subset instance, for diagnostics.
#[derive(Clone, Debug)]
pub struct SubsetWitness {
    /// `'A'` or `'B'`: which side the subset was drawn from.
    pub side: char,
    pub subset: Vec<usize>,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Clone, Debug)]
pub struct SubsetCheck {
    pub subsets_checked: usize,
    pub witness: Option<SubsetWitness>,
}

impl SubsetCheck {
    pub fn pass(&self) -> bool {
        self.witness.is_none()
    }
}

/// For subsets `S ⊆ A` the properties imply
/// `#E(S, C) + #E(S, A) + #E(S, S) <= #E(S, B)` (and symmetrically in `B`),
/// where `#E(S, A)` counts edges with one endpoint in `S` and the other
/// anywhere in `A`, internal edges once. Checked for the full sets, all
/// singletons, and `samples` random subsets per side (exhaustively when a
/// side has at most [`EXHAUSTIVE_SUBSET_LIMIT`] vertices).
pub fn check_subset_inequalities(
    g: &Graph,
    d: &Decomposition,
    samples: usize,
    seed: u64,
) -> Result<SubsetCheck, VerifyError> {
    if !check_properties(g, d)?.pass() {
        return Err(VerifyError::PropertiesNotSatisfied);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0usize;
    for (side, own, other) in [('A', &d.a, &d.b), ('B', &d.b, &d.a)] {
        let members = own.to_vec();
        let mut subsets: Vec<VertexSet> = vec![own.clone()];
        subsets.extend(members.iter().map(|&v| VertexSet::singleton(v)));
        if members.len() <= EXHAUSTIVE_SUBSET_LIMIT {
            for mask in 0u64..(1u64 << members.len()) {
                subsets.push(
                    members
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &v)| v)
                        .collect(),
                );
            }
        } else {
            for _ in 0..samples {
                subsets.push(
                    members
                        .iter()
                        .filter(|_| rng.gen_bool(0.5))
                        .copied()
                        .collect(),
                );
            }
        }
        for subset in &subsets {
            let lhs = g.cross_edges(subset, &d.c)
                + g.cross_edges(subset, own)
                + g.cross_edges(subset, subset);
            let rhs = g.cross_edges(subset, other);
            checked += 1;
            if lhs > rhs {
                return Ok(SubsetCheck {
                    subsets_checked: checked,
                    witness: Some(SubsetWitness {
                        side,
                        subset: subset.to_vec(),
                        lhs,
                        rhs,
                    }),
                });
            }
        }
    }
    Ok(SubsetCheck {
        subsets_checked: checked,
        witness: None,
    })
}

/// Sides up to this size are checked over all their subsets.
pub const EXHAUSTIVE_SUBSET_LIMIT: usize = 12;

/// Default number of random subsets per side.
pub const DEFAULT_SUBSET_SAMPLES: usize = 256;

/// The cut bounds a valid decomposition guarantees.
#[derive(Clone, Debug)]
pub struct BoundReport<R: Rational> {
    /// `#E(A ∪ C, B)`.
    pub cut_value: usize,
    /// `(1/2 + 1/(3Δ)) |E|`, exactly.
    pub lower_bound: R,
    pub bound_holds: bool,
    /// `cut / |E|` (zero for edgeless graphs).
    pub ratio_vs_edges: R,
    pub maxcut: Option<usize>,
    /// `(1/2 + 1/(3Δ)) maxcut`, when a MaxCut value was supplied.
    pub maxcut_bound: Option<R>,
    pub maxcut_bound_holds: Option<bool>,
    pub ratio_vs_maxcut: Option<R>,
    /// The intermediate separation inequality
    /// `#E(A,B) >= #E(A,A) + #E(B,B) + (|A| + |B|) / 2`, doubled to stay
    /// integral: `2 #E(A,B) >= 2 #E(A,A) + 2 #E(B,B) + |A| + |B|`.
    pub separation_holds: bool,
    pub separation_lhs_x2: usize,
    pub separation_rhs_x2: usize,
}

impl<R: Rational> BoundReport<R> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "cut_value": self.cut_value,
            "lower_bound": self.lower_bound.ratio_string(),
            "bound_holds": self.bound_holds,
            "ratio_vs_edges": self.ratio_vs_edges.ratio_string(),
            "maxcut": self.maxcut,
            "maxcut_bound": self.maxcut_bound.as_ref().map(Rational::ratio_string),
            "maxcut_bound_holds": self.maxcut_bound_holds,
            "ratio_vs_maxcut": self.ratio_vs_maxcut.as_ref().map(Rational::ratio_string),
            "separation_holds": self.separation_holds,
            "separation_lhs_x2": self.separation_lhs_x2,
            "separation_rhs_x2": self.separation_rhs_x2,
        })
    }
}

/// Exact-rational cut bounds for a decomposition that passes the property
/// checks: the judicious bound `#E(A∪C, B) >= (1/2 + 1/(3Δ)) |E|`, the same
/// bound against a supplied MaxCut value, and the separation inequality on
/// the restricted graph.
pub fn judicious_bounds<R: Rational>(
    g: &Graph,
    d: &Decomposition,
    maxcut: Option<usize>,
) -> Result<BoundReport<R>, VerifyError> {
    let report = check_properties(g, d)?;
    if !report.pass() {
        return Err(VerifyError::PropertiesNotSatisfied);
    }
    let m = g.edge_count();
    let delta = g.max_degree();
    let cut_value = d.cut_value(g);

    let coeff = if delta == 0 {
        R::zero()
    } else {
        R::from_ratio(1, 2) + R::from_ratio(1, 3 * delta as i64)
    };
    let lower_bound = coeff.clone() * R::from_int(m as i64);
    let bound_holds = R::from_int(cut_value as i64) >= lower_bound;
    let ratio_vs_edges = if m == 0 {
        R::zero()
    } else {
        R::from_ratio(cut_value as i64, m as i64)
    };

    let maxcut_bound = maxcut.map(|mc| coeff.clone() * R::from_int(mc as i64));
    let maxcut_bound_holds = maxcut_bound
        .as_ref()
        .map(|b| R::from_int(cut_value as i64) >= *b);
    let ratio_vs_maxcut =
        maxcut.and_then(|mc| (mc > 0).then(|| R::from_ratio(cut_value as i64, mc as i64)));

    let separation_lhs_x2 = 2 * report.e_ab;
    let separation_rhs_x2 = 2 * report.e_aa + 2 * report.e_bb + d.a.len() + d.b.len();

    Ok(BoundReport {
        cut_value,
        lower_bound,
        bound_holds,
        ratio_vs_edges,
        maxcut,
        maxcut_bound,
        maxcut_bound_holds,
        ratio_vs_maxcut,
        separation_holds: separation_lhs_x2 >= separation_rhs_x2,
        separation_lhs_x2,
        separation_rhs_x2,
    })
}

/// Every `C`-vertex must have even degree (a consequence of properties (3)
/// and (4)). Returns the first violating vertex, or `None` on pass.
pub fn check_even_degree_c(g: &Graph, d: &Decomposition) -> Option<usize> {
    d.c.iter().find(|&v| !g.degree(v).is_multiple_of(2))
}
