//! Exact A/B/C vertex decompositions of simple connected graphs.
//!
//! Every connected graph can be split into sets `A`, `B`, `C` such that each
//! `A`-vertex has strictly more neighbors in `B` than in `A` (with margin
//! `max(1, d_C)`), symmetrically for `B`, while `C` is an independent set
//! whose vertices see `A` and `B` equally often. This crate finds such a
//! decomposition constructively, by descending a piecewise-linear energy on
//! exact rational circle configurations, and verifies the result — plus the
//! associated judicious-partition cut bounds — against brute-force oracles.
//!
//! Modules:
//! - [`graph`]: immutable simple graphs, parsers (edge list, DIMACS) and
//!   generators.
//! - [`circle`]: exact angles in turns, configurations, the tent-function
//!   energy, expected randomized-rounding cut, and single-vertex move deltas.
//! - [`engine`]: the two-phase descent (rigid rotations to an antipodal
//!   configuration, then antipodal refinement) producing a [`engine::Decomposition`]
//!   and a replayable [`engine::DescentTrace`], plus the folklore odd-degree
//!   bipartition.
//! - [`verify`]: independent checking of the five decomposition properties,
//!   subset inequalities, and cut bounds.
//! - [`oracle`]: exhaustive MaxCut, exhaustive decomposition enumeration and
//!   Monte-Carlo rounding at desk scale.
//! - [`heur`]: floating-point cosine-energy descent, rounding-guarantee
//!   ratios and cut comparisons.
//!
//! Exact arithmetic is generic over [`scalar::Rational`]; the crate-level
//! alias [`Rat`] (arbitrary precision) is what the CLI and the engine default
//! to. Floating-point code is generic over [`scalar::FloatScalar`].
//!
//! ```
//! use friendly_split::{engine, graph, Rat};
//!
//! let g = graph::generate(&"complete:5".parse().unwrap()).unwrap();
//! let (d, _trace) = engine::decompose::<Rat>(&g, &engine::InitStrategy::AllZero, None).unwrap();
//! assert_eq!(d.sizes(), (2, 2, 1));
//! let report = friendly_split::verify::check_properties(&g, &d).unwrap();
//! assert!(report.pass());
//! ```

pub mod circle;
pub mod engine;
pub mod graph;
pub mod heur;
pub mod oracle;
pub mod scalar;
pub mod verify;
pub mod vertex_set;

pub use scalar::{FloatScalar, Rational};
pub use vertex_set::VertexSet;

/// Default exact scalar: arbitrary-precision rationals.
pub type Rat = num_rational::BigRational;

/// Fixed-width exact scalar for tame inputs.
pub type Rat64 = num_rational::Rational64;

/// Default floating-point scalar for the heuristics layer.
pub type Flt = f64;

/// Angle over the default exact scalar.
pub type RatAngle = circle::Angle<Rat>;

/// Configuration over the default exact scalar.
pub type RatConfiguration = circle::Configuration<Rat>;
