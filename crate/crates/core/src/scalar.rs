//! Scalar abstractions: exact rationals for the descent machinery and
//! floating-point scalars for the heuristic layer.

use std::fmt::{Debug, Display};

use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed, ToPrimitive};

/// Exact rational scalar.
///
/// All circle arithmetic (angles, energies, rotation deltas) is generic over
/// this trait so the same code runs on fixed-width rationals and on
/// `BigRational`. The engine only ever combines input denominators with the
/// quarter-turn grid, so `Ratio<i64>` is fine for tame inputs; the crate
/// default [`crate::Rat`] is `BigRational`, which never overflows.
pub trait Rational: Num + Signed + Ord + Clone + Debug + Display + Send + Sync + 'static {
    /// The exact value `numer / denom`. Panics if `denom == 0`.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    /// `self - floor(self)`, always in `[0, 1)`.
    fn mod_one(&self) -> Self;

    fn numer_string(&self) -> String;

    fn denom_string(&self) -> String;

    /// Lossy conversion for display and Monte-Carlo sampling.
    fn approx_f64(&self) -> f64;

    /// Canonical `"numer/denom"` form, e.g. `"-3/4"`, `"0/1"`.
    fn ratio_string(&self) -> String {
        format!("{}/{}", self.numer_string(), self.denom_string())
    }

    /// Parses `"n/d"` or a bare integer `"n"`. Returns `None` on malformed
    /// input or a zero denominator.
    fn parse_ratio(s: &str) -> Option<Self>;
}

fn split_ratio(s: &str) -> Option<(&str, &str)> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => Some((n.trim(), d.trim())),
        None => Some((s, "1")),
    }
}

macro_rules! impl_rational_for_ratio {
    ($int:ty) => {
        impl Rational for Ratio<$int> {
            fn from_ratio(numer: i64, denom: i64) -> Self {
                assert!(denom != 0, "zero denominator");
                Ratio::new(numer as $int, denom as $int)
            }

            fn mod_one(&self) -> Self {
                self - self.floor()
            }

            fn numer_string(&self) -> String {
                self.numer().to_string()
            }

            fn denom_string(&self) -> String {
                self.denom().to_string()
            }

            fn approx_f64(&self) -> f64 {
                self.to_f64().unwrap_or(f64::NAN)
            }

            fn parse_ratio(s: &str) -> Option<Self> {
                let (n, d) = split_ratio(s)?;
                let numer: $int = n.parse().ok()?;
                let denom: $int = d.parse().ok()?;
                if denom == 0 {
                    return None;
                }
                Some(Ratio::new(numer, denom))
            }
        }
    };
}

impl_rational_for_ratio!(i64);
impl_rational_for_ratio!(i128);

impl Rational for BigRational {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        BigRational::new(numer.into(), denom.into())
    }

    fn mod_one(&self) -> Self {
        self - self.floor()
    }

    fn numer_string(&self) -> String {
        self.numer().to_string()
    }

    fn denom_string(&self) -> String {
        self.denom().to_string()
    }

    fn approx_f64(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn parse_ratio(s: &str) -> Option<Self> {
        let (n, d) = split_ratio(s)?;
        let numer = n.parse().ok()?;
        let denom = d.parse().ok()?;
        let out = BigRational::new_raw(numer, denom);
        if out.denom().is_zero() {
            return None;
        }
        Some(out.reduced())
    }
}

/// Floating-point scalar for the heuristics layer: `f32` or `f64`.
pub trait FloatScalar: num_traits::Float + Debug + Display + Send + Sync + 'static {
    /// Casts a literal; panics only on NaN inputs, which we never pass.
    fn lit(x: f64) -> Self {
        <Self as num_traits::NumCast>::from(x).expect("finite literal")
    }

    fn pi() -> Self {
        Self::lit(std::f64::consts::PI)
    }

    fn two_pi() -> Self {
        Self::lit(2.0 * std::f64::consts::PI)
    }
}

impl FloatScalar for f32 {}
impl FloatScalar for f64 {}

use num_traits::Zero;
