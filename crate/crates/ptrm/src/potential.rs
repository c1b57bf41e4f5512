//! The complex PT-symmetric Rosen-Morse potential well.
//!
//! In one dimension `V(x) = -a(a+1) sech^2 x` guides the beam and
//! `W(x) = 2b tanh x` is the gain/loss profile. Unlike `V`, the imaginary
//! part does not decay: `W -> ±2b` as `x -> ±inf`. The 2D well couples the
//! axes through a product term and carries a parameterized gain/loss scale
//! (see [`rosen_morse_2d`]).

use serde::{Deserialize, Serialize};

use crate::grid::{Grid1D, Grid2D};
use crate::{Error, Result};

/// Strengths of the real (`a`) and imaginary (`b`) parts of the well.
///
/// No sign restriction; every real pair is admissible.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialParams {
    pub a: f64,
    pub b: f64,
}

impl PotentialParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "potential strengths must be finite, got a={a}, b={b}"
            )));
        }
        Ok(Self { a, b })
    }
}

/// One sample of the complex potential: `V` index-guiding, `W` gain/loss.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPotentialSample {
    pub v: f64,
    pub w: f64,
}

pub(crate) fn sech(x: f64) -> f64 {
    1.0 / x.cosh()
}

/// 1D well: `V = -a(a+1) sech^2 x`, `W = 2b tanh x`.
pub fn rosen_morse_1d(p: PotentialParams, x: f64) -> ComplexPotentialSample {
    let s = sech(x);
    ComplexPotentialSample {
        v: -p.a * (p.a + 1.0) * s * s,
        w: 2.0 * p.b * x.tanh(),
    }
}

/// 2D well:
/// `V = 2(sech^2 x + sech^2 y) - (a^2+a+2) sech^2 x sech^2 y`,
/// `W = w_scale * b * (tanh x + tanh y)`.
///
/// `w_scale` must be 2 or 4. The two values correspond to the two candidate
/// parameter triples for the 2D mode; see [`crate::modes::mode_2d`] for how
/// the residual check adjudicates between them.
pub fn rosen_morse_2d(
    p: PotentialParams,
    x: f64,
    y: f64,
    w_scale: f64,
) -> Result<ComplexPotentialSample> {
    check_w_scale(w_scale)?;
    let sx = sech(x);
    let sy = sech(y);
    Ok(ComplexPotentialSample {
        v: 2.0 * (sx * sx + sy * sy) - (p.a * p.a + p.a + 2.0) * sx * sx * sy * sy,
        w: w_scale * p.b * (x.tanh() + y.tanh()),
    })
}

pub(crate) fn check_w_scale(w_scale: f64) -> Result<()> {
    if w_scale == 2.0 || w_scale == 4.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "w_scale must be 2 or 4, got {w_scale}"
        )))
    }
}

/// Largest PT-symmetry violation `|V(x)-V(-x)| + |W(x)+W(-x)|` over a grid.
///
/// The sampler is evaluated at `-x` directly (it is a function of position,
/// not of grid index), so the result is exact for symmetric potentials even
/// at the wrap point `x_0 = -L`.
pub fn check_pt_symmetry_1d(
    sampler: impl Fn(f64) -> ComplexPotentialSample,
    grid: &Grid1D,
) -> f64 {
    grid.points()
        .iter()
        .map(|&x| {
            let here = sampler(x);
            let there = sampler(-x);
            (here.v - there.v).abs() + (here.w + there.w).abs()
        })
        .fold(0.0, f64::max)
}

/// 2D PT-symmetry violation under `(x, y) -> (-x, -y)`.
pub fn check_pt_symmetry_2d(
    sampler: impl Fn(f64, f64) -> ComplexPotentialSample,
    grid: &Grid2D,
) -> f64 {
    let mut worst = 0.0f64;
    for &x in grid.x.points() {
        for &y in grid.y.points() {
            let here = sampler(x, y);
            let there = sampler(-x, -y);
            worst = worst.max((here.v - there.v).abs() + (here.w + there.w).abs());
        }
    }
    worst
}
