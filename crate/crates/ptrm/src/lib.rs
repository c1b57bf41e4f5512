//! Localized modes of the nonlinear Schrödinger equation with a complex
//! PT-symmetric Rosen-Morse potential well.
//!
//! The governing equation is
//!
//! ```text
//! i Psi_z + Psi_xx + [V(x) + i W(x)] Psi + sigma |Psi|^2 Psi = 0,
//! V(x) = -a(a+1) sech^2 x,    W(x) = 2b tanh x,
//! ```
//!
//! with a two-dimensional generalization on (x, y). The crate constructs the
//! closed-form localized modes of this equation, verifies them against the
//! stationary equation with a spectral residual check, computes their
//! linear-stability spectra by Fourier collocation (with a finite-difference
//! cross-check), and evolves them with a split-step spectral integrator.
//! Batch parameter sweeps and a CLI (`ptrm`) sit on top.
//!
//! Numerical conventions shared by every module:
//! - grids are uniform, origin-symmetric and periodic ([`grid::Grid1D`]);
//! - spectral derivatives use FFT wavenumbers `k_m = m*pi/L` ([`spectral`]);
//! - quadrature is the periodic trapezoid rule.

pub mod grid;
pub mod linstab;
pub mod modes;
pub mod observables;
pub mod potential;
pub mod propagate;
pub mod spectral;
pub mod sweep;

pub mod io;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(
        "field not decayed at the boundary: |field| = {boundary:.3e} exceeds \
         {required:.3e}; periodic spectral differentiation is not legitimate"
    )]
    BoundaryDecay { boundary: f64, required: f64 },
    #[error("linear spectrum pole: a = {a} puts level n = {n} within 1e-12 of a - n = 0")]
    SpectrumPole { a: f64, n: u32 },
    #[error("matrix size {size} exceeds the dense-solve budget {max}")]
    SizeBudget { size: usize, max: usize },
    #[error("eigensolver failed to converge: {0}")]
    EigNonConvergence(String),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("growth-fit window empty: {0}")]
    EmptyFitWindow(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
