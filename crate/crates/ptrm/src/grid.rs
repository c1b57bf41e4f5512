//! Uniform, origin-symmetric periodic grids with FFT-ordered wavenumbers.
//!
//! All numerical modules share these grids. The domain is `[-L, L)` sampled
//! at `n` points `x_j = -L + j*dx`, `dx = 2L/n`, so the origin is a grid
//! point (`x_{n/2} = 0`) and the grid is symmetric under `x -> -x` up to the
//! periodic identification of `-L` with `+L`. Powers of two for `n` are
//! recommended for transform speed but not required.

use crate::{Error, Result};

/// One-dimensional uniform periodic grid on `[-L, L)`.
#[derive(Debug, Clone)]
pub struct Grid1D {
    half_width: f64,
    n: usize,
    dx: f64,
    points: Vec<f64>,
}

impl Grid1D {
    /// Build a grid with half-width `L` and `n` points.
    ///
    /// `n` must be even and at least 8; `L` must be positive and finite.
    pub fn new(half_width: f64, n: usize) -> Result<Self> {
        if !half_width.is_finite() || half_width <= 0.0 {
            return Err(Error::InvalidGrid(format!(
                "half_width must be positive and finite, got {half_width}"
            )));
        }
        if n % 2 != 0 {
            return Err(Error::InvalidGrid(format!("n must be even, got {n}")));
        }
        if n < 8 {
            return Err(Error::InvalidGrid(format!("n must be >= 8, got {n}")));
        }
        let dx = 2.0 * half_width / n as f64;
        let half = (n / 2) as i64;
        // (j - n/2)*dx makes x_{n/2} = 0 exact; for power-of-two n the
        // endpoint -L is exact as well.
        let points = (0..n).map(|j| (j as i64 - half) as f64 * dx).collect();
        Ok(Self {
            half_width,
            n,
            dx,
            points,
        })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// FFT-ordered wavenumbers `k_m = m*pi/L`, `m = 0..n/2-1, -n/2..-1`.
    ///
    /// Multiplying transform coefficients by `-k^2` realizes the periodic
    /// second derivative.
    pub fn wavenumbers(&self) -> Vec<f64> {
        let dk = std::f64::consts::PI / self.half_width;
        (0..self.n)
            .map(|m| {
                let signed = if m < self.n / 2 {
                    m as i64
                } else {
                    m as i64 - self.n as i64
                };
                signed as f64 * dk
            })
            .collect()
    }

    /// Index of the mirror point of `x_j` under `x -> -x` (periodic).
    ///
    /// `x_0 = -L` maps to itself since `+L` is identified with `-L`.
    pub fn mirror_index(&self, j: usize) -> usize {
        if j == 0 {
            0
        } else {
            self.n - j
        }
    }
}

/// Two-dimensional tensor grid; each axis is a [`Grid1D`].
#[derive(Debug, Clone)]
pub struct Grid2D {
    pub x: Grid1D,
    pub y: Grid1D,
}

impl Grid2D {
    pub fn new(x: Grid1D, y: Grid1D) -> Self {
        Self { x, y }
    }

    /// Square grid with the same half-width and point count on both axes.
    pub fn square(half_width: f64, n: usize) -> Result<Self> {
        Ok(Self {
            x: Grid1D::new(half_width, n)?,
            y: Grid1D::new(half_width, n)?,
        })
    }

    /// Total number of points; fields are stored row-major, `data[ix*ny + iy]`.
    pub fn len(&self) -> usize {
        self.x.len() * self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}
