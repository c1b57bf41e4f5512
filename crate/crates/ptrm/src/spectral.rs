//! FFT-based spectral derivatives on periodic grids.
//!
//! Forward transforms are unnormalized (rustfft convention); inverses are
//! scaled by `1/n` so a round trip is the identity. Second derivatives
//! multiply coefficients by `-k^2` including the Nyquist mode; first
//! derivatives zero the Nyquist multiplier, the correct choice for odd
//! derivatives of real-representable data.

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::grid::{Grid1D, Grid2D};

/// Planned transforms and wavenumbers for one grid.
pub struct Spectral1D {
    n: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
    k: Vec<f64>,
}

impl Spectral1D {
    pub fn new(grid: &Grid1D) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            n: grid.len(),
            forward: planner.plan_fft_forward(grid.len()),
            inverse: planner.plan_fft_inverse(grid.len()),
            k: grid.wavenumbers(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn wavenumbers(&self) -> &[f64] {
        &self.k
    }

    /// In-place unnormalized forward transform.
    pub fn fft(&self, data: &mut [Complex64]) {
        self.forward.process(data);
    }

    /// In-place inverse transform scaled by `1/n`.
    pub fn ifft(&self, data: &mut [Complex64]) {
        self.inverse.process(data);
        let s = 1.0 / self.n as f64;
        for v in data.iter_mut() {
            *v *= s;
        }
    }

    /// Spectral second derivative.
    pub fn second_derivative(&self, field: &[Complex64]) -> Vec<Complex64> {
        let mut buf = field.to_vec();
        self.fft(&mut buf);
        for (c, &k) in buf.iter_mut().zip(&self.k) {
            *c *= -k * k;
        }
        self.ifft(&mut buf);
        buf
    }

    /// Spectral first derivative (Nyquist multiplier zeroed).
    pub fn first_derivative(&self, field: &[Complex64]) -> Vec<Complex64> {
        let mut buf = field.to_vec();
        self.fft(&mut buf);
        for (m, c) in buf.iter_mut().enumerate() {
            if m == self.n / 2 {
                *c = Complex64::new(0.0, 0.0);
            } else {
                *c *= Complex64::new(0.0, self.k[m]);
            }
        }
        self.ifft(&mut buf);
        buf
    }
}

/// Planned transforms for a tensor grid; fields are row-major
/// `data[ix*ny + iy]`.
pub struct Spectral2D {
    nx: usize,
    ny: usize,
    fx: Spectral1D,
    fy: Spectral1D,
}

impl Spectral2D {
    pub fn new(grid: &Grid2D) -> Self {
        Self {
            nx: grid.x.len(),
            ny: grid.y.len(),
            fx: Spectral1D::new(&grid.x),
            fy: Spectral1D::new(&grid.y),
        }
    }

    fn for_each_row(&self, data: &mut [Complex64], f: impl Fn(&Spectral1D, &mut [Complex64])) {
        for ix in 0..self.nx {
            f(&self.fy, &mut data[ix * self.ny..(ix + 1) * self.ny]);
        }
    }

    fn for_each_col(&self, data: &mut [Complex64], f: impl Fn(&Spectral1D, &mut [Complex64])) {
        let mut col = vec![Complex64::new(0.0, 0.0); self.nx];
        for iy in 0..self.ny {
            for ix in 0..self.nx {
                col[ix] = data[ix * self.ny + iy];
            }
            f(&self.fx, &mut col);
            for ix in 0..self.nx {
                data[ix * self.ny + iy] = col[ix];
            }
        }
    }

    /// In-place unnormalized 2D forward transform.
    pub fn fft(&self, data: &mut [Complex64]) {
        self.for_each_row(data, |p, row| p.fft(row));
        self.for_each_col(data, |p, col| p.fft(col));
    }

    /// In-place 2D inverse transform scaled by `1/(nx*ny)`.
    pub fn ifft(&self, data: &mut [Complex64]) {
        self.for_each_row(data, |p, row| p.ifft(row));
        self.for_each_col(data, |p, col| p.ifft(col));
    }

    /// Spectral Laplacian `d_xx + d_yy`.
    pub fn laplacian(&self, field: &[Complex64]) -> Vec<Complex64> {
        let mut buf = field.to_vec();
        self.fft(&mut buf);
        let kx = self.fx.wavenumbers();
        let ky = self.fy.wavenumbers();
        for ix in 0..self.nx {
            for iy in 0..self.ny {
                let k2 = kx[ix] * kx[ix] + ky[iy] * ky[iy];
                buf[ix * self.ny + iy] *= -k2;
            }
        }
        self.ifft(&mut buf);
        buf
    }

    /// Spectral `d/dx` (Nyquist zeroed on the x axis).
    pub fn dx(&self, field: &[Complex64]) -> Vec<Complex64> {
        let mut buf = field.to_vec();
        self.for_each_col(&mut buf, |p, col| {
            let d = p.first_derivative(col);
            col.copy_from_slice(&d);
        });
        buf
    }

    /// Spectral `d/dy` (Nyquist zeroed on the y axis).
    pub fn dy(&self, field: &[Complex64]) -> Vec<Complex64> {
        let mut buf = field.to_vec();
        self.for_each_row(&mut buf, |p, row| {
            let d = p.first_derivative(row);
            row.copy_from_slice(&d);
        });
        buf
    }
}
