//! Thin 2-D FFT layer over rustfft, plus the spectral coefficient type.
//!
//! Coefficients are stored with the same row-major layout as grid values;
//! bin (i, j) carries the integer wavenumbers (k1, k2) given by
//! `TorusGrid::wavenumber`. Forward transforms normalize by 1/N^2 so a
//! coefficient is the amplitude of exp(i*(kappa . x)).

use std::sync::Mutex;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::field::{TorusScalarField, TorusVectorField};
use crate::grid::TorusGrid;

static PLANNER: Mutex<Option<FftPlanner<f64>>> = Mutex::new(None);

fn fft_rows(data: &mut [Complex64], n: usize, forward: bool) {
    let fft = {
        let mut guard = PLANNER.lock().unwrap();
        let planner = guard.get_or_insert_with(FftPlanner::new);
        if forward {
            planner.plan_fft_forward(n)
        } else {
            planner.plan_fft_inverse(n)
        }
    };
    let mut scratch = vec![Complex64::default(); fft.get_inplace_scratch_len()];
    for row in data.chunks_exact_mut(n) {
        fft.process_with_scratch(row, &mut scratch);
    }
}

fn transpose(data: &[Complex64], n: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::default(); n * n];
    for i in 0..n {
        for j in 0..n {
            out[j * n + i] = data[i * n + j];
        }
    }
    out
}

fn fft2(data: &mut Vec<Complex64>, n: usize, forward: bool) {
    fft_rows(data, n, forward);
    let mut t = transpose(data, n);
    fft_rows(&mut t, n, forward);
    *data = transpose(&t, n);
}

/// Fourier coefficients of a scalar field.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub(crate) grid: TorusGrid,
    pub(crate) coeffs: Vec<Complex64>,
}

impl Spectrum {
    pub fn forward(f: &TorusScalarField) -> Self {
        let grid = f.grid();
        let n = grid.n();
        let mut data: Vec<Complex64> = f.values().iter().map(|&v| Complex64::new(v, 0.0)).collect();
        fft2(&mut data, n, true);
        let scale = 1.0 / (n * n) as f64;
        for c in &mut data {
            *c *= scale;
        }
        Self { grid, coeffs: data }
    }

    pub fn zeros(grid: TorusGrid) -> Self {
        Self { grid, coeffs: vec![Complex64::default(); grid.len()] }
    }

    pub fn inverse(&self) -> TorusScalarField {
        let n = self.grid.n();
        let mut data = self.coeffs.clone();
        fft2(&mut data, n, false);
        TorusScalarField::from_values(self.grid, data.iter().map(|c| c.re).collect())
            .expect("lengths agree by construction")
    }

    #[inline]
    pub fn grid(&self) -> TorusGrid {
        self.grid
    }

    #[inline]
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Applies `f(k1, k2, c)` to every coefficient, returning a new spectrum.
    pub fn map_modes(&self, f: impl Fn(i64, i64, Complex64) -> Complex64) -> Self {
        let n = self.grid.n();
        let mut coeffs = self.coeffs.clone();
        for i in 0..n {
            let k1 = self.grid.wavenumber(i);
            for j in 0..n {
                let k2 = self.grid.wavenumber(j);
                let idx = i * n + j;
                coeffs[idx] = f(k1, k2, coeffs[idx]);
            }
        }
        Self { grid: self.grid, coeffs }
    }

    /// Mean (k = 0) coefficient.
    pub fn mean(&self) -> f64 {
        self.coeffs[0].re
    }

    /// Evaluates the trigonometric interpolant at an arbitrary point.
    /// Cost is O(active modes); intended for smooth, well-resolved fields.
    pub fn eval(&self, x: [f64; 2]) -> f64 {
        let n = self.grid.n();
        let tau = std::f64::consts::TAU / self.grid.side();
        let mut sum = Complex64::default();
        for i in 0..n {
            let k1 = self.grid.wavenumber(i) as f64;
            for j in 0..n {
                let c = self.coeffs[i * n + j];
                if c.norm_sqr() == 0.0 {
                    continue;
                }
                let k2 = self.grid.wavenumber(j) as f64;
                let phase = tau * (k1 * x[0] + k2 * x[1]);
                sum += c * Complex64::new(phase.cos(), phase.sin());
            }
        }
        sum.re
    }

    /// Drops modes with |c| below `rel_tol * max|c|`; speeds up `eval`.
    pub fn compress(&self, rel_tol: f64) -> Self {
        let max = self
            .coeffs
            .iter()
            .fold(0.0f64, |m, c| m.max(c.norm()));
        let cut = rel_tol * max;
        Self {
            grid: self.grid,
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| if c.norm() < cut { Complex64::default() } else { c })
                .collect(),
        }
    }
}

/// Spectra of both components of a vector field.
#[derive(Debug, Clone)]
pub struct VectorSpectrum {
    pub c1: Spectrum,
    pub c2: Spectrum,
}

impl VectorSpectrum {
    pub fn forward(v: &TorusVectorField) -> Self {
        Self {
            c1: Spectrum::forward(&v.component(0)),
            c2: Spectrum::forward(&v.component(1)),
        }
    }

    pub fn inverse(&self) -> TorusVectorField {
        TorusVectorField::from_components(self.c1.inverse(), self.c2.inverse())
            .expect("components share the grid")
    }

    pub fn grid(&self) -> TorusGrid {
        self.c1.grid
    }
}

/// Sparse list of active modes for fast off-grid evaluation of a smooth field.
#[derive(Debug, Clone)]
pub struct SpectralEvaluator {
    side: f64,
    modes: Vec<(f64, f64, Complex64)>,
}

impl SpectralEvaluator {
    pub fn new(spectrum: &Spectrum, rel_tol: f64) -> Self {
        let n = spectrum.grid.n();
        let max = spectrum.coeffs.iter().fold(0.0f64, |m, c| m.max(c.norm()));
        let cut = rel_tol * max;
        let tau = std::f64::consts::TAU / spectrum.grid.side();
        let mut modes = Vec::new();
        for i in 0..n {
            let k1 = spectrum.grid.wavenumber(i) as f64;
            for j in 0..n {
                let c = spectrum.coeffs[i * n + j];
                if c.norm() >= cut && c.norm() > 0.0 {
                    let k2 = spectrum.grid.wavenumber(j) as f64;
                    modes.push((tau * k1, tau * k2, c));
                }
            }
        }
        Self { side: spectrum.grid.side(), modes }
    }

    pub fn eval(&self, x: [f64; 2]) -> f64 {
        let mut sum = 0.0;
        for &(k1, k2, c) in &self.modes {
            let phase = k1 * x[0] + k2 * x[1];
            sum += c.re * phase.cos() - c.im * phase.sin();
        }
        sum
    }

    /// Gradient of the interpolant at an arbitrary point.
    pub fn eval_grad(&self, x: [f64; 2]) -> [f64; 2] {
        let mut g = [0.0, 0.0];
        for &(k1, k2, c) in &self.modes {
            let phase = k1 * x[0] + k2 * x[1];
            let (s, co) = phase.sin_cos();
            // d/dx Re(c e^{i phase}) = -Re(c) k sin - Im(c) k cos
            let d = -c.re * s - c.im * co;
            g[0] += k1 * d;
            g[1] += k2 * d;
        }
        g
    }

    pub fn mode_count(&self) -> usize {
        self.modes.len()
    }

    pub fn side(&self) -> f64 {
        self.side
    }
}

/// Restricts a spectrum to the modes resonant with the closed line of
/// direction xi ~ (p, q) (primitive integer vector): k . (p, q) = 0.
/// The result is exactly the average of the field along that family of lines.
pub fn line_resonant_projection(spectrum: &Spectrum, p: i64, q: i64) -> Spectrum {
    spectrum.map_modes(|k1, k2, c| {
        if k1 * p + k2 * q == 0 {
            c
        } else {
            Complex64::default()
        }
    })
}

pub fn check_same_grid(a: TorusGrid, b: TorusGrid) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::GridMismatch(format!("{a:?} vs {b:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = TorusGrid::unit(32).unwrap();
        let f = TorusScalarField::from_fn(g, |p| {
            (std::f64::consts::TAU * p[0]).sin() + 0.3 * (2.0 * std::f64::consts::TAU * p[1]).cos()
        });
        let back = Spectrum::forward(&f).inverse();
        let err: f64 = f
            .values()
            .iter()
            .zip(back.values())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(err < 1e-13, "round trip error {err}");
    }

    #[test]
    fn single_mode_coefficient() {
        let g = TorusGrid::unit(16).unwrap();
        let f = TorusScalarField::from_fn(g, |p| (std::f64::consts::TAU * p[0]).cos());
        let s = Spectrum::forward(&f);
        // cos -> two coefficients of 1/2 at k = (+-1, 0)
        assert!((s.coeffs[g.idx(1, 0)].re - 0.5).abs() < 1e-13);
        assert!((s.coeffs[g.idx(15, 0)].re - 0.5).abs() < 1e-13);
        assert!(s.mean().abs() < 1e-14);
    }

    #[test]
    fn off_grid_eval_matches_closed_form() {
        let g = TorusGrid::unit(32).unwrap();
        let f = TorusScalarField::from_fn(g, |p| {
            (std::f64::consts::TAU * (2.0 * p[0] - p[1])).sin()
        });
        let ev = SpectralEvaluator::new(&Spectrum::forward(&f), 1e-12);
        let x = [0.123456, 0.654321];
        let want = (std::f64::consts::TAU * (2.0 * x[0] - x[1])).sin();
        assert!((ev.eval(x) - want).abs() < 1e-12);
        let gr = ev.eval_grad(x);
        let c = (std::f64::consts::TAU * (2.0 * x[0] - x[1])).cos() * std::f64::consts::TAU;
        assert!((gr[0] - 2.0 * c).abs() < 1e-10);
        assert!((gr[1] + c).abs() < 1e-10);
    }
}
