//! Uniform periodic grid on the square torus.

use crate::error::{Error, Result};

/// Uniform N x N sampling of the torus [0, L)^2, samples at j*L/N.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusGrid {
    side: f64,
    n: usize,
}

impl TorusGrid {
    /// `side` is the torus period L, `n` the resolution per axis.
    /// N must be even and at least 8.
    pub fn new(side: f64, n: usize) -> Result<Self> {
        if !(side > 0.0) || !side.is_finite() {
            return Err(Error::InvalidGrid(format!("side length {side} must be positive")));
        }
        if n < 8 || n % 2 != 0 {
            return Err(Error::InvalidGrid(format!("resolution {n} must be even and >= 8")));
        }
        Ok(Self { side, n })
    }

    /// Unit torus, the default for verification runs.
    pub fn unit(n: usize) -> Result<Self> {
        Self::new(1.0, n)
    }

    /// The paper's torus [-pi, pi]^2, realized as [0, 2*pi)^2.
    pub fn two_pi(n: usize) -> Result<Self> {
        Self::new(std::f64::consts::TAU, n)
    }

    #[inline]
    pub fn side(&self) -> f64 {
        self.side
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n * self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Grid spacing L/N.
    #[inline]
    pub fn h(&self) -> f64 {
        self.side / self.n as f64
    }

    /// Torus area L^2.
    #[inline]
    pub fn area(&self) -> f64 {
        self.side * self.side
    }

    /// Sample point (x1, x2) of the flattened index `idx` (row-major, x2 fastest).
    #[inline]
    pub fn point(&self, idx: usize) -> [f64; 2] {
        let (i, j) = (idx / self.n, idx % self.n);
        [i as f64 * self.h(), j as f64 * self.h()]
    }

    #[inline]
    pub fn idx(&self, i: usize, j: usize) -> usize {
        i * self.n + j
    }

    /// Integer wavenumber along one axis for FFT bin `i` (negative for the upper half).
    #[inline]
    pub fn wavenumber(&self, i: usize) -> i64 {
        let n = self.n as i64;
        let i = i as i64;
        if i <= n / 2 { i } else { i - n }
    }

    /// Angular wavenumber 2*pi*k/L for FFT bin `i`.
    #[inline]
    pub fn kappa(&self, i: usize) -> f64 {
        std::f64::consts::TAU * self.wavenumber(i) as f64 / self.side
    }

    /// Shortest signed displacement a - b on the periodic axis.
    #[inline]
    pub fn wrap(&self, d: f64) -> f64 {
        let l = self.side;
        let mut d = d % l;
        if d > 0.5 * l {
            d -= l;
        } else if d < -0.5 * l {
            d += l;
        }
        d
    }

    /// Wrapped distance between two points.
    pub fn distance(&self, a: [f64; 2], b: [f64; 2]) -> f64 {
        let dx = self.wrap(a[0] - b[0]);
        let dy = self.wrap(a[1] - b[1]);
        dx.hypot(dy)
    }

    pub fn same_as(&self, other: &TorusGrid) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GridMismatch(format!("{self:?} vs {other:?}")))
        }
    }
}
