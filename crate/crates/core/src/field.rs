//! Grid-sampled fields: scalars, vectors, symmetric 2-tensors, and
//! time-indexed stacks of them. Fields are immutable after construction;
//! every operation returns a fresh field.

use crate::error::{Error, Result};
use crate::grid::TorusGrid;

#[derive(Debug, Clone)]
pub struct TorusScalarField {
    pub(crate) grid: TorusGrid,
    pub(crate) values: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct TorusVectorField {
    pub(crate) grid: TorusGrid,
    /// Components v1, v2.
    pub(crate) comps: [Vec<f64>; 2],
}

/// Symmetric tensor field storing (T11, T12, T22); T21 = T12 by construction.
#[derive(Debug, Clone)]
pub struct TorusSymTensorField {
    pub(crate) grid: TorusGrid,
    pub(crate) comps: [Vec<f64>; 3],
}

impl TorusScalarField {
    pub fn from_values(grid: TorusGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::GridMismatch(format!(
                "{} values for {} grid points",
                values.len(),
                grid.len()
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: TorusGrid, f: impl Fn([f64; 2]) -> f64 + Sync) -> Self {
        use rayon::prelude::*;
        let values: Vec<f64> = (0..grid.len())
            .into_par_iter()
            .map(|idx| f(grid.point(idx)))
            .collect();
        Self { grid, values }
    }

    pub fn zeros(grid: TorusGrid) -> Self {
        Self { grid, values: vec![0.0; grid.len()] }
    }

    pub fn constant(grid: TorusGrid, c: f64) -> Self {
        Self { grid, values: vec![c; grid.len()] }
    }

    #[inline]
    pub fn grid(&self) -> TorusGrid {
        self.grid
    }

    #[inline]
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.values[self.grid.idx(i, j)]
    }

    /// Grid average (= torus mean, trapezoid rule on a periodic grid).
    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// Raw integral over the torus.
    pub fn integral(&self) -> f64 {
        self.mean() * self.grid.area()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    pub fn map(&self, f: impl Fn(f64) -> f64 + Sync) -> Self {
        Self { grid: self.grid, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    pub fn zip(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        self.grid.same_as(&other.grid)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Self { grid: self.grid, values })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: f64) -> Self {
        self.map(|v| c * v)
    }
}

impl TorusVectorField {
    pub fn from_components(c1: TorusScalarField, c2: TorusScalarField) -> Result<Self> {
        c1.grid.same_as(&c2.grid)?;
        Ok(Self { grid: c1.grid, comps: [c1.values, c2.values] })
    }

    pub fn from_fn(grid: TorusGrid, f: impl Fn([f64; 2]) -> [f64; 2] + Sync) -> Self {
        use rayon::prelude::*;
        let pts: Vec<[f64; 2]> = (0..grid.len())
            .into_par_iter()
            .map(|idx| f(grid.point(idx)))
            .collect();
        let mut comps = [vec![0.0; grid.len()], vec![0.0; grid.len()]];
        for (i, p) in pts.iter().enumerate() {
            comps[0][i] = p[0];
            comps[1][i] = p[1];
        }
        Self { grid, comps }
    }

    pub fn zeros(grid: TorusGrid) -> Self {
        Self { grid, comps: [vec![0.0; grid.len()], vec![0.0; grid.len()]] }
    }

    #[inline]
    pub fn grid(&self) -> TorusGrid {
        self.grid
    }

    pub fn component(&self, i: usize) -> TorusScalarField {
        TorusScalarField { grid: self.grid, values: self.comps[i].clone() }
    }

    #[inline]
    pub fn comp(&self, i: usize) -> &[f64] {
        &self.comps[i]
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> [f64; 2] {
        let idx = self.grid.idx(i, j);
        [self.comps[0][idx], self.comps[1][idx]]
    }

    /// Componentwise torus integral.
    pub fn integral(&self) -> [f64; 2] {
        let a = self.grid.area() / self.grid.len() as f64;
        [
            self.comps[0].iter().sum::<f64>() * a,
            self.comps[1].iter().sum::<f64>() * a,
        ]
    }

    pub fn mean(&self) -> [f64; 2] {
        let n = self.grid.len() as f64;
        [
            self.comps[0].iter().sum::<f64>() / n,
            self.comps[1].iter().sum::<f64>() / n,
        ]
    }

    pub fn max_abs(&self) -> f64 {
        let mut m = 0.0f64;
        for idx in 0..self.grid.len() {
            m = m.max(self.comps[0][idx].hypot(self.comps[1][idx]));
        }
        m
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.grid.same_as(&other.grid)?;
        Ok(Self {
            grid: self.grid,
            comps: [
                self.comps[0].iter().zip(&other.comps[0]).map(|(a, b)| a + b).collect(),
                self.comps[1].iter().zip(&other.comps[1]).map(|(a, b)| a + b).collect(),
            ],
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.grid.same_as(&other.grid)?;
        Ok(Self {
            grid: self.grid,
            comps: [
                self.comps[0].iter().zip(&other.comps[0]).map(|(a, b)| a - b).collect(),
                self.comps[1].iter().zip(&other.comps[1]).map(|(a, b)| a - b).collect(),
            ],
        })
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            grid: self.grid,
            comps: [
                self.comps[0].iter().map(|v| c * v).collect(),
                self.comps[1].iter().map(|v| c * v).collect(),
            ],
        }
    }

    /// Pointwise outer product v (x) w, symmetrized storage is only valid when
    /// v = w; use `outer` for the symmetric square.
    pub fn outer(&self) -> TorusSymTensorField {
        let n = self.grid.len();
        let mut comps = [vec![0.0; n], vec![0.0; n], vec![0.0; n]];
        for idx in 0..n {
            let (a, b) = (self.comps[0][idx], self.comps[1][idx]);
            comps[0][idx] = a * a;
            comps[1][idx] = a * b;
            comps[2][idx] = b * b;
        }
        TorusSymTensorField { grid: self.grid, comps }
    }

    /// Symmetrized product v (x) w + w (x) v.
    pub fn sym_outer_with(&self, other: &Self) -> Result<TorusSymTensorField> {
        self.grid.same_as(&other.grid)?;
        let n = self.grid.len();
        let mut comps = [vec![0.0; n], vec![0.0; n], vec![0.0; n]];
        for idx in 0..n {
            let (a1, a2) = (self.comps[0][idx], self.comps[1][idx]);
            let (b1, b2) = (other.comps[0][idx], other.comps[1][idx]);
            comps[0][idx] = 2.0 * a1 * b1;
            comps[1][idx] = a1 * b2 + a2 * b1;
            comps[2][idx] = 2.0 * a2 * b2;
        }
        Ok(TorusSymTensorField { grid: self.grid, comps })
    }
}

impl TorusSymTensorField {
    pub fn from_components(
        t11: TorusScalarField,
        t12: TorusScalarField,
        t22: TorusScalarField,
    ) -> Result<Self> {
        t11.grid.same_as(&t12.grid)?;
        t11.grid.same_as(&t22.grid)?;
        Ok(Self { grid: t11.grid, comps: [t11.values, t12.values, t22.values] })
    }

    pub fn from_fn(grid: TorusGrid, f: impl Fn([f64; 2]) -> [f64; 3] + Sync) -> Self {
        use rayon::prelude::*;
        let pts: Vec<[f64; 3]> = (0..grid.len())
            .into_par_iter()
            .map(|idx| f(grid.point(idx)))
            .collect();
        let mut comps = [vec![0.0; grid.len()], vec![0.0; grid.len()], vec![0.0; grid.len()]];
        for (i, p) in pts.iter().enumerate() {
            comps[0][i] = p[0];
            comps[1][i] = p[1];
            comps[2][i] = p[2];
        }
        Self { grid, comps }
    }

    pub fn zeros(grid: TorusGrid) -> Self {
        let n = grid.len();
        Self { grid, comps: [vec![0.0; n], vec![0.0; n], vec![0.0; n]] }
    }

    #[inline]
    pub fn grid(&self) -> TorusGrid {
        self.grid
    }

    /// Component by (row, col); storage is (T11, T12, T22).
    pub fn component(&self, row: usize, col: usize) -> TorusScalarField {
        let k = match (row, col) {
            (0, 0) => 0,
            (1, 1) => 2,
            _ => 1,
        };
        TorusScalarField { grid: self.grid, values: self.comps[k].clone() }
    }

    #[inline]
    pub fn comp(&self, k: usize) -> &[f64] {
        &self.comps[k]
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> [f64; 3] {
        let idx = self.grid.idx(i, j);
        [self.comps[0][idx], self.comps[1][idx], self.comps[2][idx]]
    }

    /// Pointwise Frobenius norm as a scalar field.
    pub fn frobenius(&self) -> TorusScalarField {
        let n = self.grid.len();
        let mut values = vec![0.0; n];
        for idx in 0..n {
            let (a, b, c) = (self.comps[0][idx], self.comps[1][idx], self.comps[2][idx]);
            values[idx] = (a * a + 2.0 * b * b + c * c).sqrt();
        }
        TorusScalarField { grid: self.grid, values }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.grid.same_as(&other.grid)?;
        let comps = [
            self.comps[0].iter().zip(&other.comps[0]).map(|(a, b)| a + b).collect(),
            self.comps[1].iter().zip(&other.comps[1]).map(|(a, b)| a + b).collect(),
            self.comps[2].iter().zip(&other.comps[2]).map(|(a, b)| a + b).collect(),
        ];
        Ok(Self { grid: self.grid, comps })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.grid.same_as(&other.grid)?;
        let comps = [
            self.comps[0].iter().zip(&other.comps[0]).map(|(a, b)| a - b).collect(),
            self.comps[1].iter().zip(&other.comps[1]).map(|(a, b)| a - b).collect(),
            self.comps[2].iter().zip(&other.comps[2]).map(|(a, b)| a - b).collect(),
        ];
        Ok(Self { grid: self.grid, comps })
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            grid: self.grid,
            comps: [
                self.comps[0].iter().map(|v| c * v).collect(),
                self.comps[1].iter().map(|v| c * v).collect(),
                self.comps[2].iter().map(|v| c * v).collect(),
            ],
        }
    }
}

/// Time-indexed stack of frames on one grid, times strictly increasing.
#[derive(Debug, Clone)]
pub struct SpaceTimeField<F> {
    times: Vec<f64>,
    frames: Vec<F>,
}

pub type SpaceTimeScalar = SpaceTimeField<TorusScalarField>;
pub type SpaceTimeVector = SpaceTimeField<TorusVectorField>;
pub type SpaceTimeSymTensor = SpaceTimeField<TorusSymTensorField>;

impl<F> SpaceTimeField<F> {
    pub fn new(times: Vec<f64>, frames: Vec<F>) -> Result<Self> {
        if times.len() != frames.len() {
            return Err(Error::Other(format!(
                "{} times for {} frames",
                times.len(),
                frames.len()
            )));
        }
        if times.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Other("times must be strictly increasing".into()));
        }
        Ok(Self { times, frames })
    }

    #[inline]
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    #[inline]
    pub fn frames(&self) -> &[F] {
        &self.frames
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.times.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, &F)> {
        self.times.iter().copied().zip(self.frames.iter())
    }

    pub fn map_frames<G>(&self, f: impl Fn(&F) -> G) -> SpaceTimeField<G> {
        SpaceTimeField {
            times: self.times.clone(),
            frames: self.frames.iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_stores_three_components() {
        let g = TorusGrid::unit(8).unwrap();
        let t = TorusSymTensorField::from_fn(g, |p| [p[0], p[0] * p[1], p[1]]);
        // symmetric by construction
        let t12 = t.component(0, 1);
        let t21 = t.component(1, 0);
        assert_eq!(t12.values(), t21.values());
    }

    #[test]
    fn spacetime_rejects_unsorted_times() {
        let g = TorusGrid::unit(8).unwrap();
        let f = TorusScalarField::zeros(g);
        assert!(SpaceTimeField::new(vec![0.0, 0.0], vec![f.clone(), f.clone()]).is_err());
        assert!(SpaceTimeField::new(vec![0.0, 0.1], vec![f.clone(), f]).is_ok());
    }

    #[test]
    fn mean_of_constant() {
        let g = TorusGrid::unit(16).unwrap();
        let f = TorusScalarField::constant(g, 3.25);
        assert_eq!(f.mean(), 3.25);
    }
}
