//! L^p norms by periodic trapezoid quadrature (spectrally accurate), plus
//! space-time norms over frame stacks.

use crate::error::{Error, Result};
use crate::field::{SpaceTimeField, TorusScalarField, TorusSymTensorField, TorusVectorField};

/// How a space-time norm aggregates over the time axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimeMode {
    /// sup over sampled times
    Sup,
    /// trapezoid average over the sampled window
    Avg,
}

fn lp_of_samples(samples: impl Iterator<Item = f64>, p: f64, cell: f64) -> f64 {
    if p.is_infinite() {
        return samples.fold(0.0f64, |m, v| m.max(v.abs()));
    }
    let sum: f64 = samples.map(|v| v.abs().powf(p)).sum();
    (sum * cell).powf(1.0 / p)
}

/// L^p norm of a scalar field, p in [1, inf]. p = inf is the grid maximum
/// (a lower bound on the true sup).
pub fn lp_norm(f: &TorusScalarField, p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::InvalidParameter(format!("p = {p} must be >= 1")));
    }
    let cell = f.grid().area() / f.grid().len() as f64;
    Ok(lp_of_samples(f.values().iter().copied(), p, cell))
}

/// L^p norm of |v| for a vector field.
pub fn lp_norm_vec(v: &TorusVectorField, p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::InvalidParameter(format!("p = {p} must be >= 1")));
    }
    let cell = v.grid().area() / v.grid().len() as f64;
    let it = v
        .comp(0)
        .iter()
        .zip(v.comp(1))
        .map(|(a, b)| a.hypot(*b));
    Ok(lp_of_samples(it, p, cell))
}

/// L^p norm of the pointwise Frobenius norm of a symmetric tensor field.
pub fn lp_norm_tensor(t: &TorusSymTensorField, p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::InvalidParameter(format!("p = {p} must be >= 1")));
    }
    let cell = t.grid().area() / t.grid().len() as f64;
    let it = (0..t.grid().len()).map(|i| {
        let (a, b, c) = (t.comp(0)[i], t.comp(1)[i], t.comp(2)[i]);
        (a * a + 2.0 * b * b + c * c).sqrt()
    });
    Ok(lp_of_samples(it, p, cell))
}

/// Measure-normalized L^p norm (torus of unit mass), used by the iteration
/// estimates which are stated for averages.
pub fn mean_lp_norm(f: &TorusScalarField, p: f64) -> Result<f64> {
    let raw = lp_norm(f, p)?;
    if p.is_infinite() {
        Ok(raw)
    } else {
        Ok(raw / f.grid().area().powf(1.0 / p))
    }
}

fn aggregate(times: &[f64], vals: &[f64], mode: TimeMode) -> f64 {
    match mode {
        TimeMode::Sup => vals.iter().fold(0.0f64, |m, v| m.max(*v)),
        TimeMode::Avg => {
            if vals.len() < 2 {
                return vals.first().copied().unwrap_or(0.0);
            }
            let mut acc = 0.0;
            for w in 0..times.len() - 1 {
                acc += 0.5 * (vals[w] + vals[w + 1]) * (times[w + 1] - times[w]);
            }
            acc / (times[times.len() - 1] - times[0])
        }
    }
}

pub fn space_time_norm(
    f: &SpaceTimeField<TorusScalarField>,
    mode: TimeMode,
    p: f64,
) -> Result<f64> {
    let vals: Vec<f64> = f
        .frames()
        .iter()
        .map(|fr| lp_norm(fr, p))
        .collect::<Result<_>>()?;
    Ok(aggregate(f.times(), &vals, mode))
}

pub fn space_time_norm_vec(
    f: &SpaceTimeField<TorusVectorField>,
    mode: TimeMode,
    p: f64,
) -> Result<f64> {
    let vals: Vec<f64> = f
        .frames()
        .iter()
        .map(|fr| lp_norm_vec(fr, p))
        .collect::<Result<_>>()?;
    Ok(aggregate(f.times(), &vals, mode))
}

pub fn space_time_norm_tensor(
    f: &SpaceTimeField<TorusSymTensorField>,
    mode: TimeMode,
    p: f64,
) -> Result<f64> {
    let vals: Vec<f64> = f
        .frames()
        .iter()
        .map(|fr| lp_norm_tensor(fr, p))
        .collect::<Result<_>>()?;
    Ok(aggregate(f.times(), &vals, mode))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::TorusGrid;
    use std::f64::consts::TAU;

    #[test]
    fn constant_norm_is_abs_for_every_p() {
        let g = TorusGrid::unit(16).unwrap();
        let f = TorusScalarField::constant(g, -2.5);
        for p in [1.0, 1.5, 2.0, 7.0, f64::INFINITY] {
            assert!((lp_norm(&f, p).unwrap() - 2.5).abs() < 1e-12);
        }
    }

    #[test]
    fn sine_l2_norm() {
        let g = TorusGrid::unit(64).unwrap();
        let f = TorusScalarField::from_fn(g, |p| (TAU * p[0]).sin());
        let n2 = lp_norm(&f, 2.0).unwrap();
        assert!((n2 - 0.5f64.sqrt()).abs() < 1e-12, "got {n2}");
    }

    #[test]
    fn rejects_p_below_one() {
        let g = TorusGrid::unit(8).unwrap();
        let f = TorusScalarField::zeros(g);
        assert!(lp_norm(&f, 0.5).is_err());
    }
}
