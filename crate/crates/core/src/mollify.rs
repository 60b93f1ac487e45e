//! Space and space-time mollification by the tensor-product C-infinity
//! bump, applied as a spectral multiplier in space and by quadrature over
//! sampled frames in time.

use crate::bump::BumpKernel1d;
use crate::error::{Error, Result};
use crate::fft::Spectrum;
use crate::field::{
    SpaceTimeField, SpaceTimeScalar, SpaceTimeSymTensor, SpaceTimeVector, TorusScalarField,
    TorusSymTensorField, TorusVectorField,
};

/// Spatial mollifier of radius `ell`: tensor product of two unit-mass 1-D
/// bumps. Acts as a spectral multiplier; the k = 0 multiplier is exactly 1,
/// so means are preserved.
#[derive(Debug, Clone)]
pub struct SpaceMollifier {
    ell: f64,
    kernel: BumpKernel1d,
}

impl SpaceMollifier {
    pub fn new(ell: f64) -> Result<Self> {
        if !(ell > 0.0) {
            return Err(Error::InvalidParameter(format!("ell = {ell} must be positive")));
        }
        Ok(Self { ell, kernel: BumpKernel1d::new(ell) })
    }

    pub fn radius(&self) -> f64 {
        self.ell
    }

    /// The multiplier at angular wavenumber kappa along one axis.
    pub fn multiplier_1d(&self, kappa: f64) -> f64 {
        self.kernel.transform(kappa)
    }

    fn check_resolvable(&self, f: &impl HasGrid) -> Result<()> {
        let h = f.grid_of().h();
        if self.ell < 2.0 * h {
            return Err(Error::UnresolvableMollifier {
                radius: self.ell,
                reason: format!("needs >= 2 grid spacings, h = {h:.3e}"),
            });
        }
        Ok(())
    }

    pub fn apply_scalar(&self, f: &TorusScalarField) -> Result<TorusScalarField> {
        self.check_resolvable(f)?;
        let grid = f.grid();
        // cache the 1-D multiplier per axis bin
        let mult: Vec<f64> = (0..grid.n()).map(|i| self.multiplier_1d(grid.kappa(i))).collect();
        let spec = Spectrum::forward(f);
        let n = grid.n();
        let out = spec.map_modes(|k1, k2, c| {
            let i = if k1 >= 0 { k1 as usize } else { (k1 + n as i64) as usize };
            let j = if k2 >= 0 { k2 as usize } else { (k2 + n as i64) as usize };
            c * (mult[i] * mult[j])
        });
        Ok(out.inverse())
    }

    pub fn apply_vector(&self, v: &TorusVectorField) -> Result<TorusVectorField> {
        TorusVectorField::from_components(
            self.apply_scalar(&v.component(0))?,
            self.apply_scalar(&v.component(1))?,
        )
    }

    pub fn apply_tensor(&self, t: &TorusSymTensorField) -> Result<TorusSymTensorField> {
        TorusSymTensorField::from_components(
            self.apply_scalar(&t.component(0, 0))?,
            self.apply_scalar(&t.component(0, 1))?,
            self.apply_scalar(&t.component(1, 1))?,
        )
    }
}

trait HasGrid {
    fn grid_of(&self) -> crate::grid::TorusGrid;
}
impl HasGrid for TorusScalarField {
    fn grid_of(&self) -> crate::grid::TorusGrid {
        self.grid()
    }
}

/// Temporal convolution weights for mollifying a frame stack in time.
/// Frames must be uniformly sampled at spacing dt <= ell/2.
fn time_weights(kernel: &BumpKernel1d, dt: f64) -> Vec<f64> {
    let half = (kernel.radius() / dt).ceil() as i64;
    let mut w: Vec<f64> = (-half..=half)
        .map(|j| kernel.eval(j as f64 * dt) * dt)
        .collect();
    // renormalize the discrete sum so constants are preserved exactly
    let s: f64 = w.iter().sum();
    for x in &mut w {
        *x /= s;
    }
    w
}

fn uniform_dt(times: &[f64]) -> Result<f64> {
    if times.len() < 3 {
        return Err(Error::UnresolvableMollifier {
            radius: 0.0,
            reason: "need at least 3 frames for time mollification".into(),
        });
    }
    let dt = times[1] - times[0];
    for w in times.windows(2) {
        if ((w[1] - w[0]) - dt).abs() > 1e-10 * dt {
            return Err(Error::Other("time mollification needs uniform sampling".into()));
        }
    }
    Ok(dt)
}

macro_rules! spacetime_mollify {
    ($name:ident, $frame:ty, $apply:ident, $zeros_like:expr) => {
        /// Space-time mollification at radius `ell`. Frames are convolved
        /// in space spectrally and in time by discrete kernel quadrature
        /// with periodic-in-window reflection avoided by requiring the
        /// stack to extend `ell` beyond the window of interest.
        pub fn $name(f: &SpaceTimeField<$frame>, ell: f64) -> Result<SpaceTimeField<$frame>> {
            let moll = SpaceMollifier::new(ell)?;
            let dt = uniform_dt(f.times())?;
            if ell < 2.0 * dt {
                return Err(Error::UnresolvableMollifier {
                    radius: ell,
                    reason: format!("needs >= 2 time samples, dt = {dt:.3e}"),
                });
            }
            let w = time_weights(&moll.kernel, dt);
            let half = (w.len() as i64 - 1) / 2;
            let nt = f.len() as i64;
            let spatial: Vec<$frame> = f
                .frames()
                .iter()
                .map(|fr| moll.$apply(fr))
                .collect::<Result<_>>()?;
            let mut frames = Vec::with_capacity(f.len());
            for i in 0..nt {
                let mut acc = $zeros_like(&spatial[i as usize]);
                for (jw, wj) in w.iter().enumerate() {
                    let j = (i + jw as i64 - half).clamp(0, nt - 1) as usize;
                    acc = acc.add(&spatial[j].scale(*wj))?;
                }
                frames.push(acc);
            }
            SpaceTimeField::new(f.times().to_vec(), frames)
        }
    };
}

spacetime_mollify!(mollify_spacetime_scalar, TorusScalarField, apply_scalar, |f: &TorusScalarField| {
    TorusScalarField::zeros(f.grid())
});
spacetime_mollify!(mollify_spacetime_vector, TorusVectorField, apply_vector, |f: &TorusVectorField| {
    TorusVectorField::zeros(f.grid())
});
spacetime_mollify!(
    mollify_spacetime_tensor,
    TorusSymTensorField,
    apply_tensor,
    |f: &TorusSymTensorField| { TorusSymTensorField::zeros(f.grid()) }
);

/// Convenience alias used by the stage driver.
pub fn mollify_scalar_frames(f: &SpaceTimeScalar, ell: f64) -> Result<SpaceTimeScalar> {
    mollify_spacetime_scalar(f, ell)
}
pub fn mollify_vector_frames(f: &SpaceTimeVector, ell: f64) -> Result<SpaceTimeVector> {
    mollify_spacetime_vector(f, ell)
}
pub fn mollify_tensor_frames(f: &SpaceTimeSymTensor, ell: f64) -> Result<SpaceTimeSymTensor> {
    mollify_spacetime_tensor(f, ell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::TorusGrid;
    use std::f64::consts::TAU;

    #[test]
    fn constant_is_fixed_and_mean_preserved() {
        let g = TorusGrid::unit(32).unwrap();
        let m = SpaceMollifier::new(0.1).unwrap();
        let c = TorusScalarField::constant(g, 2.0);
        let mc = m.apply_scalar(&c).unwrap();
        assert!(mc.sub(&c).unwrap().max_abs() < 1e-13);

        let f = TorusScalarField::from_fn(g, |p| 0.7 + (TAU * p[0]).sin() * (TAU * p[1]).cos());
        let mf = m.apply_scalar(&f).unwrap();
        assert!((mf.mean() - f.mean()).abs() < 1e-12);
    }

    #[test]
    fn single_mode_damped_by_kernel_transform() {
        let g = TorusGrid::unit(64).unwrap();
        let m = SpaceMollifier::new(0.15).unwrap();
        let k = 3.0;
        let f = TorusScalarField::from_fn(g, |p| (k * TAU * p[0]).sin());
        let mf = m.apply_scalar(&f).unwrap();
        let want = m.multiplier_1d(k * TAU);
        // measure the output amplitude against the input at a quarter-period point
        let idx = g.idx(64 / (3 * 4), 0);
        let ratio = mf.values()[idx] / f.values()[idx];
        assert!((ratio - want).abs() < 1e-9, "ratio {ratio} vs {want}");
    }

    #[test]
    fn rejects_unresolvable_radius() {
        let g = TorusGrid::unit(16).unwrap();
        let f = TorusScalarField::zeros(g);
        let m = SpaceMollifier::new(0.01).unwrap();
        assert!(m.apply_scalar(&f).is_err());
    }

    #[test]
    fn commutes_with_derivative() {
        let g = TorusGrid::unit(64).unwrap();
        let m = SpaceMollifier::new(0.1).unwrap();
        let f = TorusScalarField::from_fn(g, |p| (TAU * p[0]).sin() * (2.0 * TAU * p[1]).cos());
        let a = crate::spectral::gradient(&m.apply_scalar(&f).unwrap());
        let b = m.apply_vector(&crate::spectral::gradient(&f)).unwrap();
        assert!(a.sub(&b).unwrap().max_abs() < 1e-11);
    }
}
