//! The standard C-infinity bump, smoothstep ramps built from it, and the
//! radial plateau cutoffs used throughout the construction.

/// exp(-1/(1-s^2)) on (-1, 1), zero outside. Not normalized.
#[inline]
pub fn bump(s: f64) -> f64 {
    if s.abs() < 1.0 {
        (-1.0 / (1.0 - s * s)).exp()
    } else {
        0.0
    }
}

/// Unit-mass 1-D bump kernel of radius `ell`.
#[derive(Debug, Clone, Copy)]
pub struct BumpKernel1d {
    ell: f64,
    inv_mass: f64,
}

impl BumpKernel1d {
    pub fn new(ell: f64) -> Self {
        // int_{-1}^{1} exp(-1/(1-s^2)) ds, fixed constant
        let mass = crate::quad::adaptive_gk(bump, -1.0, 1.0, 1e-15, 1e-14);
        Self { ell, inv_mass: 1.0 / (mass * ell) }
    }

    #[inline]
    pub fn radius(&self) -> f64 {
        self.ell
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        bump(x / self.ell) * self.inv_mass
    }

    /// Fourier transform \int k(x) e^{-i w x} dx (real by symmetry).
    pub fn transform(&self, w: f64) -> f64 {
        let ell = self.ell;
        crate::quad::adaptive_gk(
            |s| bump(s) * (w * ell * s).cos(),
            -1.0,
            1.0,
            1e-14,
            1e-13,
        ) * ell
            * self.inv_mass
    }
}

/// Unit-mass radial 2-D bump of radius `ell` (not a tensor product).
#[derive(Debug, Clone, Copy)]
pub struct BumpKernel2d {
    ell: f64,
    inv_mass: f64,
}

impl BumpKernel2d {
    pub fn new(ell: f64) -> Self {
        let mass =
            crate::quad::adaptive_gk(|r| bump(r) * r, 0.0, 1.0, 1e-15, 1e-14) * std::f64::consts::TAU;
        Self { ell, inv_mass: 1.0 / (mass * ell * ell) }
    }

    #[inline]
    pub fn radius(&self) -> f64 {
        self.ell
    }

    #[inline]
    pub fn eval_r(&self, r: f64) -> f64 {
        bump(r / self.ell) * self.inv_mass
    }
}

/// C-infinity ramp: 0 for u <= 0, 1 for u >= 1, strictly increasing between.
/// Peak slope is about 2.1.
#[inline]
pub fn smoothstep(u: f64) -> f64 {
    if u <= 0.0 {
        0.0
    } else if u >= 1.0 {
        1.0
    } else {
        let a = (-1.0 / u).exp();
        let b = (-1.0 / (1.0 - u)).exp();
        a / (a + b)
    }
}

/// Derivative of `smoothstep`.
#[inline]
pub fn smoothstep_deriv(u: f64) -> f64 {
    if u <= 0.0 || u >= 1.0 {
        return 0.0;
    }
    let h = 1e-6;
    let lo = (u - h).max(1e-12);
    let hi = (u + h).min(1.0 - 1e-12);
    (smoothstep(hi) - smoothstep(lo)) / (hi - lo)
}

/// Radial cutoff chi: 0 on [0, 1], 1 on [2, inf), C-infinity.
#[inline]
pub fn chi(x: f64) -> f64 {
    smoothstep(x - 1.0)
}

#[inline]
pub fn chi_prime(x: f64) -> f64 {
    smoothstep_deriv(x - 1.0)
}

/// Second derivative of chi by differencing the first.
#[inline]
pub fn chi_second(x: f64) -> f64 {
    let h = 1e-5;
    (chi_prime(x + h) - chi_prime(x - h)) / (2.0 * h)
}

/// Time plateau: 0 outside [t0, t1], 1 on [t0 + ramp, t1 - ramp].
#[derive(Debug, Clone, Copy)]
pub struct PlateauCutoff {
    pub t0: f64,
    pub t1: f64,
    pub ramp: f64,
}

impl PlateauCutoff {
    pub fn new(t0: f64, t1: f64, ramp: f64) -> Self {
        assert!(ramp > 0.0 && 2.0 * ramp <= t1 - t0, "ramps must fit the interval");
        Self { t0, t1, ramp }
    }

    #[inline]
    pub fn eval(&self, t: f64) -> f64 {
        smoothstep((t - self.t0) / self.ramp) * smoothstep((self.t1 - t) / self.ramp)
    }

    #[inline]
    pub fn deriv(&self, t: f64) -> f64 {
        let up = smoothstep((t - self.t0) / self.ramp);
        let dn = smoothstep((self.t1 - t) / self.ramp);
        smoothstep_deriv((t - self.t0) / self.ramp) / self.ramp * dn
            - up * smoothstep_deriv((self.t1 - t) / self.ramp) / self.ramp
    }

    pub fn support(&self) -> (f64, f64) {
        (self.t0, self.t1)
    }

    pub fn plateau(&self) -> (f64, f64) {
        (self.t0 + self.ramp, self.t1 - self.ramp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bump_kernel_has_unit_mass() {
        let k = BumpKernel1d::new(0.3);
        let m = crate::quad::adaptive_gk(|x| k.eval(x), -0.3, 0.3, 1e-13, 1e-12);
        assert!((m - 1.0).abs() < 1e-11);
        assert!((k.transform(0.0) - 1.0).abs() < 1e-11);
    }

    #[test]
    fn bump2d_unit_mass() {
        let k = BumpKernel2d::new(0.2);
        let m = crate::quad::polar_integral(
            |x, y| k.eval_r(x.hypot(y)),
            &[0.0, 0.1, 0.2],
            8,
            1e-13,
            1e-12,
        );
        assert!((m - 1.0).abs() < 1e-10);
    }

    #[test]
    fn smoothstep_plateaus() {
        assert_eq!(smoothstep(-0.5), 0.0);
        assert_eq!(smoothstep(1.5), 1.0);
        assert!((smoothstep(0.5) - 0.5).abs() < 1e-15);
        assert!(chi(0.9) == 0.0 && chi(2.1) == 1.0);
    }

    #[test]
    fn plateau_cutoff_slope_bound() {
        let z = PlateauCutoff::new(0.0, 1.0, 0.1);
        let mut max_slope = 0.0f64;
        for i in 0..10_000 {
            let t = i as f64 / 10_000.0;
            max_slope = max_slope.max(z.deriv(t).abs());
        }
        // unit smoothstep peak slope ~2.1, scaled by 1/ramp
        assert!(max_slope < 2.2 / 0.1);
        assert!(max_slope > 1.8 / 0.1);
    }
}
