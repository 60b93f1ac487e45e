//! Spectral differential operators on the periodic grid: gradients,
//! divergences, inverse Laplacian, Leray projection, 2/3-rule dealiasing.
//!
//! Derivatives are exact for the trigonometric interpolant; the Nyquist
//! mode is zeroed in odd-order derivatives, as usual.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fft::Spectrum;
use crate::field::{TorusScalarField, TorusSymTensorField, TorusVectorField};

fn ik(k: i64, n: usize, tau_over_l: f64) -> Complex64 {
    // Nyquist mode has no faithful odd derivative on a real grid.
    if 2 * k.unsigned_abs() as usize == n {
        Complex64::default()
    } else {
        Complex64::new(0.0, tau_over_l * k as f64)
    }
}

fn derivative(spec: &Spectrum, axis: usize) -> Spectrum {
    let n = spec.grid().n();
    let tau_over_l = std::f64::consts::TAU / spec.grid().side();
    spec.map_modes(|k1, k2, c| {
        let k = if axis == 0 { k1 } else { k2 };
        c * ik(k, n, tau_over_l)
    })
}

/// d/dx_i of a scalar field, spectrally.
pub fn partial(f: &TorusScalarField, axis: usize) -> TorusScalarField {
    derivative(&Spectrum::forward(f), axis).inverse()
}

/// Gradient (d1 f, d2 f).
pub fn gradient(f: &TorusScalarField) -> TorusVectorField {
    let s = Spectrum::forward(f);
    TorusVectorField::from_components(derivative(&s, 0).inverse(), derivative(&s, 1).inverse())
        .expect("same grid")
}

/// Perpendicular gradient (-d2 f, d1 f).
pub fn perp_gradient(f: &TorusScalarField) -> TorusVectorField {
    let s = Spectrum::forward(f);
    let d1 = derivative(&s, 0).inverse();
    let d2 = derivative(&s, 1).inverse();
    TorusVectorField::from_components(d2.scale(-1.0), d1).expect("same grid")
}

/// Divergence d1 v1 + d2 v2.
pub fn divergence(v: &TorusVectorField) -> TorusScalarField {
    let s1 = Spectrum::forward(&v.component(0));
    let s2 = Spectrum::forward(&v.component(1));
    derivative(&s1, 0)
        .inverse()
        .add(&derivative(&s2, 1).inverse())
        .expect("same grid")
}

/// Row-wise divergence of a symmetric tensor: (div T)_i = d_j T_ij.
pub fn tensor_divergence(t: &TorusSymTensorField) -> TorusVectorField {
    let t11 = Spectrum::forward(&t.component(0, 0));
    let t12 = Spectrum::forward(&t.component(0, 1));
    let t22 = Spectrum::forward(&t.component(1, 1));
    let r1 = derivative(&t11, 0).inverse().add(&derivative(&t12, 1).inverse()).unwrap();
    let r2 = derivative(&t12, 0).inverse().add(&derivative(&t22, 1).inverse()).unwrap();
    TorusVectorField::from_components(r1, r2).expect("same grid")
}

/// Scalar curl d1 v2 - d2 v1.
pub fn curl2d(v: &TorusVectorField) -> TorusScalarField {
    let s1 = Spectrum::forward(&v.component(0));
    let s2 = Spectrum::forward(&v.component(1));
    derivative(&s2, 0)
        .inverse()
        .sub(&derivative(&s1, 1).inverse())
        .expect("same grid")
}

pub fn laplacian(f: &TorusScalarField) -> TorusScalarField {
    let tau_over_l = std::f64::consts::TAU / f.grid().side();
    Spectrum::forward(f)
        .map_modes(|k1, k2, c| {
            let kk = tau_over_l * tau_over_l * ((k1 * k1 + k2 * k2) as f64);
            c * (-kk)
        })
        .inverse()
}

/// Relative tolerance on the mean for inverse-Laplacian inputs.
pub const MEAN_ZERO_TOL: f64 = 1e-10;

fn mean_scale(f: &TorusScalarField) -> f64 {
    f.max_abs().max(1.0)
}

/// Solves Laplacian(g) = f with mean(g) = 0. Rejects inputs whose mean
/// exceeds `MEAN_ZERO_TOL` relative to the field scale.
pub fn inverse_laplacian(f: &TorusScalarField) -> Result<TorusScalarField> {
    let m = f.mean();
    if m.abs() > MEAN_ZERO_TOL * mean_scale(f) {
        return Err(Error::NonZeroMean { got: m, tol: MEAN_ZERO_TOL });
    }
    Ok(inverse_laplacian_unchecked(&Spectrum::forward(f)).inverse())
}

pub(crate) fn inverse_laplacian_unchecked(spec: &Spectrum) -> Spectrum {
    let tau_over_l = std::f64::consts::TAU / spec.grid().side();
    spec.map_modes(|k1, k2, c| {
        if k1 == 0 && k2 == 0 {
            Complex64::default()
        } else {
            let kk = tau_over_l * tau_over_l * ((k1 * k1 + k2 * k2) as f64);
            c / (-kk)
        }
    })
}

/// Leray projection v - grad(invLap(div v)); preserves the mean mode.
pub fn leray_project(v: &TorusVectorField) -> TorusVectorField {
    let s1 = Spectrum::forward(&v.component(0));
    let s2 = Spectrum::forward(&v.component(1));
    let div = add_spec(&derivative(&s1, 0), &derivative(&s2, 1));
    let phi = inverse_laplacian_unchecked(&div);
    let g1 = derivative(&phi, 0);
    let g2 = derivative(&phi, 1);
    let p1 = sub_spec(&s1, &g1).inverse();
    let p2 = sub_spec(&s2, &g2).inverse();
    TorusVectorField::from_components(p1, p2).expect("same grid")
}

fn add_spec(a: &Spectrum, b: &Spectrum) -> Spectrum {
    let mut out = a.clone();
    for (c, d) in out.coeffs.iter_mut().zip(b.coeffs.iter()) {
        *c += d;
    }
    out
}

fn sub_spec(a: &Spectrum, b: &Spectrum) -> Spectrum {
    let mut out = a.clone();
    for (c, d) in out.coeffs.iter_mut().zip(b.coeffs.iter()) {
        *c -= d;
    }
    out
}

/// Zeroes all modes with max(|k1|, |k2|) > N/3 (2/3-rule dealiasing).
pub fn dealias(f: &TorusScalarField) -> TorusScalarField {
    let cut = (f.grid().n() / 3) as i64;
    Spectrum::forward(f)
        .map_modes(|k1, k2, c| {
            if k1.abs() > cut || k2.abs() > cut {
                Complex64::default()
            } else {
                c
            }
        })
        .inverse()
}

/// Pointwise product with 2/3-rule dealiasing applied to both factors and
/// the result.
pub fn product_dealiased(a: &TorusScalarField, b: &TorusScalarField) -> Result<TorusScalarField> {
    let fa = dealias(a);
    let fb = dealias(b);
    Ok(dealias(&fa.zip(&fb, |x, y| x * y)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::TorusGrid;
    use std::f64::consts::TAU;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn gradient_of_constant_is_zero() {
        let g = TorusGrid::unit(16).unwrap();
        let f = TorusScalarField::constant(g, 4.2);
        let grad = gradient(&f);
        assert!(grad.max_abs() < 1e-13);
    }

    #[test]
    fn gradient_of_single_mode() {
        let l = 2.0;
        let g = TorusGrid::new(l, 32).unwrap();
        let f = TorusScalarField::from_fn(g, |p| (TAU * p[0] / l).sin());
        let grad = gradient(&f);
        for idx in [0usize, 5, 100, 500] {
            let p = g.point(idx);
            let want = (TAU / l) * (TAU * p[0] / l).cos();
            assert!(close(grad.comp(0)[idx], want, 1e-12));
            assert!(close(grad.comp(1)[idx], 0.0, 1e-12));
        }
    }

    #[test]
    fn perp_gradient_of_x2_mode() {
        let g = TorusGrid::unit(32).unwrap();
        let f = TorusScalarField::from_fn(g, |p| (TAU * p[1]).sin());
        let pg = perp_gradient(&f);
        for idx in [3usize, 77, 900] {
            let p = g.point(idx);
            assert!(close(pg.comp(0)[idx], -TAU * (TAU * p[1]).cos(), 1e-11));
            assert!(close(pg.comp(1)[idx], 0.0, 1e-12));
        }
    }

    #[test]
    fn curl_of_perp_gradient_is_laplacian() {
        let g = TorusGrid::unit(32).unwrap();
        let f = TorusScalarField::from_fn(g, |p| {
            (TAU * p[0]).sin() * (2.0 * TAU * p[1]).cos() + (3.0 * TAU * p[1]).sin()
        });
        let lhs = curl2d(&perp_gradient(&f));
        let rhs = laplacian(&f);
        let err = lhs.sub(&rhs).unwrap().max_abs();
        assert!(err < 1e-9, "curl(perp_grad) vs laplacian: {err}");
    }

    #[test]
    fn inverse_laplacian_single_mode() {
        let l = 1.0;
        let g = TorusGrid::new(l, 32).unwrap();
        let f = TorusScalarField::from_fn(g, |p| (TAU * p[0] / l).sin());
        let inv = inverse_laplacian(&f).unwrap();
        let factor = -(l / TAU) * (l / TAU);
        for idx in [0usize, 40, 999] {
            let p = g.point(idx);
            assert!(close(inv.values()[idx], factor * (TAU * p[0] / l).sin(), 1e-12));
        }
    }

    #[test]
    fn inverse_laplacian_rejects_nonzero_mean() {
        let g = TorusGrid::unit(16).unwrap();
        let f = TorusScalarField::constant(g, 1.0);
        assert!(matches!(inverse_laplacian(&f), Err(Error::NonZeroMean { .. })));
        let z = TorusScalarField::zeros(g);
        assert!(inverse_laplacian(&z).unwrap().max_abs() == 0.0);
    }

    #[test]
    fn leray_fixes_divergence_free_and_kills_gradients() {
        let g = TorusGrid::unit(32).unwrap();
        // divergence-free: perp gradient
        let f = TorusScalarField::from_fn(g, |p| (TAU * p[0]).sin() * (TAU * p[1]).cos());
        let v = perp_gradient(&f);
        let pv = leray_project(&v);
        assert!(pv.sub(&v).unwrap().max_abs() < 1e-12);
        // gradient: annihilated
        let w = gradient(&f);
        assert!(leray_project(&w).max_abs() < 1e-12);
        // idempotent
        let once = leray_project(&TorusVectorField::from_fn(g, |p| {
            [(TAU * p[1]).sin() + p[0].cos(), (TAU * p[0]).cos()]
        }));
        let twice = leray_project(&once);
        assert!(twice.sub(&once).unwrap().max_abs() < 1e-12);
    }

    #[test]
    fn leray_preserves_mean() {
        let g = TorusGrid::unit(16).unwrap();
        let v = TorusVectorField::from_fn(g, |p| [1.5 + (TAU * p[0]).sin(), -0.5]);
        let pv = leray_project(&v);
        let m = pv.mean();
        assert!(close(m[0], 1.5, 1e-13) && close(m[1], -0.5, 1e-13));
    }

    #[test]
    fn tensor_divergence_of_rank_one() {
        let g = TorusGrid::unit(64).unwrap();
        let xi = [0.6, 0.8];
        let a = |p: [f64; 2]| (TAU * p[0]).sin() * (TAU * 2.0 * p[1]).cos();
        let t = TorusSymTensorField::from_fn(g, |p| {
            let s = a(p);
            [s * xi[0] * xi[0], s * xi[0] * xi[1], s * xi[1] * xi[1]]
        });
        let d = tensor_divergence(&t);
        // div(a xi (x) xi) = (xi . grad a) xi
        for idx in [11usize, 333, 2048] {
            let p = g.point(idx);
            let ga = [
                TAU * (TAU * p[0]).cos() * (TAU * 2.0 * p[1]).cos(),
                -2.0 * TAU * (TAU * p[0]).sin() * (TAU * 2.0 * p[1]).sin(),
            ];
            let s = xi[0] * ga[0] + xi[1] * ga[1];
            assert!(close(d.comp(0)[idx], s * xi[0], 1e-10));
            assert!(close(d.comp(1)[idx], s * xi[1], 1e-10));
        }
    }
}
