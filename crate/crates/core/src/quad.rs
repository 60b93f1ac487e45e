//! Quadrature utilities: adaptive Gauss-Kronrod on intervals, composite
//! Simpson, fixed Gauss-Legendre nodes, and a polar-grid product rule.

/// 7-point Gauss / 15-point Kronrod nodes and weights on [-1, 1].
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let x = h * XGK[j];
        let fsum = f(c - x) + f(c + x);
        kronrod += WGK[j] * fsum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * fsum;
        }
    }
    (kronrod * h, (kronrod - gauss).abs() * h)
}

/// Adaptive Gauss-Kronrod integration of `f` over [a, b].
pub fn adaptive_gk(f: impl Fn(f64) -> f64, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> f64 {
    struct Seg {
        a: f64,
        b: f64,
        val: f64,
        err: f64,
    }
    let (val, err) = gk15(&f, a, b);
    let mut segs = vec![Seg { a, b, val, err }];
    for _ in 0..2000 {
        let total: f64 = segs.iter().map(|s| s.val).sum();
        let toterr: f64 = segs.iter().map(|s| s.err).sum();
        if toterr <= abs_tol.max(rel_tol * total.abs()) {
            break;
        }
        // split worst segment
        let (i, _) = segs
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .unwrap();
        let s = segs.swap_remove(i);
        let m = 0.5 * (s.a + s.b);
        let (v1, e1) = gk15(&f, s.a, m);
        let (v2, e2) = gk15(&f, m, s.b);
        segs.push(Seg { a: s.a, b: m, val: v1, err: e1 });
        segs.push(Seg { a: m, b: s.b, val: v2, err: e2 });
    }
    segs.iter().map(|s| s.val).sum()
}

/// Adaptive integration over a list of subintervals (use breakpoints at
/// known kinks so each piece is smooth).
pub fn adaptive_gk_segmented(
    f: impl Fn(f64) -> f64 + Copy,
    breaks: &[f64],
    abs_tol: f64,
    rel_tol: f64,
) -> f64 {
    let mut total = 0.0;
    for w in breaks.windows(2) {
        if w[1] > w[0] {
            total += adaptive_gk(f, w[0], w[1], abs_tol / breaks.len() as f64, rel_tol);
        }
    }
    total
}

/// Composite Simpson with `n` panels (n must be even and >= 2).
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let n = if n % 2 == 0 { n } else { n + 1 };
    let h = (b - a) / n as f64;
    let mut sum = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(a + i as f64 * h);
    }
    sum * h / 3.0
}

/// Nodes and weights of composite Simpson on [a, b] with n panels; the
/// cumulative form is used so that interval sums telescope exactly.
pub fn simpson_nodes(a: f64, b: f64, n: usize) -> (Vec<f64>, Vec<f64>) {
    let n = if n % 2 == 0 { n } else { n + 1 };
    let h = (b - a) / n as f64;
    let mut xs = Vec::with_capacity(n + 1);
    let mut ws = Vec::with_capacity(n + 1);
    for i in 0..=n {
        xs.push(a + i as f64 * h);
        let w = if i == 0 || i == n {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        ws.push(w * h / 3.0);
    }
    (xs, ws)
}

/// `n`-point Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on
/// Legendre polynomials.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut xs = vec![0.0; n];
    let mut ws = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-like initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            // evaluate P_n and P_n'
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (mut p0, mut p1) = (1.0, x);
        for k in 2..=n {
            let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
            p0 = p1;
            p1 = p2;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        xs[i] = -x;
        xs[n - 1 - i] = x;
        ws[i] = w;
        ws[n - 1 - i] = w;
    }
    (xs, ws)
}

/// Gauss-Legendre nodes mapped to [a, b].
pub fn gauss_legendre_on(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let (xs, ws) = gauss_legendre(n);
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    (
        xs.iter().map(|x| c + h * x).collect(),
        ws.iter().map(|w| h * w).collect(),
    )
}

/// Integrates f(x, y) over the annulus (or disk) rho in [r0, r1] using
/// adaptive radial segments and a uniform angular trapezoid with
/// `n_theta` points (spectrally accurate for smooth integrands).
pub fn polar_integral(
    f: impl Fn(f64, f64) -> f64 + Sync,
    radial_breaks: &[f64],
    n_theta: usize,
    abs_tol: f64,
    rel_tol: f64,
) -> f64 {
    let dtheta = std::f64::consts::TAU / n_theta as f64;
    let ring = |rho: f64| -> f64 {
        let mut s = 0.0;
        for j in 0..n_theta {
            let th = j as f64 * dtheta;
            s += f(rho * th.cos(), rho * th.sin());
        }
        s * dtheta * rho
    };
    adaptive_gk_segmented(&ring, radial_breaks, abs_tol, rel_tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gk_integrates_polynomial_exactly() {
        let v = adaptive_gk(|x| 3.0 * x * x, 0.0, 2.0, 1e-12, 1e-12);
        assert!((v - 8.0).abs() < 1e-12);
    }

    #[test]
    fn gk_handles_oscillation() {
        let v = adaptive_gk(|x| (20.0 * x).sin(), 0.0, 1.0, 1e-12, 1e-12);
        let want = (1.0 - (20.0f64).cos()) / 20.0;
        assert!((v - want).abs() < 1e-11);
    }

    #[test]
    fn gauss_legendre_degree() {
        let (xs, ws) = gauss_legendre_on(8, 0.0, 1.0);
        let v: f64 = xs.iter().zip(&ws).map(|(x, w)| w * x.powi(11)).sum();
        assert!((v - 1.0 / 12.0).abs() < 1e-14);
    }

    #[test]
    fn simpson_nodes_sum_to_integral() {
        let (xs, ws) = simpson_nodes(0.0, 1.0, 64);
        let v: f64 = xs.iter().zip(&ws).map(|(x, w)| w * (x * x)).sum();
        assert!((v - 1.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn polar_disk_area() {
        let v = polar_integral(|_, _| 1.0, &[0.0, 0.5, 1.0], 16, 1e-12, 1e-12);
        assert!((v - std::f64::consts::PI).abs() < 1e-10);
    }
}
