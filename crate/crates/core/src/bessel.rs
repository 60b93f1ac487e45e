//! Bessel functions J0, J1 (power series for small arguments, Hankel
//! asymptotics for large) and the first positive zero of J1.

/// Series/asymptotic crossover.
const CROSSOVER: f64 = 16.0;

fn j0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..60 {
        term *= -q / ((k * k) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1.0) {
            break;
        }
    }
    sum
}

fn j1_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 0.5 * x;
    let mut sum = term;
    for k in 1..60 {
        term *= -q / ((k * (k + 1)) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1.0) {
            break;
        }
    }
    sum
}

/// Hankel asymptotic expansion with optimal truncation (stop before the
/// terms start growing); good to ~1e-13 for x >= 16.
fn j_asymptotic(order: u8, x: f64) -> f64 {
    let mu = (4 * order * order) as f64;
    let inv8x = 1.0 / (8.0 * x);
    let mut p = 1.0;
    let mut q = (mu - 1.0) * inv8x;
    let mut term_p = 1.0;
    let mut term_q = q;
    let mut sign = -1.0;
    for k in 1..=20usize {
        let a = mu - ((4 * k - 3) as f64).powi(2);
        let b = mu - ((4 * k - 1) as f64).powi(2);
        let c = mu - ((4 * k + 1) as f64).powi(2);
        let next_p = term_p * a * b * inv8x * inv8x / ((2 * k - 1) as f64 * (2 * k) as f64);
        let next_q = term_q * b * c * inv8x * inv8x / ((2 * k) as f64 * (2 * k + 1) as f64);
        if next_p.abs() >= term_p.abs() {
            break;
        }
        p += sign * next_p;
        q += sign * next_q;
        term_p = next_p;
        term_q = next_q;
        if next_p.abs() < 1e-17 {
            break;
        }
        sign = -sign;
    }
    let omega = x - (0.5 * order as f64 + 0.25) * std::f64::consts::PI;
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (p * omega.cos() - q * omega.sin())
}

/// Bessel function of the first kind, order 0.
pub fn j0(x: f64) -> f64 {
    let x = x.abs();
    if x < CROSSOVER {
        j0_series(x)
    } else {
        j_asymptotic(0, x)
    }
}

/// Bessel function of the first kind, order 1 (odd in x).
pub fn j1(x: f64) -> f64 {
    let ax = x.abs();
    let v = if ax < CROSSOVER {
        j1_series(ax)
    } else {
        j_asymptotic(1, ax)
    };
    if x < 0.0 {
        -v
    } else {
        v
    }
}

/// J1'(x) = J0(x) - J1(x)/x.
pub fn j1_prime(x: f64) -> f64 {
    if x.abs() < 1e-8 {
        0.5 - 3.0 * x * x / 16.0
    } else {
        j0(x) - j1(x) / x
    }
}

/// First positive zero of J1, bracketed then polished by Newton to 1e-14.
pub fn j1_first_zero() -> f64 {
    // bracket by scanning
    let mut a = 0.5;
    let mut b = a;
    let mut fa = j1(a);
    loop {
        b += 0.25;
        let fb = j1(b);
        if fa.signum() != fb.signum() {
            break;
        }
        a = b;
        fa = fb;
        assert!(b < 10.0, "no sign change found for J1");
    }
    // bisect to get close
    for _ in 0..40 {
        let m = 0.5 * (a + b);
        if j1(a).signum() == j1(m).signum() {
            a = m;
        } else {
            b = m;
        }
    }
    // Newton polish
    let mut x = 0.5 * (a + b);
    for _ in 0..8 {
        let dx = j1(x) / j1_prime(x);
        x -= dx;
        if dx.abs() < 1e-15 {
            break;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    // reference values computed with mpmath at 30 digits; tolerance loosens
    // in the series/asymptotic crossover zone where f64 cancellation peaks
    const CASES: &[(f64, f64, f64, f64)] = &[
        (0.5, 0.9384698072408129, 0.24226845767487390, 2e-13),
        (1.0, 0.7651976865579666, 0.44005058574493355, 2e-13),
        (2.0, 0.22389077914123567, 0.5767248077568734, 2e-13),
        (3.0, -0.26005195490193344, 0.33905895852593646, 2e-13),
        (5.0, -0.17759677131433830, -0.32757913759146523, 2e-13),
        (8.0, 0.17165080713755390, 0.23463634685391462, 1e-12),
        (12.0, 0.047689310796833537, -0.22344710449062761, 3e-11),
        (20.0, 0.16702466434058315, 0.066833124175850046, 2e-13),
        (50.0, 0.055812327669251815, -0.097511828125175138, 2e-13),
    ];

    #[test]
    fn matches_reference_values() {
        for &(x, want0, want1, tol) in CASES {
            assert!((j0(x) - want0).abs() < tol, "J0({x}) = {}", j0(x));
            assert!((j1(x) - want1).abs() < tol, "J1({x}) = {}", j1(x));
        }
    }

    #[test]
    fn values_at_zero() {
        assert_eq!(j0(0.0), 1.0);
        assert_eq!(j1(0.0), 0.0);
    }

    #[test]
    fn first_zero_of_j1() {
        let b = j1_first_zero();
        assert!((b - 3.8317059702075123).abs() < 1e-12, "b = {b}");
        assert!(j1(b).abs() < 1e-12);
        // the paper's quoted decimal
        assert!((b - 3.831705970).abs() < 1e-9);
    }

    #[test]
    fn odd_symmetry() {
        assert_eq!(j1(-2.0), -j1(2.0));
    }
}
