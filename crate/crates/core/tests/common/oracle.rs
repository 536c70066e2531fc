//! Independent reference values for the Gaussian machinery.
//!
//! Everything here integrates the standard normal density directly with
//! adaptive Simpson quadrature and inverts by bisection. It shares no code
//! with the library's rational/continued-fraction implementation.

#![allow(dead_code)]

const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

fn density(u: f64) -> f64 {
    INV_SQRT_2PI * (-0.5 * u * u).exp()
}

fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let m = 0.5 * (a + b);
    (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b))
}

fn adaptive(f: &dyn Fn(f64) -> f64, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let left = simpson(f, a, m);
    let right = simpson(f, m, b);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adaptive(f, a, m, left, 0.5 * tol, depth - 1) + adaptive(f, m, b, right, 0.5 * tol, depth - 1)
}

/// Integral of `f` over `[a, b]` to relative tolerance `rel`, split into
/// unit-width panels first.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, rel: f64) -> f64 {
    let panels = ((b - a).ceil() as usize).max(1);
    let h = (b - a) / panels as f64;
    let coarse: Vec<(f64, f64, f64)> = (0..panels)
        .map(|i| {
            let lo = a + i as f64 * h;
            let hi = lo + h;
            (lo, hi, simpson(f, lo, hi))
        })
        .collect();
    let scale: f64 = coarse.iter().map(|c| c.2.abs()).sum();
    let tol = rel * scale / panels as f64;
    coarse
        .into_iter()
        .map(|(lo, hi, whole)| adaptive(f, lo, hi, whole, tol, 40))
        .sum()
}

/// Upper-tail mass of N(0,1) above `x >= 0`.
pub fn upper_tail(x: f64) -> f64 {
    assert!(x >= 0.0);
    integrate(&density, x, x + 40.0, 1e-14)
}

/// Standard normal CDF by quadrature.
pub fn cdf(x: f64) -> f64 {
    if x < 0.0 {
        upper_tail(-x)
    } else {
        1.0 - upper_tail(x)
    }
}

/// Standard normal quantile by bisection on the quadrature CDF.
///
/// Works on the tail mass `min(p, 1-p)` so deep tails keep relative accuracy.
pub fn quantile(p: f64) -> f64 {
    assert!(p > 0.0 && p < 1.0);
    if p > 0.5 {
        return -quantile(1.0 - p);
    }
    // find x >= 0 with upper_tail(x) = p, then negate
    let (mut lo, mut hi) = (0.0_f64, 40.0_f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if upper_tail(mid) > p {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    -0.5 * (lo + hi)
}
