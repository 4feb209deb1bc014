//! Bracketed root finding: Brent's method with a guaranteed bisection
//! fallback when interpolation steps stall.

use num_traits::Float;

use crate::error::{Error, Result};

/// Default absolute bracket-width tolerance.
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

const MAX_ITERATIONS: usize = 200;

/// Root of `f` inside the bracket [lo, hi], refined until the enclosing
/// bracket is narrower than `tol` (plus a machine-precision term).
///
/// Requires a sign change over the bracket; an endpoint that is exactly a
/// root is returned as-is.
pub fn find_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidInterval { lo, hi });
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidConstant {
            c: tol,
            reason: "root tolerance must be positive",
        });
    }

    let eval = |x: f64| -> Result<f64> {
        let y = f(x);
        if y.is_nan() {
            Err(Error::NanEncountered { at: x })
        } else {
            Ok(y)
        }
    };

    let mut a = lo;
    let mut b = hi;
    let mut fa = eval(a)?;
    let mut fb = eval(b)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }

    // Brent: b is the best iterate, a its counterpart with opposite sign,
    // c the previous iterate.
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;

    for _ in 0..MAX_ITERATIONS {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // Inverse quadratic interpolation (secant when a == c).
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * xm * s, 1.0 - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let accept =
                2.0 * p < (3.0 * xm * q - (tol1 * q).abs()).min((e * q).abs());
            if accept {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if d.abs() > tol1 {
            b += d;
        } else {
            b += tol1.copysign(xm);
        }
        fb = eval(b)?;
    }

    Err(Error::NonConvergence {
        value: b,
        error_estimate: (c - b).abs(),
        evaluations: MAX_ITERATIONS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Float;

    #[test]
    fn linear_root() {
        let r = find_root(|u| u - 0.5, 0.0, 1.0, 1e-12).unwrap();
        assert!((r - 0.5).abs() < 1e-12);
    }

    #[test]
    fn domain_function_roots_match_golden_values() {
        let h = |u: f64| (u * u).exp() - 3.1 * u * u;
        let r1 = find_root(h, 0.0, 1.0, 1e-12).unwrap();
        let r2 = find_root(h, 1.0, 4.0, 1e-12).unwrap();
        assert!((r1 - 0.7556136794).abs() < 1e-9, "u1 = {r1}");
        assert!((r2 - 1.266389104).abs() < 1e-9, "u2 = {r2}");
    }

    #[test]
    fn endpoint_root_is_returned() {
        assert_eq!(find_root(|u| u, 0.0, 1.0, 1e-12).unwrap(), 0.0);
    }

    #[test]
    fn no_sign_change_is_an_error() {
        assert!(matches!(
            find_root(|u| u * u + 1.0, -1.0, 1.0, 1e-12),
            Err(Error::NoSignChange { .. })
        ));
    }

    #[test]
    fn nan_is_reported() {
        assert!(matches!(
            find_root(|_| f64::NAN, 0.0, 1.0, 1e-12),
            Err(Error::NanEncountered { .. })
        ));
    }

    #[test]
    fn residual_is_small_at_tight_tolerance() {
        let h = |u: f64| (u * u).exp() - 500.0 * u * u;
        let r = find_root(h, 1.0, 4.0, 1e-14).unwrap();
        // Slope at the root is ~2e4; a near-machine bracket keeps |h| tiny.
        assert!(h(r).abs() < 1e-9, "h(r) = {}", h(r));
    }
}
