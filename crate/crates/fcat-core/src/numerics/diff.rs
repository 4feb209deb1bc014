//! Fourth-order central finite differences.

use num_traits::Float;

/// Derivative order for [`diff`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiffOrder {
    First,
    Second,
}

/// Central finite difference of fourth-order accuracy.
///
/// Steps are `scale * 1e-4` for the first derivative and `scale * 1e-3` for
/// the second; `scale` lets callers match the feature size of `f`. Smoothness
/// near `u` is the caller's responsibility.
pub fn diff<F: Fn(f64) -> f64>(f: F, u: f64, order: DiffOrder, scale: f64) -> f64 {
    match order {
        DiffOrder::First => {
            let h = scale * 1e-4;
            (f(u - 2.0 * h) - 8.0 * f(u - h) + 8.0 * f(u + h) - f(u + 2.0 * h)) / (12.0 * h)
        }
        DiffOrder::Second => {
            let h = scale * 1e-3;
            (-f(u - 2.0 * h) + 16.0 * f(u - h) - 30.0 * f(u) + 16.0 * f(u + h)
                - f(u + 2.0 * h))
                / (12.0 * h * h)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_derivative_of_square() {
        let d = diff(|u| u * u, 3.0, DiffOrder::First, 1.0);
        assert!((d - 6.0).abs() < 1e-8, "got {d}");
    }

    #[test]
    fn second_derivative_of_sine_at_zero() {
        let d = diff(|u| u.sin(), 0.0, DiffOrder::Second, 1.0);
        assert!(d.abs() < 1e-6, "got {d}");
    }

    #[test]
    fn observed_order_at_least_three_and_a_half() {
        // Use steps large enough that truncation dominates roundoff.
        for (f, df, u) in [
            (f64::sin as fn(f64) -> f64, f64::cos as fn(f64) -> f64, 0.7),
            (f64::exp, f64::exp, 0.3),
        ] {
            let err = |scale: f64| (diff(f, u, DiffOrder::First, scale) - df(u)).abs();
            let e1 = err(1000.0); // h = 0.1
            let e2 = err(500.0); // h = 0.05
            let order = (e1 / e2).log2();
            assert!(order >= 3.5, "observed order {order}");
        }
    }
}
