//! Parametric surfaces in R³₁: fundamental forms, the unit normal, mean
//! curvature, the Gaussian-Euclidean density, and the pairing ⟨∇f, N⟩ that
//! makes up the weighted mean curvature H_f = H + ½⟨∇f, N⟩.

use alloc::boxed::Box;

use num_traits::Float;

use crate::error::{Error, Result};
use crate::minkowski::{CausalType, LVec3, CAUSAL_TOLERANCE};
use crate::numerics::{diff, DiffOrder};

/// Euclidean floor on ‖X_u ∧ X_v‖² below which a point is degenerate.
pub const DEGENERACY_TOLERANCE: f64 = 1e-12;

/// ln(2π), the normalization constant of the density exponent.
pub const LN_TWO_PI: f64 = 1.837877066409345;

pub type SurfaceFn = Box<dyn Fn(f64, f64) -> LVec3 + Send + Sync>;

/// Analytic partial derivatives of an immersion, used instead of finite
/// differences when the family provides closed forms.
pub struct AnalyticPartials {
    pub xu: SurfaceFn,
    pub xv: SurfaceFn,
    pub xuu: SurfaceFn,
    pub xuv: SurfaceFn,
    pub xvv: SurfaceFn,
}

/// An immersion X(u, v) over a rectangular parameter domain.
///
/// Values are immutable once constructed; every evaluation is a pure
/// function, so surfaces may be shared freely across threads.
pub struct ParametricSurface {
    u_range: (f64, f64),
    v_range: (f64, f64),
    position: SurfaceFn,
    partials: Option<AnalyticPartials>,
    derivative_scale: f64,
}

/// Coefficients of the first (e1, f1, g1) and second (e2, f2, g2)
/// fundamental forms, with the causal sign of the mean-curvature formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalForms {
    pub e1: f64,
    pub f1: f64,
    pub g1: f64,
    pub e2: f64,
    pub f2: f64,
    pub g2: f64,
    /// −1 when e1·g1 − f1² > 0 (spacelike surface), +1 when < 0 (timelike).
    pub eps: f64,
}

impl ParametricSurface {
    pub fn from_fn(
        u_range: (f64, f64),
        v_range: (f64, f64),
        position: impl Fn(f64, f64) -> LVec3 + Send + Sync + 'static,
    ) -> Self {
        ParametricSurface {
            u_range,
            v_range,
            position: Box::new(position),
            partials: None,
            derivative_scale: 1.0,
        }
    }

    pub fn with_partials(mut self, partials: AnalyticPartials) -> Self {
        self.partials = Some(partials);
        self
    }

    /// Step hint for the finite-difference fallback.
    pub fn with_derivative_scale(mut self, scale: f64) -> Self {
        self.derivative_scale = scale;
        self
    }

    pub fn u_range(&self) -> (f64, f64) {
        self.u_range
    }

    pub fn v_range(&self) -> (f64, f64) {
        self.v_range
    }

    pub fn has_analytic_partials(&self) -> bool {
        self.partials.is_some()
    }

    #[inline]
    pub fn position(&self, u: f64, v: f64) -> LVec3 {
        (self.position)(u, v)
    }

    fn component(&self, u: f64, v: f64, i: usize) -> f64 {
        let p = self.position(u, v);
        match i {
            0 => p.x,
            1 => p.y,
            _ => p.z,
        }
    }

    pub fn du(&self, u: f64, v: f64) -> LVec3 {
        match &self.partials {
            Some(p) => (p.xu)(u, v),
            None => {
                let s = self.derivative_scale;
                let c = |i| diff(|t| self.component(t, v, i), u, DiffOrder::First, s);
                LVec3::new(c(0), c(1), c(2))
            }
        }
    }

    pub fn dv(&self, u: f64, v: f64) -> LVec3 {
        match &self.partials {
            Some(p) => (p.xv)(u, v),
            None => {
                let s = self.derivative_scale;
                let c = |i| diff(|t| self.component(u, t, i), v, DiffOrder::First, s);
                LVec3::new(c(0), c(1), c(2))
            }
        }
    }

    pub fn duu(&self, u: f64, v: f64) -> LVec3 {
        match &self.partials {
            Some(p) => (p.xuu)(u, v),
            None => {
                let s = self.derivative_scale;
                let c = |i| diff(|t| self.component(t, v, i), u, DiffOrder::Second, s);
                LVec3::new(c(0), c(1), c(2))
            }
        }
    }

    pub fn duv(&self, u: f64, v: f64) -> LVec3 {
        match &self.partials {
            Some(p) => (p.xuv)(u, v),
            None => {
                let s = self.derivative_scale;
                let c = |i| {
                    diff(
                        |t| diff(|r| self.component(r, t, i), u, DiffOrder::First, s),
                        v,
                        DiffOrder::First,
                        s,
                    )
                };
                LVec3::new(c(0), c(1), c(2))
            }
        }
    }

    pub fn dvv(&self, u: f64, v: f64) -> LVec3 {
        match &self.partials {
            Some(p) => (p.xvv)(u, v),
            None => {
                let s = self.derivative_scale;
                let c = |i| diff(|t| self.component(u, t, i), v, DiffOrder::Second, s);
                LVec3::new(c(0), c(1), c(2))
            }
        }
    }

    /// First-form coefficients (E, F, G) under the Lorentzian product.
    pub fn first_fundamental(&self, u: f64, v: f64) -> Result<(f64, f64, f64)> {
        let xu = self.du(u, v);
        let xv = self.dv(u, v);
        if xu.wedge(xv).euclidean_norm_sq() <= DEGENERACY_TOLERANCE {
            return Err(Error::DegeneratePoint { u, v });
        }
        Ok((xu.lorentz_dot(xu), xu.lorentz_dot(xv), xv.lorentz_dot(xv)))
    }

    /// Unit normal N = X_u ∧ X_v / ‖X_u ∧ X_v‖ and its causal type.
    ///
    /// The surface is spacelike exactly when N is timelike, and vice versa.
    /// A lightlike normal means the induced metric is degenerate.
    pub fn unit_normal(&self, u: f64, v: f64) -> Result<(LVec3, CausalType)> {
        let w = self.du(u, v).wedge(self.dv(u, v));
        let e = w.euclidean_norm_sq();
        if e <= DEGENERACY_TOLERANCE {
            return Err(Error::DegeneratePoint { u, v });
        }
        let s = w.lorentz_dot(w);
        if s.abs() <= CAUSAL_TOLERANCE * e {
            return Err(Error::LightlikeNormal { u, v });
        }
        let n = w * (1.0 / s.abs().sqrt());
        let causal = if s > 0.0 {
            CausalType::Spacelike
        } else {
            CausalType::Timelike
        };
        Ok((n, causal))
    }

    /// Both fundamental forms and the causal sign at (u, v).
    pub fn fundamental_forms(&self, u: f64, v: f64) -> Result<FundamentalForms> {
        let (n, _) = self.unit_normal(u, v)?;
        let (e1, f1, g1) = self.first_fundamental(u, v)?;
        let eps = if e1 * g1 - f1 * f1 > 0.0 { -1.0 } else { 1.0 };
        Ok(FundamentalForms {
            e1,
            f1,
            g1,
            e2: self.duu(u, v).lorentz_dot(n),
            f2: self.duv(u, v).lorentz_dot(n),
            g2: self.dvv(u, v).lorentz_dot(n),
            eps,
        })
    }

    /// Mean curvature H = ε (E g − 2 F f + G e) / (2 (E G − F²)), with the
    /// orientation fixed by `unit_normal`.
    pub fn mean_curvature(&self, u: f64, v: f64) -> Result<f64> {
        let ff = self.fundamental_forms(u, v)?;
        let det = ff.e1 * ff.g1 - ff.f1 * ff.f1;
        Ok(ff.eps * (ff.e1 * ff.g2 - 2.0 * ff.f1 * ff.f2 + ff.g1 * ff.e2) / (2.0 * det))
    }

    /// The density pairing ⟨∇f, N⟩ with ∇f = (x, y, 0) at X(u, v).
    pub fn pairing(&self, u: f64, v: f64) -> Result<f64> {
        let p = self.position(u, v);
        let (n, _) = self.unit_normal(u, v)?;
        Ok(density_point(p).grad_f.lorentz_dot(n))
    }

    /// Weighted mean curvature H_f = H + ½ ⟨∇f, N⟩.
    ///
    /// Flipping the normal flips both terms, so the zero set does not depend
    /// on the orientation convention.
    pub fn f_mean_curvature(&self, u: f64, v: f64) -> Result<f64> {
        Ok(self.mean_curvature(u, v)? + 0.5 * self.pairing(u, v)?)
    }
}

/// The Gaussian-Euclidean density data at a point: f(x,y,z) = (x²+y²)/2 +
/// ln(2π) and its gradient (x, y, 0). The density does not see the last
/// coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityPoint {
    pub point: LVec3,
    pub grad_f: LVec3,
    pub f_value: f64,
}

pub fn density_point(p: LVec3) -> DensityPoint {
    DensityPoint {
        point: p,
        grad_f: LVec3::new(p.x, p.y, 0.0),
        f_value: 0.5 * (p.x * p.x + p.y * p.y) + LN_TWO_PI,
    }
}

/// Two routes to the geometric meaning of |⟨∇f, N⟩| at a point `p` with unit
/// normal `n = (a, b, c)`, a² + b² − c² = ±1.
///
/// Returns `(lhs, rhs)` where `lhs = |⟨∇f, N⟩(p)|` and `rhs` is the Euclidean
/// distance from the z-axis projection (0, 0, z₀) to the tangent plane
/// {a x + b y − c z + d = 0} through `p`, scaled by the Euclidean length of
/// `n`. The two agree identically.
pub fn lemma1_distance_identity(p: LVec3, n: LVec3) -> (f64, f64) {
    let lhs = density_point(p).grad_f.lorentz_dot(n).abs();

    // Euclidean route: the tangent plane has Euclidean normal (a, b, -c).
    let m = LVec3::new(n.x, n.y, -n.z);
    let d = -(m.x * p.x + m.y * p.y + m.z * p.z);
    let axis_point = LVec3::new(0.0, 0.0, p.z);
    let dist = (m.x * axis_point.x + m.y * axis_point.y + m.z * axis_point.z + d).abs()
        / m.euclidean_norm();
    (lhs, dist * n.euclidean_norm())
}

/// Horizontal plane z = z₀, parametrized as (u, v, z₀).
pub fn horizontal_plane(z0: f64) -> ParametricSurface {
    let zero = |_: f64, _: f64| LVec3::ZERO;
    ParametricSurface::from_fn((-5.0, 5.0), (-5.0, 5.0), move |u, v| LVec3::new(u, v, z0))
        .with_partials(AnalyticPartials {
            xu: Box::new(|_, _| LVec3::new(1.0, 0.0, 0.0)),
            xv: Box::new(|_, _| LVec3::new(0.0, 1.0, 0.0)),
            xuu: Box::new(zero),
            xuv: Box::new(zero),
            xvv: Box::new(zero),
        })
}

/// Vertical plane x cos α + y sin α = d, parametrized by arc length `u` in
/// the horizontal direction and height `v`.
pub fn vertical_plane(alpha: f64, d: f64) -> ParametricSurface {
    let (ca, sa) = (alpha.cos(), alpha.sin());
    let zero = |_: f64, _: f64| LVec3::ZERO;
    ParametricSurface::from_fn((-5.0, 5.0), (-5.0, 5.0), move |u, v| {
        LVec3::new(d * ca - u * sa, d * sa + u * ca, v)
    })
    .with_partials(AnalyticPartials {
        xu: Box::new(move |_, _| LVec3::new(-sa, ca, 0.0)),
        xv: Box::new(|_, _| LVec3::new(0.0, 0.0, 1.0)),
        xuu: Box::new(zero),
        xuv: Box::new(zero),
        xvv: Box::new(zero),
    })
}

/// Circular cylinder x² + y² = r² about the z-axis, parametrized by height
/// `u` and angle `v`. The orientation convention makes the normal point
/// toward the axis.
pub fn cylinder(radius: f64) -> ParametricSurface {
    let r = radius;
    let zero = |_: f64, _: f64| LVec3::ZERO;
    ParametricSurface::from_fn((-5.0, 5.0), (0.0, core::f64::consts::TAU), move |u, v| {
        LVec3::new(r * v.cos(), r * v.sin(), u)
    })
    .with_partials(AnalyticPartials {
        xu: Box::new(|_, _| LVec3::new(0.0, 0.0, 1.0)),
        xv: Box::new(move |_, v| LVec3::new(-r * v.sin(), r * v.cos(), 0.0)),
        xuu: Box::new(zero),
        xuv: Box::new(zero),
        xvv: Box::new(move |_, v| LVec3::new(-r * v.cos(), -r * v.sin(), 0.0)),
    })
}
