//! Numerical verification of the classification of rotational zero-H_f
//! surfaces: axis-tilted parametrizations built by explicit matrix action,
//! circle scans of the density pairing, the Q statistic, randomized
//! elimination sweeps, and golden-table reproduction.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Float;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::minkowski::{rotation, CausalType, LVec3, RotationAxis};
use crate::numerics::{diff, DiffOrder};
use crate::profiles::{
    domain_case, make_surface, table_row, CatenoidKind, DomainCase, GeneratrixProfile, TableRow,
};
use crate::surfaces::{cylinder, horizontal_plane, vertical_plane, ParametricSurface};

const TAU: f64 = core::f64::consts::TAU;

/// Minimum circle-scan spread demanded of every non-classified
/// configuration in the elimination sweep.
pub const ELIMINATION_SPREAD_MIN: f64 = 1e-4;
/// Maximum spread tolerated in the classified escape configurations.
pub const ESCAPE_SPREAD_MAX: f64 = 1e-10;
/// Residual bound |H_f| for the surviving (classified) surfaces.
pub const RESIDUAL_MAX: f64 = 1e-6;
/// Samples per coordinate circle. The pairing is a low-degree
/// trigonometric/hyperbolic polynomial in v, so this resolves extrema far
/// beyond tolerance.
pub const V_SAMPLES: usize = 256;

/// Scan window for the hyperbolic and parabolic rotation parameters.
const V_WINDOW: (f64, f64) = (-3.0, 3.0);

/// Which family of generatrices is being revolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratrixFamily {
    /// Spacelike curve γ(u) = (u, 0, g(u)) with 1 − g'² > 0.
    SpacelikeGen,
    /// Timelike curve γ(u) = (g(u), 0, u) with g'² < 1.
    TimelikeGen,
}

/// A differentiable generatrix over a u-interval.
#[derive(Clone)]
pub struct Generatrix {
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    df: Option<Arc<dyn Fn(f64) -> f64 + Send + Sync>>,
    u_range: (f64, f64),
}

impl Generatrix {
    pub fn new(f: impl Fn(f64) -> f64 + Send + Sync + 'static, u_range: (f64, f64)) -> Self {
        Generatrix {
            f: Arc::new(f),
            df: None,
            u_range,
        }
    }

    /// Cubic (or lower) polynomial with analytic derivative.
    pub fn polynomial(coeffs: [f64; 4], u_range: (f64, f64)) -> Self {
        let [c0, c1, c2, c3] = coeffs;
        Generatrix {
            f: Arc::new(move |u| c0 + u * (c1 + u * (c2 + u * c3))),
            df: Some(Arc::new(move |u| c1 + u * (2.0 * c2 + u * 3.0 * c3))),
            u_range,
        }
    }

    pub fn constant(c: f64, u_range: (f64, f64)) -> Self {
        Generatrix::polynomial([c, 0.0, 0.0, 0.0], u_range)
    }

    /// Generatrix backed by an f-Catenoid profile's height integral.
    pub fn from_profile(profile: GeneratrixProfile, u_range: (f64, f64)) -> Self {
        let p = profile;
        Generatrix {
            f: Arc::new(move |u| p.height(u).unwrap_or(f64::NAN)),
            df: Some(Arc::new(move |u| p.gprime(u).unwrap_or(f64::NAN))),
            u_range,
        }
    }

    pub fn u_range(&self) -> (f64, f64) {
        self.u_range
    }

    pub fn eval(&self, u: f64) -> f64 {
        (self.f)(u)
    }

    /// Analytic derivative when available, fourth-order differences otherwise.
    pub fn deriv(&self, u: f64) -> f64 {
        match &self.df {
            Some(df) => df(u),
            None => diff(|t| (self.f)(t), u, DiffOrder::First, 1.0),
        }
    }
}

/// Axis of revolution: causal type, tilt θ against the reference axis,
/// offset a of the intersection point, and the generatrix being revolved.
/// (θ, a) = (0, 0) designates the reference-axis case.
#[derive(Clone)]
pub struct AxisSpec {
    pub causal: CausalType,
    pub theta: f64,
    pub offset: f64,
    pub generatrix: Generatrix,
}

/// Extrema of the pairing over one coordinate circle u = const.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleScan {
    pub min: f64,
    pub max: f64,
    pub spread: f64,
}

/// The two routes to the Q statistic of the spacelike-axis case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QStat {
    pub closed: f64,
    pub finite_diff: f64,
}

/// Direction of a numeric bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    AtMost,
    AtLeast,
}

/// One named numeric check inside a verification report.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: String,
    pub observed: f64,
    pub bound: f64,
    pub kind: BoundKind,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        match self.kind {
            BoundKind::AtMost => self.observed <= self.bound,
            BoundKind::AtLeast => self.observed >= self.bound,
        }
    }

    /// A check only counts as a violation when it misses its bound by more
    /// than a factor of ten.
    pub fn violated(&self) -> bool {
        match self.kind {
            BoundKind::AtMost => self.observed > 10.0 * self.bound,
            BoundKind::AtLeast => self.observed < 0.1 * self.bound,
        }
    }

    fn at_most(name: String, observed: f64, bound: f64) -> Self {
        CheckOutcome {
            name,
            observed,
            bound,
            kind: BoundKind::AtMost,
        }
    }

    fn at_least(name: String, observed: f64, bound: f64) -> Self {
        CheckOutcome {
            name,
            observed,
            bound,
            kind: BoundKind::AtLeast,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    ConsistentWithTheorem,
    Violation,
}

/// Aggregated outcome of a verification suite. The sweeps are evidence, not
/// proof: the affirmative verdict is deliberately `ConsistentWithTheorem`.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub label: String,
    pub checks: Vec<CheckOutcome>,
    pub verdict: Verdict,
}

impl VerificationReport {
    fn from_checks(label: String, checks: Vec<CheckOutcome>) -> Self {
        let verdict = if checks.iter().any(CheckOutcome::violated) {
            Verdict::Violation
        } else {
            Verdict::ConsistentWithTheorem
        };
        VerificationReport {
            label,
            checks,
            verdict,
        }
    }

    /// Strict pass: every check within its bound (not just within 10×).
    pub fn passed_all(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Golden root-and-integral rows for the timelike family (C > e), as
/// computed by an independent CAS. The first row is printed to six digits
/// only and its near-double root stresses the quadrature, hence its looser
/// tolerance in `tables_suite`.
#[rustfmt::skip]
pub const REFERENCE_ROWS: [TableRow; 25] = [
    TableRow { c: 2.72, u1: 0.9822782644, u2: 1.017827051, i1: 3.39646, i2: 5.63324 },
    TableRow { c: 2.725, u1: 0.9650767467, u2: 1.035334695, i1: 2.913861676, i2: 5.150340780 },
    TableRow { c: 2.73, u1: 0.9539872965, u2: 1.046729750, i1: 2.716714471, i2: 4.952913186 },
    TableRow { c: 2.74, u1: 0.9375982937, u2: 1.063728407, i1: 2.497786122, i2: 4.733425412 },
    TableRow { c: 2.75, u1: 0.9248309636, u2: 1.077103331, i1: 2.363204279, i2: 4.598285949 },
    TableRow { c: 2.8, u1: 0.8808758710, u2: 1.124065962, i1: 2.026032087, i2: 4.258352255 },
    TableRow { c: 2.9, u1: 0.8258522408, u2: 1.184957908, i1: 1.740252676, i2: 3.967178286 },
    TableRow { c: 3.0, u1: 0.7868044780, u2: 1.229688803, i1: 1.583315220, i2: 3.805008572 },
    TableRow { c: 3.1, u1: 0.7556136794, u2: 1.266389104, i1: 1.474783161, i2: 3.691396684 },
    TableRow { c: 3.2, u1: 0.7293528965, u2: 1.297996253, i1: 1.391943189, i2: 3.603620332 },
    TableRow { c: 4.0, u1: 0.5978318795, u2: 1.467410087, i1: 1.051169565, i2: 3.227665154 },
    TableRow { c: 5.0, u1: 0.5090885010, u2: 1.594566197, i1: 0.8629326647, i2: 3.003422822 },
    TableRow { c: 6.0, u1: 0.4521962510, u2: 1.683195738, i1: 0.7526390978, i2: 2.863129355 },
    TableRow { c: 7.0, u1: 0.4113302857, u2: 1.751120026, i1: 0.6770807650, i2: 2.761819500 },
    TableRow { c: 8.0, u1: 0.3800280951, u2: 1.806013755, i1: 0.6208959900, i2: 2.683055126 },
    TableRow { c: 10.0, u1: 0.3344137545, u2: 1.891336053, i1: 0.5412131026, i2: 2.565108172 },
    TableRow { c: 20.0, u1: 0.2295778377, u2: 2.121262664, i1: 0.3655508690, i2: 2.266933975 },
    TableRow { c: 30.0, u1: 0.1857512382, u2: 2.239037675, i1: 0.2943554575, i2: 2.122055409 },
    TableRow { c: 40.0, u1: 0.1601547153, u2: 2.317248453, i1: 0.2532125983, i2: 2.027988230 },
    TableRow { c: 50.0, u1: 0.1428721249, u2: 2.375356389, i1: 0.2255845814, i2: 1.959035117 },
    TableRow { c: 100.0, u1: 0.1005063540, u2: 2.544164917, i1: 0.1582764960, i2: 1.762485425 },
    TableRow { c: 200.0, u1: 0.07088856878, u2: 2.698888129, i1: 0.1114918791, i2: 1.586306978 },
    TableRow { c: 300.0, u1: 0.05783165509, u2: 2.784186390, i1: 0.09091788154, i2: 1.490482830 },
    TableRow { c: 400.0, u1: 0.05006269611, u2: 2.842705995, i1: 0.07868765650, i2: 1.425201168 },
    TableRow { c: 500.0, u1: 0.04476619308, u2: 2.887054100, i1: 0.07035385008, i2: 1.375955282 },
];

/// Tolerances of `tables_suite`: roots absolute, integrals relative, with a
/// looser band for the six-digit first row.
pub const TABLE_ROOT_TOL: f64 = 1e-8;
pub const TABLE_INTEGRAL_RTOL: f64 = 1e-5;
pub const TABLE_FIRST_ROW_RTOL: f64 = 1e-3;

/// Surface of revolution of `axis.generatrix` about the axis described by
/// `axis`, built as explicit (rotation matrix) · (profile column) +
/// (translation), the construction the displayed closed forms derive from.
///
/// For spacelike and timelike axes the matrix is the y-axis hyperbolic
/// rotation by θ applied to a v-family of columns; for the lightlike axis
/// the parabolic matrix itself carries the v parameter. The offset a
/// translates along y (lightlike case: along x).
pub fn revolution_surface(axis: &AxisSpec, family: GeneratrixFamily) -> Result<ParametricSurface> {
    let (ulo, uhi) = axis.generatrix.u_range;
    if !(ulo < uhi) {
        return Err(Error::InvalidInterval { lo: ulo, hi: uhi });
    }
    // Causality of the generatrix: both conventions require |g'| < 1.
    for i in 0..=32 {
        let u = ulo + (uhi - ulo) * i as f64 / 32.0;
        if axis.generatrix.deriv(u).abs() >= 1.0 {
            return Err(Error::CausalityMismatch { u });
        }
    }

    let g = axis.generatrix.f.clone();
    let theta = axis.theta;
    let a = axis.offset;
    let causal = axis.causal;

    let v_range = match causal {
        CausalType::Timelike => (0.0, TAU),
        _ => V_WINDOW,
    };

    let tilt = rotation(RotationAxis::SpacelikeY, theta);
    let position = move |u: f64, v: f64| -> LVec3 {
        let gu = g(u);
        match (family, causal) {
            (GeneratrixFamily::SpacelikeGen, CausalType::Spacelike) => {
                tilt.apply(LVec3::new(u, gu * v.sinh(), gu * v.cosh())) + LVec3::new(0.0, a, 0.0)
            }
            (GeneratrixFamily::SpacelikeGen, CausalType::Lightlike) => {
                rotation(RotationAxis::LightlikeXZ, v).apply(LVec3::new(u, 0.0, gu))
                    + LVec3::new(a, 0.0, 0.0)
            }
            (GeneratrixFamily::SpacelikeGen, CausalType::Timelike) => {
                tilt.apply(LVec3::new(u * v.cos(), u * v.sin(), gu)) + LVec3::new(0.0, a, 0.0)
            }
            (GeneratrixFamily::TimelikeGen, CausalType::Spacelike) => {
                tilt.apply(LVec3::new(gu, u * v.sinh(), u * v.cosh())) + LVec3::new(0.0, a, 0.0)
            }
            (GeneratrixFamily::TimelikeGen, CausalType::Lightlike) => {
                rotation(RotationAxis::LightlikeXZ, v).apply(LVec3::new(gu, 0.0, u))
                    + LVec3::new(a, 0.0, 0.0)
            }
            (GeneratrixFamily::TimelikeGen, CausalType::Timelike) => {
                tilt.apply(LVec3::new(gu * v.sin(), gu * v.cos(), u)) + LVec3::new(0.0, a, 0.0)
            }
        }
    };

    Ok(ParametricSurface::from_fn((ulo, uhi), v_range, position))
}

fn scan_circle(surface: &ParametricSurface, u: f64, v_samples: usize) -> Result<CircleScan> {
    let (vlo, vhi) = surface.v_range();
    let periodic = (vhi - vlo - TAU).abs() < 1e-12;
    let n = v_samples.max(2);
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for j in 0..n {
        let t = if periodic {
            j as f64 / n as f64
        } else {
            j as f64 / (n - 1) as f64
        };
        let v = vlo + (vhi - vlo) * t;
        let p = surface.pairing(u, v)?;
        min = min.min(p);
        max = max.max(p);
    }
    Ok(CircleScan {
        min,
        max,
        spread: max - min,
    })
}

/// Extrema of ⟨∇f, N⟩ along the coordinate circle u = const, sampled on the
/// natural v-window of the rotation family.
pub fn pairing_along_circle(
    axis: &AxisSpec,
    family: GeneratrixFamily,
    u: f64,
    v_samples: usize,
) -> Result<CircleScan> {
    let surface = revolution_surface(axis, family)?;
    scan_circle(&surface, u, v_samples)
}

/// Closed form of ⟨∇f, N⟩ on the revolved surface, in the X_u ∧ X_v
/// orientation, derived from the matrix construction. Covers the hyperbolic
/// and elliptic axis families; the parabolic case is left to the numeric
/// route.
#[allow(clippy::too_many_arguments)]
pub fn pairing_closed_form(
    family: GeneratrixFamily,
    causal: CausalType,
    g: f64,
    gp: f64,
    theta: f64,
    a: f64,
    u: f64,
    v: f64,
) -> Option<f64> {
    let root = (1.0 - gp * gp).sqrt();
    let sh2 = (2.0 * theta).sinh() / 2.0;
    let (sh, ch) = (theta.sinh(), theta.cosh());
    match (family, causal) {
        (GeneratrixFamily::SpacelikeGen, CausalType::Timelike) => Some(
            -(u * gp * (1.0 + v.cos().powi(2) * sh * sh)
                + (u + g * gp) * sh2 * v.cos()
                + g * sh * sh
                + a * gp * v.sin())
                / root,
        ),
        (GeneratrixFamily::SpacelikeGen, CausalType::Spacelike) => Some(
            -g.signum()
                * (u * gp * ch * ch
                    + (u + g * gp) * sh2 * v.cosh()
                    + g * (sh * sh * v.cosh().powi(2) + v.sinh().powi(2))
                    + a * v.sinh())
                / root,
        ),
        (GeneratrixFamily::TimelikeGen, CausalType::Timelike) => Some(
            g.signum()
                * ((g * gp + u) * sh2 * v.sin()
                    + g * ch * ch * v.sin().powi(2)
                    + g * v.cos().powi(2)
                    + u * gp * sh * sh
                    + a * v.cos())
                / root,
        ),
        (GeneratrixFamily::TimelikeGen, CausalType::Spacelike) => Some(
            -u.signum()
                * (g * ch * ch
                    + (u + g * gp) * sh2 * v.cosh()
                    + u * gp * (sh * sh * v.cosh().powi(2) + v.sinh().powi(2))
                    + a * gp * v.sinh())
                / root,
        ),
        (_, CausalType::Lightlike) => None,
    }
}

/// The Q statistic of the spacelike-axis spacelike case: the v-derivative of
/// √(1−g'²)·⟨∇f, N⟩ must vanish identically in v for the pairing to be
/// constant along the circle.
///
/// `closed` is Q = g sinh 2v cosh²θ + (u + g g') (sinh 2θ / 2) sinh v +
/// a cosh v; `finite_diff` differentiates the numerically constructed
/// pairing (the X_u ∧ X_v normal points opposite the closed form's
/// orientation for g > 0, which the sign factor absorbs).
pub fn q_statistic(generatrix: &Generatrix, theta: f64, a: f64, u: f64, v: f64) -> Result<QStat> {
    let g = generatrix.eval(u);
    let gp = generatrix.deriv(u);
    let closed = g * (2.0 * v).sinh() * theta.cosh().powi(2)
        + (u + g * gp) * (2.0 * theta).sinh() / 2.0 * v.sinh()
        + a * v.cosh();

    let axis = AxisSpec {
        causal: CausalType::Spacelike,
        theta,
        offset: a,
        generatrix: generatrix.clone(),
    };
    let surface = revolution_surface(&axis, GeneratrixFamily::SpacelikeGen)?;
    let root = (1.0 - gp * gp).sqrt();
    let fd = diff(
        |t| root * surface.pairing(u, t).unwrap_or(f64::NAN),
        v,
        DiffOrder::First,
        1.0,
    );
    let orientation = if g >= 0.0 { -1.0 } else { 1.0 };
    Ok(QStat {
        closed,
        finite_diff: orientation * fd,
    })
}

/// Max |H_f| over an interior grid of the surface's parameter domain.
pub fn max_residual_on_grid(surface: &ParametricSurface, nu: usize, nv: usize) -> Result<f64> {
    let (ulo, uhi) = surface.u_range();
    let (vlo, vhi) = surface.v_range();
    let periodic = (vhi - vlo - TAU).abs() < 1e-12;
    let mut worst = 0.0f64;
    for i in 0..nu {
        let u = ulo + (uhi - ulo) * i as f64 / (nu - 1) as f64;
        for j in 0..nv {
            let t = if periodic {
                j as f64 / nv as f64
            } else {
                j as f64 / (nv - 1) as f64
            };
            let v = vlo + (vhi - vlo) * t;
            worst = worst.max(surface.f_mean_curvature(u, v)?.abs());
        }
    }
    Ok(worst)
}

/// Recomputes every golden table row and reports the worst deviations.
pub fn tables_suite() -> Result<VerificationReport> {
    let mut worst_root = 0.0f64;
    let mut worst_rel = 0.0f64;
    let mut first_row_rel = 0.0f64;
    for (idx, reference) in REFERENCE_ROWS.iter().enumerate() {
        let row = table_row(reference.c)?;
        worst_root = worst_root
            .max((row.u1 - reference.u1).abs())
            .max((row.u2 - reference.u2).abs());
        let r1 = ((row.i1 - reference.i1) / reference.i1).abs();
        let r2 = ((row.i2 - reference.i2) / reference.i2).abs();
        if idx == 0 {
            first_row_rel = r1.max(r2);
        } else {
            worst_rel = worst_rel.max(r1).max(r2);
        }
    }
    let checks = alloc::vec![
        CheckOutcome::at_most(
            format!(
                "roots u1,u2 vs golden table ({} rows, abs)",
                REFERENCE_ROWS.len()
            ),
            worst_root,
            TABLE_ROOT_TOL,
        ),
        CheckOutcome::at_most(
            String::from("integrals I1,I2 vs golden table (rel, rows 2..)"),
            worst_rel,
            TABLE_INTEGRAL_RTOL,
        ),
        CheckOutcome::at_most(
            String::from("integrals I1,I2 vs golden table (rel, six-digit row)"),
            first_row_rel,
            TABLE_FIRST_ROW_RTOL,
        ),
    ];
    Ok(VerificationReport::from_checks(
        String::from("tables"),
        checks,
    ))
}

/// H_f residual grids for the classified catenoid families
/// (64×64 interior points each).
pub fn residuals_suite() -> Result<VerificationReport> {
    let mut checks = Vec::new();
    for c in [-2.0, 0.0, 2.0] {
        let s = make_surface(&GeneratrixProfile::spacelike(c), Some((0.05, 2.0)))?;
        checks.push(CheckOutcome::at_most(
            format!("spacelike catenoid C={c}: max |H_f| on 64x64"),
            max_residual_on_grid(&s, 64, 64)?,
            RESIDUAL_MAX,
        ));
    }
    for c in [0.5, 1.0, 2.0] {
        let p = GeneratrixProfile::timelike(c, 0.0)?;
        let s = make_surface(&p, Some((0.05, 2.0)))?;
        checks.push(CheckOutcome::at_most(
            format!("timelike catenoid C={c}: max |H_f| on 64x64"),
            max_residual_on_grid(&s, 64, 64)?,
            RESIDUAL_MAX,
        ));
    }
    let DomainCase::ThreeIntervals { u2, .. } = domain_case(3.1)? else {
        unreachable!("3.1 > e");
    };
    let inner = GeneratrixProfile::timelike(3.1, 0.0)?;
    let s = make_surface(&inner, None)?;
    checks.push(CheckOutcome::at_most(
        String::from("timelike catenoid C=3.1 inner component: max |H_f| on 64x64"),
        max_residual_on_grid(&s, 64, 64)?,
        RESIDUAL_MAX,
    ));
    let outer = GeneratrixProfile::timelike(3.1, u2)?;
    let s = make_surface(&outer, Some((u2, 4.0)))?;
    checks.push(CheckOutcome::at_most(
        String::from("timelike catenoid C=3.1 outer component: max |H_f| on 64x64"),
        max_residual_on_grid(&s, 64, 64)?,
        RESIDUAL_MAX,
    ));
    Ok(VerificationReport::from_checks(
        String::from("residuals"),
        checks,
    ))
}

/// Horizontal planes, vertical planes, and cylinders: the directly checkable
/// classified surfaces.
pub fn corollary_suite() -> VerificationReport {
    let mut checks = Vec::new();

    for z0 in [0.0, 3.0, -1.5] {
        let plane = horizontal_plane(z0);
        let mut worst = 0.0f64;
        for i in 0..16 {
            for j in 0..16 {
                let u = -2.0 + 4.0 * i as f64 / 15.0;
                let v = -2.0 + 4.0 * j as f64 / 15.0;
                worst = worst.max(plane.f_mean_curvature(u, v).unwrap_or(f64::NAN).abs());
            }
        }
        checks.push(CheckOutcome::at_most(
            format!("horizontal plane z={z0}: max |H_f|"),
            worst,
            1e-12,
        ));
    }

    for (alpha, d) in [(0.0, 0.0), (0.7, 1.0), (1.9, 2.0)] {
        let plane = vertical_plane(alpha, d);
        let mut pair_min = f64::INFINITY;
        let mut pair_max = f64::NEG_INFINITY;
        let mut worst_hf = 0.0f64;
        for i in 0..16 {
            for j in 0..16 {
                let u = -2.0 + 4.0 * i as f64 / 15.0;
                let v = -2.0 + 4.0 * j as f64 / 15.0;
                let p = plane.pairing(u, v).unwrap_or(f64::NAN);
                pair_min = pair_min.min(p);
                pair_max = pair_max.max(p);
                worst_hf = worst_hf.max(plane.f_mean_curvature(u, v).unwrap_or(f64::NAN).abs());
            }
        }
        checks.push(CheckOutcome::at_most(
            format!("vertical plane d={d}: pairing spread"),
            pair_max - pair_min,
            1e-12,
        ));
        checks.push(CheckOutcome::at_most(
            format!("vertical plane d={d}: | |pairing| - d |"),
            (pair_max.abs() - d).abs(),
            1e-10,
        ));
        if d == 0.0 {
            checks.push(CheckOutcome::at_most(
                String::from("vertical plane through the axis: max |H_f|"),
                worst_hf,
                1e-12,
            ));
        } else {
            checks.push(CheckOutcome::at_most(
                format!("vertical plane d={d}: | |H_f| - d/2 |"),
                (worst_hf - d / 2.0).abs(),
                1e-10,
            ));
        }
    }

    let unit = cylinder(1.0);
    let mut worst = 0.0f64;
    for i in 0..16 {
        for j in 0..16 {
            let u = -2.0 + 4.0 * i as f64 / 15.0;
            let v = TAU * j as f64 / 16.0;
            worst = worst.max(unit.f_mean_curvature(u, v).unwrap_or(f64::NAN).abs());
        }
    }
    checks.push(CheckOutcome::at_most(
        String::from("unit cylinder: max |H_f|"),
        worst,
        1e-12,
    ));

    for r in [0.5, 2.0, 3.0] {
        let cyl = cylinder(r);
        let expected = (r / 2.0 - 1.0 / (2.0 * r)).abs();
        let mut worst = 0.0f64;
        for j in 0..32 {
            let v = TAU * j as f64 / 32.0;
            let hf = cyl.f_mean_curvature(0.2, v).unwrap_or(f64::NAN);
            worst = worst.max((hf.abs() - expected).abs());
        }
        checks.push(CheckOutcome::at_most(
            format!("cylinder r={r}: | |H_f| - |r/2 - 1/(2r)| |"),
            worst,
            1e-10,
        ));
    }

    VerificationReport::from_checks(String::from("corollary"), checks)
}

/// Lemma-1 identity at seeded random (point, unit normal) pairs: |⟨∇f, N⟩|
/// equals the Euclidean distance from the z-axis projection to the tangent
/// plane times the Euclidean normal length.
pub fn lemma1_suite(seed: u64, samples: usize) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let p = LVec3::new(
            rng.gen_range(-3.0..3.0),
            rng.gen_range(-3.0..3.0),
            rng.gen_range(-3.0..3.0),
        );
        // Unit normal of either causal type, away from the light cone.
        let n = loop {
            let cand = LVec3::new(
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            );
            let s = cand.lorentz_dot(cand);
            if s.abs() > 0.1 {
                break cand * (1.0 / s.abs().sqrt());
            }
        };
        let (lhs, rhs) = crate::surfaces::lemma1_distance_identity(p, n);
        worst = worst.max((lhs - rhs).abs());
    }
    let checks = alloc::vec![CheckOutcome::at_most(
        format!("lemma-1 identity over {samples} seeded draws (abs)"),
        worst,
        1e-10,
    )];
    VerificationReport::from_checks(String::from("lemma1"), checks)
}

const REDRAW_BUDGET: usize = 200;

fn draw_signed(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    let mag = rng.gen_range(lo..hi);
    if rng.gen::<bool>() {
        mag
    } else {
        -mag
    }
}

fn scan_points(u_range: (f64, f64), n: usize) -> Vec<f64> {
    (1..=n)
        .map(|i| u_range.0 + (u_range.1 - u_range.0) * i as f64 / (n + 1) as f64)
        .collect()
}

/// Draws a random cubic generatrix admissible for the sweep: causal margin
/// everywhere, derivative and value bounded away from the degenerate
/// configurations at the scan points.
fn draw_generatrix(rng: &mut ChaCha8Rng, u_range: (f64, f64), scan: &[f64]) -> Result<Generatrix> {
    for _ in 0..REDRAW_BUDGET {
        let coeffs = [
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ];
        let cand = Generatrix::polynomial(coeffs, u_range);
        let causal_ok = (0..=32).all(|i| {
            let u = u_range.0 + (u_range.1 - u_range.0) * i as f64 / 32.0;
            cand.deriv(u).abs() <= 0.95
        });
        if !causal_ok {
            continue;
        }
        let max_dg = scan.iter().map(|&u| cand.deriv(u).abs()).fold(0.0, f64::max);
        let min_g = scan
            .iter()
            .map(|&u| cand.eval(u).abs())
            .fold(f64::INFINITY, f64::min);
        let min_gap = scan
            .iter()
            .map(|&u| (cand.eval(u) - u).abs())
            .fold(f64::INFINITY, f64::min);
        if max_dg >= 0.05 && min_g >= 0.1 && min_gap >= 0.05 {
            return Ok(cand);
        }
    }
    Err(Error::RedrawBudget)
}

/// Randomized elimination sweep plus the classified escape configurations.
///
/// Every trial draws an axis with (θ, a) ≠ (0, 0) over the admissible causal
/// types and an admissible random generatrix, then takes the largest circle
/// spread over several u values: positive spread witnesses that the
/// configuration cannot have constant pairing along every circle, the
/// necessary condition for H_f ≡ 0. The classified escapes (reference axis,
/// and the vertical-plane case for the timelike family) must instead scan
/// flat, and the surviving surfaces must pass the H_f residual grid.
pub fn theorem_sweep(family: CatenoidKind, trials: usize, seed: u64) -> Result<VerificationReport> {
    let gen_family = match family {
        CatenoidKind::Spacelike => GeneratrixFamily::SpacelikeGen,
        CatenoidKind::Timelike => GeneratrixFamily::TimelikeGen,
    };
    let u_range = (0.4, 1.6);
    let scan = scan_points(u_range, 5);

    let mut min_elimination = f64::INFINITY;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64 + 1);

        let causal = match rng.gen_range(0..3u8) {
            0 => CausalType::Spacelike,
            1 => CausalType::Lightlike,
            _ => CausalType::Timelike,
        };
        let (theta, offset) = match rng.gen_range(0..3u8) {
            0 => (0.0, draw_signed(&mut rng, 0.2, 2.0)),
            1 => (draw_signed(&mut rng, 0.1, 1.2), 0.0),
            _ => (
                draw_signed(&mut rng, 0.1, 1.2),
                draw_signed(&mut rng, 0.2, 2.0),
            ),
        };
        let generatrix = draw_generatrix(&mut rng, u_range, &scan)?;
        let axis = AxisSpec {
            causal,
            theta,
            offset,
            generatrix,
        };
        let surface = revolution_surface(&axis, gen_family)?;
        let mut spread = 0.0f64;
        let mut alive = 0usize;
        for &u in &scan {
            match scan_circle(&surface, u, V_SAMPLES) {
                Ok(scan) => {
                    spread = spread.max(scan.spread);
                    alive += 1;
                }
                Err(Error::DegeneratePoint { .. }) | Err(Error::LightlikeNormal { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        if alive == 0 {
            return Err(Error::RedrawBudget);
        }
        min_elimination = min_elimination.min(spread);
    }

    let mut checks = Vec::new();
    checks.push(CheckOutcome::at_least(
        format!("elimination: min over {trials} trials of max circle spread"),
        min_elimination,
        ELIMINATION_SPREAD_MIN,
    ));

    // Classified escapes scan flat, and the classified surfaces carry
    // vanishing H_f residuals.
    let mut max_escape = 0.0f64;
    let mut escape_scan = |axis: &AxisSpec, fam: GeneratrixFamily| -> Result<f64> {
        let surface = revolution_surface(axis, fam)?;
        let mut worst = 0.0f64;
        for &u in &scan {
            worst = worst.max(scan_circle(&surface, u, V_SAMPLES)?.spread);
        }
        Ok(worst)
    };

    match family {
        CatenoidKind::Spacelike => {
            for c in [0.0, 2.0] {
                let profile = GeneratrixProfile::spacelike(c);
                let axis = AxisSpec {
                    causal: CausalType::Timelike,
                    theta: 0.0,
                    offset: 0.0,
                    generatrix: Generatrix::from_profile(profile, u_range),
                };
                max_escape = max_escape.max(escape_scan(&axis, GeneratrixFamily::SpacelikeGen)?);
            }
            let axis = AxisSpec {
                causal: CausalType::Timelike,
                theta: 0.0,
                offset: 0.0,
                generatrix: Generatrix::polynomial([0.4, 0.2, -0.1, 0.05], u_range),
            };
            max_escape = max_escape.max(escape_scan(&axis, GeneratrixFamily::SpacelikeGen)?);
            checks.push(CheckOutcome::at_most(
                String::from("escape: z-axis (theta=a=0) max circle spread"),
                max_escape,
                ESCAPE_SPREAD_MAX,
            ));

            let mut worst = 0.0f64;
            let plane = horizontal_plane(1.0);
            worst = worst.max(max_residual_on_grid(&plane, 32, 32)?);
            for c in [-2.0, 0.0, 2.0] {
                let s = make_surface(&GeneratrixProfile::spacelike(c), Some((0.05, 2.0)))?;
                worst = worst.max(max_residual_on_grid(&s, 32, 32)?);
            }
            checks.push(CheckOutcome::at_most(
                String::from("survivors: max |H_f| (horizontal plane, catenoids)"),
                worst,
                RESIDUAL_MAX,
            ));
        }
        CatenoidKind::Timelike => {
            let axis = AxisSpec {
                causal: CausalType::Timelike,
                theta: 0.0,
                offset: 0.0,
                generatrix: Generatrix::polynomial([0.8, 0.1, 0.05, -0.02], u_range),
            };
            max_escape = max_escape.max(escape_scan(&axis, GeneratrixFamily::TimelikeGen)?);
            // Vertical-plane escape: spacelike axis, theta = 0, g' = 0.
            for (c, a) in [(0.5, 0.0), (1.0, 0.7), (2.0, -0.4)] {
                let axis = AxisSpec {
                    causal: CausalType::Spacelike,
                    theta: 0.0,
                    offset: a,
                    generatrix: Generatrix::constant(c, u_range),
                };
                max_escape = max_escape.max(escape_scan(&axis, GeneratrixFamily::TimelikeGen)?);
            }
            checks.push(CheckOutcome::at_most(
                String::from("escape: z-axis and vertical-plane max circle spread"),
                max_escape,
                ESCAPE_SPREAD_MAX,
            ));

            let mut worst = 0.0f64;
            worst = worst.max(max_residual_on_grid(&vertical_plane(0.3, 0.0), 32, 32)?);
            worst = worst.max(max_residual_on_grid(&cylinder(1.0), 32, 32)?);
            let p = GeneratrixProfile::timelike(1.0, 0.0)?;
            let s = make_surface(&p, Some((0.05, 2.0)))?;
            worst = worst.max(max_residual_on_grid(&s, 32, 32)?);
            checks.push(CheckOutcome::at_most(
                String::from("survivors: max |H_f| (vertical plane, unit cylinder, catenoid)"),
                worst,
                RESIDUAL_MAX,
            ));
        }
    }

    let label = match family {
        CatenoidKind::Spacelike => "classification (spacelike family)",
        CatenoidKind::Timelike => "classification (timelike family)",
    };
    Ok(VerificationReport::from_checks(String::from(label), checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flat_axis(generatrix: Generatrix, causal: CausalType) -> AxisSpec {
        AxisSpec {
            causal,
            theta: 0.0,
            offset: 0.0,
            generatrix,
        }
    }

    #[test]
    fn z_axis_revolution_recovers_the_plain_parametrization() {
        let g = Generatrix::polynomial([0.3, 0.2, 0.0, 0.0], (0.4, 1.6));
        let axis = flat_axis(g.clone(), CausalType::Timelike);
        let s = revolution_surface(&axis, GeneratrixFamily::SpacelikeGen).unwrap();
        let (u, v) = (0.9, 1.1);
        let p = s.position(u, v);
        let expect = LVec3::new(u * v.cos(), u * v.sin(), g.eval(u));
        assert!((p - expect).euclidean_norm() < 1e-14);
    }

    #[test]
    fn spacelike_axis_at_v_zero_is_the_generatrix_plane() {
        let g = Generatrix::constant(0.7, (0.4, 1.6));
        let axis = flat_axis(g, CausalType::Spacelike);
        let s = revolution_surface(&axis, GeneratrixFamily::SpacelikeGen).unwrap();
        let p = s.position(1.2, 0.0);
        assert!((p - LVec3::new(1.2, 0.0, 0.7)).euclidean_norm() < 1e-14);
    }

    #[test]
    fn lightlike_axis_at_v_zero_is_translation_only() {
        let g = Generatrix::polynomial([0.5, 0.1, 0.0, 0.0], (0.4, 1.6));
        let axis = AxisSpec {
            causal: CausalType::Lightlike,
            theta: 0.0,
            offset: 0.8,
            generatrix: g.clone(),
        };
        let s = revolution_surface(&axis, GeneratrixFamily::SpacelikeGen).unwrap();
        let p = s.position(1.0, 0.0);
        assert!((p - LVec3::new(1.8, 0.0, g.eval(1.0))).euclidean_norm() < 1e-14);
    }

    #[test]
    fn causality_mismatch_is_rejected() {
        // |g'| = 1.5 > 1 everywhere.
        let g = Generatrix::polynomial([0.0, 1.5, 0.0, 0.0], (0.4, 1.6));
        let axis = flat_axis(g, CausalType::Timelike);
        assert!(matches!(
            revolution_surface(&axis, GeneratrixFamily::SpacelikeGen),
            Err(Error::CausalityMismatch { .. })
        ));
    }

    #[test]
    fn z_axis_circles_have_constant_pairing() {
        let profile = GeneratrixProfile::spacelike(0.0);
        let g = Generatrix::from_profile(profile, (0.4, 1.6));
        let axis = flat_axis(g, CausalType::Timelike);
        let scan = pairing_along_circle(&axis, GeneratrixFamily::SpacelikeGen, 1.0, 256).unwrap();
        assert!(scan.spread <= 1e-10, "spread = {}", scan.spread);
    }

    #[test]
    fn tilted_axis_breaks_constancy() {
        let profile = GeneratrixProfile::spacelike(0.0);
        let g = Generatrix::from_profile(profile, (0.4, 1.6));
        let axis = AxisSpec {
            causal: CausalType::Timelike,
            theta: 0.4,
            offset: 0.0,
            generatrix: g,
        };
        let scan = pairing_along_circle(&axis, GeneratrixFamily::SpacelikeGen, 1.0, 256).unwrap();
        assert!(scan.spread > 1e-3, "spread = {}", scan.spread);
    }

    #[test]
    fn offset_spacelike_axis_shows_the_a_term() {
        let g = Generatrix::constant(0.7, (0.4, 1.6));
        let axis = AxisSpec {
            causal: CausalType::Spacelike,
            theta: 0.0,
            offset: 1.0,
            generatrix: g,
        };
        let scan = pairing_along_circle(&axis, GeneratrixFamily::SpacelikeGen, 1.0, 256).unwrap();
        assert!(scan.spread > 1e-3, "spread = {}", scan.spread);
    }

    #[test]
    fn closed_forms_match_the_numeric_pairing() {
        let g = Generatrix::polynomial([0.6, 0.15, -0.08, 0.04], (0.4, 1.6));
        let cases = [
            (GeneratrixFamily::SpacelikeGen, CausalType::Timelike, 0.5, -0.8),
            (GeneratrixFamily::SpacelikeGen, CausalType::Spacelike, -0.3, 0.6),
            (GeneratrixFamily::TimelikeGen, CausalType::Timelike, 0.7, 0.4),
            (GeneratrixFamily::TimelikeGen, CausalType::Spacelike, 0.2, -0.5),
        ];
        for (family, causal, theta, a) in cases {
            let axis = AxisSpec {
                causal,
                theta,
                offset: a,
                generatrix: g.clone(),
            };
            let s = revolution_surface(&axis, family).unwrap();
            for (u, v) in [(0.6, 0.3), (1.0, 1.7), (1.4, -0.9)] {
                let numeric = s.pairing(u, v).unwrap();
                let closed =
                    pairing_closed_form(family, causal, g.eval(u), g.deriv(u), theta, a, u, v)
                        .unwrap();
                assert!(
                    (numeric - closed).abs() < 1e-8,
                    "{family:?}/{causal:?} at ({u},{v}): {numeric} vs {closed}"
                );
            }
        }
    }

    #[test]
    fn q_statistic_examples() {
        let g = Generatrix::polynomial([0.5, 0.2, 0.1, 0.0], (0.4, 1.6));

        // v = 0: Q reduces to the offset a.
        let q = q_statistic(&g, 0.35, 0.9, 1.0, 0.0).unwrap();
        assert!((q.closed - 0.9).abs() < 1e-14);

        // theta = a = 0: Q = g(u) sinh 2v.
        let q = q_statistic(&g, 0.0, 0.0, 0.8, 0.6).unwrap();
        let expected = g.eval(0.8) * (1.2f64).sinh();
        assert!((q.closed - expected).abs() < 1e-14);

        // Closed form against the finite-difference route.
        for (theta, a, u, v) in [(0.3, 0.5, 0.9, 0.4), (-0.6, 1.1, 1.3, -0.8)] {
            let q = q_statistic(&g, theta, a, u, v).unwrap();
            assert!(
                (q.closed - q.finite_diff).abs() < 1e-6,
                "Q: {} vs {}",
                q.closed,
                q.finite_diff
            );
        }
    }

    #[test]
    fn corollary_suite_is_consistent() {
        let report = corollary_suite();
        assert!(report.passed_all(), "{:#?}", report.checks);
        assert_eq!(report.verdict, Verdict::ConsistentWithTheorem);
    }

    #[test]
    fn lemma1_suite_is_consistent() {
        let report = lemma1_suite(7, 200);
        assert!(report.passed_all(), "{:#?}", report.checks);
    }

    #[test]
    fn tables_suite_is_consistent() {
        let report = tables_suite().unwrap();
        assert!(report.passed_all(), "{:#?}", report.checks);
    }

    #[test]
    fn sweep_is_consistent_for_both_families() {
        for family in [CatenoidKind::Spacelike, CatenoidKind::Timelike] {
            let report = theorem_sweep(family, 40, 7).unwrap();
            assert!(report.passed_all(), "{family:?}: {:#?}", report.checks);
            assert_eq!(report.verdict, Verdict::ConsistentWithTheorem);
        }
    }

    #[test]
    fn vertical_plane_escape_scans_flat() {
        let axis = AxisSpec {
            causal: CausalType::Spacelike,
            theta: 0.0,
            offset: 1.3,
            generatrix: Generatrix::constant(0.9, (0.4, 1.6)),
        };
        let scan = pairing_along_circle(&axis, GeneratrixFamily::TimelikeGen, 1.0, 256).unwrap();
        assert!(scan.spread <= 1e-10, "spread = {}", scan.spread);
    }

    #[test]
    fn lightlike_axis_timelike_family_never_scans_flat() {
        let g = Generatrix::polynomial([0.6, 0.2, -0.1, 0.0], (0.4, 1.6));
        for a in [0.0, 0.9, -1.4] {
            let axis = AxisSpec {
                causal: CausalType::Lightlike,
                theta: 0.0,
                offset: a,
                generatrix: g.clone(),
            };
            let mut spread = 0.0f64;
            for u in [0.6, 1.0, 1.4] {
                spread = spread.max(
                    pairing_along_circle(&axis, GeneratrixFamily::TimelikeGen, u, 256)
                        .unwrap()
                        .spread,
                );
            }
            assert!(spread > 1e-4, "a = {a}: spread = {spread}");
        }
    }
}
