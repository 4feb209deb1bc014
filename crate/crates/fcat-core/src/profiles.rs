//! The two f-Catenoid generatrix families: closed-form derivatives,
//! quadrature-built heights, the domain trichotomy of e^{u²} − Cu², the
//! golden root-and-integral table, and the C = e divergence probe.

use alloc::vec::Vec;

use num_traits::Float;

use crate::error::{Error, Result};
use crate::minkowski::LVec3;
use crate::numerics::{find_root, integrate, SingularEnd};
use crate::surfaces::{AnalyticPartials, ParametricSurface};

use alloc::boxed::Box;

/// Quadrature tolerance for generatrix heights.
pub const HEIGHT_TOL: f64 = 1e-12;
/// Bracket-width tolerance for the domain roots. The golden table needs the
/// roots essentially at machine precision: the slope of e^{u²} − Cu² at u₂
/// reaches ~2e4 for C = 500.
pub const ROOT_TOL: f64 = 1e-14;
/// Fraction of the interval length kept clear of degenerate endpoints.
pub const EDGE_MARGIN: f64 = 1e-3;
/// Upper integration limit of the I₂ column. A constant of the table, not of
/// the family.
pub const TABLE_UPPER_LIMIT: f64 = 4.0;
/// Window applied to unbounded generatrix components when no explicit
/// u-range is requested.
pub const DEFAULT_SPAN_CAP: f64 = 4.0;

const E: f64 = core::f64::consts::E;
const TAU: f64 = core::f64::consts::TAU;
// Endpoints this close to a domain root (relative) are snapped onto it.
const ROOT_SNAP: f64 = 1e-9;
const TABLE_TOL: f64 = 1e-11;

/// Which f-Catenoid family a generatrix belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatenoidKind {
    Spacelike,
    Timelike,
}

/// Sign structure of h(u) = e^{u²} − Cu² for C > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DomainCase {
    /// 0 < C < e: positive on all of R.
    WholeLine,
    /// C = e: positive except for double roots at ±1.
    PuncturedAtOne,
    /// C > e: simple roots 0 < u₁ < 1 < u₂ (and their mirrors).
    ThreeIntervals { u1: f64, u2: f64 },
}

/// One row of the root-and-integral table for C > e.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub c: f64,
    pub u1: f64,
    pub u2: f64,
    /// ∫₀^{u₁} √(e^{τ²}/(e^{τ²}−Cτ²)) dτ
    pub i1: f64,
    /// ∫_{u₂}^{4} of the same integrand
    pub i2: f64,
}

/// g'(u) of the spacelike family: sign/√(1 + u² e^{u²+C}).
///
/// Defined on all of R; magnitude in (0, 1] with value 1 only at u = 0.
pub fn spacelike_gprime(u: f64, c: f64, sign: f64) -> f64 {
    sign / (1.0 + u * u * (u * u + c).exp()).sqrt()
}

/// Denominator e^{u²} − Cu² of the timelike family.
#[inline]
fn timelike_positivity(u: f64, c: f64) -> f64 {
    (u * u).exp() - c * u * u
}

/// g'(u) of the timelike family: sign·√(e^{u²}/(e^{u²} − Cu²)).
///
/// Magnitude ≥ 1, equal to 1 only at u = 0; diverges as u approaches a root
/// of the denominator, which is reported as an `OutsideDomain` error.
pub fn timelike_gprime(u: f64, c: f64, sign: f64) -> Result<f64> {
    if !(c > 0.0) {
        return Err(Error::InvalidConstant {
            c,
            reason: "the timelike family requires a positive constant",
        });
    }
    let d = timelike_positivity(u, c);
    if d <= 0.0 {
        return Err(Error::OutsideDomain { u });
    }
    Ok(sign * ((u * u).exp() / d).sqrt())
}

fn spacelike_integrand(c: f64) -> impl Fn(f64) -> f64 {
    move |t: f64| 1.0 / (1.0 + t * t * (t * t + c).exp()).sqrt()
}

fn timelike_integrand(c: f64) -> impl Fn(f64) -> f64 {
    move |t: f64| {
        let et = (t * t).exp();
        let d = et - c * t * t;
        // Root endpoints are known to finite precision only; the sliver
        // beyond the numeric root carries O(√tol) mass and is clamped.
        if d <= 0.0 {
            0.0
        } else {
            (et / d).sqrt()
        }
    }
}

/// Height of the spacelike generatrix: ∫₀^u √(1/(1+τ²e^{τ²+C})) dτ.
///
/// Odd, strictly increasing, and 1-Lipschitz in u.
pub fn spacelike_height(u: f64, c: f64) -> Result<f64> {
    if u == 0.0 {
        return Ok(0.0);
    }
    let f = spacelike_integrand(c);
    if u > 0.0 {
        Ok(integrate(f, 0.0, u, HEIGHT_TOL, SingularEnd::None)?.value)
    } else {
        Ok(-integrate(f, u, 0.0, HEIGHT_TOL, SingularEnd::None)?.value)
    }
}

/// The trichotomy of h(u) = e^{u²} − Cu² for C > 0.
///
/// C = e is recognized within an absolute band of 1e-12; for C > e the roots
/// are bracketed on (0, 1) and (1, u_hi), growing u_hi until the sign flips.
pub fn domain_case(c: f64) -> Result<DomainCase> {
    if !(c > 0.0) {
        return Err(Error::InvalidConstant {
            c,
            reason: "the domain trichotomy requires a positive constant",
        });
    }
    if (c - E).abs() <= 1e-12 {
        return Ok(DomainCase::PuncturedAtOne);
    }
    if c < E {
        return Ok(DomainCase::WholeLine);
    }
    let h = move |u: f64| timelike_positivity(u, c);
    let u1 = find_root(h, 0.0, 1.0, ROOT_TOL)?;
    let mut hi = 4.0;
    while h(hi) <= 0.0 {
        hi *= 2.0;
        if hi > 1e9 {
            return Err(Error::NoSignChange { lo: 1.0, hi });
        }
    }
    let u2 = find_root(h, 1.0, hi, ROOT_TOL)?;
    Ok(DomainCase::ThreeIntervals { u1, u2 })
}

impl DomainCase {
    /// Connected components of the positivity set, ordered left to right.
    /// Infinite endpoints mark unbounded components.
    pub fn components(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        match *self {
            DomainCase::WholeLine => out.push((f64::NEG_INFINITY, f64::INFINITY)),
            DomainCase::PuncturedAtOne => {
                out.push((f64::NEG_INFINITY, -1.0));
                out.push((-1.0, 1.0));
                out.push((1.0, f64::INFINITY));
            }
            DomainCase::ThreeIntervals { u1, u2 } => {
                out.push((f64::NEG_INFINITY, -u2));
                out.push((-u1, u1));
                out.push((u2, f64::INFINITY));
            }
        }
        out
    }
}

fn snap(x: f64, target: f64) -> f64 {
    if (x - target).abs() <= ROOT_SNAP * target.abs().max(1.0) {
        target
    } else {
        x
    }
}

/// Component of the positivity set whose closure contains `x`, after
/// snapping near-root values onto the root. Returns (lo, hi, lo_is_simple_root,
/// hi_is_simple_root).
fn resolve_component(case: &DomainCase, x: f64) -> Result<(f64, f64, bool, bool)> {
    match *case {
        DomainCase::WholeLine => Ok((f64::NEG_INFINITY, f64::INFINITY, false, false)),
        DomainCase::PuncturedAtOne => {
            // The roots at ±1 are double: the height integral diverges there.
            if snap(x, 1.0) == 1.0 || snap(x, -1.0) == -1.0 {
                return Err(Error::DivergentBasePoint { u0: x });
            }
            if x < -1.0 {
                Ok((f64::NEG_INFINITY, -1.0, false, false))
            } else if x < 1.0 {
                Ok((-1.0, 1.0, false, false))
            } else {
                Ok((1.0, f64::INFINITY, false, false))
            }
        }
        DomainCase::ThreeIntervals { u1, u2 } => {
            let mut x = x;
            for root in [-u2, -u1, u1, u2] {
                x = snap(x, root);
            }
            if x <= -u2 {
                Ok((f64::NEG_INFINITY, -u2, false, true))
            } else if (-u1..=u1).contains(&x) {
                Ok((-u1, u1, true, true))
            } else if x >= u2 {
                Ok((u2, f64::INFINITY, true, false))
            } else {
                Err(Error::OutsideDomain { u: x })
            }
        }
    }
}

/// Height of the timelike generatrix: ∫_{u₀}^{u} √(e^{τ²}/(e^{τ²}−Cτ²)) dτ.
///
/// Both endpoints must lie in the closure of one connected component of the
/// positivity set. A simple root (C > e) is admissible as an endpoint and is
/// handled by singularity-flagged quadrature; the double roots at ±1 for
/// C = e are not (the integral diverges there).
pub fn timelike_height(u: f64, c: f64, u0: f64) -> Result<f64> {
    let case = domain_case(c)?;
    let (clo, chi, lo_root, hi_root) = resolve_component(&case, u0)?;
    let (xlo, xhi, xlo_root, xhi_root) = resolve_component(&case, u)?;
    if (clo, chi) != (xlo, xhi) {
        return Err(Error::ExcludedInterval {
            lo: u0.min(u),
            hi: u0.max(u),
        });
    }
    let _ = (xlo_root, xhi_root);

    let a = snap_to_roots(&case, u0.min(u));
    let b = snap_to_roots(&case, u0.max(u));
    if a == b {
        return Ok(0.0);
    }
    let f = timelike_integrand(c);
    let sing_lo = lo_root && a == clo;
    let sing_hi = hi_root && b == chi;
    let value = if sing_lo && sing_hi {
        // Both ends touch a root; split in the middle so each piece carries
        // a single flagged endpoint.
        let mid = 0.5 * (a + b);
        integrate(&f, a, mid, HEIGHT_TOL, SingularEnd::Lower)?.value
            + integrate(&f, mid, b, HEIGHT_TOL, SingularEnd::Upper)?.value
    } else if sing_lo {
        integrate(&f, a, b, HEIGHT_TOL, SingularEnd::Lower)?.value
    } else if sing_hi {
        integrate(&f, a, b, HEIGHT_TOL, SingularEnd::Upper)?.value
    } else {
        integrate(&f, a, b, HEIGHT_TOL, SingularEnd::None)?.value
    };
    Ok(if u >= u0 { value } else { -value })
}

fn snap_to_roots(case: &DomainCase, x: f64) -> f64 {
    match *case {
        DomainCase::ThreeIntervals { u1, u2 } => {
            let mut x = x;
            for root in [-u2, -u1, u1, u2] {
                x = snap(x, root);
            }
            x
        }
        _ => x,
    }
}

/// Root-and-integral row (C, u₁, u₂, I₁, I₂) for C > e.
///
/// I₁ = ∫₀^{u₁}, I₂ = ∫_{u₂}^{4} of the timelike integrand, both with the
/// root endpoint flagged as an inverse-square-root singularity.
pub fn table_row(c: f64) -> Result<TableRow> {
    let (u1, u2) = match domain_case(c)? {
        DomainCase::ThreeIntervals { u1, u2 } => (u1, u2),
        _ => {
            return Err(Error::InvalidConstant {
                c,
                reason: "table rows require C > e",
            })
        }
    };
    if u2 >= TABLE_UPPER_LIMIT {
        return Err(Error::InvalidInterval {
            lo: u2,
            hi: TABLE_UPPER_LIMIT,
        });
    }
    let f = timelike_integrand(c);
    let i1 = integrate(&f, 0.0, u1, TABLE_TOL, SingularEnd::Upper)?.value;
    let i2 = integrate(&f, u2, TABLE_UPPER_LIMIT, TABLE_TOL, SingularEnd::Lower)?.value;
    Ok(TableRow { c, u1, u2, i1, i2 })
}

/// ∫₀^{1−ε} of the timelike integrand at C = e.
///
/// Strictly decreasing in ε and unbounded as ε → 0: the root of the
/// denominator at u = 1 is double, so the integrand behaves like
/// 1/(√2 (1−τ)) and the integral grows as ln(1/ε).
pub fn divergence_probe(eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidConstant {
            c: eps,
            reason: "probe offset must lie in (0, 1)",
        });
    }
    Ok(integrate(timelike_integrand(E), 0.0, 1.0 - eps, 1e-10, SingularEnd::None)?.value)
}

/// Residual of the defining generatrix equation at (g', g'', u).
///
/// Spacelike family: (1−g'²)g' + u g'' + u² g'(1−g'²).
/// Timelike family:  u g'' + g'(1−g'²) + u² g'(g'²−1).
pub fn ode_residual(kind: CatenoidKind, gprime: f64, gsecond: f64, u: f64) -> f64 {
    let p = gprime;
    let s = gsecond;
    let q = 1.0 - p * p;
    match kind {
        CatenoidKind::Spacelike => q * p + u * s + u * u * p * q,
        CatenoidKind::Timelike => u * s + p * q - u * u * p * q,
    }
}

/// H of the z-axis revolution (u cos v, u sin v, g(u)) of a spacelike graph
/// (|g'| < 1), under the X_u ∧ X_v orientation.
pub fn spacelike_revolution_h(gprime: f64, gsecond: f64, u: f64) -> f64 {
    let q = 1.0 - gprime * gprime;
    -(q * gprime + u * gsecond) / (2.0 * u * q.powf(1.5))
}

/// ⟨∇f, N⟩ of the same spacelike revolution: −u g'/√(1−g'²).
pub fn spacelike_revolution_pairing(gprime: f64, u: f64) -> f64 {
    -u * gprime / (1.0 - gprime * gprime).sqrt()
}

/// H of the z-axis revolution (u sin v, u cos v, g(u)) of a timelike graph
/// (|g'| > 1), under the X_u ∧ X_v orientation.
pub fn timelike_revolution_h(gprime: f64, gsecond: f64, u: f64) -> f64 {
    let q = 1.0 - gprime * gprime;
    -(q * gprime + u * gsecond) / (2.0 * u * q * (gprime * gprime - 1.0).sqrt())
}

/// ⟨∇f, N⟩ of the same timelike revolution: u g'/√(g'²−1).
pub fn timelike_revolution_pairing(gprime: f64, u: f64) -> f64 {
    u * gprime / (gprime * gprime - 1.0).sqrt()
}

/// A solved generatrix of an f-Catenoid: family, integration constant C,
/// base point u₀, branch sign, and its open interval of validity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratrixProfile {
    kind: CatenoidKind,
    c: f64,
    u0: f64,
    vertical_offset: f64,
    sign: f64,
    interval: (f64, f64),
}

impl GeneratrixProfile {
    /// Spacelike family: defined on all of R with base point u₀ = 0.
    pub fn spacelike(c: f64) -> Self {
        GeneratrixProfile {
            kind: CatenoidKind::Spacelike,
            c,
            u0: 0.0,
            vertical_offset: 0.0,
            sign: 1.0,
            interval: (f64::NEG_INFINITY, f64::INFINITY),
        }
    }

    /// Timelike family on the connected component of {e^{u²} − Cu² > 0}
    /// containing `u0`.
    ///
    /// For C > e the component boundaries are simple roots and `u0` may sit
    /// on one of them; for C = e the roots are double and the height
    /// integral diverges there, so `u0 = ±1` is rejected.
    pub fn timelike(c: f64, u0: f64) -> Result<Self> {
        let case = domain_case(c)?;
        let (lo, hi, _, _) = resolve_component(&case, u0)?;
        Ok(GeneratrixProfile {
            kind: CatenoidKind::Timelike,
            c,
            u0: snap_to_roots(&case, u0),
            vertical_offset: 0.0,
            sign: 1.0,
            interval: (lo, hi),
        })
    }

    /// The opposite branch of g'. Both branches generate the same surface,
    /// mirrored through z ↦ −z.
    pub fn mirrored(mut self) -> Self {
        self.sign = -self.sign;
        self
    }

    /// Vertical offset B of the revolved surface (timelike family).
    pub fn with_vertical_offset(mut self, b: f64) -> Self {
        self.vertical_offset = b;
        self
    }

    pub fn kind(&self) -> CatenoidKind {
        self.kind
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn u0(&self) -> f64 {
        self.u0
    }

    pub fn sign(&self) -> f64 {
        self.sign
    }

    pub fn vertical_offset(&self) -> f64 {
        self.vertical_offset
    }

    /// Open interval of validity (unbounded ends are ±∞).
    pub fn interval(&self) -> (f64, f64) {
        self.interval
    }

    fn check_interior(&self, u: f64) -> Result<()> {
        if u > self.interval.0 && u < self.interval.1 {
            Ok(())
        } else {
            Err(Error::OutsideDomain { u })
        }
    }

    /// Closed-form g'(u).
    pub fn gprime(&self, u: f64) -> Result<f64> {
        match self.kind {
            CatenoidKind::Spacelike => Ok(spacelike_gprime(u, self.c, self.sign)),
            CatenoidKind::Timelike => {
                self.check_interior(u)?;
                timelike_gprime(u, self.c, self.sign)
            }
        }
    }

    /// Closed-form g''(u), obtained by differentiating g' analytically.
    pub fn gsecond(&self, u: f64) -> Result<f64> {
        match self.kind {
            CatenoidKind::Spacelike => {
                let d = 1.0 + u * u * (u * u + self.c).exp();
                Ok(-self.sign * u * (1.0 + u * u) * (u * u + self.c).exp() / d.powf(1.5))
            }
            CatenoidKind::Timelike => {
                self.check_interior(u)?;
                let h = timelike_positivity(u, self.c);
                if h <= 0.0 {
                    return Err(Error::OutsideDomain { u });
                }
                Ok(self.sign * u * self.c * (1.0 - u * u) * (0.5 * u * u).exp() / h.powf(1.5))
            }
        }
    }

    /// g(u) = sign · ∫_{u₀}^{u} of the family integrand.
    pub fn height(&self, u: f64) -> Result<f64> {
        match self.kind {
            CatenoidKind::Spacelike => Ok(self.sign * spacelike_height(u, self.c)?),
            CatenoidKind::Timelike => Ok(self.sign * timelike_height(u, self.c, self.u0)?),
        }
    }

    /// Heights at a strictly increasing grid of u values, computed as one
    /// cumulative sweep: the integrand is traversed once, so meshing is O(N)
    /// rather than O(N²).
    pub fn heights_on_grid(&self, grid: &[f64]) -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(grid.len());
        let Some(&first) = grid.first() else {
            return Ok(out);
        };
        let mut acc = self.height(first)?;
        out.push(acc);
        let f: Box<dyn Fn(f64) -> f64> = match self.kind {
            CatenoidKind::Spacelike => Box::new(spacelike_integrand(self.c)),
            CatenoidKind::Timelike => Box::new(timelike_integrand(self.c)),
        };
        for pair in grid.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if !(a < b) {
                return Err(Error::InvalidInterval { lo: a, hi: b });
            }
            acc += self.sign * integrate(&f, a, b, HEIGHT_TOL, SingularEnd::None)?.value;
            out.push(acc);
        }
        Ok(out)
    }
}

/// Resolution of the cumulative height table behind a revolved surface.
const HEIGHT_PANELS: usize = 1024;

/// Surface of revolution of a profile about the z-axis.
///
/// Spacelike family: X(u, v) = (u cos v, u sin v, g(u)).
/// Timelike family:  X(u, v) = (u sin v, u cos v, g(u) + B).
///
/// `u_range` clips the profile's natural component (unbounded ends default
/// to ±`DEFAULT_SPAN_CAP`); endpoints that touch a finite component boundary
/// are pulled inward by the `EDGE_MARGIN` fraction of the span, since g'
/// degenerates there. Heights are served from a cumulative quadrature table
/// built at construction, so evaluation stays cheap and the surface is
/// safely shareable across threads.
pub fn make_surface(
    profile: &GeneratrixProfile,
    u_range: Option<(f64, f64)>,
) -> Result<ParametricSurface> {
    let (ilo, ihi) = profile.interval;
    let (rlo, rhi) = u_range.unwrap_or((ilo, ihi));
    let mut lo = rlo.max(ilo);
    let mut hi = rhi.min(ihi);
    if lo.is_infinite() {
        lo = -DEFAULT_SPAN_CAP;
    }
    if hi.is_infinite() {
        hi = DEFAULT_SPAN_CAP;
    }
    if !(lo < hi) {
        return Err(Error::EmptyInterval);
    }
    let margin = EDGE_MARGIN * (hi - lo);
    if ilo.is_finite() && lo - ilo < margin {
        lo = ilo + margin;
    }
    if ihi.is_finite() && ihi - hi < margin {
        hi = ihi - margin;
    }
    if !(lo < hi) {
        return Err(Error::EmptyInterval);
    }

    let step = (hi - lo) / HEIGHT_PANELS as f64;
    let grid: Vec<f64> = (0..=HEIGHT_PANELS).map(|i| lo + step * i as f64).collect();
    let heights = profile.heights_on_grid(&grid)?;

    let kind = profile.kind;
    let c = profile.c;
    let sign = profile.sign;
    let offset = match kind {
        CatenoidKind::Spacelike => 0.0,
        CatenoidKind::Timelike => profile.vertical_offset,
    };

    let integrand: Box<dyn Fn(f64) -> f64 + Send + Sync> = match kind {
        CatenoidKind::Spacelike => Box::new(spacelike_integrand(c)),
        CatenoidKind::Timelike => Box::new(timelike_integrand(c)),
    };
    let g_at = move |u: f64| -> f64 {
        let idx = (((u - lo) / step) as usize).min(HEIGHT_PANELS - 1);
        let base = lo + step * idx as f64;
        if u <= base {
            return heights[idx];
        }
        let tail = match integrate(&integrand, base, u, 1e-13, SingularEnd::None) {
            Ok(r) => r.value,
            Err(Error::NonConvergence { value, .. }) => value,
            Err(_) => f64::NAN,
        };
        heights[idx] + sign * tail
    };

    let gp = move |u: f64| -> f64 {
        match kind {
            CatenoidKind::Spacelike => spacelike_gprime(u, c, sign),
            CatenoidKind::Timelike => timelike_gprime(u, c, sign).unwrap_or(f64::NAN),
        }
    };
    let gs = {
        let p = *profile;
        move |u: f64| -> f64 { p.gsecond(u).unwrap_or(f64::NAN) }
    };

    let position: Box<dyn Fn(f64, f64) -> LVec3 + Send + Sync> = match kind {
        CatenoidKind::Spacelike => Box::new(move |u, v| {
            LVec3::new(u * v.cos(), u * v.sin(), g_at(u) + offset)
        }),
        CatenoidKind::Timelike => Box::new(move |u, v| {
            LVec3::new(u * v.sin(), u * v.cos(), g_at(u) + offset)
        }),
    };

    let partials = match kind {
        CatenoidKind::Spacelike => AnalyticPartials {
            xu: Box::new(move |u, v| LVec3::new(v.cos(), v.sin(), gp(u))),
            xv: Box::new(|u, v| LVec3::new(-u * v.sin(), u * v.cos(), 0.0)),
            xuu: Box::new(move |u, _| LVec3::new(0.0, 0.0, gs(u))),
            xuv: Box::new(|_, v| LVec3::new(-v.sin(), v.cos(), 0.0)),
            xvv: Box::new(|u, v| LVec3::new(-u * v.cos(), -u * v.sin(), 0.0)),
        },
        CatenoidKind::Timelike => AnalyticPartials {
            xu: Box::new(move |u, v| LVec3::new(v.sin(), v.cos(), gp(u))),
            xv: Box::new(|u, v| LVec3::new(u * v.cos(), -u * v.sin(), 0.0)),
            xuu: Box::new(move |u, _| LVec3::new(0.0, 0.0, gs(u))),
            xuv: Box::new(|_, v| LVec3::new(v.cos(), -v.sin(), 0.0)),
            xvv: Box::new(|u, v| LVec3::new(-u * v.sin(), -u * v.cos(), 0.0)),
        },
    };

    Ok(ParametricSurface::from_fn((lo, hi), (0.0, TAU), move |u, v| position(u, v))
        .with_partials(partials))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::CausalType;
    use crate::numerics::{diff, DiffOrder};

    const E: f64 = core::f64::consts::E;

    #[test]
    fn spacelike_gprime_examples() {
        assert_eq!(spacelike_gprime(0.0, 3.0, 1.0), 1.0);
        assert_eq!(spacelike_gprime(0.0, -1.0, -1.0), -1.0);
        assert!(spacelike_gprime(40.0, 0.0, 1.0).abs() < 1e-10);
        let expected = 1.0 / (1.0 + E).sqrt();
        assert!((spacelike_gprime(1.0, 0.0, 1.0) - expected).abs() < 1e-15);
    }

    #[test]
    fn spacelike_height_is_odd_and_anchored() {
        assert_eq!(spacelike_height(0.0, 0.7).unwrap(), 0.0);
        for u in [0.4, 1.3, 2.8] {
            let plus = spacelike_height(u, 0.0).unwrap();
            let minus = spacelike_height(-u, 0.0).unwrap();
            assert!((plus + minus).abs() < 1e-12, "u = {u}");
            assert!(plus > 0.0 && plus <= u); // 1-Lipschitz
        }
    }

    #[test]
    fn spacelike_height_matches_independent_composite_rule() {
        // Oracle: composite 3-point Gauss-Legendre on 4096 panels.
        let f = spacelike_integrand(0.0);
        let (a, b) = (0.0, 1.0);
        let n = 4096;
        let h = (b - a) / n as f64;
        let x1 = (0.6f64).sqrt();
        let mut oracle = 0.0;
        for i in 0..n {
            let c = a + (i as f64 + 0.5) * h;
            oracle += h / 18.0 * (5.0 * f(c - 0.5 * h * x1) + 8.0 * f(c) + 5.0 * f(c + 0.5 * h * x1));
        }
        let adaptive = spacelike_height(1.0, 0.0).unwrap();
        assert!(
            (adaptive - oracle).abs() < 1e-10,
            "{adaptive} vs oracle {oracle}"
        );
        // Frozen from an independent high-precision evaluation.
        assert!((adaptive - 0.8307238869200885).abs() < 1e-10);
    }

    #[test]
    fn domain_case_trichotomy() {
        assert_eq!(domain_case(0.5).unwrap(), DomainCase::WholeLine);
        assert_eq!(domain_case(E).unwrap(), DomainCase::PuncturedAtOne);
        match domain_case(3.1).unwrap() {
            DomainCase::ThreeIntervals { u1, u2 } => {
                assert!((u1 - 0.7556136794).abs() < 1e-9);
                assert!((u2 - 1.266389104).abs() < 1e-9);
            }
            other => panic!("expected ThreeIntervals, got {other:?}"),
        }
        assert!(matches!(
            domain_case(0.0),
            Err(Error::InvalidConstant { .. })
        ));
        assert!(matches!(
            domain_case(-2.0),
            Err(Error::InvalidConstant { .. })
        ));
    }

    #[test]
    fn domain_roots_satisfy_the_defining_equation() {
        for c in [2.72, 3.1, 10.0, 500.0] {
            let DomainCase::ThreeIntervals { u1, u2 } = domain_case(c).unwrap() else {
                panic!("C = {c} should give three intervals");
            };
            for r in [u1, u2] {
                let lhs = (r * r).exp();
                let rhs = c * r * r;
                assert!(
                    (lhs - rhs).abs() <= 1e-10 * rhs,
                    "C = {c}, root {r}: residual {}",
                    lhs - rhs
                );
            }
        }
    }

    #[test]
    fn timelike_gprime_examples() {
        assert_eq!(timelike_gprime(0.0, 1.0, 1.0).unwrap(), 1.0);
        assert_eq!(timelike_gprime(0.0, 2.5, -1.0).unwrap(), -1.0);
        let expected = (E / (E - 1.0)).sqrt();
        assert!((timelike_gprime(1.0, 1.0, 1.0).unwrap() - expected).abs() < 1e-14);
        // At a root of the denominator the derivative diverges.
        let DomainCase::ThreeIntervals { u1, .. } = domain_case(3.1).unwrap() else {
            unreachable!()
        };
        assert!(matches!(
            timelike_gprime(u1, 3.1, 1.0),
            Err(Error::OutsideDomain { .. })
        ));
    }

    #[test]
    fn timelike_height_examples() {
        assert_eq!(timelike_height(0.7, 1.0, 0.7).unwrap(), 0.0);
        // I1-style and I2-style golden values.
        let DomainCase::ThreeIntervals { u1, .. } = domain_case(2.75).unwrap() else {
            unreachable!()
        };
        let i1 = timelike_height(u1, 2.75, 0.0).unwrap();
        assert!((i1 - 2.363204279).abs() < 1e-5 * 2.363204279, "I1 = {i1}");

        let DomainCase::ThreeIntervals { u2, .. } = domain_case(100.0).unwrap() else {
            unreachable!()
        };
        let i2 = timelike_height(4.0, 100.0, u2).unwrap();
        assert!((i2 - 1.762485425).abs() < 1e-5 * 1.762485425, "I2 = {i2}");
    }

    #[test]
    fn timelike_height_rejects_crossings_and_divergent_bases() {
        // Crossing the excluded band for C > e.
        assert!(matches!(
            timelike_height(1.0, 3.1, 0.0),
            Err(Error::OutsideDomain { .. })
        ));
        assert!(matches!(
            timelike_height(2.0, 3.1, 0.5),
            Err(Error::ExcludedInterval { .. })
        ));
        // C = e: the double root is not an admissible endpoint.
        assert!(matches!(
            timelike_height(1.0, E, 0.0),
            Err(Error::DivergentBasePoint { .. })
        ));
    }

    #[test]
    fn timelike_height_is_antisymmetric_in_its_limits() {
        let fwd = timelike_height(0.6, 2.0, 0.1).unwrap();
        let back = timelike_height(0.1, 2.0, 0.6).unwrap();
        assert!((fwd + back).abs() < 1e-12);
        assert!(fwd > 0.0);
    }

    #[test]
    fn table_row_golden_values() {
        let row = table_row(2.75).unwrap();
        assert!((row.u1 - 0.9248309636).abs() < 1e-8);
        assert!((row.u2 - 1.077103331).abs() < 1e-8);
        assert!((row.i1 - 2.363204279).abs() < 1e-5 * row.i1);
        assert!((row.i2 - 4.598285949).abs() < 1e-5 * row.i2);

        let row = table_row(10.0).unwrap();
        assert!((row.u1 - 0.3344137545).abs() < 1e-8);
        assert!((row.u2 - 1.891336053).abs() < 1e-8);
        assert!((row.i1 - 0.5412131026).abs() < 1e-5 * row.i1);
        assert!((row.i2 - 2.565108172).abs() < 1e-5 * row.i2);

        let row = table_row(500.0).unwrap();
        assert!((row.u1 - 0.04476619308).abs() < 1e-8);
        assert!((row.u2 - 2.887054100).abs() < 1e-8);
        assert!((row.i1 - 0.07035385008).abs() < 1e-5 * row.i1);
        assert!((row.i2 - 1.375955282).abs() < 1e-5 * row.i2);

        assert!(table_row(1.0).is_err());
        assert!(table_row(E).is_err());
    }

    #[test]
    fn divergence_probe_grows_logarithmically() {
        let p2 = divergence_probe(1e-2).unwrap();
        let p3 = divergence_probe(1e-3).unwrap();
        let p4 = divergence_probe(1e-4).unwrap();
        assert!(p2 < p3 && p3 < p4);
        let d1 = p3 - p2;
        let d2 = p4 - p3;
        assert!(
            (d1 - d2).abs() < 0.1 * d1,
            "decade increments {d1} vs {d2}"
        );
        assert!(p2.is_finite() && p4.is_finite());
    }

    #[test]
    fn ode_residual_vanishes_for_constant_g() {
        assert_eq!(ode_residual(CatenoidKind::Spacelike, 0.0, 0.0, 1.7), 0.0);
        assert_eq!(ode_residual(CatenoidKind::Timelike, 0.0, 0.0, -0.4), 0.0);
    }

    #[test]
    fn closed_forms_satisfy_their_equations() {
        let p = GeneratrixProfile::spacelike(1.3);
        let (u, _) = (0.7, ());
        let r = ode_residual(
            CatenoidKind::Spacelike,
            p.gprime(u).unwrap(),
            p.gsecond(u).unwrap(),
            u,
        );
        assert!(r.abs() < 1e-10, "spacelike residual {r}");

        let p = GeneratrixProfile::timelike(2.0, 0.0).unwrap();
        let u = 0.5;
        let r = ode_residual(
            CatenoidKind::Timelike,
            p.gprime(u).unwrap(),
            p.gsecond(u).unwrap(),
            u,
        );
        assert!(r.abs() < 1e-10, "timelike residual {r}");
    }

    #[test]
    fn gsecond_matches_finite_differences() {
        let p = GeneratrixProfile::spacelike(0.4);
        let fd = diff(
            |u| p.gprime(u).unwrap(),
            0.9,
            DiffOrder::First,
            1.0,
        );
        assert!((p.gsecond(0.9).unwrap() - fd).abs() < 1e-9);

        let p = GeneratrixProfile::timelike(1.5, 0.0).unwrap().mirrored();
        let fd = diff(|u| p.gprime(u).unwrap(), 0.3, DiffOrder::First, 1.0);
        assert!((p.gsecond(0.3).unwrap() - fd).abs() < 1e-9);
    }

    #[test]
    fn mirrored_branches_generate_mirror_surfaces() {
        let plus = GeneratrixProfile::spacelike(0.0);
        let minus = plus.mirrored();
        for u in [0.3, 1.1, 2.4] {
            let a = plus.height(u).unwrap();
            let b = minus.height(u).unwrap();
            assert!((a + b).abs() < 1e-12);
        }
    }

    #[test]
    fn make_surface_causal_types() {
        let s = make_surface(&GeneratrixProfile::spacelike(0.0), Some((0.05, 2.0))).unwrap();
        let (_, causal) = s.unit_normal(1.0, 0.3).unwrap();
        assert_eq!(causal, CausalType::Timelike); // spacelike surface

        let p = GeneratrixProfile::timelike(1.0, 0.0).unwrap();
        let s = make_surface(&p, Some((0.05, 2.0))).unwrap();
        let (_, causal) = s.unit_normal(0.5, 1.0).unwrap();
        assert_eq!(causal, CausalType::Spacelike); // timelike surface
    }

    #[test]
    fn make_surface_degenerates_at_the_origin() {
        let s = make_surface(&GeneratrixProfile::spacelike(0.0), Some((-1.0, 1.0))).unwrap();
        assert!(matches!(
            s.unit_normal(0.0, 0.3),
            Err(Error::DegeneratePoint { .. })
        ));
    }

    #[test]
    fn make_surface_applies_edge_margins() {
        let p = GeneratrixProfile::timelike(3.1, 0.0).unwrap();
        let (ilo, ihi) = p.interval();
        let s = make_surface(&p, None).unwrap();
        let (lo, hi) = s.u_range();
        assert!(lo > ilo && hi < ihi);
        // The margined surface evaluates cleanly at its own boundary.
        assert!(s.f_mean_curvature(hi, 0.7).unwrap().abs() < 1e-6);
    }

    #[test]
    fn make_surface_rejects_empty_ranges() {
        let p = GeneratrixProfile::spacelike(0.0);
        assert!(matches!(
            make_surface(&p, Some((2.0, 2.0))),
            Err(Error::EmptyInterval)
        ));
    }

    #[test]
    fn surface_positions_match_direct_heights() {
        let p = GeneratrixProfile::timelike(2.75, 0.0).unwrap();
        let s = make_surface(&p, None).unwrap();
        let (lo, hi) = s.u_range();
        for t in [0.0, 0.37, 0.5, 0.93, 1.0] {
            let u = lo + t * (hi - lo);
            let z = s.position(u, 0.0).z;
            let direct = p.height(u).unwrap();
            assert!((z - direct).abs() < 1e-9, "u = {u}: {z} vs {direct}");
        }
    }

    #[test]
    fn f_mean_curvature_vanishes_on_both_families() {
        let configs: [(GeneratrixProfile, Option<(f64, f64)>); 3] = [
            (GeneratrixProfile::spacelike(0.0), Some((0.05, 2.0))),
            (
                GeneratrixProfile::timelike(1.0, 0.0).unwrap(),
                Some((0.05, 2.0)),
            ),
            (GeneratrixProfile::timelike(3.1, 0.0).unwrap(), None),
        ];
        for (profile, range) in configs {
            let s = make_surface(&profile, range).unwrap();
            let (lo, hi) = s.u_range();
            for i in 0..8 {
                let u = lo + (hi - lo) * (i as f64 + 0.5) / 8.0;
                for v in [0.0, 1.9, 4.4] {
                    let hf = s.f_mean_curvature(u, v).unwrap();
                    assert!(
                        hf.abs() <= 1e-6,
                        "{:?} C={} at ({u}, {v}): H_f = {hf}",
                        profile.kind(),
                        profile.c()
                    );
                }
            }
        }
    }
}
