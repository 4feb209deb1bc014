use core::fmt;

/// Errors produced by the geometry and numerics kernels.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Causal classification of the zero vector is undefined.
    ZeroVector,
    /// Quadrature did not reach the requested tolerance within the evaluation
    /// budget; carries the best estimate obtained.
    NonConvergence {
        value: f64,
        error_estimate: f64,
        evaluations: usize,
    },
    /// The integrand or objective returned NaN.
    NanEncountered { at: f64 },
    /// Root bracketing failed: no sign change over `[lo, hi]`.
    NoSignChange { lo: f64, hi: f64 },
    /// Unusable interval bounds (`lo >= hi`, or non-finite).
    InvalidInterval { lo: f64, hi: f64 },
    /// Tangent vectors are linearly dependent at `(u, v)`.
    DegeneratePoint { u: f64, v: f64 },
    /// The normal direction is lightlike at `(u, v)`: the induced metric is
    /// degenerate and no unit normal exists.
    LightlikeNormal { u: f64, v: f64 },
    /// A constant outside its admissible range.
    InvalidConstant { c: f64, reason: &'static str },
    /// Evaluation point outside the validity domain of the generatrix.
    OutsideDomain { u: f64 },
    /// The requested interval crosses the excluded set of the generatrix.
    ExcludedInterval { lo: f64, hi: f64 },
    /// Base point at which the generatrix integral diverges.
    DivergentBasePoint { u0: f64 },
    /// Interval left empty after applying edge margins.
    EmptyInterval,
    /// Generatrix violates the causality constraint of the requested family.
    CausalityMismatch { u: f64 },
    /// A random sweep could not draw an admissible configuration within its
    /// redraw budget.
    RedrawBudget,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroVector => write!(f, "causal type of the zero vector is undefined"),
            Error::NonConvergence {
                value,
                error_estimate,
                evaluations,
            } => write!(
                f,
                "quadrature did not converge after {evaluations} evaluations \
                 (best estimate {value} ± {error_estimate})"
            ),
            Error::NanEncountered { at } => write!(f, "function returned NaN at {at}"),
            Error::NoSignChange { lo, hi } => {
                write!(f, "no sign change over [{lo}, {hi}]")
            }
            Error::InvalidInterval { lo, hi } => write!(f, "invalid interval [{lo}, {hi}]"),
            Error::DegeneratePoint { u, v } => {
                write!(f, "degenerate tangent plane at (u, v) = ({u}, {v})")
            }
            Error::LightlikeNormal { u, v } => {
                write!(f, "lightlike normal at (u, v) = ({u}, {v})")
            }
            Error::InvalidConstant { c, reason } => write!(f, "invalid constant {c}: {reason}"),
            Error::OutsideDomain { u } => {
                write!(f, "u = {u} lies outside the generatrix domain")
            }
            Error::ExcludedInterval { lo, hi } => {
                write!(f, "[{lo}, {hi}] crosses the excluded set of the generatrix")
            }
            Error::DivergentBasePoint { u0 } => {
                write!(f, "the generatrix integral diverges at base point u0 = {u0}")
            }
            Error::EmptyInterval => write!(f, "interval is empty after edge margins"),
            Error::CausalityMismatch { u } => write!(
                f,
                "generatrix violates the causality constraint of the family at u = {u}"
            ),
            Error::RedrawBudget => write!(f, "redraw budget exhausted"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
