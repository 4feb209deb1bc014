//! Reusable numerical kernels: adaptive Gauss–Kronrod quadrature with
//! inverse-square-root endpoint handling, Brent root bracketing, and
//! high-order central finite differences.

mod diff;
mod quadrature;
mod roots;

pub use diff::{diff, DiffOrder};
pub use quadrature::{integrate, QuadratureResult, SingularEnd, EVALUATION_BUDGET};
pub use roots::{find_root, DEFAULT_ROOT_TOL};
