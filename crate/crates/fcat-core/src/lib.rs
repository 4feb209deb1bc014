//! Zero weighted-mean-curvature surfaces of revolution in Minkowski 3-space
//! with the Gaussian-Euclidean density e^{-f} = (1/2π) e^{-(x²+y²)/2}.
//!
//! The crate provides the Lorentzian linear algebra of R³₁, numerical kernels
//! (adaptive quadrature with endpoint-singularity handling, bracketed root
//! finding, finite differences), a generic parametric-surface pipeline for
//! mean curvature and the density pairing ⟨∇f, N⟩, the two f-Catenoid
//! generatrix families, and randomized verification sweeps for the
//! classification of rotational surfaces with H_f ≡ 0.
//!
//! The core is `no_std` (with `alloc`); IO, file formats, and the CLI live in
//! the companion `fcat` crate.

#![no_std]

#[cfg(test)]
extern crate std;

extern crate alloc;

pub mod error;
pub mod minkowski;
pub mod numerics;
pub mod profiles;
pub mod surfaces;
pub mod verify;

pub use error::{Error, Result};
