//! Lorentzian linear algebra on R³₁: the scalar product dx² + dy² − dz²,
//! causal classification, the wedge product, and the three rotation families.

use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Float;

use crate::error::{Error, Result};

/// Relative half-width of the light-cone band: a vector classifies as
/// lightlike when |⟨x,x⟩| ≤ `CAUSAL_TOLERANCE` · ‖x‖²_E.
pub const CAUSAL_TOLERANCE: f64 = 1e-10;

/// A vector of R³₁ with signature (+, +, −).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LVec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Causal character of a nonzero vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CausalType {
    Spacelike,
    Lightlike,
    Timelike,
}

impl LVec3 {
    pub const ZERO: LVec3 = LVec3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    #[inline]
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        LVec3 { x, y, z }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Lorentzian scalar product: x₁x₂ + y₁y₂ − z₁z₂.
    #[inline]
    pub fn lorentz_dot(self, other: LVec3) -> f64 {
        self.x * other.x + self.y * other.y - self.z * other.z
    }

    /// ‖x‖ = √|⟨x,x⟩|; zero exactly for lightlike and zero vectors.
    #[inline]
    pub fn lorentz_norm(self) -> f64 {
        self.lorentz_dot(self).abs().sqrt()
    }

    #[inline]
    pub fn euclidean_norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    #[inline]
    pub fn euclidean_norm(self) -> f64 {
        self.euclidean_norm_sq().sqrt()
    }

    /// Lorentzian vector product, defined so that ⟨c, a∧b⟩ = det(c, a, b)
    /// for every c. Orthogonal (in the Lorentzian sense) to both factors.
    #[inline]
    pub fn wedge(self, other: LVec3) -> LVec3 {
        LVec3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.y * other.x - self.x * other.y,
        }
    }

    /// Causal classification, with a tolerance band around the light cone.
    ///
    /// The zero vector has no causal type and is rejected.
    pub fn causal_type(self) -> Result<CausalType> {
        let e = self.euclidean_norm_sq();
        if e == 0.0 {
            return Err(Error::ZeroVector);
        }
        let s = self.lorentz_dot(self);
        if s.abs() <= CAUSAL_TOLERANCE * e {
            Ok(CausalType::Lightlike)
        } else if s > 0.0 {
            Ok(CausalType::Spacelike)
        } else {
            Ok(CausalType::Timelike)
        }
    }
}

impl Add for LVec3 {
    type Output = LVec3;
    #[inline]
    fn add(self, rhs: LVec3) -> LVec3 {
        LVec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for LVec3 {
    type Output = LVec3;
    #[inline]
    fn sub(self, rhs: LVec3) -> LVec3 {
        LVec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for LVec3 {
    type Output = LVec3;
    #[inline]
    fn neg(self) -> LVec3 {
        LVec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for LVec3 {
    type Output = LVec3;
    #[inline]
    fn mul(self, s: f64) -> LVec3 {
        LVec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<LVec3> for f64 {
    type Output = LVec3;
    #[inline]
    fn mul(self, v: LVec3) -> LVec3 {
        v * self
    }
}

/// 3×3 real matrix acting on column vectors, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LMat3(pub [[f64; 3]; 3]);

impl LMat3 {
    pub const IDENTITY: LMat3 = LMat3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    /// M · v on column vectors.
    #[inline]
    pub fn apply(&self, v: LVec3) -> LVec3 {
        let m = &self.0;
        LVec3 {
            x: m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            y: m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            z: m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
        }
    }

    pub fn det(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }
}

/// The three one-parameter rotation families of R³₁.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RotationAxis {
    /// Hyperbolic rotation about the spacelike y-axis; parameter is a rapidity.
    SpacelikeY,
    /// Parabolic rotation about the lightlike axis x = z, y = 0.
    LightlikeXZ,
    /// Elliptic rotation about the timelike z-axis; parameter is an angle.
    TimelikeZ,
}

/// Rotation matrix of the given family. Preserves the Lorentzian product and
/// fixes the axis pointwise.
pub fn rotation(axis: RotationAxis, param: f64) -> LMat3 {
    match axis {
        RotationAxis::SpacelikeY => {
            let (c, s) = (param.cosh(), param.sinh());
            LMat3([[c, 0.0, s], [0.0, 1.0, 0.0], [s, 0.0, c]])
        }
        RotationAxis::LightlikeXZ => {
            let v = param;
            let h = v * v / 2.0;
            LMat3([[1.0 - h, -v, h], [v, 1.0, -v], [-h, -v, 1.0 + h]])
        }
        RotationAxis::TimelikeZ => {
            let (c, s) = (param.cos(), param.sin());
            LMat3([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
        }
    }
}
