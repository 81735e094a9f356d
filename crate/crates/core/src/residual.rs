//! Two-sided values of an identity evaluated numerically.

/// Left and right side of an identity at one point, with a magnitude scale
/// used to normalise the residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    pub lhs: f64,
    pub rhs: f64,
    /// Sum of the magnitudes of the terms that were combined.
    pub scale: f64,
}

impl Residual {
    pub fn new(lhs: f64, rhs: f64, scale: f64) -> Self {
        Residual { lhs, rhs, scale }
    }

    /// Residual whose scale is taken from the two sides.
    pub fn sides(lhs: f64, rhs: f64) -> Self {
        Residual {
            lhs,
            rhs,
            scale: lhs.abs().max(rhs.abs()),
        }
    }

    pub fn value(&self) -> f64 {
        self.lhs - self.rhs
    }

    pub fn abs(&self) -> f64 {
        (self.lhs - self.rhs).abs()
    }

    /// |lhs − rhs| / max(scale, tiny).
    pub fn relative(&self) -> f64 {
        self.abs() / self.scale.max(f64::MIN_POSITIVE)
    }
}
