use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix4;
use crate::scalar::Real;

/// A validated two-qubit unitary together with a human-readable label.
///
/// Global phase is not normalized away; every characterization routine is
/// insensitive to it.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoQubitGate<T> {
    name: String,
    matrix: Matrix4<T>,
}

impl<T: Real> TwoQubitGate<T> {
    /// Wraps `matrix`, checking unitarity at the scalar type's default tolerance.
    pub fn new(name: impl Into<String>, matrix: Matrix4<T>) -> Result<Self> {
        Self::with_tolerance(name, matrix, T::lit(T::UNITARITY_TOL))
    }

    pub fn with_tolerance(name: impl Into<String>, matrix: Matrix4<T>, tol: T) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::Precondition("gate matrix has non-finite entries".into()));
        }
        let defect = matrix.unitarity_defect();
        if defect.is_nan() || defect > tol {
            return Err(Error::Precondition(format!(
                "gate matrix is not unitary: max|U†U - I| = {:e} exceeds {:e}",
                defect.as_f64(),
                tol.as_f64()
            )));
        }
        Ok(Self {
            name: name.into(),
            matrix,
        })
    }

    /// For constructors that are unitary by construction.
    pub(crate) fn from_unitary(name: impl Into<String>, matrix: Matrix4<T>) -> Self {
        debug_assert!(matrix.unitarity_defect() <= T::lit(T::UNITARITY_TOL));
        Self {
            name: name.into(),
            matrix,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn matrix(&self) -> &Matrix4<T> {
        &self.matrix
    }

    /// `self` followed by `next` (matrix product `next * self`).
    pub fn then(&self, next: &Self) -> Self {
        Self::from_unitary(
            format!("{}·{}", next.name, self.name),
            next.matrix * self.matrix,
        )
    }
}

impl<T: Real> fmt::Display for TwoQubitGate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}
