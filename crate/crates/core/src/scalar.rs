//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real floating-point type the gate algebra is generic over (`f32` or `f64`).
///
/// The associated tolerances scale with the precision of the type so that the
/// same code paths can run in single precision with looser acceptance bands.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Maximum entrywise deviation of `M†M` from the identity for a unitary.
    const UNITARITY_TOL: f64;
    /// Tolerance for algebraic identities that should hold to rounding error.
    const IDENTITY_TOL: f64;
    /// Tolerance on eigenvalue moduli and eigenphase comparisons.
    const EIGEN_TOL: f64;

    /// Converts an `f64` literal into this scalar type.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const UNITARITY_TOL: f64 = 1e-10;
    const IDENTITY_TOL: f64 = 1e-12;
    const EIGEN_TOL: f64 = 1e-9;
}

impl Real for f32 {
    const UNITARITY_TOL: f64 = 1e-4;
    const IDENTITY_TOL: f64 = 1e-5;
    const EIGEN_TOL: f64 = 1e-4;
}
