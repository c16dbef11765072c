//! Pure two-qubit states and their entanglement: concurrence and linear entropy.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{kron_vec, Matrix2, Vector};
use crate::scalar::Real;

/// Normalized state `α|00> + β|01> + γ|10> + δ|11>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoQubitPureState<T> {
    amps: Vector<T, 4>,
}

fn norm_sqr<T: Real>(v: &[Complex<T>]) -> T {
    v.iter().map(|z| z.norm_sqr()).sum()
}

fn check_normalized<T: Real>(what: &str, v: &[Complex<T>]) -> Result<()> {
    let n = norm_sqr(v);
    if (n - T::one()).abs() > T::lit(T::UNITARITY_TOL) || !n.is_finite() {
        return Err(Error::Precondition(format!(
            "{what} is not normalized (norm² = {n})"
        )));
    }
    Ok(())
}

impl<T: Real> TwoQubitPureState<T> {
    pub fn new(amps: Vector<T, 4>) -> Result<Self> {
        check_normalized("two-qubit state", &amps)?;
        Ok(Self { amps })
    }

    pub(crate) fn new_unchecked(amps: Vector<T, 4>) -> Self {
        Self { amps }
    }

    pub fn amplitudes(&self) -> &Vector<T, 4> {
        &self.amps
    }

    /// `C = 2|αδ - βγ|`.
    pub fn concurrence(&self) -> T {
        let [a, b, g, d] = self.amps;
        T::lit(2.0) * (a * d - b * g).norm()
    }

    /// Reduced state of qubit 1 (partial trace over qubit 2).
    pub fn reduced_first(&self) -> Matrix2<T> {
        let v = &self.amps;
        Matrix2::from_fn(|i, j| (0..2).map(|k| v[2 * i + k] * v[2 * j + k].conj()).fold(zero(), |a, b| a + b))
    }

    /// Reduced state of qubit 2 (partial trace over qubit 1).
    pub fn reduced_second(&self) -> Matrix2<T> {
        let v = &self.amps;
        Matrix2::from_fn(|i, j| (0..2).map(|k| v[2 * k + i] * v[2 * k + j].conj()).fold(zero(), |a, b| a + b))
    }

    /// `1 - tr(ρ_A²)` with `ρ_A` the reduced state of qubit 1.
    pub fn linear_entropy(&self) -> T {
        let rho = self.reduced_first();
        T::one() - rho.trace_of_product(&rho).re
    }

    /// Same quantity computed from the reduced state of qubit 2.
    pub fn linear_entropy_second(&self) -> T {
        let rho = self.reduced_second();
        T::one() - rho.trace_of_product(&rho).re
    }
}

fn zero<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

/// Product of two single-qubit states `(a|0> + b|1>) ⊗ (e|0> + f|1>)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProductStatePair<T> {
    first: [Complex<T>; 2],
    second: [Complex<T>; 2],
}

impl<T: Real> ProductStatePair<T> {
    pub fn new(a: Complex<T>, b: Complex<T>, e: Complex<T>, f: Complex<T>) -> Result<Self> {
        check_normalized("first qubit", &[a, b])?;
        check_normalized("second qubit", &[e, f])?;
        Ok(Self::new_unchecked(a, b, e, f))
    }

    pub fn from_real(a: T, b: T, e: T, f: T) -> Result<Self> {
        let r = |x| Complex::new(x, T::zero());
        Self::new(r(a), r(b), r(e), r(f))
    }

    pub(crate) fn new_unchecked(a: Complex<T>, b: Complex<T>, e: Complex<T>, f: Complex<T>) -> Self {
        Self {
            first: [a, b],
            second: [e, f],
        }
    }

    /// `(a, b, e, f)`.
    pub fn amplitudes(&self) -> (Complex<T>, Complex<T>, Complex<T>, Complex<T>) {
        (self.first[0], self.first[1], self.second[0], self.second[1])
    }

    /// Amplitudes `(ae, af, be, bf)`.
    pub fn product_state(&self) -> TwoQubitPureState<T> {
        TwoQubitPureState::new_unchecked(kron_vec(&self.first, &self.second))
    }
}

/// Applies a 4x4 operator to a state without renormalizing.
pub fn evolve<T: Real>(u: &crate::linalg::Matrix4<T>, s: &TwoQubitPureState<T>) -> TwoQubitPureState<T> {
    TwoQubitPureState::new_unchecked(u.apply(s.amplitudes()))
}
