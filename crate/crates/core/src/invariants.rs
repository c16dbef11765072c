//! Magic-basis representation and the Makhlin local invariants `(G1, G2)`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::gate::TwoQubitGate;
use crate::linalg::{c, Matrix4};
use crate::scalar::Real;
use crate::weyl::WeylPoint;

/// The Bell-basis change `Q`; its columns are `|Φ+>`, `i|Ψ+>`, `|Ψ->`, `i|Φ->`.
pub fn bell_basis<T: Real>() -> Matrix4<T> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    Matrix4::from_rows([
        [c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, h)],
        [c(0.0, 0.0), c(0.0, h), c(h, 0.0), c(0.0, 0.0)],
        [c(0.0, 0.0), c(0.0, h), c(-h, 0.0), c(0.0, 0.0)],
        [c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -h)],
    ])
}

/// `U_B = Q† U Q`.
pub fn to_bell_basis<T: Real>(u: &Matrix4<T>) -> Matrix4<T> {
    let q = bell_basis::<T>();
    q.adjoint() * *u * q
}

/// `M(U) = U_B^T U_B`, symmetric and unitary.
pub fn m_matrix<T: Real>(gate: &TwoQubitGate<T>) -> Matrix4<T> {
    let ub = to_bell_basis(gate.matrix());
    ub.transpose() * ub
}

/// Makhlin invariants: complex `G1` and real `G2`.
///
/// Two gates are locally equivalent exactly when their invariants agree.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalInvariants<T> {
    pub g1: Complex<T>,
    pub g2: T,
}

impl<T: Real> LocalInvariants<T> {
    pub fn new(g1: Complex<T>, g2: T) -> Self {
        Self { g1, g2 }
    }

    pub fn conj(&self) -> Self {
        Self::new(self.g1.conj(), self.g2)
    }

    /// `|G1 - G1'|² + |G2 - G2'|²`.
    pub fn distance_sqr(&self, other: &Self) -> T {
        (self.g1 - other.g1).norm_sqr() + (self.g2 - other.g2).powi(2)
    }

    /// Squared distance minimized over complex conjugation of `other`'s `G1`.
    pub fn distance_sqr_up_to_conjugation(&self, other: &Self) -> T {
        self.distance_sqr(other).min(self.distance_sqr(&other.conj()))
    }

    /// Entrywise agreement: `|ΔG1| <= tol` and `|ΔG2| <= tol`.
    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        (self.g1 - other.g1).norm() <= tol && (self.g2 - other.g2).abs() <= tol
    }

    pub fn approx_eq_up_to_conjugation(&self, other: &Self, tol: T) -> bool {
        self.approx_eq(other, tol) || self.approx_eq(&other.conj(), tol)
    }
}

/// `G1 = tr²(M)/(16 det U)`, `G2 = (tr²(M) - tr(M²))/(4 det U)`.
pub fn local_invariants<T: Real>(gate: &TwoQubitGate<T>) -> Result<LocalInvariants<T>> {
    let det = gate.matrix().determinant();
    let eig_tol = T::lit(T::EIGEN_TOL);
    if (det.norm() - T::one()).abs() > eig_tol {
        return Err(Error::Precondition(format!(
            "|det U| = {} deviates from 1",
            det.norm()
        )));
    }
    let m = m_matrix(gate);
    let tr = m.trace();
    let tr2 = tr * tr;
    let tr_m2 = m.trace_of_product(&m);
    let g1 = tr2 / (det * T::lit(16.0));
    let g2 = (tr2 - tr_m2) / (det * T::lit(4.0));
    if g2.im.abs() > eig_tol {
        return Err(Error::Precondition(format!(
            "Im(G2) = {:e} is not negligible; input is not a valid unitary",
            g2.im.as_f64()
        )));
    }
    Ok(LocalInvariants::new(g1, g2.re))
}

/// Invariants of the canonical gate at Weyl point `[c1, c2, c3]`:
///
/// `G1 = cos²c1 cos²c2 cos²c3 - sin²c1 sin²c2 sin²c3 + (i/4) sin2c1 sin2c2 sin2c3`,
/// `G2 = 4 cos²c1 cos²c2 cos²c3 - 4 sin²c1 sin²c2 sin²c3 - cos2c1 cos2c2 cos2c3`.
pub fn invariants_from_coordinates<T: Real>(point: &WeylPoint<T>) -> LocalInvariants<T> {
    let [c1, c2, c3] = point.coords();
    let cc = (c1.cos() * c2.cos() * c3.cos()).powi(2);
    let ss = (c1.sin() * c2.sin() * c3.sin()).powi(2);
    let two = T::lit(2.0);
    let s2 = (two * c1).sin() * (two * c2).sin() * (two * c3).sin();
    let c2p = (two * c1).cos() * (two * c2).cos() * (two * c3).cos();
    let four = T::lit(4.0);
    LocalInvariants::new(Complex::new(cc - ss, s2 / four), four * cc - four * ss - c2p)
}
