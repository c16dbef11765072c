//! Weyl chamber coordinates and the two perfect-entangler criteria.
//!
//! Coordinates follow the orientation in which `SWAP^(1/m)` sits at
//! `[π/2m, π/2m, π/2m]`. In this orientation the coordinate formula for `G1`
//! reproduces the complex conjugate of the invariant computed from the
//! matrix; `G2` is unaffected.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::gate::TwoQubitGate;
use crate::invariants::{invariants_from_coordinates, local_invariants, m_matrix, LocalInvariants};
use crate::linalg::{eigenvalues, Matrix4};
use crate::scalar::Real;

/// Default boundary tolerance for chamber membership and the PE tests.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// Point `[c1, c2, c3]` (radians) of the 3-torus of nonlocal gate classes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeylPoint<T> {
    c: [T; 3],
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

impl<T: Real> WeylPoint<T> {
    pub fn new(c: [T; 3]) -> Self {
        Self { c }
    }

    pub fn coords(&self) -> [T; 3] {
        self.c
    }

    /// Membership in the tetrahedron `OA1A2A3`:
    /// `c1 >= c2 >= c3 >= 0`, `c1 + c2 <= π`, and `c3 = 0 ⟹ c1 <= π/2`.
    pub fn in_chamber(&self, slack: T) -> bool {
        let [c1, c2, c3] = self.c;
        let pi = T::PI();
        c1 + slack >= c2
            && c2 + slack >= c3
            && c3 >= -slack
            && c1 + c2 <= pi + slack
            && (c3 > slack || c1 <= T::FRAC_PI_2() + slack)
    }

    /// Largest-over-permutations worst slack of the two chained inequalities
    /// `π/2 <= ci+ck <= ci+cj+π/2 <= π` and `3π/2 <= ci+ck <= ci+cj+π/2 <= 2π`.
    /// Non-negative exactly on the perfect-entangler polyhedron; its magnitude
    /// measures the distance to the polyhedron boundary.
    pub fn perfect_entangler_margin(&self) -> T {
        let pi = T::PI();
        let half = T::FRAC_PI_2();
        let mut best = T::neg_infinity();
        for [i, j, k] in PERMUTATIONS {
            let ik = self.c[i] + self.c[k];
            let ij = self.c[i] + self.c[j] + half;
            for (lo, hi) in [(half, pi), (pi + half, pi + pi)] {
                let slack = (ik - lo).min(ij - ik).min(hi - ij);
                best = best.max(slack);
            }
        }
        best
    }

    /// Coordinate criterion for perfect entanglers, closed at `tol`.
    pub fn is_perfect_entangler(&self, tol: T) -> bool {
        self.perfect_entangler_margin() >= -tol
    }
}

/// Coordinate criterion at the default boundary tolerance.
pub fn is_perfect_entangler_coords<T: Real>(point: &WeylPoint<T>) -> bool {
    point.is_perfect_entangler(T::lit(BOUNDARY_TOL).max(T::epsilon() * T::lit(64.0)))
}

/// Eigenvalues of `M(U)/sqrt(det U)` on the principal (`negate = false`) or
/// opposite branch of the square root. Their product is 1.
fn normalized_m_spectrum<T: Real>(gate: &TwoQubitGate<T>, negate: bool) -> Result<[Complex<T>; 4]> {
    let det = gate.matrix().determinant();
    let mut root = det.sqrt();
    if negate {
        root = -root;
    }
    let m: Matrix4<T> = m_matrix(gate).scale(root.inv());
    let eig = eigenvalues(&m)?;
    let tol = T::lit(T::EIGEN_TOL);
    for z in &eig {
        if (z.norm() - T::one()).abs() > tol {
            return Err(Error::Precondition(format!(
                "eigenvalue modulus {} of M(U) deviates from 1",
                z.norm()
            )));
        }
    }
    Ok(eig)
}

/// Maps an arbitrary coordinate triple into the Weyl chamber using shifts by
/// π, permutations and simultaneous negation of two coordinates.
pub fn canonicalize<T: Real>(raw: [T; 3], tol: T) -> [T; 3] {
    let pi = T::PI();
    let half = T::FRAC_PI_2();
    let mut folded = raw.map(|x| {
        let mut y = x - pi * (x / pi).floor();
        if y >= pi {
            y -= pi;
        }
        if y > half {
            y -= pi;
        }
        // -π/2 and π/2 are the same class; keep the positive representative
        if (y + half).abs() <= tol {
            y = half;
        }
        y
    });
    folded.sort_by(|a, b| b.abs().partial_cmp(&a.abs()).unwrap_or(std::cmp::Ordering::Equal));
    let negatives = folded.iter().filter(|x| **x < -tol).count();
    let [a, b, c] = folded.map(|x| x.abs());
    let mut out = if negatives % 2 == 1 && c > tol {
        [pi - a, b, c]
    } else {
        [a, b, c]
    };
    if out[2] <= tol && out[0] > half {
        out[0] = pi - out[0];
    }
    out
}

/// Coordinates from the eigenphases `θ` of `M(U)/sqrt(det U)` (negated to fix
/// the orientation): `c1 = (θ1+θ3)/2`, `c2 = (θ2+θ3)/2`, `c3 = (θ1+θ2)/2`.
fn raw_coordinates<T: Real>(eig: &[Complex<T>; 4]) -> [T; 3] {
    let half = T::lit(0.5);
    let th: [T; 4] = eig.map(|z| -z.arg());
    [
        (th[0] + th[2]) * half,
        (th[1] + th[2]) * half,
        (th[0] + th[1]) * half,
    ]
}

fn forward_matches<T: Real>(point: &WeylPoint<T>, inv: &LocalInvariants<T>) -> bool {
    let forward = invariants_from_coordinates(point);
    forward.approx_eq(&inv.conj(), T::lit(T::EIGEN_TOL * 10.0))
}

/// Canonical Weyl chamber point of `gate`.
///
/// The result lies in the chamber (within [`BOUNDARY_TOL`]) and reproduces
/// the gate's invariants through the coordinate formula (up to conjugation of
/// `G1`, see the module docs).
pub fn weyl_coordinates<T: Real>(gate: &TwoQubitGate<T>) -> Result<WeylPoint<T>> {
    let inv = local_invariants(gate)?;
    let tol = T::lit(T::EIGEN_TOL);
    let slack = T::lit(BOUNDARY_TOL).max(tol);
    let mut last_phases = [0.0; 4];
    for negate in [false, true] {
        let eig = normalized_m_spectrum(gate, negate)?;
        last_phases = eig.map(|z| z.arg().as_f64());
        let point = WeylPoint::new(canonicalize(raw_coordinates(&eig), tol));
        if point.in_chamber(slack) && forward_matches(&point, &inv) {
            return Ok(point);
        }
    }
    Err(Error::Canonicalization {
        phases: last_phases,
    })
}

/// Signed margin of the hull criterion: `π - (largest circular gap between
/// consecutive eigenphases)`. Non-negative iff the origin lies in the closed
/// convex hull of the eigenvalues.
pub fn hull_margin<T: Real>(gate: &TwoQubitGate<T>) -> Result<T> {
    let eig = normalized_m_spectrum(gate, false)?;
    let mut phases = eig.map(|z| z.arg());
    phases.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    let two_pi = T::PI() + T::PI();
    let mut gap = phases[0] + two_pi - phases[3];
    for w in phases.windows(2) {
        gap = gap.max(w[1] - w[0]);
    }
    Ok(T::PI() - gap)
}

/// Hull criterion: `gate` is a perfect entangler iff 0 lies in the convex hull
/// of the eigenvalues of `M(U)/sqrt(det U)`, boundary included at `tol`.
pub fn is_perfect_entangler_hull<T: Real>(gate: &TwoQubitGate<T>, tol: T) -> Result<bool> {
    Ok(hull_margin(gate)? >= -tol)
}
