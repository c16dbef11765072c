//! Nonlocal characterization of two-qubit gates.
//!
//! The crate computes, for any two-qubit unitary:
//!
//! * the Makhlin local invariants `(G1, G2)` ([`local_invariants`]),
//! * its canonical point in the Weyl chamber ([`weyl_coordinates`]),
//! * whether it is a perfect entangler, by the eigenvalue-hull criterion and
//!   by the coordinate inequalities,
//! * its entangling power, exactly and by Monte Carlo ([`power`]),
//!
//! plus closed forms for the `SWAP^α` and controlled-unitary families and a
//! numerical search for two-gate constructions of CNOT ([`synthesis`]).
//!
//! All numeric code is generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix the scalar to `f64`.

pub mod error;
pub mod families;
pub mod gate;
pub mod invariants;
pub mod linalg;
pub mod optim;
pub mod power;
pub mod sampling;
pub mod scalar;
pub mod states;
pub mod synthesis;
pub mod weyl;

pub use error::{Error, Result};
pub use gate::TwoQubitGate;
pub use invariants::{invariants_from_coordinates, local_invariants, m_matrix, LocalInvariants};
pub use power::{ep_exact, ep_monte_carlo, ep_r_form, EpMethod, EpResult};
pub use scalar::Real;
pub use states::{ProductStatePair, TwoQubitPureState};
pub use weyl::{is_perfect_entangler_coords, is_perfect_entangler_hull, weyl_coordinates, WeylPoint};

pub type C64 = num_complex::Complex<f64>;
pub type Mat2 = linalg::Matrix2<f64>;
pub type Mat4 = linalg::Matrix4<f64>;
pub type Mat16 = linalg::Matrix16<f64>;
pub type Gate = TwoQubitGate<f64>;
pub type Invariants = LocalInvariants<f64>;
pub type Point = WeylPoint<f64>;
pub type State = TwoQubitPureState<f64>;
pub type ProductPair = ProductStatePair<f64>;
pub type CuParams = families::CUParams<f64>;

pub type Gate32 = TwoQubitGate<f32>;
pub type Mat4f32 = linalg::Matrix4<f32>;
