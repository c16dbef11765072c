//! Fixed-size complex linear algebra for one-, two- and four-qubit operators.
//!
//! Dimensions are carried in the type (`SquareMatrix<T, N>` with `N` in
//! {2, 4, 16}), so a Kronecker product of unsupported sizes does not compile.
//! Basis states are indexed with qubit 1 as the most significant bit: on four
//! qubits `|a b c d>` has index `8a + 4b + 2c + d`.

#![allow(clippy::needless_range_loop)]

mod eigen;
mod matrix;
mod permutation;

pub use eigen::{eigenphases_unitary, eigenvalues};
pub use matrix::{kron_vec, Kron, SquareMatrix, Vector};
pub use permutation::{swap_pair_operator, transposition_t13, IntMatrix16};

use num_complex::Complex;

use crate::scalar::Real;

pub type Matrix2<T> = SquareMatrix<T, 2>;
pub type Matrix4<T> = SquareMatrix<T, 4>;
pub type Matrix16<T> = SquareMatrix<T, 16>;

#[inline]
pub(crate) fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}

/// The Pauli matrices.
pub struct Pauli;

impl Pauli {
    pub fn x<T: Real>() -> Matrix2<T> {
        SquareMatrix::from_rows([[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]])
    }

    pub fn y<T: Real>() -> Matrix2<T> {
        SquareMatrix::from_rows([[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]])
    }

    pub fn z<T: Real>() -> Matrix2<T> {
        SquareMatrix::from_rows([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]])
    }
}
