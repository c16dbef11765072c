use std::ops::Mul;

use num_complex::Complex;

use super::Matrix16;
use crate::scalar::Real;

/// Exact integer 16x16 matrix, used for the permutation operators so that
/// traces of their products come out as exact integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntMatrix16(pub [[i32; 16]; 16]);

impl IntMatrix16 {
    pub fn zeros() -> Self {
        Self([[0; 16]; 16])
    }

    /// Matrix of the basis permutation `|i> -> |map(i)>`.
    pub fn from_basis_map(map: impl Fn(usize) -> usize) -> Self {
        let mut m = Self::zeros();
        for col in 0..16 {
            m.0[map(col)][col] = 1;
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..16 {
            for j in 0..16 {
                m.0[i][j] = self.0[j][i];
            }
        }
        m
    }

    pub fn trace(&self) -> i32 {
        (0..16).map(|i| self.0[i][i]).sum()
    }

    pub fn to_complex<T: Real>(&self) -> Matrix16<T> {
        Matrix16::from_fn(|i, j| Complex::new(T::lit(f64::from(self.0[i][j])), T::zero()))
    }
}

impl Mul for IntMatrix16 {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zeros();
        for i in 0..16 {
            for k in 0..16 {
                let a = self.0[i][k];
                if a == 0 {
                    continue;
                }
                for j in 0..16 {
                    out.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        out
    }
}

impl std::ops::Add for IntMatrix16 {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for i in 0..16 {
            for j in 0..16 {
                out.0[i][j] += rhs.0[i][j];
            }
        }
        out
    }
}

#[inline]
fn bits(idx: usize) -> [usize; 4] {
    [(idx >> 3) & 1, (idx >> 2) & 1, (idx >> 1) & 1, idx & 1]
}

#[inline]
fn index([a, b, c, d]: [usize; 4]) -> usize {
    8 * a + 4 * b + 2 * c + d
}

/// `T_{1,3} |a b c d> = |c b a d>`: exchanges the first qubit of the two
/// copies in a doubled two-qubit register.
pub fn transposition_t13() -> IntMatrix16 {
    IntMatrix16::from_basis_map(|i| {
        let [a, b, c, d] = bits(i);
        index([c, b, a, d])
    })
}

/// `SWAP ⊗ SWAP`: `|a b c d> -> |b a d c>`.
pub fn swap_pair_operator() -> IntMatrix16 {
    IntMatrix16::from_basis_map(|i| {
        let [a, b, c, d] = bits(i);
        index([b, a, d, c])
    })
}
