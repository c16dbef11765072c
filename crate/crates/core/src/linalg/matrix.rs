use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::scalar::Real;

pub type Vector<T, const N: usize> = [Complex<T>; N];

/// Dense row-major `N x N` complex matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SquareMatrix<T, const N: usize> {
    rows: [[Complex<T>; N]; N],
}

impl<T: Real, const N: usize> SquareMatrix<T, N> {
    pub const DIM: usize = N;

    pub fn zeros() -> Self {
        Self {
            rows: [[Complex::zero(); N]; N],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.rows[i][i] = Complex::one();
        }
        m
    }

    pub fn from_rows(rows: [[Complex<T>; N]; N]) -> Self {
        Self { rows }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.rows[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn diagonal(d: [Complex<T>; N]) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.rows[i][i] = d[i];
        }
        m
    }

    pub fn rows(&self) -> &[[Complex<T>; N]; N] {
        &self.rows
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.rows[j][i].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.rows[j][i])
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|i, j| self.rows[i][j].conj())
    }

    pub fn trace(&self) -> Complex<T> {
        (0..N).map(|i| self.rows[i][i]).fold(Complex::zero(), |a, b| a + b)
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self::from_fn(|i, j| self.rows[i][j] * s)
    }

    /// Hilbert-Schmidt inner product `tr(self^† other)`.
    pub fn hs_inner(&self, other: &Self) -> Complex<T> {
        let mut acc = Complex::zero();
        for i in 0..N {
            for j in 0..N {
                acc += self.rows[i][j].conj() * other.rows[i][j];
            }
        }
        acc
    }

    /// `tr(self * other)` without forming the product.
    pub fn trace_of_product(&self, other: &Self) -> Complex<T> {
        let mut acc = Complex::zero();
        for i in 0..N {
            for k in 0..N {
                acc += self.rows[i][k] * other.rows[k][i];
            }
        }
        acc
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut worst = T::zero();
        for i in 0..N {
            for j in 0..N {
                worst = worst.max((self.rows[i][j] - other.rows[i][j]).norm());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> T {
        self.rows
            .iter()
            .flatten()
            .fold(T::zero(), |acc, z| acc.max(z.norm()))
    }

    /// `max |(M†M - I)_ij|`.
    pub fn unitarity_defect(&self) -> T {
        (self.adjoint() * *self).max_abs_diff(&Self::identity())
    }

    pub fn is_unitary(&self, tol: T) -> bool {
        self.unitarity_defect() <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.rows
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn apply(&self, v: &Vector<T, N>) -> Vector<T, N> {
        let mut out = [Complex::zero(); N];
        for i in 0..N {
            let mut acc = Complex::zero();
            for j in 0..N {
                acc += self.rows[i][j] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> Complex<T> {
        let mut a = self.rows;
        let mut det = Complex::<T>::one();
        for col in 0..N {
            let pivot = (col..N)
                .max_by(|&p, &q| {
                    a[p][col]
                        .norm_sqr()
                        .partial_cmp(&a[q][col].norm_sqr())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })
                .unwrap_or(col);
            if a[pivot][col].norm_sqr() == T::zero() {
                return Complex::zero();
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col];
            det *= p;
            for r in (col + 1)..N {
                let f = a[r][col] / p;
                if f.is_zero() {
                    continue;
                }
                for k in col..N {
                    let v = a[col][k];
                    a[r][k] -= f * v;
                }
            }
        }
        det
    }
}

impl<T, const N: usize> Index<(usize, usize)> for SquareMatrix<T, N> {
    type Output = Complex<T>;

    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.rows[i][j]
    }
}

impl<T, const N: usize> IndexMut<(usize, usize)> for SquareMatrix<T, N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.rows[i][j]
    }
}

impl<T: Real, const N: usize> Mul for SquareMatrix<T, N> {
    type Output = Self;

    #[allow(clippy::op_ref)]
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Real, const N: usize> Mul for &SquareMatrix<T, N> {
    type Output = SquareMatrix<T, N>;

    fn mul(self, rhs: Self) -> SquareMatrix<T, N> {
        let mut out = SquareMatrix::zeros();
        for i in 0..N {
            for k in 0..N {
                let a = self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..N {
                    out.rows[i][j] += a * rhs.rows[k][j];
                }
            }
        }
        out
    }
}

impl<T: Real, const N: usize> Add for SquareMatrix<T, N> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.rows[i][j] + rhs.rows[i][j])
    }
}

impl<T: Real, const N: usize> Sub for SquareMatrix<T, N> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.rows[i][j] - rhs.rows[i][j])
    }
}

/// Kronecker product `self ⊗ rhs`; `self` acts on the more significant qubits.
pub trait Kron<Rhs = Self> {
    type Output;

    fn kron(&self, rhs: &Rhs) -> Self::Output;
}

fn kron_into<T: Real, const A: usize, const B: usize, const AB: usize>(
    lhs: &SquareMatrix<T, A>,
    rhs: &SquareMatrix<T, B>,
) -> SquareMatrix<T, AB> {
    debug_assert_eq!(A * B, AB);
    SquareMatrix::from_fn(|i, j| lhs.rows[i / B][j / B] * rhs.rows[i % B][j % B])
}

impl<T: Real> Kron for SquareMatrix<T, 2> {
    type Output = SquareMatrix<T, 4>;

    fn kron(&self, rhs: &Self) -> SquareMatrix<T, 4> {
        kron_into(self, rhs)
    }
}

impl<T: Real> Kron for SquareMatrix<T, 4> {
    type Output = SquareMatrix<T, 16>;

    fn kron(&self, rhs: &Self) -> SquareMatrix<T, 16> {
        kron_into(self, rhs)
    }
}

/// Tensor product of two vectors, `lhs` on the more significant qubits.
pub fn kron_vec<T: Real, const A: usize, const B: usize, const AB: usize>(
    lhs: &Vector<T, A>,
    rhs: &Vector<T, B>,
) -> Vector<T, AB> {
    debug_assert_eq!(A * B, AB);
    let mut out = [Complex::zero(); AB];
    for (i, o) in out.iter_mut().enumerate() {
        *o = lhs[i / B] * rhs[i % B];
    }
    out
}
