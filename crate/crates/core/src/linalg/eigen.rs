use num_complex::Complex;
use num_traits::Zero;

use super::SquareMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_SWEEPS_PER_EIGENVALUE: usize = 60;

/// Reduces `a` to upper Hessenberg form by Householder similarity transforms.
fn hessenberg<T: Real, const N: usize>(a: &SquareMatrix<T, N>) -> [[Complex<T>; N]; N] {
    let mut h = *a.rows();
    for k in 0..N.saturating_sub(2) {
        let alpha: T = ((k + 1)..N).map(|i| h[i][k].norm_sqr()).sum::<T>().sqrt();
        if alpha == T::zero() {
            continue;
        }
        let x0 = h[k + 1][k];
        let phase = if x0.norm() == T::zero() {
            Complex::new(T::one(), T::zero())
        } else {
            x0 / x0.norm()
        };
        // v = x + e^{i arg x0} |x| e_1, reflector P = I - 2 v v^† / (v^† v)
        let mut v = [Complex::<T>::zero(); N];
        for i in (k + 1)..N {
            v[i] = h[i][k];
        }
        v[k + 1] += phase * alpha;
        let vnorm2: T = ((k + 1)..N).map(|i| v[i].norm_sqr()).sum();
        if vnorm2 == T::zero() {
            continue;
        }
        let two = T::lit(2.0) / vnorm2;
        // left: h <- P h
        for j in 0..N {
            let mut s = Complex::zero();
            for i in (k + 1)..N {
                s += v[i].conj() * h[i][j];
            }
            let s = s * two;
            for i in (k + 1)..N {
                h[i][j] -= v[i] * s;
            }
        }
        // right: h <- h P
        for row in h.iter_mut() {
            let mut s = Complex::zero();
            for j in (k + 1)..N {
                s += row[j] * v[j];
            }
            let s = s * two;
            for j in (k + 1)..N {
                row[j] -= s * v[j].conj();
            }
        }
        for row in h.iter_mut().skip(k + 2) {
            row[k] = Complex::zero();
        }
    }
    h
}

/// Givens rotation `G = [[c, s], [-conj(s), c]]` with `G (x, y)^T = (r, 0)^T`.
fn givens<T: Real>(x: Complex<T>, y: Complex<T>) -> (T, Complex<T>) {
    let nx = x.norm();
    let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
    if r == T::zero() {
        return (T::one(), Complex::zero());
    }
    if nx == T::zero() {
        return (T::zero(), Complex::new(T::one(), T::zero()));
    }
    let c = nx / r;
    let s = (x / nx) * y.conj() / r;
    (c, s)
}

/// Eigenvalues of `[[a, b], [c, d]]`.
fn eig2<T: Real>(a: Complex<T>, b: Complex<T>, c: Complex<T>, d: Complex<T>) -> (Complex<T>, Complex<T>) {
    let half = T::lit(0.5);
    let mid = (a + d) * half;
    let gap = (a - d) * half;
    let disc = (gap * gap + b * c).sqrt();
    (mid + disc, mid - disc)
}

/// Eigenvalue of the trailing 2x2 block closest to its last diagonal entry.
fn wilkinson_shift<T: Real>(a: Complex<T>, b: Complex<T>, c: Complex<T>, d: Complex<T>) -> Complex<T> {
    let (l1, l2) = eig2(a, b, c, d);
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// All eigenvalues of a general complex matrix via Hessenberg reduction and
/// Wilkinson-shifted QR sweeps with deflation.
pub fn eigenvalues<T: Real, const N: usize>(a: &SquareMatrix<T, N>) -> Result<[Complex<T>; N]> {
    let mut h = hessenberg(a);
    let mut out = [Complex::<T>::zero(); N];
    if N == 0 {
        return Ok(out);
    }
    let eps = T::epsilon();
    let scale = a.max_abs().max(T::min_positive_value());
    let mut hi = N - 1;
    let mut iter = 0usize;
    let mut total = 0usize;
    let budget = MAX_SWEEPS_PER_EIGENVALUE * N;
    loop {
        if hi == 0 {
            out[0] = h[0][0];
            break;
        }
        // locate the active unreduced block [lo, hi]
        let mut lo = hi;
        while lo > 0 {
            let sub = h[lo][lo - 1].norm();
            let diag = h[lo][lo].norm() + h[lo - 1][lo - 1].norm();
            let local = if diag == T::zero() { scale } else { diag };
            if sub <= T::lit(4.0) * eps * local {
                h[lo][lo - 1] = Complex::zero();
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            out[hi] = h[hi][hi];
            hi -= 1;
            iter = 0;
            continue;
        }
        if lo + 1 == hi {
            // 2x2 block: closed form
            let (l1, l2) = eig2(h[lo][lo], h[lo][hi], h[hi][lo], h[hi][hi]);
            out[lo] = l1;
            out[hi] = l2;
            if lo == 0 {
                break;
            }
            hi = lo - 1;
            iter = 0;
            continue;
        }
        if total >= budget {
            return Err(Error::EigenNonConvergence { iterations: total });
        }
        iter += 1;
        total += 1;
        let mu = if iter.is_multiple_of(11) {
            // exceptional shift to break symmetric stalls
            h[hi][hi] + Complex::new(h[hi][hi - 1].norm() * T::lit(0.75), h[hi - 1][hi - 1].norm() * T::lit(0.25))
        } else {
            wilkinson_shift(h[hi - 1][hi - 1], h[hi - 1][hi], h[hi][hi - 1], h[hi][hi])
        };
        for i in lo..=hi {
            h[i][i] -= mu;
        }
        let mut rots = [(T::one(), Complex::<T>::zero()); N];
        for k in lo..hi {
            let (cs, sn) = givens(h[k][k], h[k + 1][k]);
            rots[k] = (cs, sn);
            for j in k..=hi {
                let p = h[k][j];
                let q = h[k + 1][j];
                h[k][j] = p * cs + sn * q;
                h[k + 1][j] = -sn.conj() * p + q * cs;
            }
        }
        for (k, &(cs, sn)) in rots.iter().enumerate().take(hi).skip(lo) {
            let top = (k + 2).min(hi);
            for row in h.iter_mut().take(top + 1).skip(lo) {
                let p = row[k];
                let q = row[k + 1];
                row[k] = p * cs + q * sn.conj();
                row[k + 1] = -p * sn + q * cs;
            }
        }
        for i in lo..=hi {
            h[i][i] += mu;
        }
    }
    Ok(out)
}

/// Phases `θ_k ∈ (-π, π]` of the eigenvalues `e^{iθ_k}` of a unitary matrix,
/// sorted ascending.
pub fn eigenphases_unitary<T: Real, const N: usize>(m: &SquareMatrix<T, N>) -> Result<[T; N]> {
    let tol = T::lit(T::UNITARITY_TOL);
    let defect = m.unitarity_defect();
    if defect.is_nan() || defect > tol {
        return Err(Error::Precondition(format!(
            "matrix is not unitary (defect {:e})",
            defect.as_f64()
        )));
    }
    let eig = eigenvalues(m)?;
    let eig_tol = T::lit(T::EIGEN_TOL);
    let mut phases = [T::zero(); N];
    for (p, z) in phases.iter_mut().zip(eig.iter()) {
        if (z.norm() - T::one()).abs() > eig_tol {
            return Err(Error::Precondition(format!(
                "eigenvalue modulus {} deviates from 1",
                z.norm()
            )));
        }
        let mut theta = z.arg();
        if theta <= -T::PI() {
            theta = T::PI();
        }
        *p = theta;
    }
    phases.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    Ok(phases)
}
