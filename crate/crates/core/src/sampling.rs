//! Seeded Haar-random sampling of qubit states, product states and unitaries.
//!
//! Every generator is ChaCha8 so streams are reproducible across platforms.
//! Sample `i` of a run is drawn from `indexed_rng(seed, i)`, which makes
//! results independent of how work is split across threads.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::linalg::{Matrix2, SquareMatrix};
use crate::scalar::Real;
use crate::states::{ProductStatePair, TwoQubitPureState};

pub type SampleRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent substream `index` of the generator seeded with `seed`.
pub fn indexed_rng(seed: u64, index: u64) -> SampleRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn complex_gaussian<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Complex<T>
where
    StandardNormal: Distribution<T>,
{
    Complex::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

fn normalized<T: Real, const N: usize>(mut v: [Complex<T>; N]) -> [Complex<T>; N] {
    let norm: T = v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
    for z in v.iter_mut() {
        *z /= norm;
    }
    v
}

/// Haar-random single-qubit state `(a, b)`.
pub fn haar_qubit<T: Real, R: Rng + ?Sized>(rng: &mut R) -> [Complex<T>; 2]
where
    StandardNormal: Distribution<T>,
{
    normalized([complex_gaussian(rng), complex_gaussian(rng)])
}

/// Independent Haar-random states on each qubit.
pub fn haar_product_sample<T: Real, R: Rng + ?Sized>(rng: &mut R) -> ProductStatePair<T>
where
    StandardNormal: Distribution<T>,
{
    let [a, b] = haar_qubit(rng);
    let [e, f] = haar_qubit(rng);
    ProductStatePair::new_unchecked(a, b, e, f)
}

/// Haar-random two-qubit pure state.
pub fn haar_state<T: Real, R: Rng + ?Sized>(rng: &mut R) -> TwoQubitPureState<T>
where
    StandardNormal: Distribution<T>,
{
    let v = normalized([
        complex_gaussian(rng),
        complex_gaussian(rng),
        complex_gaussian(rng),
        complex_gaussian(rng),
    ]);
    TwoQubitPureState::new_unchecked(v)
}

/// Haar-random `N x N` unitary: Ginibre matrix orthonormalized column by
/// column (modified Gram-Schmidt), which fixes the triangular factor to have a
/// positive diagonal.
pub fn haar_unitary<T: Real, R: Rng + ?Sized, const N: usize>(rng: &mut R) -> SquareMatrix<T, N>
where
    StandardNormal: Distribution<T>,
{
    let mut cols = [[Complex::<T>::new(T::zero(), T::zero()); N]; N];
    for col in cols.iter_mut() {
        for z in col.iter_mut() {
            *z = complex_gaussian(rng);
        }
    }
    for j in 0..N {
        for k in 0..j {
            let (done, rest) = cols.split_at_mut(j);
            let q = &done[k];
            let v = &mut rest[0];
            let proj = q
                .iter()
                .zip(v.iter())
                .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * b);
            for (vi, qi) in v.iter_mut().zip(q.iter()) {
                *vi -= *qi * proj;
            }
        }
        cols[j] = normalized(cols[j]);
    }
    SquareMatrix::from_fn(|i, j| cols[j][i])
}

pub fn haar_unitary2<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Matrix2<T>
where
    StandardNormal: Distribution<T>,
{
    haar_unitary(rng)
}

pub fn haar_unitary4<T: Real, R: Rng + ?Sized>(rng: &mut R) -> SquareMatrix<T, 4>
where
    StandardNormal: Distribution<T>,
{
    haar_unitary(rng)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitaries_are_unitary() {
        let mut rng = seeded_rng(1);
        for _ in 0..100 {
            let u: SquareMatrix<f64, 4> = haar_unitary4(&mut rng);
            assert!(u.unitarity_defect() < 1e-13);
        }
    }

    #[test]
    fn qubit_mean_population_is_half() {
        let mut rng = seeded_rng(2024);
        let n = 100_000;
        let mean: f64 = (0..n)
            .map(|_| haar_qubit::<f64, _>(&mut rng)[0].norm_sqr())
            .sum::<f64>()
            / n as f64;
        assert!((mean - 0.5).abs() < 0.01, "{mean}");
    }

    #[test]
    fn product_samples_normalized_and_reproducible() {
        let draw = |seed| {
            let mut rng = seeded_rng(seed);
            (0..50)
                .map(|_| haar_product_sample::<f64, _>(&mut rng))
                .collect::<Vec<_>>()
        };
        let first = draw(17);
        assert_eq!(first, draw(17));
        for p in &first {
            let (a, b, e, f) = p.amplitudes();
            assert!((a.norm_sqr() + b.norm_sqr() - 1.0).abs() < 1e-12);
            assert!((e.norm_sqr() + f.norm_sqr() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn indexed_streams_differ() {
        let a: f64 = StandardNormal.sample(&mut indexed_rng(3, 0));
        let b: f64 = StandardNormal.sample(&mut indexed_rng(3, 1));
        let a2: f64 = StandardNormal.sample(&mut indexed_rng(3, 0));
        assert_ne!(a, b);
        assert_eq!(a, a2);
    }
}
