//! Entangling power: the mean linear entropy a gate produces from Haar-random
//! product inputs, computed by a closed trace formula, by the `R`-operator
//! rearrangement of that formula, and by Monte Carlo.

use std::sync::OnceLock;

use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::swap;
use crate::gate::TwoQubitGate;
use crate::linalg::{swap_pair_operator, transposition_t13, IntMatrix16, Kron, Matrix16};
use crate::sampling::{haar_product_sample, indexed_rng};
use crate::scalar::Real;
use crate::states::evolve;

/// Upper end of the entangling-power range (reached by CNOT).
pub const EP_MAX: f64 = 2.0 / 9.0;

pub const MIN_MONTE_CARLO_SAMPLES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EpMethod {
    Exact,
    RForm,
    MonteCarlo,
}

impl EpMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            EpMethod::Exact => "exact",
            EpMethod::RForm => "r_form",
            EpMethod::MonteCarlo => "monte_carlo",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EpResult<T> {
    pub value: T,
    pub method: EpMethod,
    pub samples: Option<usize>,
    pub std_error: Option<T>,
    pub seed: Option<u64>,
}

impl<T: Real> EpResult<T> {
    fn deterministic(value: T, method: EpMethod) -> Self {
        Self {
            value,
            method,
            samples: None,
            std_error: None,
            seed: None,
        }
    }
}

/// `R = T + S† T S` with `T = T_{1,3}` and `S = SWAP ⊗ SWAP`, as an exact
/// integer matrix.
pub fn r_operator() -> &'static IntMatrix16 {
    static R: OnceLock<IntMatrix16> = OnceLock::new();
    R.get_or_init(|| {
        let t = transposition_t13();
        let s = swap_pair_operator();
        t + s.transpose() * t * s
    })
}

fn five_ninths<T: Real>() -> T {
    T::lit(5.0) / T::lit(9.0)
}

/// `EP(U) = 5/9 - (1/36)[<A, T A T> + <B, T B T>]` with `A = U⊗U` and
/// `B = (SWAP·U)⊗(SWAP·U)`.
pub fn ep_exact<T: Real>(gate: &TwoQubitGate<T>) -> EpResult<T> {
    let t: Matrix16<T> = transposition_t13().to_complex();
    let u = gate.matrix();
    let su = *swap::<T>().matrix() * *u;
    let a = u.kron(u);
    let b = su.kron(&su);
    let term = |x: &Matrix16<T>| x.hs_inner(&(t * *x * t)).re;
    let value = five_ninths::<T>() - (term(&a) + term(&b)) / T::lit(36.0);
    EpResult::deterministic(value, EpMethod::Exact)
}

/// `EP(U) = 5/9 - (1/36) tr(A† R A T)`, valid for any two-qubit `U`.
pub fn ep_r_form<T: Real>(gate: &TwoQubitGate<T>) -> EpResult<T> {
    let t: Matrix16<T> = transposition_t13().to_complex();
    let r: Matrix16<T> = r_operator().to_complex();
    let u = gate.matrix();
    let a = u.kron(u);
    let rat = r * a * t;
    let value = five_ninths::<T>() - a.hs_inner(&rat).re / T::lit(36.0);
    EpResult::deterministic(value, EpMethod::RForm)
}

/// Monte-Carlo estimate over `n` Haar-random product inputs.
///
/// Sample `i` is drawn from its own substream of `seed`, and the reduction is
/// a sequential sum in index order, so the result does not depend on the
/// number of worker threads.
pub fn ep_monte_carlo<T: Real>(gate: &TwoQubitGate<T>, n: usize, seed: u64) -> Result<EpResult<T>>
where
    StandardNormal: Distribution<T>,
{
    if n < MIN_MONTE_CARLO_SAMPLES {
        return Err(Error::Precondition(format!(
            "Monte-Carlo entangling power needs at least {MIN_MONTE_CARLO_SAMPLES} samples, got {n}"
        )));
    }
    let u = gate.matrix();
    let values: Vec<T> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut rng = indexed_rng(seed, i as u64);
            let input = haar_product_sample::<T, _>(&mut rng).product_state();
            evolve(u, &input).linear_entropy()
        })
        .collect();
    let count = T::lit(n as f64);
    let mean = values.iter().copied().sum::<T>() / count;
    let var = values.iter().map(|&v| (v - mean).powi(2)).sum::<T>() / T::lit((n - 1) as f64);
    Ok(EpResult {
        value: mean,
        method: EpMethod::MonteCarlo,
        samples: Some(n),
        std_error: Some((var / count).sqrt()),
        seed: Some(seed),
    })
}
