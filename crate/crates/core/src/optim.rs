//! Derivative-free minimization: adaptive Nelder-Mead and a seeded,
//! thread-count-independent multistart driver.

use rayon::prelude::*;

use crate::sampling::{indexed_rng, SampleRng};
use crate::scalar::Real;

/// Settings for [`NelderMead::minimize`]. Coefficients follow the
/// dimension-adaptive choice of Gao and Han.
#[derive(Clone, Debug)]
pub struct NelderMead {
    pub initial_step: f64,
    pub max_evaluations: usize,
    /// Stop when the spread of simplex values is below
    /// `f_abs_tol + f_rel_tol * |f_best|` and the simplex diameter is below `x_tol`.
    pub f_abs_tol: f64,
    pub f_rel_tol: f64,
    pub x_tol: f64,
    /// Number of times the search is restarted from the current best vertex
    /// with a fresh simplex after converging.
    pub rebuilds: usize,
}

impl Default for NelderMead {
    fn default() -> Self {
        Self {
            initial_step: 0.5,
            max_evaluations: 20_000,
            f_abs_tol: 1e-16,
            f_rel_tol: 1e-12,
            x_tol: 1e-9,
            rebuilds: 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Minimum<T> {
    pub x: Vec<T>,
    pub value: T,
    pub evaluations: usize,
    pub converged: bool,
}

impl NelderMead {
    pub fn minimize<T: Real, F>(&self, f: F, x0: &[T]) -> Minimum<T>
    where
        F: Fn(&[T]) -> T,
    {
        let mut best = self.run(&f, x0.to_vec(), T::lit(self.initial_step), self.max_evaluations);
        for _ in 0..self.rebuilds {
            let remaining = self.max_evaluations.saturating_sub(best.evaluations);
            if remaining == 0 {
                break;
            }
            let next = self.run(&f, best.x.clone(), T::lit(self.initial_step * 0.1), remaining);
            let improved = next.value < best.value;
            let evaluations = best.evaluations + next.evaluations;
            if improved {
                best = Minimum { evaluations, ..next };
            } else {
                best.evaluations = evaluations;
                best.converged &= next.converged;
                break;
            }
        }
        best
    }

    fn run<T: Real, F>(&self, f: &F, x0: Vec<T>, step: T, budget: usize) -> Minimum<T>
    where
        F: Fn(&[T]) -> T,
    {
        let n = x0.len();
        let nf = T::lit(n.max(1) as f64);
        let one = T::one();
        let alpha = one;
        let beta = one + T::lit(2.0) / nf;
        let gamma = T::lit(0.75) - one / (T::lit(2.0) * nf);
        let delta = one - one / nf;

        let evals = std::cell::Cell::new(0usize);
        let eval = |x: &[T]| {
            evals.set(evals.get() + 1);
            let v = f(x);
            if v.is_nan() {
                T::infinity()
            } else {
                v
            }
        };

        let mut simplex: Vec<(Vec<T>, T)> = Vec::with_capacity(n + 1);
        let v0 = eval(&x0);
        simplex.push((x0.clone(), v0));
        for i in 0..n {
            let mut x = x0.clone();
            x[i] += step;
            let v = eval(&x);
            simplex.push((x, v));
        }

        let sort = |s: &mut Vec<(Vec<T>, T)>| {
            s.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
        };
        let mut converged = false;
        loop {
            sort(&mut simplex);
            let fbest = simplex[0].1;
            let fworst = simplex[n].1;
            let spread = fworst - fbest;
            let diameter = simplex[1..]
                .iter()
                .map(|(x, _)| {
                    x.iter()
                        .zip(simplex[0].0.iter())
                        .map(|(a, b)| (*a - *b).abs())
                        .fold(T::zero(), T::max)
                })
                .fold(T::zero(), T::max);
            let ftol = T::lit(self.f_abs_tol) + T::lit(self.f_rel_tol) * fbest.abs();
            if spread <= ftol && diameter <= T::lit(self.x_tol) || spread == T::zero() && diameter == T::zero() {
                converged = true;
                break;
            }
            if evals.get() >= budget {
                break;
            }

            let mut centroid = vec![T::zero(); n];
            for (x, _) in &simplex[..n] {
                for (c, xi) in centroid.iter_mut().zip(x) {
                    *c += *xi;
                }
            }
            for c in centroid.iter_mut() {
                *c /= nf;
            }
            let along = |t: T| -> Vec<T> {
                centroid
                    .iter()
                    .zip(simplex[n].0.iter())
                    .map(|(c, w)| *c + t * (*c - *w))
                    .collect()
            };

            let xr = along(alpha);
            let fr = eval(&xr);
            if fr < simplex[0].1 {
                let xe = along(beta);
                let fe = eval(&xe);
                simplex[n] = if fe < fr { (xe, fe) } else { (xr, fr) };
                continue;
            }
            if fr < simplex[n - 1].1 {
                simplex[n] = (xr, fr);
                continue;
            }
            let (xc, fc) = if fr < simplex[n].1 {
                let xc = along(alpha * gamma);
                let fc = eval(&xc);
                (xc, fc)
            } else {
                let xc = along(-gamma);
                let fc = eval(&xc);
                (xc, fc)
            };
            if fc < fr.min(simplex[n].1) {
                simplex[n] = (xc, fc);
                continue;
            }
            let best_x = simplex[0].0.clone();
            for vertex in simplex.iter_mut().skip(1) {
                let x: Vec<T> = best_x
                    .iter()
                    .zip(vertex.0.iter())
                    .map(|(b, v)| *b + delta * (*v - *b))
                    .collect();
                let v = eval(&x);
                *vertex = (x, v);
            }
        }
        sort(&mut simplex);
        let (x, value) = simplex.swap_remove(0);
        Minimum {
            x,
            value,
            evaluations: evals.get(),
            converged,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MultistartOutcome<T> {
    pub best: Minimum<T>,
    /// Index of the restart that produced `best` (lowest index on ties).
    pub best_index: usize,
    pub restarts: usize,
    pub converged_restarts: usize,
}

/// Runs `restarts` independent local searches. Restart `i` draws its start
/// point from `indexed_rng(seed, i)`, so the first `r` restarts of a run with
/// more restarts are identical to a run with `r` restarts.
pub fn multistart<T, F, S>(
    optimizer: &NelderMead,
    restarts: usize,
    seed: u64,
    start: S,
    objective: F,
) -> MultistartOutcome<T>
where
    T: Real,
    F: Fn(&[T]) -> T + Sync,
    S: Fn(&mut SampleRng) -> Vec<T> + Sync,
{
    assert!(restarts >= 1, "multistart needs at least one restart");
    let runs: Vec<Minimum<T>> = (0..restarts)
        .into_par_iter()
        .map(|i| {
            let mut rng = indexed_rng(seed, i as u64);
            let x0 = start(&mut rng);
            optimizer.minimize(&objective, &x0)
        })
        .collect();
    let converged_restarts = runs.iter().filter(|m| m.converged).count();
    let mut best_index = 0;
    for (i, m) in runs.iter().enumerate() {
        if m.value < runs[best_index].value {
            best_index = i;
        }
    }
    MultistartOutcome {
        best: runs[best_index].clone(),
        best_index,
        restarts,
        converged_restarts,
    }
}
