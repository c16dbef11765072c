//! Numerical search for two-gate constructions of CNOT.
//!
//! Given a base gate `V`, look for single-qubit gates `k = u ⊗ v` such that
//! `V k V` is locally equivalent to CNOT, measured by the squared distance of
//! Makhlin invariants. A second stage can recover explicit outer local gates.

use num_complex::Complex;
use rand::Rng;

use crate::error::{Error, Result};
use crate::families::cnot;
use crate::gate::TwoQubitGate;
use crate::invariants::{local_invariants, LocalInvariants};
use crate::linalg::{Kron, Matrix2, Matrix4};
use crate::optim::{multistart, NelderMead};
use crate::sampling::SampleRng;
use crate::scalar::Real;

/// Default residual below which a construction is reported as existing.
pub const DEFAULT_TOL: f64 = 1e-8;
/// Residuals above this are reported as an obstruction.
pub const INCONCLUSIVE_CEILING: f64 = 1e-3;
/// Infidelity at which an explicit local dressing is accepted.
pub const ALIGN_TOL: f64 = 1e-6;

/// `Rz(φ) Ry(θ) Rz(λ)` with `Rz(a) = diag(e^{-ia/2}, e^{ia/2})`; covers SU(2).
pub fn su2_from_angles<T: Real>(phi: T, theta: T, lambda: T) -> Matrix2<T> {
    let half = T::lit(0.5);
    let (s, co) = (theta * half).sin_cos();
    let e = |r: T, a: T| Complex::from_polar(r, a);
    let sum = (phi + lambda) * half;
    let diff = (phi - lambda) * half;
    Matrix2::from_rows([
        [e(co, -sum), -e(s, -diff)],
        [e(s, diff), e(co, sum)],
    ])
}

/// Six Euler angles, three per qubit, of a local gate `u ⊗ v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalPairParams<T>(pub [T; 6]);

impl<T: Real> LocalPairParams<T> {
    pub fn from_slice(x: &[T]) -> Self {
        let mut a = [T::zero(); 6];
        a.copy_from_slice(&x[..6]);
        Self(a)
    }

    pub fn identity() -> Self {
        Self([T::zero(); 6])
    }

    /// Angles reduced into `[0, 2π)`. Because SU(2) has period `4π` in these
    /// angles, reduction may flip the sign of a factor, which cancels in `u ⊗ v`
    /// only up to a global sign.
    pub fn wrapped(&self) -> Self {
        let four_pi = T::lit(4.0) * T::PI();
        Self(self.0.map(|a| a - four_pi * (a / four_pi).floor()))
    }

    pub fn matrix(&self) -> Matrix4<T> {
        let [a, b, c, d, e, f] = self.0;
        su2_from_angles(a, b, c).kron(&su2_from_angles(d, e, f))
    }
}

/// Squared invariant distance of `gate` to `target`, minimized over the two
/// conjugates of the target's `G1`.
pub fn invariant_distance<T: Real>(gate: &TwoQubitGate<T>, target: &LocalInvariants<T>) -> Result<T> {
    Ok(local_invariants(gate)?.distance_sqr_up_to_conjugation(target))
}

fn cnot_invariants<T: Real>() -> LocalInvariants<T> {
    LocalInvariants::new(Complex::new(T::zero(), T::zero()), T::one())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    ConstructionExists,
    Inconclusive,
    Obstructed,
}

impl Verdict {
    pub fn classify(residual: f64, tol: f64) -> Self {
        if residual <= tol {
            Verdict::ConstructionExists
        } else if residual <= INCONCLUSIVE_CEILING {
            Verdict::Inconclusive
        } else {
            Verdict::Obstructed
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::ConstructionExists => "construction exists",
            Verdict::Inconclusive => "inconclusive - increase restarts",
            Verdict::Obstructed => "obstructed",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Alignment<T> {
    pub before: LocalPairParams<T>,
    pub after: LocalPairParams<T>,
    pub infidelity: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SynthesisResult<T> {
    pub base: String,
    pub middle: LocalPairParams<T>,
    pub residual: T,
    pub restarts_used: usize,
    pub best_restart: usize,
    pub seed: u64,
    pub tol: T,
    pub verdict: Verdict,
    pub alignment: Option<Alignment<T>>,
}

fn sandwich<T: Real>(base: &Matrix4<T>, middle: &Matrix4<T>) -> Matrix4<T> {
    *base * *middle * *base
}

fn uniform_angles<T: Real>(rng: &mut SampleRng, n: usize) -> Vec<T> {
    let two_pi = 2.0 * std::f64::consts::PI;
    (0..n).map(|_| T::lit(rng.random::<f64>() * two_pi)).collect()
}

/// Raw invariants of a product of unitaries; skips the validation in
/// [`local_invariants`] because the optimizer only visits unitary points.
fn fast_invariants<T: Real>(u: &Matrix4<T>) -> LocalInvariants<T> {
    let ub = crate::invariants::to_bell_basis(u);
    let m = ub.transpose() * ub;
    let det = u.determinant();
    let tr = m.trace();
    let tr2 = tr * tr;
    LocalInvariants::new(
        tr2 / (det * T::lit(16.0)),
        ((tr2 - m.trace_of_product(&m)) / (det * T::lit(4.0))).re,
    )
}

fn search_optimizer() -> NelderMead {
    NelderMead {
        initial_step: 0.6,
        max_evaluations: 30_000,
        f_abs_tol: 1e-22,
        f_rel_tol: 1e-14,
        x_tol: 1e-10,
        rebuilds: 3,
    }
}

/// Minimizes `invariant_distance(base · k · base, CNOT)` over middle local
/// gates `k`, with `restarts` seeded multistart runs.
pub fn search_two_gate_cnot<T: Real>(
    base: &TwoQubitGate<T>,
    restarts: usize,
    seed: u64,
    tol: T,
) -> Result<SynthesisResult<T>> {
    if restarts == 0 {
        return Err(Error::Precondition("need at least one restart".into()));
    }
    let b = *base.matrix();
    let target = cnot_invariants::<T>();
    let objective = |x: &[T]| {
        let k = LocalPairParams::from_slice(x).matrix();
        fast_invariants(&sandwich(&b, &k)).distance_sqr_up_to_conjugation(&target)
    };
    let out = multistart(&search_optimizer(), restarts, seed, |rng| uniform_angles(rng, 6), objective);
    let middle = LocalPairParams::from_slice(&out.best.x);
    let composed = TwoQubitGate::from_unitary("V·k·V", sandwich(&b, &middle.matrix()));
    let residual = invariant_distance(&composed, &target)?;
    Ok(SynthesisResult {
        base: base.name().to_string(),
        middle,
        residual,
        restarts_used: restarts,
        best_restart: out.best_index,
        seed,
        tol,
        verdict: Verdict::classify(residual.as_f64(), tol.as_f64()),
        alignment: None,
    })
}

/// `1 - |tr((k1 V k2)† target)| / 4`.
pub fn alignment_infidelity<T: Real>(v: &Matrix4<T>, target: &Matrix4<T>, before: &LocalPairParams<T>, after: &LocalPairParams<T>) -> T {
    let dressed = after.matrix() * *v * before.matrix();
    T::one() - dressed.hs_inner(target).norm() / T::lit(4.0)
}

/// Searches local gates `k1`, `k2` minimizing the infidelity of `k1 V k2`
/// with `target` (up to global phase). `before = k2`, `after = k1`.
pub fn align_locals<T: Real>(
    v: &TwoQubitGate<T>,
    target: &TwoQubitGate<T>,
    restarts: usize,
    seed: u64,
) -> Result<Alignment<T>> {
    if restarts == 0 {
        return Err(Error::Precondition("need at least one restart".into()));
    }
    let vm = *v.matrix();
    let tm = *target.matrix();
    let objective = |x: &[T]| {
        let before = LocalPairParams::from_slice(&x[..6]);
        let after = LocalPairParams::from_slice(&x[6..]);
        alignment_infidelity(&vm, &tm, &before, &after)
    };
    let nm = NelderMead {
        initial_step: 0.6,
        max_evaluations: 60_000,
        f_abs_tol: 1e-18,
        f_rel_tol: 1e-14,
        x_tol: 1e-10,
        rebuilds: 4,
    };
    let out = multistart(&nm, restarts, seed, |rng| uniform_angles(rng, 12), objective);
    let before = LocalPairParams::from_slice(&out.best.x[..6]);
    let after = LocalPairParams::from_slice(&out.best.x[6..]);
    let infidelity = alignment_infidelity(&vm, &tm, &before, &after);
    Ok(Alignment {
        before,
        after,
        infidelity,
    })
}

/// Runs [`search_two_gate_cnot`] and, when it reports a construction, tries to
/// recover explicit outer local gates turning `V k V` into CNOT.
pub fn synthesize_cnot<T: Real>(
    base: &TwoQubitGate<T>,
    restarts: usize,
    seed: u64,
    tol: T,
) -> Result<SynthesisResult<T>> {
    let mut result = search_two_gate_cnot(base, restarts, seed, tol)?;
    if result.verdict == Verdict::ConstructionExists {
        let composed = TwoQubitGate::from_unitary(
            "V·k·V",
            sandwich(base.matrix(), &result.middle.matrix()),
        );
        result.alignment = Some(align_locals(&composed, &cnot(), restarts.clamp(1, 64), seed)?);
    }
    Ok(result)
}

/// The explicit circuit `k1 · V · k · V · k2` described by a result with an alignment.
pub fn composed_circuit<T: Real>(base: &TwoQubitGate<T>, result: &SynthesisResult<T>) -> Option<Matrix4<T>> {
    let al = result.alignment.as_ref()?;
    Some(al.after.matrix() * sandwich(base.matrix(), &result.middle.matrix()) * al.before.matrix())
}
