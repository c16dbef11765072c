//! Named gates, the `SWAP^α` and controlled-unitary families, and their
//! closed-form invariants, entangling powers and output concurrences.

use num_complex::Complex;
use rand::Rng;

use crate::error::{Error, Result};
use crate::gate::TwoQubitGate;
use crate::invariants::LocalInvariants;
use crate::linalg::{c, Matrix4};
use crate::optim::{multistart, NelderMead};
use crate::scalar::Real;
use crate::states::{evolve, ProductStatePair};

pub fn identity<T: Real>() -> TwoQubitGate<T> {
    TwoQubitGate::from_unitary("IDENTITY", Matrix4::identity())
}

/// Controlled NOT with qubit 1 as control.
pub fn cnot<T: Real>() -> TwoQubitGate<T> {
    let o = c(1.0, 0.0);
    let z = c(0.0, 0.0);
    TwoQubitGate::from_unitary(
        "CNOT",
        Matrix4::from_rows([[o, z, z, z], [z, o, z, z], [z, z, z, o], [z, z, o, z]]),
    )
}

pub fn swap<T: Real>() -> TwoQubitGate<T> {
    let o = c(1.0, 0.0);
    let z = c(0.0, 0.0);
    TwoQubitGate::from_unitary(
        "SWAP",
        Matrix4::from_rows([[o, z, z, z], [z, z, o, z], [z, o, z, z], [z, z, z, o]]),
    )
}

fn swap_alpha_matrix<T: Real>(alpha: T) -> Matrix4<T> {
    let w = Complex::from_polar(T::one(), T::PI() * alpha);
    let one = Complex::new(T::one(), T::zero());
    let half = T::lit(0.5);
    let p = (one + w) * half;
    let q = (one - w) * half;
    let z = Complex::new(T::zero(), T::zero());
    Matrix4::from_rows([[one, z, z, z], [z, p, q, z], [z, q, p, z], [z, z, z, one]])
}

/// `SWAP^α`: identity on `|00>`, `|11>` and the block
/// `[[(1+e^{iπα})/2, (1-e^{iπα})/2], [(1-e^{iπα})/2, (1+e^{iπα})/2]]` on `|01>`, `|10>`.
pub fn swap_alpha<T: Real>(alpha: T) -> TwoQubitGate<T> {
    TwoQubitGate::from_unitary(format!("SWAP^{alpha}"), swap_alpha_matrix(alpha))
}

fn check_root(m: f64) -> Result<()> {
    if m.is_nan() || m < 1.0 {
        return Err(Error::Precondition(format!("root order m must be >= 1, got {m}")));
    }
    Ok(())
}

/// `SWAP^(1/m)` for `m >= 1`.
pub fn swap_root<T: Real>(m: T) -> Result<TwoQubitGate<T>> {
    check_root(m.as_f64())?;
    Ok(TwoQubitGate::from_unitary(
        format!("SWAP^(1/{m})"),
        swap_alpha_matrix(T::one() / m),
    ))
}

/// `EP(SWAP^α) = (1 - cos 2πα)/12`.
pub fn ep_swap_alpha_closed<T: Real>(alpha: T) -> T {
    let twelfth = T::one() / T::lit(12.0);
    twelfth - twelfth * (T::lit(2.0) * T::PI() * alpha).cos()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GateCount {
    Feasible(u32),
    /// `SWAP^(1/m)` carries no entangling power, so no number of copies reaches CNOT's.
    Infeasible,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GateCountResult<T> {
    pub m: T,
    pub count: GateCount,
}

/// Least `n` with `n (1 - cos(2π/m)) >= 8/3`, i.e. `n EP(SWAP^(1/m)) >= EP(CNOT)`.
///
/// This is a necessary entangling-power budget, not a proof that `n` copies
/// suffice to build CNOT.
pub fn cnot_gate_count<T: Real>(m: T) -> Result<GateCountResult<T>> {
    check_root(m.as_f64())?;
    let x = T::one() - (T::lit(2.0) * T::PI() / m).cos();
    let need = T::lit(8.0) / T::lit(3.0);
    let slack = T::epsilon() * T::lit(64.0);
    if x <= slack {
        return Ok(GateCountResult { m, count: GateCount::Infeasible });
    }
    let guess = (need / x).ceil().max(T::one());
    let Some(mut n) = guess.to_u32() else {
        return Ok(GateCountResult { m, count: GateCount::Infeasible });
    };
    // ceil can overshoot by one when need / x is an integer up to rounding
    while n > 1 && T::lit(f64::from(n - 1)) * x >= need - slack {
        n -= 1;
    }
    Ok(GateCountResult { m, count: GateCount::Feasible(n) })
}

/// Closed-form invariants of `SWAP^(1/m)`:
/// `G1 = [9 e^{-iπ/m} + e^{3iπ/m} + 6 e^{iπ/m}]/16`, `G2 = 3 cos(π/m)`.
pub fn swap1m_invariants_closed<T: Real>(m: T) -> Result<LocalInvariants<T>> {
    check_root(m.as_f64())?;
    let phi = T::PI() / m;
    let e = |k: T, a: T| Complex::from_polar(k, a);
    let g1 = (e(T::lit(9.0), -phi) + e(T::one(), T::lit(3.0) * phi) + e(T::lit(6.0), phi)) / T::lit(16.0);
    Ok(LocalInvariants::new(g1, T::lit(3.0) * phi.cos()))
}

/// Parameters of the controlled-unitary family (radians).
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct CUParams<T> {
    pub alpha: T,
    pub beta: T,
    pub theta: T,
    pub delta: T,
}

impl<T: Real> CUParams<T> {
    pub fn new(alpha: T, beta: T, theta: T, delta: T) -> Self {
        Self { alpha, beta, theta, delta }
    }
}

/// Controlled unitary: identity on the control-0 block and, on the control-1
/// block, `e^{iδ} [[e^{i(α+β)/2} cos θ/2, e^{i(α-β)/2} sin θ/2],
/// [-e^{-i(α-β)/2} sin θ/2, e^{-i(α+β)/2} cos θ/2]]`.
pub fn cu_gate<T: Real>(p: CUParams<T>) -> TwoQubitGate<T> {
    let half = T::lit(0.5);
    let (a, b, d) = (p.alpha * half, p.beta * half, p.delta);
    let (s, co) = (p.theta * half).sin_cos();
    let e = |r: T, phase: T| Complex::from_polar(r, phase);
    let one = Complex::new(T::one(), T::zero());
    let z = Complex::new(T::zero(), T::zero());
    let m = Matrix4::from_rows([
        [one, z, z, z],
        [z, one, z, z],
        [z, z, e(co, d + a + b), e(s, d + a - b)],
        [z, z, -e(s, d - a + b), e(co, d - a - b)],
    ]);
    TwoQubitGate::from_unitary(
        format!("CU(α={}, β={}, θ={}, δ={})", p.alpha, p.beta, p.theta, p.delta),
        m,
    )
}

/// `EP(CU) = 2/9 - (1/9) cos²(θ/2) (1 + cos(α+β))`; independent of δ.
pub fn ep_cu_closed<T: Real>(alpha: T, beta: T, theta: T) -> T {
    let nine = T::lit(9.0);
    T::lit(2.0) / nine - cnot_class_expression(alpha, beta, theta) / nine
}

/// `cos²(θ/2) [1 + cos(α+β)]`, zero exactly on the CNOT class.
pub fn cnot_class_expression<T: Real>(alpha: T, beta: T, theta: T) -> T {
    (theta * T::lit(0.5)).cos().powi(2) * (T::one() + (alpha + beta).cos())
}

/// `G1 = cos²(θ/2) cos²((α+β)/2)`, `G2 = 2 G1 + 1`.
pub fn cu_invariants_closed<T: Real>(alpha: T, beta: T, theta: T) -> LocalInvariants<T> {
    let half = T::lit(0.5);
    let g1 = ((theta * half).cos() * ((alpha + beta) * half).cos()).powi(2);
    LocalInvariants::new(Complex::new(g1, T::zero()), T::lit(2.0) * g1 + T::one())
}

/// Membership of a CU gate in the local-equivalence class of CNOT.
pub fn is_cnot_class<T: Real>(alpha: T, beta: T, theta: T, tol: T) -> bool {
    cnot_class_expression(alpha, beta, theta) <= tol
}

/// `C = 2 |-(1 - e^{2πi/m}) (af - be)² / 4|` for `SWAP^(1/m)` acting on `(a,b)⊗(e,f)`.
pub fn concurrence_swap1m_closed<T: Real>(m: T, p: &ProductStatePair<T>) -> Result<T> {
    check_root(m.as_f64())?;
    let (a, b, e, f) = p.amplitudes();
    let one = Complex::new(T::one(), T::zero());
    let w = Complex::from_polar(T::one(), T::lit(2.0) * T::PI() / m);
    let k = a * f - b * e;
    Ok(T::lit(0.5) * ((one - w) * k * k).norm())
}

fn wrapped<T: Real>(x: T) -> T {
    let two_pi = T::PI() + T::PI();
    let y = x - two_pi * (x / two_pi).round();
    y.abs()
}

const REGIME_TOL: f64 = 1e-12;

/// Output concurrence of a CU gate on `(a,b)⊗(e,f)`.
///
/// For `θ ≡ π` this is `2|ab (e² e^{-i(α-β)/2} + f² e^{i(α-β)/2})|`; for
/// `α+β ≡ π` it is `2|2ab ef cos(θ/2) + ab sin(θ/2)(e² e^{-iα} - f² e^{iα})|`.
/// Other parameters fall back to evolving the state directly.
pub fn concurrence_cu_closed<T: Real>(p: &CUParams<T>, sp: &ProductStatePair<T>) -> T {
    let (a, b, e, f) = sp.amplitudes();
    let two = T::lit(2.0);
    let tol = T::lit(REGIME_TOL).max(T::epsilon() * T::lit(16.0));
    if wrapped(p.theta - T::PI()) <= tol {
        let h = (p.alpha - p.beta) * T::lit(0.5);
        let ph = Complex::from_polar(T::one(), h);
        two * (a * b * (e * e * ph.conj() + f * f * ph)).norm()
    } else if wrapped(p.alpha + p.beta - T::PI()) <= tol {
        let (s, co) = (p.theta * T::lit(0.5)).sin_cos();
        let ph = Complex::from_polar(T::one(), p.alpha);
        let inner = a * b * e * f * (two * co) + a * b * (e * e * ph.conj() - f * f * ph) * s;
        two * inner.norm()
    } else {
        evolve(cu_gate(*p).matrix(), &sp.product_state()).concurrence()
    }
}

/// Product state from Bloch angles `(θ1, φ1, θ2, φ2)`.
pub fn product_from_angles<T: Real>(x: &[T]) -> ProductStatePair<T> {
    let half = T::lit(0.5);
    let qubit = |theta: T, phi: T| {
        let (s, co) = (theta * half).sin_cos();
        (Complex::new(co, T::zero()), Complex::from_polar(s, phi))
    };
    let (a, b) = qubit(x[0], x[1]);
    let (e, f) = qubit(x[2], x[3]);
    ProductStatePair::new_unchecked(a, b, e, f)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MaxConcurrence<T> {
    pub value: T,
    pub input: ProductStatePair<T>,
    pub restarts: usize,
    pub converged_restarts: usize,
}

/// Largest output concurrence of `gate` over product inputs, found by
/// multistart Nelder-Mead over the four Bloch angles.
pub fn max_output_concurrence<T: Real>(
    gate: &TwoQubitGate<T>,
    restarts: usize,
    seed: u64,
) -> Result<MaxConcurrence<T>> {
    if restarts == 0 {
        return Err(Error::Precondition("need at least one restart".into()));
    }
    let u = *gate.matrix();
    // maximize C² = 4|αδ - βγ|², which is smooth in the angles
    let objective = |x: &[T]| {
        let c = evolve(&u, &product_from_angles(x).product_state()).concurrence();
        -(c * c)
    };
    let start = |rng: &mut crate::sampling::SampleRng| {
        let pi = std::f64::consts::PI;
        vec![
            T::lit(rng.random::<f64>() * pi),
            T::lit(rng.random::<f64>() * 2.0 * pi),
            T::lit(rng.random::<f64>() * pi),
            T::lit(rng.random::<f64>() * 2.0 * pi),
        ]
    };
    let nm = NelderMead {
        initial_step: 0.4,
        ..NelderMead::default()
    };
    let out = multistart(&nm, restarts, seed, start, objective);
    if out.converged_restarts == 0 {
        return Err(Error::OptimizerNonConvergence {
            best: (-out.best.value).sqrt().as_f64(),
        });
    }
    let input = product_from_angles(&out.best.x);
    let value = evolve(&u, &input.product_state()).concurrence();
    Ok(MaxConcurrence {
        value,
        input,
        restarts,
        converged_restarts: out.converged_restarts,
    })
}
