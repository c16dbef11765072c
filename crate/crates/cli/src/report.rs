//! Structured reports emitted by the subcommands.

use entangle_core::families::max_output_concurrence;
use entangle_core::power::{ep_exact, ep_monte_carlo, ep_r_form};
use entangle_core::synthesis::{composed_circuit, SynthesisResult};
use entangle_core::weyl::{is_perfect_entangler_coords, is_perfect_entangler_hull, weyl_coordinates, BOUNDARY_TOL};
use entangle_core::{local_invariants, Gate, Mat4, Real, C64};
use serde::Serialize;

use crate::descriptor::GateDescriptor;
use crate::error::{CliError, CliResult};
use crate::format::{symbolic_angle, symbolic_rational};

pub const TOOL: &str = "entangle";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const G1_CONVENTION: &str = "g1 is computed from the gate matrix; the Weyl-coordinate \
formula evaluated at `weyl` yields its complex conjugate (same G2). Comparisons against \
coordinate closed forms accept either conjugate.";

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ComplexOut {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for ComplexOut {
    fn from(z: C64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantsOut {
    pub g1: ComplexOut,
    pub g2: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeylOut {
    pub coords: [f64; 3],
    pub symbolic: [Option<String>; 3],
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonteCarloOut {
    pub value: f64,
    pub std_error: f64,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntanglingPowerOut {
    pub exact: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_symbolic: Option<String>,
    pub r_form: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monte_carlo: Option<MonteCarloOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PerfectEntanglerOut {
    pub hull: bool,
    pub coords: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProductInputOut {
    pub a: ComplexOut,
    pub b: ComplexOut,
    pub e: ComplexOut,
    pub f: ComplexOut,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaxConcurrenceOut {
    pub value: f64,
    pub input: ProductInputOut,
    pub restarts: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TolerancesOut {
    pub unitarity: f64,
    pub eigenphase: f64,
    pub boundary: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharacterizationReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub gate: GateDescriptor,
    pub gate_name: String,
    pub invariants: InvariantsOut,
    pub g1_convention: &'static str,
    pub weyl: WeylOut,
    pub entangling_power: EntanglingPowerOut,
    pub perfect_entangler: PerfectEntanglerOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_output_concurrence: Option<MaxConcurrenceOut>,
    pub tolerances: TolerancesOut,
}

#[derive(Clone, Debug, Default)]
pub struct CharacterizeOptions {
    pub monte_carlo_samples: Option<usize>,
    pub max_concurrence_restarts: Option<usize>,
    pub seed: u64,
    pub boundary_tol: Option<f64>,
}

pub fn entangling_power(gate: &Gate, samples: Option<usize>, seed: u64) -> CliResult<EntanglingPowerOut> {
    let exact = ep_exact(gate).value;
    let monte_carlo = match samples {
        Some(n) => {
            let mc = ep_monte_carlo(gate, n, seed)?;
            Some(MonteCarloOut {
                value: mc.value,
                std_error: mc.std_error.unwrap_or(0.0),
                samples: n,
                seed,
            })
        }
        None => None,
    };
    Ok(EntanglingPowerOut {
        exact,
        exact_symbolic: symbolic_rational(exact),
        r_form: ep_r_form(gate).value,
        monte_carlo,
    })
}

pub fn max_concurrence(gate: &Gate, restarts: usize, seed: u64) -> CliResult<MaxConcurrenceOut> {
    let r = max_output_concurrence(gate, restarts, seed)?;
    let (a, b, e, f) = r.input.amplitudes();
    Ok(MaxConcurrenceOut {
        value: r.value,
        input: ProductInputOut {
            a: a.into(),
            b: b.into(),
            e: e.into(),
            f: f.into(),
        },
        restarts,
        seed,
    })
}

pub fn characterize(descriptor: &GateDescriptor, opts: &CharacterizeOptions) -> CliResult<CharacterizationReport> {
    let gate = descriptor.to_gate()?;
    let inv = local_invariants(&gate)?;
    let point = weyl_coordinates(&gate)?;
    let coords = point.coords();
    let boundary = opts.boundary_tol.unwrap_or(BOUNDARY_TOL);
    let report = CharacterizationReport {
        tool: TOOL,
        version: VERSION,
        gate: descriptor.clone(),
        gate_name: gate.name().to_string(),
        invariants: InvariantsOut {
            g1: inv.g1.into(),
            g2: inv.g2,
        },
        g1_convention: G1_CONVENTION,
        weyl: WeylOut {
            coords,
            symbolic: coords.map(symbolic_angle),
        },
        entangling_power: entangling_power(&gate, opts.monte_carlo_samples, opts.seed)?,
        perfect_entangler: PerfectEntanglerOut {
            hull: is_perfect_entangler_hull(&gate, boundary)?,
            coords: match opts.boundary_tol {
                Some(tol) => point.is_perfect_entangler(tol),
                None => is_perfect_entangler_coords(&point),
            },
        },
        max_output_concurrence: match opts.max_concurrence_restarts {
            Some(r) => Some(max_concurrence(&gate, r, opts.seed)?),
            None => None,
        },
        tolerances: TolerancesOut {
            unitarity: f64::UNITARITY_TOL,
            eigenphase: f64::EIGEN_TOL,
            boundary,
        },
    };
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EpReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub gate: GateDescriptor,
    pub entangling_power: EntanglingPowerOut,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaxConcurrenceReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub gate: GateDescriptor,
    pub max_output_concurrence: MaxConcurrenceOut,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlignmentOut {
    pub before: [f64; 6],
    pub after: [f64; 6],
    pub infidelity: f64,
    /// `max |k1 V k V k2 - e^{iφ} CNOT|` at the best global phase.
    pub circuit_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SynthesisReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub base: GateDescriptor,
    pub base_name: String,
    pub restarts: usize,
    pub seed: u64,
    pub tol: f64,
    pub residual: f64,
    pub verdict: &'static str,
    pub best_restart: usize,
    pub middle: [f64; 6],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alignment: Option<AlignmentOut>,
}

/// Distance to `target` after removing the best global phase.
pub fn phase_aligned_error(circuit: &Mat4, target: &Mat4) -> f64 {
    let overlap = target.hs_inner(circuit);
    let phase = if overlap.norm() > 0.0 {
        overlap / overlap.norm()
    } else {
        C64::new(1.0, 0.0)
    };
    circuit.max_abs_diff(&target.scale(phase))
}

pub fn synthesis_report(descriptor: &GateDescriptor, base: &Gate, r: &SynthesisResult<f64>) -> SynthesisReport {
    let alignment = r.alignment.as_ref().map(|al| {
        let circuit = composed_circuit(base, r).expect("alignment present");
        AlignmentOut {
            before: al.before.0,
            after: al.after.0,
            infidelity: al.infidelity.max(0.0),
            circuit_error: phase_aligned_error(&circuit, entangle_core::families::cnot::<f64>().matrix()),
        }
    });
    SynthesisReport {
        tool: TOOL,
        version: VERSION,
        base: descriptor.clone(),
        base_name: base.name().to_string(),
        restarts: r.restarts_used,
        seed: r.seed,
        tol: r.tol,
        residual: r.residual,
        verdict: r.verdict.as_str(),
        best_restart: r.best_restart,
        middle: r.middle.0,
        alignment,
    }
}

/// Serializes a report, rejecting non-finite numbers.
pub fn to_json<S: Serialize>(value: &S) -> CliResult<String> {
    let v = serde_json::to_value(value).map_err(|e| CliError::Numeric(format!("serializing report: {e}")))?;
    if has_bad_null(&v, false) {
        return Err(CliError::Numeric("report contains a non-finite value".into()));
    }
    serde_json::to_string_pretty(&v).map_err(|e| CliError::Numeric(format!("serializing report: {e}")))
}

// serde_json maps NaN and infinities to null; the only legitimate nulls are
// absent symbolic renderings.
fn has_bad_null(v: &serde_json::Value, allowed: bool) -> bool {
    match v {
        serde_json::Value::Null => !allowed,
        serde_json::Value::Object(map) => map
            .iter()
            .any(|(k, x)| has_bad_null(x, k == "symbolic" || k.ends_with("_symbolic"))),
        serde_json::Value::Array(items) => items.iter().any(|x| has_bad_null(x, allowed)),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::Builtin;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn cnot_report() {
        let r = characterize(&GateDescriptor::Builtin(Builtin::Cnot), &CharacterizeOptions::default()).unwrap();
        assert!(r.invariants.g1.re.abs() < 1e-12 && r.invariants.g1.im.abs() < 1e-12);
        assert!((r.invariants.g2 - 1.0).abs() < 1e-12);
        assert!((r.weyl.coords[0] - FRAC_PI_2).abs() < 1e-9);
        assert_eq!(r.weyl.symbolic[0].as_deref(), Some("pi/2"));
        assert_eq!(r.entangling_power.exact_symbolic.as_deref(), Some("2/9"));
        assert!(r.perfect_entangler.hull && r.perfect_entangler.coords);
    }

    #[test]
    fn sqrt_swap_report() {
        let r = characterize(&GateDescriptor::SwapRoot { m: 2.0 }, &CharacterizeOptions::default()).unwrap();
        assert!((r.entangling_power.exact - 1.0 / 6.0).abs() < 1e-12);
        for c in r.weyl.coords {
            assert!((c - FRAC_PI_4).abs() < 1e-9);
        }
        assert!(r.perfect_entangler.hull && r.perfect_entangler.coords);
    }

    #[test]
    fn identity_report() {
        let r = characterize(&GateDescriptor::Builtin(Builtin::Identity), &CharacterizeOptions::default()).unwrap();
        assert!(r.entangling_power.exact.abs() < 1e-12);
        assert!(!r.perfect_entangler.hull && !r.perfect_entangler.coords);
        assert!(to_json(&r).unwrap().contains("\"tool\": \"entangle\""));
    }
}
