//! Gate descriptors: the JSON input format and the compact `--base` syntax.

use std::path::Path;

use entangle_core::families::{cnot, cu_gate, identity, swap, swap_alpha, swap_root, CUParams};
use entangle_core::{Gate, Mat4, C64};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::format::parse_real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Builtin {
    Cnot,
    Swap,
    Identity,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexEntry {
    pub re: f64,
    pub im: f64,
}

/// Exactly one way of naming a two-qubit gate.
///
/// ```json
/// {"builtin": "CNOT"}
/// {"swap_power": {"alpha": 0.5}}
/// {"swap_root": {"m": 3}}
/// {"controlled_unitary": {"alpha": 0, "beta": 3.14159, "theta": 3.14159, "delta": 1.5708}}
/// {"matrix": [[{"re": 1, "im": 0}, ...], ...]}
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GateDescriptor {
    Builtin(Builtin),
    SwapPower { alpha: f64 },
    SwapRoot { m: f64 },
    ControlledUnitary { alpha: f64, beta: f64, theta: f64, delta: f64 },
    /// Row-major 4x4 entries.
    Matrix(Vec<Vec<ComplexEntry>>),
}

impl GateDescriptor {
    /// Builds and validates the gate.
    pub fn to_gate(&self) -> CliResult<Gate> {
        let gate = match self {
            GateDescriptor::Builtin(Builtin::Cnot) => cnot(),
            GateDescriptor::Builtin(Builtin::Swap) => swap(),
            GateDescriptor::Builtin(Builtin::Identity) => identity(),
            GateDescriptor::SwapPower { alpha } => swap_alpha(*alpha),
            GateDescriptor::SwapRoot { m } => swap_root(*m)?,
            GateDescriptor::ControlledUnitary { alpha, beta, theta, delta } => {
                cu_gate(CUParams::new(*alpha, *beta, *theta, *delta))
            }
            GateDescriptor::Matrix(rows) => {
                if rows.len() != 4 || rows.iter().any(|r| r.len() != 4) {
                    return Err(CliError::Parse(
                        "matrix descriptor must have 4 rows of 4 {re, im} entries".into(),
                    ));
                }
                let m = Mat4::from_fn(|i, j| C64::new(rows[i][j].re, rows[i][j].im));
                Gate::new("matrix", m)?
            }
        };
        Ok(gate)
    }

    pub fn matrix_of(gate: &Gate) -> Self {
        GateDescriptor::Matrix(
            gate.matrix()
                .rows()
                .iter()
                .map(|r| r.iter().map(|z| ComplexEntry { re: z.re, im: z.im }).collect())
                .collect(),
        )
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("gate descriptor: {e}")))
    }

    pub fn from_file(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("reading {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Compact syntax: `cnot`, `swap`, `identity`, `swap-root:M`,
    /// `swap-power:A`, `cu:ALPHA,BETA,THETA,DELTA`, `file:PATH`.
    pub fn parse_spec(spec: &str) -> CliResult<Self> {
        let (kind, arg) = match spec.split_once(':') {
            Some((k, a)) => (k.trim().to_ascii_lowercase(), Some(a.trim())),
            None => (spec.trim().to_ascii_lowercase(), None),
        };
        let num = |s: &str| parse_real(s).map_err(CliError::Parse);
        fn need<'a>(spec: &str, a: Option<&'a str>) -> CliResult<&'a str> {
            a.ok_or_else(|| CliError::Parse(format!("gate spec {spec:?} needs an argument after ':'")))
        }
        match (kind.as_str(), arg) {
            ("cnot", None) => Ok(GateDescriptor::Builtin(Builtin::Cnot)),
            ("swap", None) => Ok(GateDescriptor::Builtin(Builtin::Swap)),
            ("identity" | "id", None) => Ok(GateDescriptor::Builtin(Builtin::Identity)),
            ("swap-root", a) => Ok(GateDescriptor::SwapRoot { m: num(need(spec, a)?)? }),
            ("swap-power", a) => Ok(GateDescriptor::SwapPower { alpha: num(need(spec, a)?)? }),
            ("cu", a) => {
                let parts: Vec<&str> = need(spec, a)?.split(',').collect();
                if parts.len() != 4 {
                    return Err(CliError::Parse(format!(
                        "cu spec needs four angles alpha,beta,theta,delta; got {spec:?}"
                    )));
                }
                Ok(GateDescriptor::ControlledUnitary {
                    alpha: num(parts[0])?,
                    beta: num(parts[1])?,
                    theta: num(parts[2])?,
                    delta: num(parts[3])?,
                })
            }
            ("file", a) => Self::from_file(Path::new(need(spec, a)?)),
            _ => Err(CliError::Parse(format!("unknown gate spec {spec:?}"))),
        }
    }
}
