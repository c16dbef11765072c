//! Family sweeps and the SWAP^(1/m) gate-count table.

use entangle_core::families::{
    cnot_gate_count, cu_gate, cu_invariants_closed, ep_cu_closed, ep_swap_alpha_closed, swap_root,
    swap1m_invariants_closed, CUParams, GateCount,
};
use entangle_core::power::ep_exact;
use entangle_core::weyl::{is_perfect_entangler_coords, is_perfect_entangler_hull, weyl_coordinates, BOUNDARY_TOL};
use entangle_core::{local_invariants, Gate, Invariants};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::format::{decimal, symbolic_rational};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanRecord {
    pub family: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<f64>,
    pub alpha: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    pub ep_closed: f64,
    pub ep_exact: f64,
    pub g1_re: f64,
    pub g1_im: f64,
    pub g2: f64,
    pub g1_closed_re: f64,
    pub g1_closed_im: f64,
    pub g2_closed: f64,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub pe_hull: bool,
    pub pe_coords: bool,
}

const CSV_COLUMNS: [&str; 19] = [
    "family", "m", "alpha", "beta", "theta", "delta", "ep_closed", "ep_exact", "g1_re", "g1_im", "g2",
    "g1_closed_re", "g1_closed_im", "g2_closed", "c1", "c2", "c3", "pe_hull", "pe_coords",
];

fn measure(
    family: &'static str,
    gate: &Gate,
    ep_closed: f64,
    closed: Invariants,
) -> CliResult<ScanRecord> {
    let inv = local_invariants(gate)?;
    let c = weyl_coordinates(gate)?.coords();
    let point = entangle_core::WeylPoint::new(c);
    Ok(ScanRecord {
        family,
        m: None,
        alpha: 0.0,
        beta: None,
        theta: None,
        delta: None,
        ep_closed,
        ep_exact: ep_exact(gate).value,
        g1_re: inv.g1.re,
        g1_im: inv.g1.im,
        g2: inv.g2,
        g1_closed_re: closed.g1.re,
        g1_closed_im: closed.g1.im,
        g2_closed: closed.g2,
        c1: c[0],
        c2: c[1],
        c3: c[2],
        pe_hull: is_perfect_entangler_hull(gate, BOUNDARY_TOL)?,
        pe_coords: is_perfect_entangler_coords(&point),
    })
}

fn grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => vec![],
        1 => vec![lo],
        n => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
    }
}

/// `SWAP^(1/m)` over `m` in `[lo, hi]`: integer steps when `steps` is `None`,
/// otherwise `steps` evenly spaced points.
pub fn scan_swap(lo: f64, hi: f64, steps: Option<usize>) -> CliResult<Vec<ScanRecord>> {
    if lo.is_nan() || hi.is_nan() || lo < 1.0 || hi < lo {
        return Err(CliError::Validation(format!("swap scan needs 1 <= lo <= hi, got {lo}..{hi}")));
    }
    let ms = match steps {
        None => {
            let mut v = Vec::new();
            let mut m = lo;
            while m <= hi + 1e-12 {
                v.push(m);
                m += 1.0;
            }
            v
        }
        Some(n) => grid(lo, hi, n),
    };
    ms.into_iter()
        .map(|m| {
            let gate = swap_root(m)?;
            let mut rec = measure("swap", &gate, ep_swap_alpha_closed(1.0 / m), swap1m_invariants_closed(m)?)?;
            rec.m = Some(m);
            rec.alpha = 1.0 / m;
            Ok(rec)
        })
        .collect()
}

/// CU gates on a `steps x steps` grid of `θ` and `α + β`, with `α = β`.
pub fn scan_cu(theta: (f64, f64), apb: (f64, f64), steps: usize, delta: f64) -> CliResult<Vec<ScanRecord>> {
    if steps == 0 {
        return Err(CliError::Validation("cu scan needs --steps >= 1".into()));
    }
    let mut out = Vec::with_capacity(steps * steps);
    for &t in &grid(theta.0, theta.1, steps) {
        for &s in &grid(apb.0, apb.1, steps) {
            let (a, b) = (s / 2.0, s / 2.0);
            let gate = cu_gate(CUParams::new(a, b, t, delta));
            let mut rec = measure("cu", &gate, ep_cu_closed(a, b, t), cu_invariants_closed(a, b, t))?;
            rec.alpha = a;
            rec.beta = Some(b);
            rec.theta = Some(t);
            rec.delta = Some(delta);
            out.push(rec);
        }
    }
    Ok(out)
}

pub fn scan_csv(records: &[ScanRecord]) -> String {
    let mut s = CSV_COLUMNS.join(",");
    s.push('\n');
    let opt = |x: Option<f64>| x.map(decimal).unwrap_or_default();
    for r in records {
        let fields = [
            r.family.to_string(),
            opt(r.m),
            decimal(r.alpha),
            opt(r.beta),
            opt(r.theta),
            opt(r.delta),
            decimal(r.ep_closed),
            decimal(r.ep_exact),
            decimal(r.g1_re),
            decimal(r.g1_im),
            decimal(r.g2),
            decimal(r.g1_closed_re),
            decimal(r.g1_closed_im),
            decimal(r.g2_closed),
            decimal(r.c1),
            decimal(r.c2),
            decimal(r.c3),
            r.pe_hull.to_string(),
            r.pe_coords.to_string(),
        ];
        s.push_str(&fields.join(","));
        s.push('\n');
    }
    s
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table1Row {
    pub m: f64,
    pub ep: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ep_symbolic: Option<String>,
    /// Least number of copies whose total entangling power reaches CNOT's;
    /// absent when infeasible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub feasible: bool,
}

pub fn table1(ms: &[f64]) -> CliResult<Vec<Table1Row>> {
    ms.iter()
        .map(|&m| {
            let count = cnot_gate_count(m)?;
            let ep = ep_swap_alpha_closed(1.0 / m);
            Ok(Table1Row {
                m,
                ep,
                ep_symbolic: symbolic_rational(ep),
                n: match count.count {
                    GateCount::Feasible(n) => Some(n),
                    GateCount::Infeasible => None,
                },
                feasible: count.count != GateCount::Infeasible,
            })
        })
        .collect()
}

pub fn table1_csv(rows: &[Table1Row]) -> String {
    let mut s = String::from("m,ep,n\n");
    for r in rows {
        let n = r.n.map(|n| n.to_string()).unwrap_or_else(|| "infeasible".into());
        s.push_str(&format!("{},{},{}\n", decimal(r.m), decimal(r.ep), n));
    }
    s
}
