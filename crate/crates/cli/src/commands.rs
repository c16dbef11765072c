//! Argument parsing and subcommand dispatch.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use entangle_core::synthesis::{synthesize_cnot, DEFAULT_TOL};
use serde::Serialize;

use crate::descriptor::GateDescriptor;
use crate::error::{CliError, CliResult};
use crate::format::{parse_range, parse_real};
use crate::report::{
    characterize, entangling_power, max_concurrence, synthesis_report, to_json, CharacterizeOptions,
    EpReport, MaxConcurrenceReport, TOOL, VERSION,
};
use crate::scan::{scan_csv, scan_cu, scan_swap, table1, table1_csv, ScanRecord, Table1Row};

#[derive(Debug, Parser)]
#[command(name = "entangle", version, about = "Nonlocal characterization of two-qubit gates")]
pub struct Cli {
    /// Seed for every randomized routine.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Boundary tolerance for characterize, residual tolerance for synthesize.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Report)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// JSON report.
    Report,
    /// CSV table (table1 and family-scan only).
    Csv,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GateArgs {
    /// CNOT, SWAP or IDENTITY.
    #[arg(long)]
    pub builtin: Option<String>,
    /// SWAP^alpha.
    #[arg(long, value_name = "ALPHA")]
    pub swap_power: Option<String>,
    /// SWAP^(1/m).
    #[arg(long, value_name = "M")]
    pub swap_root: Option<String>,
    /// Controlled unitary, as alpha,beta,theta,delta.
    #[arg(long, value_name = "A,B,T,D", allow_hyphen_values = true)]
    pub cu: Option<String>,
    /// Compact spec: cnot, swap, identity, swap-root:M, swap-power:A, cu:A,B,T,D, file:PATH.
    #[arg(long, value_name = "SPEC")]
    pub gate: Option<String>,
    /// JSON gate descriptor file.
    #[arg(long, value_name = "PATH")]
    pub matrix_file: Option<PathBuf>,
}

impl GateArgs {
    pub fn descriptor(&self) -> CliResult<GateDescriptor> {
        if let Some(name) = &self.builtin {
            return match GateDescriptor::parse_spec(name)? {
                d @ GateDescriptor::Builtin(_) => Ok(d),
                _ => Err(CliError::Parse(format!("unknown builtin {name:?}; expected CNOT, SWAP or IDENTITY"))),
            };
        }
        let num = |s: &str| parse_real(s).map_err(CliError::Parse);
        if let Some(a) = &self.swap_power {
            return Ok(GateDescriptor::SwapPower { alpha: num(a)? });
        }
        if let Some(m) = &self.swap_root {
            return Ok(GateDescriptor::SwapRoot { m: num(m)? });
        }
        if let Some(p) = &self.cu {
            return GateDescriptor::parse_spec(&format!("cu:{p}"));
        }
        if let Some(spec) = &self.gate {
            return GateDescriptor::parse_spec(spec);
        }
        if let Some(path) = &self.matrix_file {
            return GateDescriptor::from_file(path);
        }
        Err(CliError::Parse("no gate given".into()))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants, Weyl point, entangling power and perfect-entangler verdicts.
    Characterize {
        #[command(flatten)]
        gate: GateArgs,
        /// Also estimate entangling power from this many Monte Carlo samples.
        #[arg(long, value_name = "N")]
        monte_carlo: Option<usize>,
        /// Also maximize output concurrence with this many restarts.
        #[arg(long, value_name = "RESTARTS")]
        max_concurrence: Option<usize>,
        /// Print the gate as an explicit matrix descriptor instead of a report.
        #[arg(long)]
        dump_descriptor: bool,
    },
    /// Copies of SWAP^(1/m) needed to match the entangling power of CNOT.
    ///
    /// The count n is the least integer with n EP(SWAP^(1/m)) >= EP(CNOT). It
    /// is a necessary entangling-power budget only; it does not show that n
    /// copies suffice to build CNOT. m = 1 has zero entangling power and is
    /// reported as infeasible.
    Table1 {
        /// Comma-separated values or an integer range like 2..7.
        #[arg(long, default_value = "2..7")]
        m: String,
    },
    /// Sweep a gate family and tabulate closed-form and numeric quantities.
    FamilyScan {
        #[command(subcommand)]
        family: Family,
    },
    /// Entangling power.
    Ep {
        #[command(flatten)]
        gate: GateArgs,
        /// Also estimate from this many Monte Carlo samples.
        #[arg(long, value_name = "N")]
        samples: Option<usize>,
    },
    /// Largest output concurrence over product inputs.
    MaxConcurrence {
        #[command(flatten)]
        gate: GateArgs,
        #[arg(long, default_value_t = 32)]
        restarts: usize,
    },
    /// Search for local gates k with base·k·base locally equivalent to CNOT.
    Synthesize {
        /// Base gate spec (see --gate).
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 64)]
        restarts: usize,
        /// Append-only JSON-lines log of runs.
        #[arg(long, default_value = "findings.jsonl")]
        findings: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// SWAP^(1/m).
    Swap {
        /// Range of m, like 1..12.
        #[arg(long, default_value = "1..12")]
        m: String,
        /// Evenly spaced points; integer steps when absent.
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Controlled unitaries with alpha = beta.
    Cu {
        #[arg(long, default_value = "0..pi")]
        theta: String,
        #[arg(long, default_value = "0..2pi")]
        alpha_plus_beta: String,
        #[arg(long, default_value_t = 25)]
        steps: usize,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        delta: String,
    },
}

#[derive(Serialize)]
struct Table1Report {
    tool: &'static str,
    version: &'static str,
    note: &'static str,
    rows: Vec<Table1Row>,
}

#[derive(Serialize)]
struct ScanReport {
    tool: &'static str,
    version: &'static str,
    family: &'static str,
    records: Vec<ScanRecord>,
}

#[derive(Serialize)]
struct FindingsRecord<'a> {
    timestamp: u64,
    base: &'a GateDescriptor,
    base_name: &'a str,
    restarts: usize,
    seed: u64,
    tol: f64,
    residual: f64,
    verdict: &'static str,
    best_restart: usize,
}

const TABLE1_NOTE: &str = "n is a necessary entangling-power budget, not a sufficiency proof";

fn parse_m_list(s: &str) -> CliResult<Vec<f64>> {
    if s.contains("..") {
        let (lo, hi) = parse_range(s).map_err(CliError::Parse)?;
        if lo.fract() != 0.0 || hi.fract() != 0.0 {
            return Err(CliError::Parse(format!("m range must have integer endpoints, got {s:?}")));
        }
        let mut v = Vec::new();
        let mut m = lo;
        while m <= hi {
            v.push(m);
            m += 1.0;
        }
        return Ok(v);
    }
    s.split(',').map(|x| parse_real(x).map_err(CliError::Parse)).collect()
}

fn csv_unsupported(what: &str) -> CliError {
    CliError::Validation(format!("csv output is not available for {what}"))
}

/// Renders the output of one invocation. Does not touch the output path.
pub fn render(cli: &Cli) -> CliResult<String> {
    let csv = cli.format == Format::Csv;
    match &cli.command {
        Command::Characterize { gate, monte_carlo, max_concurrence, dump_descriptor } => {
            let d = gate.descriptor()?;
            if csv {
                return Err(csv_unsupported("characterize"));
            }
            if *dump_descriptor {
                return to_json(&GateDescriptor::matrix_of(&d.to_gate()?));
            }
            let opts = CharacterizeOptions {
                monte_carlo_samples: *monte_carlo,
                max_concurrence_restarts: *max_concurrence,
                seed: cli.seed,
                boundary_tol: cli.tol,
            };
            to_json(&characterize(&d, &opts)?)
        }
        Command::Table1 { m } => {
            let rows = table1(&parse_m_list(m)?)?;
            if csv {
                Ok(table1_csv(&rows))
            } else {
                to_json(&Table1Report { tool: TOOL, version: VERSION, note: TABLE1_NOTE, rows })
            }
        }
        Command::FamilyScan { family } => {
            let (name, records) = match family {
                Family::Swap { m, steps } => {
                    let (lo, hi) = parse_range(m).map_err(CliError::Parse)?;
                    ("swap", scan_swap(lo, hi, *steps)?)
                }
                Family::Cu { theta, alpha_plus_beta, steps, delta } => {
                    let t = parse_range(theta).map_err(CliError::Parse)?;
                    let s = parse_range(alpha_plus_beta).map_err(CliError::Parse)?;
                    let d = parse_real(delta).map_err(CliError::Parse)?;
                    ("cu", scan_cu(t, s, *steps, d)?)
                }
            };
            if csv {
                Ok(scan_csv(&records))
            } else {
                to_json(&ScanReport { tool: TOOL, version: VERSION, family: name, records })
            }
        }
        Command::Ep { gate, samples } => {
            let d = gate.descriptor()?;
            if csv {
                return Err(csv_unsupported("ep"));
            }
            let g = d.to_gate()?;
            let entangling_power = entangling_power(&g, *samples, cli.seed)?;
            to_json(&EpReport { tool: TOOL, version: VERSION, gate: d, entangling_power })
        }
        Command::MaxConcurrence { gate, restarts } => {
            let d = gate.descriptor()?;
            if csv {
                return Err(csv_unsupported("max-concurrence"));
            }
            let g = d.to_gate()?;
            let max_output_concurrence = max_concurrence(&g, *restarts, cli.seed)?;
            to_json(&MaxConcurrenceReport { tool: TOOL, version: VERSION, gate: d, max_output_concurrence })
        }
        Command::Synthesize { base, restarts, findings } => {
            let d = GateDescriptor::parse_spec(base)?;
            if csv {
                return Err(csv_unsupported("synthesize"));
            }
            let g = d.to_gate()?;
            let tol = cli.tol.unwrap_or(DEFAULT_TOL);
            let result = synthesize_cnot(&g, *restarts, cli.seed, tol)?;
            let report = synthesis_report(&d, &g, &result);
            let record = FindingsRecord {
                timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map(|t| t.as_secs()).unwrap_or(0),
                base: &d,
                base_name: g.name(),
                restarts: report.restarts,
                seed: report.seed,
                tol: report.tol,
                residual: report.residual,
                verdict: report.verdict,
                best_restart: report.best_restart,
            };
            append_findings(findings, &record)?;
            to_json(&report)
        }
    }
}

fn append_findings(path: &PathBuf, record: &FindingsRecord<'_>) -> CliResult<()> {
    let line = serde_json::to_string(record).map_err(|e| CliError::Numeric(format!("findings record: {e}")))?;
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| CliError::Io(format!("opening findings file {}: {e}", path.display())))?;
    writeln!(file, "{line}").map_err(|e| CliError::Io(format!("appending to {}: {e}", path.display())))
}

/// Runs one invocation, writing to `--output` or stdout.
pub fn run(cli: &Cli) -> CliResult<()> {
    let mut text = render(cli)?;
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("writing {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| CliError::Io(format!("writing stdout: {e}")))
        }
    }
}
