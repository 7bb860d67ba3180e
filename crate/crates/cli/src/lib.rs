// Copyright 2026 The qhash Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Command-line front end: argument types, command execution and the JSON
//! report document.
//!
//! Every run produces one [`ReportDocument`]. Exit codes: 0 on success, 1
//! when `verify` finds a failing check, 2 on validation or usage errors.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use qhash::analysis::{
    bias, collision_resistance, cosine_sum_check, epsilon_of_biased_set, MAX_SWEEP_MODULUS,
};
use qhash::hashing::{hash_circuit, BiasedSet, HashForm, HashInput, ParamSet};
use qhash::search::{random_search, SearchConfig};
use qhash::verify::{run_verification, VerifyConfig};

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qhash",
    version,
    about = "Amplitude-form quantum hashing over Z_q"
)]
pub struct Cli {
    /// Write the report document to PATH instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Suppress warnings on standard error.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a hash state and dump its amplitudes.
    Hash(HashArgs),
    /// Bias of a set at one x, or its ε over all x ≠ 0.
    Bias(BiasArgs),
    /// Certified collision resistance of a parameter set.
    Resist(ResistArgs),
    /// Seeded random search for a parameter set with small ε.
    Search(SearchArgs),
    /// Check the circuit identities and closed forms at desk scale.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Standard,
    Shallow,
    SingleQubit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Switch {
    On,
    Off,
}

#[derive(Debug, Args)]
pub struct FormOptions {
    #[arg(long, value_enum, default_value = "shallow")]
    pub form: FormArg,
    /// Append the sum qubit to the single-qubit form.
    #[arg(long, value_enum, default_value = "off")]
    pub sum_qubit: Switch,
}

#[derive(Debug, Args)]
pub struct HashArgs {
    #[command(flatten)]
    pub form: FormOptions,
    #[arg(long)]
    pub q: u64,
    /// Parameter set S: comma-separated values or a file path.
    #[arg(long)]
    pub s: Option<String>,
    /// Set B for the standard form: comma-separated values or a file path.
    #[arg(long)]
    pub b: Option<String>,
    #[arg(long)]
    pub x: u64,
}

#[derive(Debug, Args)]
pub struct BiasArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub b: String,
    /// Evaluate at a single x instead of sweeping.
    #[arg(long)]
    pub x: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ResistArgs {
    #[command(flatten)]
    pub form: FormOptions,
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub s: String,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub form: FormOptions,
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub target_epsilon: Option<f64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 64)]
    pub q_max: u64,
    #[arg(long, default_value_t = 5)]
    pub n_max: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    /// Negative control: build the shallow hash with half its rotation angles.
    #[arg(long, hide = true)]
    pub corrupt_angles: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_seconds: f64,
}

/// The single JSON document emitted per run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub warnings: Vec<String>,
    pub timing: Timing,
}

/// A finished run: the document and the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub document: ReportDocument,
    pub exit_code: i32,
}

/// A precondition failed; reported with exit code 2.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationError(pub String);

impl std::fmt::Display for ValidationError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ValidationError {}

impl From<qhash::Error> for ValidationError {
    fn from(err: qhash::Error) -> Self {
        ValidationError(err.to_string())
    }
}

type CmdResult = Result<(Value, Value, i32), ValidationError>;

pub fn run(cli: &Cli) -> Result<Outcome, ValidationError> {
    let started = Instant::now();
    let mut warnings = Vec::new();
    let (name, (inputs, outputs, exit_code)) = match &cli.command {
        Command::Hash(args) => ("hash", cmd_hash(args, &mut warnings)?),
        Command::Bias(args) => ("bias", cmd_bias(args, &mut warnings)?),
        Command::Resist(args) => ("resist", cmd_resist(args, &mut warnings)?),
        Command::Search(args) => ("search", cmd_search(args, &mut warnings)?),
        Command::Verify(args) => ("verify", cmd_verify(args)?),
    };
    Ok(Outcome {
        document: ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command: name.to_string(),
            inputs,
            outputs,
            warnings,
            timing: Timing {
                wall_seconds: started.elapsed().as_secs_f64(),
            },
        },
        exit_code,
    })
}

fn hash_form(options: &FormOptions, warnings: &mut Vec<String>) -> HashForm {
    let sum_qubit = options.sum_qubit == Switch::On;
    match options.form {
        FormArg::SingleQubit => HashForm::SingleQubit { sum_qubit },
        other => {
            if sum_qubit {
                warnings.push("--sum-qubit only applies to the single-qubit form; ignored".into());
            }
            if other == FormArg::Standard {
                HashForm::Standard
            } else {
                HashForm::Shallow
            }
        }
    }
}

fn form_name(form: HashForm) -> &'static str {
    match form {
        HashForm::Standard => "standard",
        HashForm::Shallow => "shallow",
        HashForm::SingleQubit { .. } => "single-qubit",
    }
}

fn sum_qubit_of(form: HashForm) -> bool {
    matches!(form, HashForm::SingleQubit { sum_qubit: true })
}

fn check_modulus(q: u64) -> Result<(), ValidationError> {
    if q < 2 {
        return Err(ValidationError(format!(
            "modulus q must be at least 2, got {q}"
        )));
    }
    Ok(())
}

fn check_sweep_cap(q: u64) -> Result<(), ValidationError> {
    if q > MAX_SWEEP_MODULUS {
        return Err(ValidationError(format!(
            "modulus {q} exceeds the exhaustive sweep cap of {MAX_SWEEP_MODULUS}"
        )));
    }
    Ok(())
}

/// Parses a set given inline (`1,2,5`) or as a path to a file holding
/// comma- or whitespace-separated integers. Values are reduced modulo `q`,
/// with a warning when that changes any of them.
pub fn parse_set(
    raw: &str,
    q: u64,
    label: &str,
    warnings: &mut Vec<String>,
) -> Result<Vec<u64>, ValidationError> {
    check_modulus(q)?;
    let values = match parse_values(raw) {
        Some(values) => values,
        None if Path::new(raw).is_file() => {
            let text = std::fs::read_to_string(raw)
                .map_err(|e| ValidationError(format!("cannot read {label} from {raw}: {e}")))?;
            parse_values(&text).ok_or_else(|| {
                ValidationError(format!(
                    "{label} file {raw} does not hold a list of integers"
                ))
            })?
        }
        None => {
            return Err(ValidationError(format!(
                "{label} must be a comma-separated list of integers or a file path, got {raw:?}"
            )))
        }
    };
    if values.is_empty() {
        return Err(ValidationError(format!("{label} is empty")));
    }
    let reduced: Vec<u64> = values
        .iter()
        .map(|&v| v.rem_euclid(q as i128) as u64)
        .collect();
    if values.iter().zip(&reduced).any(|(&v, &r)| v != r as i128) {
        warnings.push(format!("{label} elements reduced modulo {q}"));
    }
    Ok(reduced)
}

fn parse_values(text: &str) -> Option<Vec<i128>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().ok())
        .collect()
}

fn cmd_hash(args: &HashArgs, warnings: &mut Vec<String>) -> CmdResult {
    let form = hash_form(&args.form, warnings);
    let (set_label, values, circuit) = match (form, &args.s, &args.b) {
        (_, Some(_), Some(_)) => {
            return Err(ValidationError("give either --s or --b, not both".into()))
        }
        (HashForm::Standard, None, Some(raw)) => {
            let b = BiasedSet::new(args.q, parse_set(raw, args.q, "B", warnings)?)?;
            let circuit = hash_circuit(form, HashInput::Biased(&b), args.x)?;
            ("B", b.values().to_vec(), circuit)
        }
        (_, None, Some(_)) => {
            return Err(ValidationError(
                "--b is only accepted by the standard form; give --s".into(),
            ))
        }
        (_, Some(raw), None) => {
            let s = ParamSet::new(args.q, parse_set(raw, args.q, "S", warnings)?)?;
            let circuit = hash_circuit(form, HashInput::Params(&s), args.x)?;
            ("S", s.values().to_vec(), circuit)
        }
        (_, None, None) => return Err(ValidationError("a set is required (--s or --b)".into())),
    };
    let state = circuit.run()?;
    // +0.0 normalizes negative zeros in the dump.
    let amplitudes: Vec<f64> = state.amplitudes().iter().map(|a| a + 0.0).collect();
    let inputs = json!({
        "form": form_name(form),
        "sum_qubit": sum_qubit_of(form),
        "q": args.q,
        set_label: values,
        "x": args.x,
    });
    let outputs = json!({
        "num_qubits": state.num_qubits(),
        "circuit": {
            "depth": circuit.depth(),
            "gate_count": circuit.gates().len(),
            "multi_qubit_gates": circuit.multi_qubit_gate_count(),
            "gates": circuit.gates(),
        },
        "amplitudes": amplitudes,
    });
    Ok((inputs, outputs, EXIT_OK))
}

fn cmd_bias(args: &BiasArgs, warnings: &mut Vec<String>) -> CmdResult {
    let b = BiasedSet::new(args.q, parse_set(&args.b, args.q, "B", warnings)?)?;
    let inputs = json!({
        "q": args.q,
        "B": b.values(),
        "mode": if args.x.is_some() { "single-x" } else { "sweep" },
        "x": args.x,
    });
    let outputs = match args.x {
        Some(x) => {
            let value = bias(&b, x)?;
            let cosine = if x == 0 {
                warnings.push("x = 0 always has bias 1; ε is taken over x ≠ 0".into());
                None
            } else {
                Some(cosine_sum_check(&b, x)?.0)
            };
            json!({ "x": x, "bias": value, "cosine_sum": cosine })
        }
        None => {
            check_sweep_cap(args.q)?;
            serde_json::to_value(epsilon_of_biased_set(&b)?).expect("report serializes")
        }
    };
    Ok((inputs, outputs, EXIT_OK))
}

fn cmd_resist(args: &ResistArgs, warnings: &mut Vec<String>) -> CmdResult {
    let form = hash_form(&args.form, warnings);
    check_modulus(args.q)?;
    check_sweep_cap(args.q)?;
    let s = ParamSet::new(args.q, parse_set(&args.s, args.q, "S", warnings)?)?;
    if s.has_duplicates() {
        warnings.push("S contains duplicate parameters".into());
    }
    let report = collision_resistance(&s, form)?;
    let inputs = json!({
        "form": form_name(form),
        "sum_qubit": sum_qubit_of(form),
        "q": args.q,
        "S": s.values(),
    });
    Ok((
        inputs,
        serde_json::to_value(report).expect("report serializes"),
        EXIT_OK,
    ))
}

fn cmd_search(args: &SearchArgs, warnings: &mut Vec<String>) -> CmdResult {
    let form = hash_form(&args.form, warnings);
    let cfg = SearchConfig {
        q: args.q,
        n: args.n,
        trials: args.trials,
        seed: args.seed,
        target_epsilon: args.target_epsilon,
    };
    let result = random_search(&cfg, form)?;
    let inputs = json!({
        "form": form_name(form),
        "sum_qubit": sum_qubit_of(form),
        "q": cfg.q,
        "n": cfg.n,
        "trials": cfg.trials,
        "seed": cfg.seed,
        "target_epsilon": cfg.target_epsilon,
    });
    let outputs = json!({
        "best_set": result.best_set.values(),
        "epsilon": result.report.epsilon,
        "worst_x": result.report.worst_x,
        "trials_run": result.trials_run,
        "history": result.history,
        "table": result.report.table,
    });
    Ok((inputs, outputs, EXIT_OK))
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let cfg = VerifyConfig {
        q_max: args.q_max,
        n_max: args.n_max,
        seed: args.seed,
        trials: args.trials,
        corrupt_angles: args.corrupt_angles,
    };
    let report = run_verification(&cfg)?;
    let exit_code = if report.passed {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    };
    Ok((
        serde_json::to_value(&cfg).expect("config serializes"),
        serde_json::to_value(&report).expect("report serializes"),
        exit_code,
    ))
}

/// Serializes a document as pretty-printed JSON with a trailing newline.
pub fn render(document: &ReportDocument) -> String {
    let mut text = serde_json::to_string_pretty(document).expect("document serializes");
    text.push('\n');
    text
}
