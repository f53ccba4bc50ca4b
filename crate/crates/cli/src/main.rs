//! Command-line surface: matrix units by either construction, character
//! tables with the Murnaghan-Nakayama cross-check, and the verification
//! suites. JSON output is deterministic for fixed inputs apart from the
//! `elapsed_ms` field.
//!
//! Exit codes: 0 all checks pass, 1 check failure, 2 usage error.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symfusion::fusion::{evaluate_fusion_traced, FusionState};
use symfusion::units::characters::{
    character_element, class_representative, is_class_function, murnaghan_nakayama,
};
use symfusion::units::{matrix_unit_murphy, phi_scale};
use symfusion::verify::{all_suites, characters_suite, fusion_suite, units_suite, ybe_suite, Check};
use symfusion::young::{partitions, Partition, StandardTableau};
use symfusion::{GroupAlgebraElement, Rational};

/// Default degree cap for the verify and characters commands; override with
/// --max-n or the SYMFUSION_MAX_N environment variable.
const DEFAULT_MAX_N: usize = 6;
/// Default cap on tensor-power dimension N^n in the Yang-Baxter suite;
/// override with --max-tensor-dim or SYMFUSION_MAX_TENSOR_DIM.
const DEFAULT_MAX_TENSOR_DIM: usize = 4096;

#[derive(Parser)]
#[command(
    name = "symfusion",
    version,
    about = "Exact matrix units, characters and fusion products for the symmetric group"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Degree cap for verify/characters (default 6; env SYMFUSION_MAX_N)
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Tensor dimension cap N^n (default 4096; env SYMFUSION_MAX_TENSOR_DIM)
    #[arg(long, global = true)]
    max_tensor_dim: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute E_T and Φ_T for a standard tableau
    MatrixUnit {
        /// Tableau text, rows joined by '/', e.g. "1 2/3 4"
        #[arg(long)]
        tableau: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Emit per-step fusion data (multiplicity, denominator, term count)
        #[arg(long)]
        trace: bool,
    },
    /// Character table of S_n, cross-checked against Murnaghan-Nakayama
    Characters {
        #[arg(long)]
        n: Option<usize>,
        /// Restrict the table to one shape, e.g. "2,2"
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run verification suites
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Seed for the randomized identity checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Murphy,
    Fusion,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Units,
    Fusion,
    Characters,
    Ybe,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps::resolve(&cli);
    let started = Instant::now();
    let outcome = match &cli.command {
        Command::MatrixUnit {
            tableau,
            method,
            format,
            trace,
        } => cmd_matrix_unit(tableau, *method, *format, *trace, started),
        Command::Characters { n, lambda, format } => {
            cmd_characters(*n, lambda.as_deref(), *format, &caps, started)
        }
        Command::Verify {
            n,
            suite,
            seed,
            format,
        } => cmd_verify(*n, *suite, *seed, *format, &caps, started),
    };
    match outcome {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

struct Caps {
    max_n: usize,
    max_tensor_dim: usize,
}

impl Caps {
    fn resolve(cli: &Cli) -> Caps {
        let env_usize = |key: &str| -> Option<usize> {
            std::env::var(key).ok().and_then(|v| v.parse().ok())
        };
        Caps {
            max_n: cli
                .max_n
                .or_else(|| env_usize("SYMFUSION_MAX_N"))
                .unwrap_or(DEFAULT_MAX_N),
            max_tensor_dim: cli
                .max_tensor_dim
                .or_else(|| env_usize("SYMFUSION_MAX_TENSOR_DIM"))
                .unwrap_or(DEFAULT_MAX_TENSOR_DIM),
        }
    }
}

fn run_report(
    command: &str,
    inputs: Value,
    results: Value,
    checks: &[Check],
    started: Instant,
) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "results": results,
        "checks": checks
            .iter()
            .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
            .collect::<Vec<_>>(),
        "elapsed_ms": started.elapsed().as_millis() as u64,
    })
}

fn print_checks_text(checks: &[Check]) {
    for c in checks {
        let mark = if c.pass { "pass" } else { "FAIL" };
        if c.detail.is_empty() {
            println!("[{mark}] {}", c.name);
        } else {
            println!("[{mark}] {} — {}", c.name, c.detail);
        }
    }
}

fn trace_json(states: &[FusionState]) -> Value {
    Value::Array(
        states
            .iter()
            .map(|s| {
                json!({
                    "step": s.step,
                    "multiplicity": s.multiplicity,
                    "denominator": s.denominator.to_string(),
                    "terms": s.term_count(),
                })
            })
            .collect(),
    )
}

fn cmd_matrix_unit(
    tableau_text: &str,
    method: Method,
    format: Format,
    trace: bool,
    started: Instant,
) -> Result<bool, String> {
    let tableau = StandardTableau::parse(tableau_text).map_err(|e| e.to_string())?;
    let shape = tableau.shape();
    let scale = phi_scale(&shape);
    let mut checks = Vec::new();
    let mut trace_value = Value::Null;

    let fusion_phi = if method != Method::Murphy {
        let (phi, states) = evaluate_fusion_traced(&tableau).map_err(|e| e.to_string())?;
        if trace {
            trace_value = trace_json(&states);
        }
        Some(phi)
    } else {
        None
    };
    let murphy_unit = if method != Method::Fusion {
        Some(matrix_unit_murphy(&tableau))
    } else {
        None
    };

    if let (Some(phi), Some(unit)) = (&fusion_phi, &murphy_unit) {
        let agree = phi == &unit.scale(&scale);
        checks.push(Check::new(
            "fusion equals (n!/f)·Murphy".into(),
            agree,
            format!("scale n!/f = {scale}"),
        ));
    }

    let (unit, phi): (GroupAlgebraElement, GroupAlgebraElement) = match (&murphy_unit, &fusion_phi)
    {
        (Some(unit), _) => (unit.clone(), unit.scale(&scale)),
        (None, Some(phi)) => (phi.scale(&(Rational::from_integer(1.into()) / &scale)), phi.clone()),
        (None, None) => unreachable!(),
    };

    let method_name = match method {
        Method::Murphy => "murphy",
        Method::Fusion => "fusion",
        Method::Both => "both",
    };
    let mut results = json!({
        "tableau": tableau.to_string(),
        "lambda": shape.to_string(),
        "n": tableau.n(),
        "unit": unit.to_json(),
        "matrix_element": phi.to_json(),
    });
    if trace_value != Value::Null {
        results["trace"] = trace_value;
    }
    match format {
        Format::Json => {
            let report = run_report(
                "matrix-unit",
                json!({"tableau": tableau_text, "method": method_name, "trace": trace}),
                results,
                &checks,
                started,
            );
            println!("{}", serde_json::to_string_pretty(&report).expect("valid json"));
        }
        Format::Text => {
            println!("tableau {tableau} of shape {shape}");
            println!("E_T  = {unit}");
            println!("Φ_T  = {phi}");
            print_checks_text(&checks);
        }
    }
    Ok(Check::all_pass(&checks))
}

fn cmd_characters(
    n: Option<usize>,
    lambda: Option<&str>,
    format: Format,
    caps: &Caps,
    started: Instant,
) -> Result<bool, String> {
    let filter = lambda
        .map(Partition::parse)
        .transpose()
        .map_err(|e| e.to_string())?;
    let n = match (n, &filter) {
        (Some(n), Some(lam)) if lam.n() != n => {
            return Err(format!("--lambda {lam} is not a partition of --n {n}"));
        }
        (Some(n), _) => n,
        (None, Some(lam)) => lam.n(),
        (None, None) => return Err("characters needs --n or --lambda".into()),
    };
    if n > caps.max_n {
        return Err(format!("n = {n} exceeds cap {} (see --max-n)", caps.max_n));
    }
    let classes = partitions(n);
    let shapes: Vec<Partition> = match &filter {
        Some(lam) => vec![lam.clone()],
        None => partitions(n),
    };
    let mut checks = Vec::new();
    let mut table = Vec::new();
    for lam in &shapes {
        let chi = character_element(lam);
        checks.push(Check::new(
            format!("χ_{lam} is a class function"),
            is_class_function(&chi),
            String::new(),
        ));
        let mut oracle_ok = true;
        let mut values = Vec::new();
        for rho in &classes {
            let value = chi.coeff(&class_representative(rho));
            let oracle = murnaghan_nakayama(lam, rho).map_err(|e| e.to_string())?;
            if value != symfusion::algebra::rat(oracle) {
                oracle_ok = false;
            }
            values.push(json!({"class": rho.to_string(), "value": value.to_string()}));
        }
        checks.push(Check::new(
            format!("χ_{lam} matches the Murnaghan-Nakayama oracle"),
            oracle_ok,
            String::new(),
        ));
        table.push(json!({"lambda": lam.to_string(), "values": values}));
    }
    match format {
        Format::Json => {
            let report = run_report(
                "characters",
                json!({"n": n, "lambda": filter.map(|l| l.to_string())}),
                json!({"n": n, "table": table}),
                &checks,
                started,
            );
            println!("{}", serde_json::to_string_pretty(&report).expect("valid json"));
        }
        Format::Text => {
            let header: Vec<String> = classes.iter().map(|c| c.to_string()).collect();
            println!("classes: {}", header.join(" | "));
            for (lam, row) in shapes.iter().zip(&table) {
                let vals: Vec<String> = row["values"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|v| v["value"].as_str().unwrap().to_string())
                    .collect();
                println!("χ_{lam}: {}", vals.join(" | "));
            }
            print_checks_text(&checks);
        }
    }
    Ok(Check::all_pass(&checks))
}

fn cmd_verify(
    n: usize,
    suite: Suite,
    seed: u64,
    format: Format,
    caps: &Caps,
    started: Instant,
) -> Result<bool, String> {
    if n == 0 {
        return Err("verify needs n >= 1".into());
    }
    if n > caps.max_n {
        return Err(format!("n = {n} exceeds cap {} (see --max-n)", caps.max_n));
    }
    if matches!(suite, Suite::Fusion) && n > 5 {
        return Err("the fusion suite supports n <= 5".into());
    }
    if matches!(suite, Suite::Ybe | Suite::All) {
        let dim = 3usize.saturating_pow(n as u32);
        if dim > caps.max_tensor_dim {
            return Err(format!(
                "3^{n} = {dim} exceeds the tensor dimension cap {} (see --max-tensor-dim)",
                caps.max_tensor_dim
            ));
        }
    }
    let suite_name = match suite {
        Suite::Units => "units",
        Suite::Fusion => "fusion",
        Suite::Characters => "characters",
        Suite::Ybe => "ybe",
        Suite::All => "all",
    };
    let checks = match suite {
        Suite::Units => units_suite(n),
        Suite::Fusion => fusion_suite(n, seed),
        Suite::Characters => characters_suite(n),
        Suite::Ybe => ybe_suite(n, seed),
        Suite::All => all_suites(n, seed),
    }
    .map_err(|e| e.to_string())?;
    let passed = checks.iter().filter(|c| c.pass).count();
    match format {
        Format::Json => {
            let report = run_report(
                "verify",
                json!({"n": n, "suite": suite_name, "seed": seed}),
                json!({"passed": passed, "total": checks.len()}),
                &checks,
                started,
            );
            println!("{}", serde_json::to_string_pretty(&report).expect("valid json"));
        }
        Format::Text => {
            print_checks_text(&checks);
            println!("{passed}/{} checks passed", checks.len());
        }
    }
    Ok(Check::all_pass(&checks))
}
