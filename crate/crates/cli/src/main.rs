//! `sasaki-check`: runs the identity suite, the spectral report and the
//! theorem gates from the command line.
//!
//! Exit codes: 0 when everything applicable holds, 1 when something fails,
//! 2 on usage or configuration errors.

mod render;
mod spectrum;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sasaki_core::identities::{self, theorem_t01_gate, theorem_th45_gate, GateVerdict, RunConfig};
use sasaki_core::models::{self, ModelEntry};
use sasaki_core::SuiteError;

#[derive(Parser)]
#[command(name = "sasaki-check", version, about = "Numerical checks of weak nearly Sasakian identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List registered models and catalogued identities.
    List(ListArgs),
    /// Evaluate identities on models and report residuals.
    Check(CheckArgs),
    /// Spectrum of h² across sampled points of one model.
    Spectrum(SpectrumArgs),
    /// Run the theorem gates on models.
    Gates(GateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct ListArgs {
    /// Comma-separated model names, or `all`.
    #[arg(long, default_value = "all")]
    models: String,
    /// Comma-separated identity ids, or `all`.
    #[arg(long, default_value = "all")]
    identities: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct Sampling {
    /// Sampled points per model.
    #[arg(long, default_value_t = 100)]
    points: usize,
    /// Vector tuples per point.
    #[arg(long, default_value_t = 8)]
    tuples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Relative residual tolerance.
    #[arg(long, default_value_t = 1e-8, allow_negative_numbers = true)]
    tol: f64,
    /// Worker threads; 0 picks the number of cores.
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

impl Sampling {
    fn config(&self) -> Result<RunConfig, CliError> {
        let cfg = RunConfig { points: self.points, tuples: self.tuples, seed: self.seed, tol: self.tol };
        cfg.validate()?;
        Ok(cfg)
    }

    fn pool(&self) -> Result<rayon::ThreadPool, CliError> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .map_err(|e| CliError::Runtime(format!("cannot start thread pool: {e}")))
    }
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, default_value = "all")]
    models: String,
    #[arg(long, default_value = "all")]
    identities: String,
    #[command(flatten)]
    sampling: Sampling,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    model: String,
    #[arg(long, default_value_t = 30)]
    points: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GateArgs {
    #[arg(long, default_value = "all")]
    models: String,
    #[command(flatten)]
    sampling: Sampling,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Runtime(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

impl From<SuiteError> for CliError {
    fn from(e: SuiteError) -> Self {
        match e {
            SuiteError::UnknownModel(_)
            | SuiteError::UnknownIdentity(_)
            | SuiteError::ArityMismatch { .. }
            | SuiteError::InvalidConfig(_) => CliError::Usage(e.to_string()),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Runtime(m) => f.write_str(m),
        }
    }
}

fn select_models(spec: &str) -> Result<Vec<ModelEntry>, CliError> {
    let spec = spec.trim();
    if spec.is_empty() || spec == "all" {
        return Ok(models::registry());
    }
    Ok(spec.split(',').map(str::trim).filter(|s| !s.is_empty()).map(models::model).collect::<Result<_, _>>()?)
}

fn select_identities(spec: &str) -> Result<Vec<&'static identities::IdentityRecord>, CliError> {
    if spec.trim().is_empty() {
        return Ok(identities::catalog().iter().collect());
    }
    Ok(identities::select(spec)?)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Runtime(format!("cannot write to stdout: {e}"))),
    }
}

fn list(args: &ListArgs) -> Result<u8, CliError> {
    let mut models = select_models(&args.models)?;
    models.sort_by_cached_key(|m| render::natural_key(m.name()));
    let mut ids = select_identities(&args.identities)?;
    ids.sort_by_cached_key(|r| render::natural_key(r.id));
    let text = match args.format {
        Format::Json => render::list_json(&models, &ids),
        Format::Text => render::list_text(&models, &ids),
        Format::Csv => return Err(CliError::Usage("list supports json and text output".into())),
    };
    emit(None, &text)?;
    Ok(0)
}

fn check(args: &CheckArgs) -> Result<u8, CliError> {
    let cfg = args.sampling.config()?;
    let models = select_models(&args.models)?;
    let ids = select_identities(&args.identities)?;
    let refs: Vec<&ModelEntry> = models.iter().collect();
    let report = args.sampling.pool()?.install(|| identities::run_suite(&refs, &ids, &cfg))?;
    let text = match args.format {
        Format::Json => report.to_json(),
        Format::Csv => render::report_csv(&report)?,
        Format::Text => render::report_text(&report),
    };
    emit(args.out.as_ref(), &text)?;
    let failures = report.failures_by_residual();
    if failures.is_empty() {
        eprintln!("{} rows, all applicable rows pass", report.rows.len());
        Ok(0)
    } else {
        eprintln!("{} rows, {} failing:", report.rows.len(), failures.len());
        for r in failures {
            eprintln!("  {} {} max {:.3e}: {}", r.model, r.identity, r.max_residual, r.note);
        }
        Ok(1)
    }
}

fn spectrum(args: &SpectrumArgs) -> Result<u8, CliError> {
    if args.points == 0 {
        return Err(CliError::Usage("points must be at least 1".into()));
    }
    let model = models::model(&args.model)?;
    let report = spectrum::report(&model, args.points, args.seed)?;
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("spectrum report serializes") + "\n",
        Format::Text => spectrum::text(&report),
        Format::Csv => return Err(CliError::Usage("spectrum supports json and text output".into())),
    };
    emit(args.out.as_ref(), &text)?;
    Ok(0)
}

fn gates(args: &GateArgs) -> Result<u8, CliError> {
    let cfg = args.sampling.config()?;
    let models = select_models(&args.models)?;
    let reports = args.sampling.pool()?.install(|| {
        let mut out = Vec::new();
        for m in &models {
            out.push(theorem_t01_gate(m, &cfg)?);
            out.push(theorem_th45_gate(m, &cfg)?);
        }
        Ok::<_, SuiteError>(out)
    })?;
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&reports).expect("gate reports serialize") + "\n",
        Format::Text => render::gates_text(&reports),
        Format::Csv => return Err(CliError::Usage("gates supports json and text output".into())),
    };
    emit(args.out.as_ref(), &text)?;
    Ok(if reports.iter().any(|r| r.verdict == GateVerdict::Fail) { 1 } else { 0 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::List(a) => list(a),
        Command::Check(a) => check(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Gates(a) => gates(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
