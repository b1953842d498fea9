//! Command-line driver: parse parameters, build the triple, run the check
//! catalog, and emit reports.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use glob::Pattern;

use qracah::params::{sample_params_in_stream, HuangFlips, SampleError};
use qracah::verify::run_selected;
use qracah::{
    build_triple, validate_params, BasisChoice, Field, FieldError, FieldSpec, ParamError, PrimeField, QRacahParams,
    RationalField, TripleError, VerificationReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Check one explicit parameter set.
    Verify,
    /// Sample parameter sets over a prime field and check each.
    Sample,
    /// As `sample`, also checking permuted and inverted parameter sets.
    Sweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "qracah", version, about = "Exact verification of q-Racah Leonard triples")]
pub struct CliConfig {
    /// `rational` or `fp:<p>`.
    #[arg(long, default_value = "rational")]
    pub field: String,
    #[arg(long)]
    pub q: Option<String>,
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub b: Option<String>,
    #[arg(long)]
    pub c: Option<String>,
    /// Diameter; the matrices have order d + 1.
    #[arg(long)]
    pub d: usize,
    #[arg(long, default_value = "first")]
    pub basis: BasisChoice,
    #[arg(long, value_enum, default_value = "verify")]
    pub mode: Mode,
    /// Only run checks whose id matches this glob.
    #[arg(long)]
    pub checks: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub trials: u64,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Triple(#[from] TripleError),
    #[error(transparent)]
    Sample(#[from] SampleError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

/// Parse `args` (without the program name), run, and return the exit code:
/// 0 when every applicable check passed, 1 on any failure, 2 on usage or
/// validation errors.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("qracah")).chain(args.into_iter().map(Into::into));
    let config = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&config) {
        Ok(reports) => {
            if let Err(e) = write_output(&config, &reports) {
                eprintln!("error: {e}");
                return 2;
            }
            if reports.iter().all(VerificationReport::all_passed) {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn run(config: &CliConfig) -> Result<Vec<VerificationReport>, CliError> {
    let filter = config
        .checks
        .as_deref()
        .map(Pattern::new)
        .transpose()
        .map_err(|e| CliError::Usage(format!("bad --checks glob: {e}")))?;
    let spec: FieldSpec = config.field.parse()?;
    match config.mode {
        Mode::Verify => match spec {
            FieldSpec::Rational => verify_explicit(&RationalField, config, filter.as_ref()),
            FieldSpec::Prime(p) => verify_explicit(&PrimeField::new(p)?, config, filter.as_ref()),
        },
        Mode::Sample | Mode::Sweep => {
            let FieldSpec::Prime(p) = spec else {
                return Err(CliError::Usage(
                    format!("--mode {:?} requires a prime field", config.mode).to_lowercase(),
                ));
            };
            if config.trials == 0 {
                return Err(CliError::Usage("--trials must be at least 1".into()));
            }
            if [&config.q, &config.a, &config.b, &config.c].iter().any(|x| x.is_some()) {
                return Err(CliError::Usage("sampling modes draw q, a, b, c themselves".into()));
            }
            sample(&PrimeField::new(p)?, config, filter.as_ref())
        }
    }
}

fn check_all<F: Field>(
    p: &QRacahParams<F>,
    basis: BasisChoice,
    filter: Option<&Pattern>,
) -> Result<VerificationReport, CliError> {
    let r = build_triple(p, basis)?;
    Ok(run_selected(&r, |id| filter.is_none_or(|g| g.matches(id))))
}

fn verify_explicit<F: Field>(
    field: &F,
    config: &CliConfig,
    filter: Option<&Pattern>,
) -> Result<Vec<VerificationReport>, CliError> {
    let lit = |name: &str, v: &Option<String>| -> Result<F::Elem, CliError> {
        let s = v
            .as_deref()
            .ok_or_else(|| CliError::Usage(format!("--mode verify requires --{name}")))?;
        Ok(field.parse_element(s)?)
    };
    let (q, a, b, c) = (
        lit("q", &config.q)?,
        lit("a", &config.a)?,
        lit("b", &config.b)?,
        lit("c", &config.c)?,
    );
    let p = validate_params(field, q, a, b, c, config.d)?;
    Ok(vec![check_all(&p, config.basis, filter)?])
}

/// Each trial uses its own ChaCha stream under the shared seed.
fn sample(
    field: &PrimeField,
    config: &CliConfig,
    filter: Option<&Pattern>,
) -> Result<Vec<VerificationReport>, CliError> {
    let mut reports = Vec::new();
    for trial in 0..config.trials {
        let p = sample_params_in_stream(field, config.d, config.seed, trial)?;
        if config.mode == Mode::Sample {
            reports.push(check_all(&p, config.basis, filter)?);
            continue;
        }
        for base in [p.clone(), p.rotated(), p.transposed()] {
            for flips in HuangFlips::all() {
                let v = base.invert_huang_data(flips);
                let v = validate_params(field, *v.q(), *v.a(), *v.b(), *v.c(), v.d())?;
                reports.push(check_all(&v, config.basis, filter)?);
            }
        }
    }
    Ok(reports)
}

fn write_output(config: &CliConfig, reports: &[VerificationReport]) -> std::io::Result<()> {
    let bytes = match (config.mode, reports) {
        (Mode::Verify, [single]) => emit_report(single, config.format),
        _ => emit_reports(reports, config.format),
    };
    match &config.out {
        Some(path) => std::fs::write(path, bytes),
        None => std::io::stdout().lock().write_all(&bytes),
    }
}

/// Serialize one report. JSON is pretty-printed with a trailing newline; text
/// is a fixed-width table.
pub fn emit_report(report: &VerificationReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s.into_bytes()
        }
        Format::Text => text_table(report).into_bytes(),
    }
}

/// Several reports: a JSON array, or text tables separated by blank lines.
pub fn emit_reports(reports: &[VerificationReport], format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s.into_bytes()
        }
        Format::Text => reports
            .iter()
            .map(text_table)
            .collect::<Vec<_>>()
            .join("\n")
            .into_bytes(),
    }
}

fn text_table(report: &VerificationReport) -> String {
    let p = &report.params;
    let width = report.checks.iter().map(|c| c.id.len()).max().unwrap_or(0).max(2);
    let mut out = format!(
        "field {}  q {}  a {}  b {}  c {}  d {}  basis {}\n",
        p.field, p.q, p.a, p.b, p.c, p.d, p.basis
    );
    out.push_str(&format!("{:<width$}  {:<7}  DETAIL\n", "ID", "STATUS"));
    for c in &report.checks {
        let line = format!("{:<width$}  {:<7}  {}", c.id, c.status.to_string(), c.detail);
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let s = &report.summary;
    out.push_str(&format!("pass {}  fail {}  skipped {}\n", s.pass, s.fail, s.skipped));
    out
}
