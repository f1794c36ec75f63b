//! Command-line front end for the `orbit-fusion` library.
//!
//! Exit codes: 0 success, 1 scan finished with violations, 2 usage or
//! validation error, 3 enumeration bound or numerical drift.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orbit_fusion::{
    enumerate_labels, enumerate_orbit_capped, make_label, orbit_size, product_capped, run_scan,
    standard_form, weight_to_orbit, Error, FusionQuery, FusionTable, Method, OrbitLabel, Params,
    Report, ScanKind, ScanSpec, Weight, DEFAULT_ENUM_CAP,
};
use serde_json::{json, Map, Value};

mod render;

pub const ENUM_CAP_VAR: &str = "ORBIT_FUSION_ENUM_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "orbit-fusion",
    version,
    about = "S_k-orbit products of Z_N^k and su(N)_k fusion checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List orbit labels with sizes, or the elements of one orbit.
    Orbits(OrbitsArgs),
    /// Expand the product of two orbits.
    Product(ProductArgs),
    /// Fusion coefficient N_{lambda,mu}^{nu} at level k.
    Fusion(FusionArgs),
    /// Run an exhaustive verification scan.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long)]
    modulus: u32,
    #[arg(long)]
    level: u32,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct OrbitsArgs {
    #[command(flatten)]
    common: Common,
    /// Multiplicities a0,a1,...; enumerates this orbit's elements.
    #[arg(long, value_delimiter = ',')]
    label: Option<Vec<u32>>,
}

#[derive(Debug, Args)]
struct ProductArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_delimiter = ',', required = true)]
    a: Vec<u32>,
    #[arg(long, value_delimiter = ',', required = true)]
    b: Vec<u32>,
    #[arg(long, default_value = "blockwise")]
    method: Method,
}

#[derive(Debug, Args)]
struct FusionArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_delimiter = ',', required = true)]
    lambda: Vec<u32>,
    #[arg(long, value_delimiter = ',', required = true)]
    mu: Vec<u32>,
    #[arg(long, value_delimiter = ',', required = true)]
    nu: Vec<u32>,
    /// Also print the unrounded Verlinde sum.
    #[arg(long)]
    debug_raw: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    kind: ScanKind,
    #[arg(long)]
    modulus: u32,
    #[arg(long)]
    kmax: u32,
    /// Also scan non-row middle factors; reported as evidence only.
    #[arg(long)]
    include_nonrow_b: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Output file, `-` for standard output.
    #[arg(long, default_value = "-")]
    out: PathBuf,
    /// Worker threads; all available cores by default.
    #[arg(long)]
    threads: Option<usize>,
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BoundExceeded { .. } | Error::NumericalDrift { .. } | Error::Overflow(_) => {
                EXIT_INTERNAL
            }
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_INTERNAL,
            message: format!("i/o error: {e}"),
        }
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let rendered = e.to_string();
                    let line = rendered
                        .lines()
                        .find(|l| !l.trim().is_empty())
                        .unwrap_or("invalid arguments");
                    let _ = writeln!(err, "{line}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Orbits(args) => orbits(args, out),
        Command::Product(args) => product_cmd(args, out),
        Command::Fusion(args) => fusion(args, out),
        Command::Verify(args) => verify(args, out),
    }
}

fn enum_cap() -> Result<u128, Failure> {
    match std::env::var(ENUM_CAP_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| {
            Failure::usage(format!(
                "{ENUM_CAP_VAR} must be a nonnegative integer, got {s:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn orbits(args: OrbitsArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let params = Params::new(args.common.modulus, args.common.level)?;
    let format = args.common.format;
    match args.label {
        Some(mults) => {
            let label = make_label(params, mults)?;
            let elements: Vec<Vec<u32>> = enumerate_orbit_capped(&label, enum_cap()?)?
                .map(|t| t.into_entries())
                .collect();
            render::tuples(out, format, &elements)?;
        }
        None => {
            let rows = enumerate_labels(params)
                .map(|l| Ok((orbit_size(&l)?, l)))
                .collect::<Result<Vec<(u128, OrbitLabel)>, Error>>()?;
            render::labels(out, format, &rows)?;
        }
    }
    Ok(EXIT_OK)
}

fn product_cmd(args: ProductArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let params = Params::new(args.common.modulus, args.common.level)?;
    let a = make_label(params, args.a)?;
    let b = make_label(params, args.b)?;
    let expansion = product_capped(&a, &b, args.method, enum_cap()?)?;
    render::expansion(out, args.common.format, &expansion)?;
    Ok(EXIT_OK)
}

fn fusion(args: FusionArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let params = Params::new(args.common.modulus, args.common.level)?;
    let lambda = Weight::with_params(params, args.lambda)?;
    let mu = Weight::with_params(params, args.mu)?;
    let nu = Weight::with_params(params, args.nu)?;
    let query = FusionQuery::new(lambda, mu, nu)?;
    let value = FusionTable::new(params).query(&query)?;
    match args.common.format {
        OutputFormat::Json => {
            let v = if args.debug_raw {
                json!({
                    "value": value.value,
                    "raw": { "re": value.raw.re, "im": value.raw.im },
                })
            } else {
                json!(value.value)
            };
            writeln!(out, "{v}")?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let io_err = |e: csv::Error| Failure::from(io::Error::other(e));
            if args.debug_raw {
                w.write_record(["value", "raw_re", "raw_im"])
                    .map_err(io_err)?;
                w.write_record([
                    value.value.to_string(),
                    value.raw.re.to_string(),
                    value.raw.im.to_string(),
                ])
                .map_err(io_err)?;
            } else {
                w.write_record(["value"]).map_err(io_err)?;
                w.write_record([value.value.to_string()]).map_err(io_err)?;
            }
            w.flush()?;
        }
        OutputFormat::Text => {
            writeln!(
                out,
                "N_{{{}, {}}}^{{{}}} = {}",
                query.lambda(),
                query.mu(),
                query.nu(),
                value.value
            )?;
            writeln!(
                out,
                "orbits: [{}] x [{}] -> [{}]",
                standard_form(&weight_to_orbit(query.mu())),
                standard_form(&weight_to_orbit(query.lambda())),
                standard_form(&weight_to_orbit(query.nu()))
            )?;
            if args.debug_raw {
                writeln!(out, "raw: {}", value.raw)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec = ScanSpec::new(args.kind, args.modulus, args.kmax)?
        .with_nonrow_b(args.include_nonrow_b)
        .with_enum_cap(enum_cap()?);
    let report = match args.threads {
        Some(0) => return Err(Failure::usage("--threads must be at least 1")),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Failure::usage(format!("cannot start {n} threads: {e}")))?
            .install(|| run_scan(&spec))?,
        None => run_scan(&spec)?,
    };

    if args.out.as_os_str() == "-" {
        render::report(out, args.format, &report)?;
    } else {
        let mut file = File::create(&args.out)?;
        render::report(&mut file, args.format, &report)?;
    }
    Ok(verdict_code(&report))
}

/// Non-row evidence never affects the exit code.
fn verdict_code(report: &Report) -> i32 {
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_VIOLATIONS
    }
}

/// JSON object for a product expansion: `"(a0,a1,...)" -> coefficient`.
pub fn expansion_json(e: &orbit_fusion::ProductExpansion) -> Value {
    let map: Map<String, Value> = e
        .iter()
        .map(|(label, c)| (label.to_string(), json!(c)))
        .collect();
    Value::Object(map)
}

/// Report as JSON. Reports never contain floating-point values.
pub fn report_json(report: &Report) -> Value {
    serde_json::to_value(report).expect("reports serialize")
}

#[cfg(test)]
mod tests {
    use std::time::Duration;

    use orbit_fusion::{Tally, Violation};

    use super::*;

    fn report(violations: Vec<Violation>, evidence: Option<Tally>) -> Report {
        Report {
            spec: ScanSpec::new(ScanKind::MultiplicityFree, 3, 2).unwrap(),
            cases_checked: 10,
            violations,
            evidence,
            elapsed: Duration::ZERO,
        }
    }

    fn violation() -> Violation {
        Violation {
            k: 2,
            a: vec![1, 1, 0],
            b: vec![1, 1, 0],
            c: vec![0, 2, 0],
            lhs: 2,
            rhs: 1,
            detail: None,
        }
    }

    #[test]
    fn violations_exit_one() {
        assert_eq!(
            verdict_code(&report(vec![violation()], None)),
            EXIT_VIOLATIONS
        );
        assert_eq!(verdict_code(&report(vec![], None)), EXIT_OK);
    }

    #[test]
    fn evidence_does_not_fail_the_scan() {
        let evidence = Tally {
            cases_checked: 5,
            violations: vec![violation()],
        };
        assert_eq!(verdict_code(&report(vec![], Some(evidence))), EXIT_OK);
    }

    #[test]
    fn csv_report_with_violation() {
        let mut buf = Vec::new();
        render::report(
            &mut buf,
            OutputFormat::Csv,
            &report(vec![violation()], None),
        )
        .unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "k,a,b,c,lhs,rhs,status");
        assert_eq!(lines[1], "2,\"1,1,0\",\"1,1,0\",\"0,2,0\",2,1,violation");
        assert_eq!(lines[2], "total,,,,10,1,fail");
    }

    #[test]
    fn error_exit_codes() {
        assert_eq!(
            Failure::from(Error::BoundExceeded { size: 9, cap: 1 }).code,
            EXIT_INTERNAL
        );
        assert_eq!(
            Failure::from(Error::NumericalDrift {
                re: 0.5,
                im: 0.0,
                tolerance: 1e-6
            })
            .code,
            EXIT_INTERNAL
        );
        assert_eq!(
            Failure::from(Error::SumMismatch {
                expected: 2,
                got: 3
            })
            .code,
            EXIT_USAGE
        );
    }
}
