//! Command-line surface: point and grid evaluation, figure CSVs, identity
//! suites and whole-line integrals.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or domain
//! error, 3 numerical failure (non-convergence, cancellation, quadrature),
//! 4 I/O failure.

pub mod curve;
pub mod figures;
pub mod function;
pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gaussian_family::{os_integral, LorentzianPower, PowerOrder};
use crate::ntf::{cos_m_eval, Order};
use crate::transforms::try_integrate_improper;
use curve::Curve;
use function::{linspace, sample, FnId, Function, Params};
use suites::{oscillatory_spec, run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_IO: i32 = 4;

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Pole(_) | Error::UnsupportedIndex(_) => EXIT_USAGE,
        Error::NonConvergence { .. } | Error::Cancellation { .. } | Error::Quadrature(_) => EXIT_NUMERICAL,
        Error::Io(_) => EXIT_IO,
    }
}

#[derive(Debug, Parser)]
#[command(name = "neartrig", version, about = "Nearly-trigonometric functions: evaluation, figures and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct ParamArgs {
    /// Family order m > -1.
    #[arg(long)]
    m: Option<f64>,
    /// Derivative order (cos_m_deriv).
    #[arg(long)]
    k: Option<u32>,
    /// Lorentzian power ν > 0 (os).
    #[arg(long)]
    nu: Option<f64>,
}

impl ParamArgs {
    fn params(&self) -> Params {
        Params { m: self.m, k: self.k, nu: self.nu }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum IntegralFn {
    Cos,
    Os,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one value with 15 significant digits.
    #[command(allow_negative_numbers = true)]
    Eval {
        #[arg(value_enum)]
        function: FnId,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        x: f64,
    },
    /// Sample a function on an equispaced grid and write a curve CSV.
    #[command(allow_negative_numbers = true)]
    Grid {
        #[arg(value_enum)]
        function: FnId,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long)]
        n: usize,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the CSVs of one figure (1..6) as fig<id>_<label>.csv.
    Figure {
        id: u32,
        #[arg(long, default_value = ".")]
        outdir: PathBuf,
    },
    /// Run an identity suite; exit 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        json: bool,
    },
    /// Integrate cos_m or os over the real line and print the closed-form reference.
    #[command(allow_negative_numbers = true)]
    Integral {
        #[arg(long = "fn", value_enum)]
        function: IntegralFn,
        #[arg(long)]
        m: f64,
        #[arg(long)]
        nu: Option<f64>,
    },
}

/// `v` with 15 significant digits; plain notation for moderate magnitudes.
pub fn format_significant(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let e = v.abs().log10().floor() as i32;
    if (-5..15).contains(&e) {
        format!("{:.*}", (14 - e).max(0) as usize, v)
    } else {
        format!("{v:.14e}")
    }
}

fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() && z.im != 0.0 { '-' } else { '+' };
    format!("{} {sign} {}i", format_significant(z.re), format_significant(z.im.abs()))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn out_err(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Eval { function, params, x } => {
            let f = Function::new(function, params.params())?;
            let line = match f {
                Function::ExpM(_) => format_complex(f.eval_complex(x)?),
                _ => format_significant(f.eval(x)?),
            };
            writeln!(out, "{line}").map_err(out_err)?;
        }
        Command::Grid { function, params, from, to, n, out: path } => {
            let f = Function::new(function, params.params())?;
            let grid = linspace(from, to, n)?;
            let values = sample(|x| f.eval(x), &grid)?;
            let named = f.params().into_iter().map(|(k, v)| (k.to_owned(), v)).collect();
            let csv = Curve::new(function.name(), named, grid, values)?.to_csv();
            match path {
                Some(p) => write_file(&p, &csv)?,
                None => out.write_all(csv.as_bytes()).map_err(out_err)?,
            }
        }
        Command::Figure { id, outdir } => {
            let curves = figures::figure_curves(id)?;
            std::fs::create_dir_all(&outdir).map_err(|e| Error::Io(format!("{}: {e}", outdir.display())))?;
            for c in curves {
                let path = outdir.join(c.file_name(id));
                write_file(&path, &c.curve.to_csv())?;
                writeln!(out, "{}", path.display()).map_err(out_err)?;
            }
        }
        Command::Verify { suite, json } => {
            let report = run_suite(suite)?;
            let text = if json { report.to_json() + "\n" } else { report.to_text() };
            out.write_all(text.as_bytes()).map_err(out_err)?;
            return Ok(if report.overall_pass { EXIT_OK } else { EXIT_CHECK_FAILED });
        }
        Command::Integral { function, m, nu } => {
            let order = Order::new(m)?;
            let (value, reference) = match function {
                IntegralFn::Cos => {
                    if nu.is_some() {
                        return crate::error::domain("--nu applies to --fn os only");
                    }
                    let v = try_integrate_improper(|x| cos_m_eval(order, x), &oscillatory_spec())?;
                    (v, os_integral(order, PowerOrder::new(1.0)?)?)
                }
                IntegralFn::Os => {
                    let Some(nu) = nu else {
                        return crate::error::domain("--fn os needs --nu");
                    };
                    let nu = PowerOrder::new(nu)?;
                    let reference = os_integral(order, nu)?;
                    let f = LorentzianPower::new(order, nu);
                    let spec = oscillatory_spec().with_tolerances(1e-9, 1e-9)?;
                    (try_integrate_improper(|x| f.eval(x), &spec)?, reference)
                }
            };
            writeln!(out, "integral {}", format_significant(value)).map_err(out_err)?;
            writeln!(out, "reference {}", format_significant(reference)).map_err(out_err)?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "neartrig: {e}");
            exit_code(&e)
        }
    }
}
