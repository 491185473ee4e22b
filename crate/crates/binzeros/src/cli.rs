//! Command-line front end: zero sets, curve samples, containment
//! reports, convergence sweeps, and figure-reproduction data files.
//!
//! Exit codes: 0 pass, 1 check failure, 2 usage error, 3 numerical
//! failure.  Output is deterministic byte-for-byte for identical flags;
//! files are written to a temporary sibling and atomically renamed, so
//! no partial file survives an error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::complex::BigComplex;
use crate::error::{Error, Result};
use crate::exactpoly::SectionParams;
use crate::geometry::{self, Alpha, Branch};
use crate::real::{self, RM};
use crate::solver::{self, ZeroSet};
use crate::verify;

/// Default precision for curve sampling and statistics commands that
/// have no n to derive a precision from.
const CURVE_PRECISION: usize = 192;

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "binzeros",
    version,
    about = "Zeros of the low-order sections of (1+z)^n, their limit curves, and containment checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute all zeros of the section sum_{k<=r} C(n,k) z^k.
    Zeros {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u64,
        /// Working precision in bits (default max(128, 2n+64); the
        /// BINZEROS_PRECISION environment variable overrides the default).
        #[arg(long)]
        precision_bits: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample the closed limit curve |z|^a / |1+z| = K_a for a ratio a.
    Curve {
        /// Curve ratio in (0,1).
        #[arg(long)]
        alpha: f64,
        /// Number of sample points (even, at least 16).
        #[arg(long, default_value_t = 512)]
        points: usize,
        #[arg(long)]
        precision_bits: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every zero of (r, n) against the four containment
    /// constraints (outer circle, finite circle, half-plane, level curve).
    Verify {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        precision_bits: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve sections r = round(alpha*n) across several n and report
    /// curve-distance statistics.
    Sweep {
        #[arg(long)]
        alpha: f64,
        /// Comma-separated list of n values.
        #[arg(long, value_delimiter = ',', required = true)]
        ns: Vec<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the zeros of (r, n), rescaled by (n-r)/r, against the
    /// exponential curve |z e^(1-z)| = 1.
    Szego {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        precision_bits: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Measure the deviation of the r = n-3 sections from the vertical
    /// line Re z = -1/2 across several n.
    Halfline {
        /// Comma-separated list of n values (each at least 4).
        #[arg(long, value_delimiter = ',', required = true)]
        ns: Vec<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the layered CSV data files for one of the three standard
    /// figures (1: zeros/curve/circles at (10,30); 2: same at (30,90);
    /// 3: zeros/curve/equally-spaced curve points at (40,80)).
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        /// Curve/circle sample density.
        #[arg(long, default_value_t = 512)]
        points: usize,
        /// Output directory for the layer files.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("binzeros: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Domain(_)
        | Error::Hypothesis(_)
        | Error::InsufficientDensity { .. }
        | Error::Io(_) => 2,
        Error::NonConvergence { .. }
        | Error::Residual(_)
        | Error::Numeric(_)
        | Error::Serde(_) => 3,
    }
}

/// Flag > environment override > built-in default.
fn resolve_precision(flag: Option<usize>, default: usize) -> Result<usize> {
    if let Some(p) = flag {
        if p < 53 {
            return Err(Error::Domain(format!(
                "precision_bits must be at least 53, got {p}"
            )));
        }
        return Ok(p);
    }
    if let Ok(raw) = std::env::var("BINZEROS_PRECISION") {
        let p: usize = raw.parse().map_err(|_| {
            Error::Domain(format!("BINZEROS_PRECISION must be an integer, got {raw:?}"))
        })?;
        if p < 53 {
            return Err(Error::Domain(format!(
                "BINZEROS_PRECISION must be at least 53, got {p}"
            )));
        }
        return Ok(p);
    }
    Ok(default)
}

fn atomic_write(path: &Path, content: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(content)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

fn emit(out: &Option<PathBuf>, content: &[u8]) -> Result<()> {
    match out {
        None => {
            std::io::stdout().write_all(content)?;
            Ok(())
        }
        Some(path) => atomic_write(path, content),
    }
}

fn json_line(body: String) -> Vec<u8> {
    let mut bytes = body.into_bytes();
    bytes.push(b'\n');
    bytes
}

fn dispatch(cmd: Cmd) -> Result<i32> {
    match cmd {
        Cmd::Zeros {
            r,
            n,
            precision_bits,
            format,
            out,
        } => cmd_zeros(r, n, precision_bits, format, &out),
        Cmd::Curve {
            alpha,
            points,
            precision_bits,
            format,
            out,
        } => cmd_curve(alpha, points, precision_bits, format, &out),
        Cmd::Verify {
            r,
            n,
            precision_bits,
            format,
            out,
        } => cmd_verify(r, n, precision_bits, format, &out),
        Cmd::Sweep {
            alpha,
            ns,
            format,
            out,
        } => cmd_sweep(alpha, &ns, format, &out),
        Cmd::Szego {
            r,
            n,
            precision_bits,
            out,
        } => cmd_szego(r, n, precision_bits, &out),
        Cmd::Halfline { ns, format, out } => cmd_halfline(&ns, format, &out),
        Cmd::Figure { which, points, out } => cmd_figure(which, points, &out),
    }
}

fn solve_section(r: u64, n: u64, precision_bits: Option<usize>) -> Result<ZeroSet> {
    let params = SectionParams::new(r, n)?;
    let p = resolve_precision(precision_bits, solver::default_precision(n))?;
    solver::find_zeros(&params, p)
}

fn zero_set_bytes(zs: &ZeroSet, format: Format) -> Result<Vec<u8>> {
    Ok(match format {
        Format::Json => json_line(zs.to_json()),
        Format::Csv => {
            let mut buf = Vec::new();
            zs.write_csv(&mut buf)?;
            buf
        }
    })
}

fn cmd_zeros(
    r: u64,
    n: u64,
    precision_bits: Option<usize>,
    format: Format,
    out: &Option<PathBuf>,
) -> Result<i32> {
    let zs = solve_section(r, n, precision_bits)?;
    let (residuals_ok, worst) = solver::verify_residuals(&zs);
    emit(out, &zero_set_bytes(&zs, format)?)?;
    if !residuals_ok {
        eprintln!(
            "binzeros: residual verification failed (worst {})",
            real::fmt_dec(&worst)
        );
        return Ok(1);
    }
    Ok(0)
}

fn cmd_curve(
    alpha: f64,
    points: usize,
    precision_bits: Option<usize>,
    format: Format,
    out: &Option<PathBuf>,
) -> Result<i32> {
    let p = resolve_precision(precision_bits, CURVE_PRECISION)?;
    let alpha = Alpha::from_f64(alpha, p)?;
    let sample = geometry::sample_curve(&alpha, Branch::Inner, points)?;
    let content = match format {
        Format::Json => json_line(sample.to_json()),
        Format::Csv => {
            let mut buf = Vec::new();
            sample.write_csv(&mut buf)?;
            buf
        }
    };
    emit(out, &content)?;
    Ok(0)
}

fn cmd_verify(
    r: u64,
    n: u64,
    precision_bits: Option<usize>,
    format: Format,
    out: &Option<PathBuf>,
) -> Result<i32> {
    let zs = solve_section(r, n, precision_bits)?;
    let report = verify::check_region(&zs)?;
    let content = match format {
        Format::Json => json_line(report.to_json()),
        Format::Csv => {
            let mut buf = Vec::new();
            report.write_csv(&mut buf)?;
            buf
        }
    };
    emit(out, &content)?;
    Ok(if report.pass { 0 } else { 1 })
}

fn cmd_sweep(alpha: f64, ns: &[u64], format: Format, out: &Option<PathBuf>) -> Result<i32> {
    let records = verify::convergence_sweep(alpha, ns)?;
    // Decreasing sup-distance diagnostic: one inversion is tolerated as
    // small-n noise but flagged in the report.
    let mut inversions = 0usize;
    for pair in records.windows(2) {
        let a = real::to_f64(&pair[0].sup_distance);
        let b = real::to_f64(&pair[1].sup_distance);
        if b > a {
            inversions += 1;
        }
    }
    let pass = inversions <= 1;
    let content = match format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = records
                .iter()
                .map(|rec| serde_json::from_str(&rec.to_json()))
                .collect::<std::result::Result<_, _>>()?;
            json_line(serde_json::to_string(&serde_json::json!({
                "alpha": alpha,
                "records": rows,
                "inversions": inversions,
                "monotone_pass": pass,
            }))?)
        }
        Format::Csv => {
            let mut buf = String::new();
            buf.push_str(verify::ConvergenceRecord::csv_header());
            buf.push('\n');
            for rec in &records {
                buf.push_str(&rec.csv_row());
                buf.push('\n');
            }
            buf.into_bytes()
        }
    };
    emit(out, &content)?;
    Ok(if pass { 0 } else { 1 })
}

fn cmd_szego(
    r: u64,
    n: u64,
    precision_bits: Option<usize>,
    out: &Option<PathBuf>,
) -> Result<i32> {
    let zs = solve_section(r, n, precision_bits)?;
    let report = verify::szego_check_zeros(&zs)?;
    // Rescaled zeros must stay inside the closed unit disk (up to a
    // hair of root error).
    let limit = real::parse_dec("1.0000000001", 192).expect("disk limit literal");
    let pass = report
        .max_modulus
        .partial_cmp(&limit)
        .map(|o| o != std::cmp::Ordering::Greater)
        .unwrap_or(false);
    let mut value: serde_json::Value = serde_json::from_str(&report.to_json())?;
    value["pass"] = serde_json::Value::Bool(pass);
    emit(out, &json_line(serde_json::to_string(&value)?))?;
    Ok(if pass { 0 } else { 1 })
}

fn cmd_halfline(ns: &[u64], format: Format, out: &Option<PathBuf>) -> Result<i32> {
    let records = verify::halfline_check(ns)?;
    let zero = real::from_u64(0, 64);
    let pass = records.iter().all(|rec| {
        rec.min_margin.partial_cmp(&zero) == Some(std::cmp::Ordering::Greater)
    });
    let content = match format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = records
                .iter()
                .map(|rec| serde_json::from_str(&rec.to_json()))
                .collect::<std::result::Result<_, _>>()?;
            json_line(serde_json::to_string(&serde_json::json!({
                "records": rows,
                "strictly_right_of_line": pass,
            }))?)
        }
        Format::Csv => {
            let mut buf = String::new();
            buf.push_str(verify::HalflineRecord::csv_header());
            buf.push('\n');
            for rec in &records {
                buf.push_str(&rec.csv_row());
                buf.push('\n');
            }
            buf.into_bytes()
        }
    };
    emit(out, &content)?;
    Ok(if pass { 0 } else { 1 })
}

/// Circle layer: theta,re,im rows for the circle of the given center
/// (on the real axis) and radius.
fn circle_csv(center: &astro_float::BigFloat, radius: &astro_float::BigFloat, points: usize) -> Vec<u8> {
    let wp = real::align(CURVE_PRECISION);
    let two_pi = real::two_pi(wp);
    let mut buf = String::from("theta,re,im\n");
    for j in 0..points {
        let theta = two_pi.mul(&real::ratio(j as i64, points as i64, wp), wp, RM);
        let re = center.add(&radius.mul(&real::cos(&theta, wp), wp, RM), wp, RM);
        let im = radius.mul(&real::sin(&theta, wp), wp, RM);
        buf.push_str(&format!(
            "{},{},{}\n",
            real::fmt_dec(&theta),
            real::fmt_dec(&re),
            real::fmt_dec(&im)
        ));
    }
    buf.into_bytes()
}

fn points_csv(points: &[BigComplex]) -> Vec<u8> {
    let mut buf = String::from("p,re,im\n");
    for (i, z) in points.iter().enumerate() {
        let (re, im) = z.fmt_pair();
        buf.push_str(&format!("{},{},{}\n", i + 1, re, im));
    }
    buf.into_bytes()
}

fn cmd_figure(which: u8, points: usize, out_dir: &Path) -> Result<i32> {
    std::fs::create_dir_all(out_dir)?;
    let prefix = format!("fig{which}");
    let write_layer = |name: &str, content: &[u8]| -> Result<()> {
        atomic_write(&out_dir.join(format!("{prefix}_{name}.csv")), content)
    };

    match which {
        1 | 2 => {
            let (r, n) = if which == 1 { (10, 30) } else { (30, 90) };
            let zs = solve_section(r, n, None)?;
            write_layer("zeros", &zero_set_bytes(&zs, Format::Csv)?)?;

            let wp = real::align(CURVE_PRECISION);
            let alpha = Alpha::from_ratio(r as i64, n as i64, wp)?;
            let sample = geometry::sample_curve(&alpha, Branch::Inner, points)?;
            let mut curve = Vec::new();
            sample.write_csv(&mut curve)?;
            write_layer("curve", &curve)?;

            // Outer circle |z| = r/(n+1-r) and the finite circle of the
            // containment statement with g = r/(n-1).
            let outer = real::ratio(r as i64, (n + 1 - r) as i64, wp);
            write_layer(
                "circle_outer",
                &circle_csv(&real::from_u64(0, wp), &outer, points),
            )?;
            let g = real::ratio(r as i64, (n - 1) as i64, wp);
            let g_sq = g.mul(&g, wp, RM);
            let denom = real::from_u64(1, wp).sub(&g_sq, wp, RM);
            let center = g_sq.div(&denom, wp, RM);
            let radius = g.div(&denom, wp, RM);
            write_layer("circle_gamma", &circle_csv(&center, &radius, points))?;
        }
        3 => {
            let (r, n) = (40u64, 80u64);
            let zs = solve_section(r, n, None)?;
            write_layer("zeros", &zero_set_bytes(&zs, Format::Csv)?)?;

            let wp = real::align(CURVE_PRECISION);
            let alpha = Alpha::from_ratio(1, 2, wp)?;
            let sample = geometry::sample_curve(&alpha, Branch::Inner, points)?;
            let mut curve = Vec::new();
            sample.write_csv(&mut curve)?;
            write_layer("curve", &curve)?;

            // The equally-spaced limit points on the curve for this n.
            let marks = geometry::curve_points(&alpha, n)?;
            write_layer("points", &points_csv(&marks))?;
        }
        _ => unreachable!("clap range guard"),
    }
    Ok(0)
}
