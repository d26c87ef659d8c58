//! Command-line front end. Every subcommand writes CSV (or channel JSON) so
//! the results can be plotted or diffed with ordinary tools.
//!
//! Exit codes: 0 on success, 1 for usage errors, 2 for validation errors.
//! Failures print a single `error: kind=<kind> msg=<message>` line on the
//! diagnostic stream.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use crate::channel::DiscreteChannel;
use crate::error::Error;
use crate::extremal::{gap_row_with, CapacityGapRow, ExtremalProfile};
use crate::lambda::{compare, lambda_profile, PiecewiseLinear};
use crate::numerics::SolverConfig;
use crate::sampler::{sample_batch, SamplerConfig};

/// Environment variable overriding the quadrature tolerance.
pub const QUAD_TOL_ENV: &str = "BMSORD_QUAD_TOL";

#[derive(Debug, Parser)]
#[command(name = "bmsord", version, about = "Degradation order and extremal channels of fixed-capacity BMS families")]
pub struct Command {
    /// Decimal places for numeric CSV output.
    #[arg(long, global = true, default_value_t = 6)]
    pub digits: usize,

    #[command(subcommand)]
    pub action: Action,
}

#[derive(Debug, Subcommand)]
pub enum Action {
    /// Crossover probability of the BSC with the given capacity, its
    /// mass position and the threshold z_bsc.
    EpsBsc {
        #[arg(long)]
        capacity: f64,
    },
    /// Capacity gaps of the least degraded and least upgraded channels.
    GapTable {
        #[arg(long, default_value_t = 0.1)]
        from: f64,
        #[arg(long, default_value_t = 0.9)]
        to: f64,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fine capacity sweep with a trailing summary of the largest gaps.
    Sweep {
        #[arg(long, default_value_t = 0.001)]
        from: f64,
        #[arg(long, default_value_t = 0.999)]
        to: f64,
        #[arg(long, default_value_t = 0.001)]
        step: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extremal Λ curves on a uniform grid plus the two seam points.
    Extremal {
        #[arg(long)]
        capacity: f64,
        #[arg(long, default_value_t = 101)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random channels of exactly the given capacity.
    Sample {
        #[arg(long)]
        capacity: f64,
        #[arg(long, default_value_t = 2)]
        masses: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output directory (one file per channel), or a file with `--array`.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write a single JSON array instead of one file per channel.
        #[arg(long)]
        array: bool,
        /// Also write each channel's Λ breakpoints as CSV.
        #[arg(long)]
        emit_lambda: bool,
    },
    /// Functionals and Λ breakpoints of a channel file.
    Eval {
        #[arg(long)]
        channel: PathBuf,
        /// Add a uniform grid of this many points to the Λ breakpoints.
        #[arg(long)]
        refine: Option<usize>,
    },
    /// Degradation relation of channel A to channel B.
    CheckOrder {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Validation(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Validation(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cmd = match Command::try_parse_from(argv) {
        Ok(cmd) => cmd,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    match execute(&cmd, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: kind=usage msg={msg}");
            1
        }
        Err(Failure::Validation(e)) => {
            let _ = writeln!(err, "error: kind={} msg={e}", e.kind());
            2
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: kind=io msg={msg}");
            2
        }
    }
}

fn solver_config() -> Result<SolverConfig, Failure> {
    let cfg = SolverConfig::default();
    match std::env::var(QUAD_TOL_ENV) {
        Ok(raw) => {
            let tol: f64 = raw.trim().parse().map_err(|_| {
                Failure::Validation(Error::InvalidConfig(format!("{QUAD_TOL_ENV}={raw}")))
            })?;
            Ok(cfg.with_quad_tol(tol)?)
        }
        Err(_) => Ok(cfg),
    }
}

fn execute(cmd: &Command, stdout: &mut dyn Write) -> Result<(), Failure> {
    let d = cmd.digits;
    match &cmd.action {
        Action::EpsBsc { capacity } => {
            let p = ExtremalProfile::new(*capacity)?;
            writeln!(stdout, "c,eps_bsc,z_bsc,x_bsc")?;
            writeln!(
                stdout,
                "{:.d$},{:.d$},{:.d$},{:.d$}",
                p.c,
                p.eps_bsc,
                p.z_bsc,
                p.x_bsc()
            )?;
        }
        Action::GapTable { from, to, step, out } => {
            let rows = gap_rows(&capacity_grid(*from, *to, *step)?, &solver_config()?)?;
            emit(out.as_deref(), stdout, &gap_csv(&rows, d))?;
        }
        Action::Sweep { from, to, step, out } => {
            let rows = gap_rows(&capacity_grid(*from, *to, *step)?, &solver_config()?)?;
            let mut text = gap_csv(&rows, d);
            let arg_max = |key: fn(&CapacityGapRow) -> f64| {
                rows.iter()
                    .copied()
                    .reduce(|best, r| if key(&r) > key(&best) { r } else { best })
            };
            if let (Some(dm), Some(um)) = (arg_max(|r| r.d_gap), arg_max(|r| r.u_gap)) {
                text.push_str(&format!(
                    "# max_d_gap={:.d$} at c={:.d$}; max_u_gap={:.d$} at c={:.d$}\n",
                    dm.d_gap, dm.c, um.u_gap, um.c
                ));
            }
            emit(out.as_deref(), stdout, &text)?;
        }
        Action::Extremal { capacity, grid, out } => {
            if *grid < 2 {
                return Err(Failure::Usage("--grid needs at least 2 points".into()));
            }
            let p = ExtremalProfile::with_config(*capacity, solver_config()?)?;
            let mut zs: Vec<f64> = (0..*grid).map(|k| k as f64 / (*grid - 1) as f64).collect();
            zs.push(p.z_bsc);
            zs.push(p.x_bsc());
            zs.sort_by(f64::total_cmp);
            zs.dedup();
            let mut text = String::from("z,lambda_bar,lambda_star,lambda_under\n");
            for z in zs {
                text.push_str(&format!(
                    "{:.d$},{:.d$},{:.d$},{:.d$}\n",
                    z,
                    p.lambda_bar(z)?,
                    p.lambda_star(z)?,
                    p.lambda_under(z)?
                ));
            }
            emit(out.as_deref(), stdout, &text)?;
        }
        Action::Sample {
            capacity,
            masses,
            count,
            seed,
            out,
            array,
            emit_lambda,
        } => {
            let cfg = SamplerConfig::new(*capacity, *masses, *seed);
            let channels = sample_batch(&cfg, *count)?;
            write_samples(&channels, out.as_deref(), *array, *emit_lambda, d, stdout)?;
        }
        Action::Eval { channel, refine } => {
            let ch = read_channel(channel)?;
            writeln!(stdout, "capacity,entropy,bhattacharyya,error_probability")?;
            writeln!(
                stdout,
                "{:.d$},{:.d$},{:.d$},{:.d$}",
                ch.capacity(),
                ch.entropy(),
                ch.bhattacharyya(),
                ch.error_probability()
            )?;
            writeln!(stdout)?;
            write!(stdout, "{}", profile_csv(&lambda_profile(&ch), *refine, d))?;
        }
        Action::CheckOrder { a, b } => {
            let (a, b) = (read_channel(a)?, read_channel(b)?);
            let rel = compare(&lambda_profile(&a), &lambda_profile(&b));
            writeln!(stdout, "{}", rel.label())?;
        }
    }
    Ok(())
}

/// `from, from + step, ...` up to `to`, computed by index so the grid does
/// not accumulate rounding.
fn capacity_grid(from: f64, to: f64, step: f64) -> Result<Vec<f64>, Failure> {
    if !(step > 0.0) || !(from <= to) || !from.is_finite() || !to.is_finite() {
        return Err(Failure::Usage(
            "need finite --from <= --to and a positive --step".into(),
        ));
    }
    let n = ((to - from) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|k| from + k as f64 * step).collect())
}

fn gap_rows(cs: &[f64], cfg: &SolverConfig) -> Result<Vec<CapacityGapRow>, Error> {
    cs.par_iter().map(|&c| gap_row_with(c, cfg)).collect()
}

fn gap_csv(rows: &[CapacityGapRow], d: usize) -> String {
    let mut text = String::from("c,c_star,c_under,d_gap,u_gap\n");
    for r in rows {
        text.push_str(&format!(
            "{:.d$},{:.d$},{:.d$},{:.d$},{:.d$}\n",
            r.c, r.c_star, r.c_under, r.d_gap, r.u_gap
        ));
    }
    text
}

fn profile_csv(pl: &PiecewiseLinear, refine: Option<usize>, d: usize) -> String {
    let mut zs = pl.breaks().to_vec();
    if let Some(n) = refine.filter(|&n| n >= 2) {
        zs.extend((0..n).map(|k| k as f64 / (n - 1) as f64));
        zs.sort_by(f64::total_cmp);
        zs.dedup();
    }
    let mut text = String::from("z,value\n");
    for z in zs {
        let v = pl.eval(z).expect("grid lies in [0, 1]");
        text.push_str(&format!("{z:.d$},{v:.d$}\n"));
    }
    text
}

fn emit(path: Option<&Path>, stdout: &mut dyn Write, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn read_channel(path: &Path) -> Result<DiscreteChannel, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(DiscreteChannel::from_json(&text)?)
}

fn json_array(channels: &[DiscreteChannel]) -> String {
    let items: Vec<String> = channels.iter().map(|c| format!("  {}", c.to_json())).collect();
    if items.is_empty() {
        "[]\n".to_string()
    } else {
        format!("[\n{}\n]\n", items.join(",\n"))
    }
}

fn write_samples(
    channels: &[DiscreteChannel],
    out: Option<&Path>,
    array: bool,
    emit_lambda: bool,
    d: usize,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    let Some(out) = out else {
        if emit_lambda {
            return Err(Failure::Usage("--emit-lambda requires --out".into()));
        }
        stdout.write_all(json_array(channels).as_bytes())?;
        return Ok(());
    };
    if array {
        fs::write(out, json_array(channels))?;
        if emit_lambda {
            let mut text = String::from("channel,z,value\n");
            for (i, ch) in channels.iter().enumerate() {
                let pl = lambda_profile(ch);
                for (z, v) in pl.breaks().iter().zip(pl.values()) {
                    text.push_str(&format!("{i},{z:.d$},{v:.d$}\n"));
                }
            }
            fs::write(out.with_extension("lambda.csv"), text)?;
        }
        return Ok(());
    }
    fs::create_dir_all(out)?;
    for (i, ch) in channels.iter().enumerate() {
        fs::write(out.join(format!("ch_{i:05}.json")), ch.to_json() + "\n")?;
        if emit_lambda {
            let text = profile_csv(&lambda_profile(ch), None, d);
            fs::write(out.join(format!("ch_{i:05}_lambda.csv")), text)?;
        }
    }
    Ok(())
}
