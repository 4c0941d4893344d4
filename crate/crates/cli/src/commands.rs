use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use minorsum_core::campaign::{self, LemmaSuiteConfig, TheoremCampaignConfig};
use minorsum_core::linalg::{format_rational, matrix_from_json, random_symmetric};
use minorsum_core::minor_sums::DEFAULT_MAX_N;
use minorsum_core::peakon::{self, RunStatus, SimulationConfig, DEFAULT_COLLISION_EPSILON};
use minorsum_core::{ExactMatrix, PeakonState};
use serde::Serialize;

use crate::{Format, Output};

/// Inclusive range written as `a-b` or a single value `a`.
fn parse_range(s: &str) -> Result<(usize, usize)> {
    let (lo, hi) = match s.split_once('-') {
        Some((a, b)) => (a.trim().parse()?, b.trim().parse()?),
        None => {
            let v = s.trim().parse()?;
            (v, v)
        }
    };
    if lo > hi {
        bail!("empty range {s}");
    }
    Ok((lo, hi))
}

fn range_arg(s: &str) -> std::result::Result<(usize, usize), String> {
    parse_range(s).map_err(|e| format!("expected `a-b` or `a`: {e}"))
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn emit(
    out: &Output,
    text: impl FnOnce() -> String,
    json: impl FnOnce() -> Result<String>,
) -> Result<()> {
    let body = match out.format {
        Format::Text => text(),
        Format::Json => json()?,
    };
    write_or_print(out.out.as_deref(), &body)
}

fn write_or_print(path: Option<&Path>, body: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, body).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

#[derive(Args, Debug)]
pub struct TheoremArgs {
    /// Matrix sizes, e.g. `1-5` or `3`.
    #[arg(long, value_parser = range_arg, default_value = "1-5")]
    pub n: (usize, usize),
    /// Minor sizes; defaults to every `k` in `1..=n`.
    #[arg(long, value_parser = range_arg)]
    pub k: Option<(usize, usize)>,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Entries are drawn from `[-bound, bound]`.
    #[arg(long, default_value_t = 9)]
    pub bound: u32,
    /// Draw non-symmetric matrices (debug).
    #[arg(long)]
    pub nonsymmetric: bool,
    /// Raise the size guard.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
    #[command(flatten)]
    pub output: Output,
}

pub fn verify_theorem(a: &TheoremArgs) -> Result<bool> {
    if a.trials == 0 {
        bail!("--trials must be at least 1");
    }
    if a.n.0 == 0 {
        bail!("--n must start at 1 or more");
    }
    let cfg = TheoremCampaignConfig {
        n_min: a.n.0,
        n_max: a.n.1,
        k_range: a.k,
        trials: a.trials,
        seed: a.seed,
        entry_bound: a.bound,
        nonsymmetric: a.nonsymmetric,
        max_n: a.max_n,
    };
    let report = campaign::run_theorem_campaign(&cfg)?;
    emit(
        &a.output,
        || {
            let mut s = String::new();
            let kind = if report.symmetric {
                "symmetric"
            } else {
                "non-symmetric"
            };
            let _ = writeln!(
                s,
                "verify-theorem: {} {kind} trials per cell, seed {}, entries in [-{b}, {b}]",
                report.trials,
                report.seed,
                b = report.entry_bound
            );
            for c in &report.cells {
                let _ = write!(s, "  n={} k={}: {}/{} passed", c.n, c.k, c.passed, c.trials);
                if !report.symmetric {
                    let _ = write!(s, ", all-minors mismatches {}", c.all_minors_mismatches);
                }
                s.push('\n');
            }
            if let Some(w) = report.failures.first() {
                let _ = writeln!(
                    s,
                    "  first failure: n={} k={} trial {}: principal {}, all {}, interlacing {}",
                    w.report.n,
                    w.report.k,
                    w.trial,
                    format_rational(&w.report.principal_of_tx),
                    format_rational(&w.report.all_of_x),
                    format_rational(&w.report.interlacing_s),
                );
                let _ = writeln!(s, "  witness matrix: {}", matrix_line(&w.matrix));
            }
            if let Some(w) = &report.all_minors_witness {
                let _ = writeln!(
                    s,
                    "  all-minors witness: n={} k={}: principal {} = interlacing {}, all minors {}",
                    w.report.n,
                    w.report.k,
                    format_rational(&w.report.principal_of_tx),
                    format_rational(&w.report.interlacing_s),
                    format_rational(&w.report.all_of_x),
                );
                let _ = writeln!(s, "  witness matrix: {}", matrix_line(&w.matrix));
            }
            let _ = writeln!(s, "result: {}", verdict(report.all_passed));
            s
        },
        || to_json(&report),
    )?;
    Ok(report.all_passed)
}

fn matrix_line(m: &ExactMatrix) -> String {
    serde_json::to_string(m).unwrap_or_default()
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

#[derive(Args, Debug)]
pub struct LemmaArgs {
    /// Largest `n` for the matching and orbit checks.
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    /// Largest `n` for the disjoint-path count.
    #[arg(long, default_value_t = 6)]
    pub lgv_n: usize,
    /// Run with `n <= 3` and a small network.
    #[arg(long)]
    pub quick: bool,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 9)]
    pub bound: u32,
    /// Replace the matching sign with `+1` so the suite must fail (debug).
    #[arg(long, hide = true)]
    pub corrupt_sign: bool,
    #[command(flatten)]
    pub output: Output,
}

pub fn verify_lemmas(a: &LemmaArgs) -> Result<bool> {
    let (max_n, lgv_max_n) = if a.quick {
        (a.n.min(3), a.lgv_n.min(4))
    } else {
        (a.n, a.lgv_n)
    };
    let cfg = LemmaSuiteConfig {
        max_n,
        lgv_max_n,
        seed: a.seed,
        entry_bound: a.bound,
        corrupt_sign: a.corrupt_sign,
    };
    let report = campaign::run_lemma_suite(&cfg)?;
    emit(
        &a.output,
        || {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "verify-lemmas: matchings up to n={}, paths up to n={}",
                report.max_n, report.lgv_max_n
            );
            for c in &report.checks {
                let _ = writeln!(
                    s,
                    "  {:<4} {}: {} cases, {} failures",
                    verdict(c.passed()),
                    c.name,
                    c.cases,
                    c.failures
                );
                if let Some(w) = &c.witness {
                    let _ = writeln!(s, "       witness: {w}");
                }
            }
            let _ = writeln!(s, "result: {}", verdict(report.all_passed));
            s
        },
        || to_json(&report),
    )?;
    Ok(report.all_passed)
}

#[derive(Args, Debug)]
pub struct OrbitArgs {
    /// Matrix size for a generated matrix; must match `--matrix` when both are given.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: usize,
    /// Symmetric matrix as JSON; a seeded random one is used otherwise.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 9)]
    pub bound: u32,
    #[command(flatten)]
    pub output: Output,
}

pub fn orbit_audit(a: &OrbitArgs) -> Result<bool> {
    let x = match &a.matrix {
        Some(path) => {
            let x = matrix_from_json(&read_file(path)?)?;
            if let Some(n) = a.n {
                if n != x.rows() {
                    bail!(
                        "--n {n} does not match the {}x{} matrix",
                        x.rows(),
                        x.cols()
                    );
                }
            }
            x
        }
        None => {
            let n = a.n.context("give --n or --matrix")?;
            if n == 0 || n > DEFAULT_MAX_N {
                bail!("--n must be in 1..={DEFAULT_MAX_N}");
            }
            random_symmetric(n, a.seed, a.bound)
        }
    };
    let audit = campaign::orbit_audit(&x, a.k)?;
    emit(
        &a.output,
        || {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "orbit-audit: n={} k={}, {} matchings in {} orbits",
                audit.n,
                audit.k,
                audit.matchings,
                audit.orbits.len()
            );
            for (idx, o) in audit.orbits.iter().enumerate() {
                let class = match o.classification {
                    minorsum_core::OrbitClass::Interlacing => "interlacing",
                    minorsum_core::OrbitClass::NonInterlacing => "non-interlacing",
                };
                let _ = writeln!(
                    s,
                    "  orbit {idx}: {class}, p={}, size {}, contribution {}, running total {}",
                    o.p,
                    o.members.len(),
                    format_rational(&o.contribution),
                    format_rational(&o.running_total)
                );
                for m in &o.members {
                    let edges: Vec<String> =
                        m.edges.iter().map(|(l, r)| format!("{l}->{r}")).collect();
                    let _ = writeln!(
                        s,
                        "    {{{}}} sign {:+} weight {}{}",
                        edges.join(", "),
                        m.sign,
                        format_rational(&m.weight),
                        if m.interlacing { " (interlacing)" } else { "" }
                    );
                }
            }
            let _ = writeln!(
                s,
                "interlacing total {}, non-interlacing total {}",
                format_rational(&audit.interlacing_total),
                format_rational(&audit.non_interlacing_total)
            );
            let _ = writeln!(
                s,
                "all minors {}, interlacing sum {}",
                format_rational(&audit.all_minors),
                format_rational(&audit.interlacing_sum)
            );
            let _ = writeln!(s, "result: {}", verdict(audit.consistent));
            s
        },
        || to_json(&audit),
    )?;
    Ok(audit.consistent)
}

#[derive(Args, Debug)]
pub struct LgvArgs {
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[command(flatten)]
    pub output: Output,
}

pub fn lgv_audit(a: &LgvArgs) -> Result<bool> {
    let audit = campaign::lgv_audit(a.n)?;
    emit(
        &a.output,
        || {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "lgv-audit: n={}, {} index pairs",
                audit.n,
                audit.rows.len()
            );
            let _ = writeln!(
                s,
                "  {:<14} {:<14} {:>8} {:>8} {:>8}",
                "I", "J", "formula", "det", "paths"
            );
            for r in &audit.rows {
                let _ = writeln!(
                    s,
                    "  {:<14} {:<14} {:>8} {:>8} {:>8}",
                    r.i.to_string(),
                    r.j.to_string(),
                    format_rational(&r.formula_value),
                    format_rational(&r.det_value),
                    r.lgv_count
                );
            }
            let _ = writeln!(s, "result: {}", verdict(audit.all_agree));
            s
        },
        || to_json(&audit),
    )?;
    Ok(audit.all_agree)
}

fn read_state(path: &Path) -> Result<PeakonState> {
    let state: PeakonState = serde_json::from_str(&read_file(path)?)
        .with_context(|| format!("parsing peakon state {}", path.display()))?;
    state.validate()?;
    Ok(state)
}

#[derive(Args, Debug)]
pub struct PeakonArgs {
    /// Initial state as JSON `{"x": [...], "m": [...]}` with increasing `x`.
    #[arg(long)]
    pub state: PathBuf,
    #[arg(long, default_value_t = 1e-3)]
    pub dt: f64,
    #[arg(long, default_value_t = 2.0)]
    pub t_end: f64,
    /// Largest allowed relative drift of any constant of motion.
    #[arg(long, default_value_t = 1e-7)]
    pub tol: f64,
    /// Largest allowed relative gap between characteristic-polynomial
    /// coefficients and the constants of motion.
    #[arg(long, default_value_t = 1e-10)]
    pub coeff_tol: f64,
    #[arg(long, default_value_t = 100)]
    pub sample_every: usize,
    #[arg(long, default_value_t = DEFAULT_COLLISION_EPSILON)]
    pub collision_eps: f64,
    /// Also write the initial and final wave profiles as CSV.
    #[arg(long)]
    pub wave_out: Option<PathBuf>,
    #[arg(long, default_value_t = 201)]
    pub wave_points: usize,
    #[command(flatten)]
    pub output: Output,
}

pub fn peakon(a: &PeakonArgs) -> Result<bool> {
    let s0 = read_state(&a.state)?;
    let cfg = SimulationConfig {
        dt: a.dt,
        t_end: a.t_end,
        sample_every: a.sample_every,
        collision_epsilon: a.collision_eps,
    };
    let report = peakon::simulate(&s0, &cfg)?;
    let ok = report.status == RunStatus::Ok
        && report.worst_drift() <= a.tol
        && report.max_coeff_mismatch <= a.coeff_tol;

    if let Some(path) = &a.wave_out {
        let states = [s0.clone(), report.final_state.clone()];
        let grid = default_grid(&states, a.wave_points);
        write_or_print(Some(path), &peakon::waveform_csv(&states, &grid))?;
    }
    emit(
        &a.output,
        || {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "peakon: n={} dt={} t_end={} samples={}",
                report.n,
                report.dt,
                a.t_end,
                report.samples.len()
            );
            for (k, d) in report.max_rel_drift.iter().enumerate() {
                let _ = writeln!(s, "  H{} max relative drift {d:.3e}", k + 1);
            }
            let _ = writeln!(
                s,
                "  max coefficient mismatch {:.3e}",
                report.max_coeff_mismatch
            );
            let _ = writeln!(
                s,
                "  status {}, final x {:?}",
                status_name(report.status),
                report.final_state.x
            );
            let _ = writeln!(s, "result: {}", verdict(ok));
            s
        },
        || to_json(&report),
    )?;
    Ok(ok)
}

fn status_name(s: RunStatus) -> &'static str {
    match s {
        RunStatus::Ok => "ok",
        RunStatus::Collision => "collision",
        RunStatus::NumericalFailure => "numerical failure",
    }
}

/// Grid spanning every peak with a margin of 5 on each side.
fn default_grid(states: &[PeakonState], points: usize) -> Vec<f64> {
    let lo = states
        .iter()
        .flat_map(|s| s.x.iter().copied())
        .fold(f64::INFINITY, f64::min);
    let hi = states
        .iter()
        .flat_map(|s| s.x.iter().copied())
        .fold(f64::NEG_INFINITY, f64::max);
    peakon::linspace(lo - 5.0, hi + 5.0, points)
}

#[derive(Args, Debug)]
pub struct WaveArgs {
    #[arg(long)]
    pub state: PathBuf,
    /// Comma-separated times, non-decreasing and not before the state's `t`.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "0",
        allow_negative_numbers = true
    )]
    pub times: Vec<f64>,
    #[arg(long, default_value_t = 1e-3)]
    pub dt: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub x_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub x_max: Option<f64>,
    #[arg(long, default_value_t = 201)]
    pub points: usize,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn wave(a: &WaveArgs) -> Result<bool> {
    let mut current = read_state(&a.state)?;
    if a.points < 2 {
        bail!("--points must be at least 2");
    }
    let mut states = Vec::with_capacity(a.times.len());
    for &t in &a.times {
        let span = t - current.t;
        if span < 0.0 {
            bail!("time {t} is before {}", current.t);
        }
        if span > 0.0 {
            let report = peakon::simulate(&current, &SimulationConfig::new(a.dt, span))?;
            if report.status != RunStatus::Ok {
                bail!("integration to t={t} stopped: {:?}", report.status);
            }
            current = report.final_state;
            current.t = t;
        }
        states.push(current.clone());
    }
    let auto = default_grid(&states, a.points);
    let grid = match (a.x_min, a.x_max) {
        (None, None) => auto,
        (lo, hi) => peakon::linspace(
            lo.unwrap_or(auto[0]),
            hi.unwrap_or(auto[auto.len() - 1]),
            a.points,
        ),
    };
    write_or_print(a.out.as_deref(), &peakon::waveform_csv(&states, &grid))?;
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1-5").unwrap(), (1, 5));
        assert_eq!(parse_range("3").unwrap(), (3, 3));
        assert!(parse_range("5-1").is_err());
        assert!(parse_range("a-2").is_err());
    }
}
