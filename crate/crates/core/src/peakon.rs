//! Multipeakon dynamics of the Novikov equation.
//!
//! The wave `u(x, t) = Σ m_i(t) e^{−|x − x_i(t)|}` evolves by
//!
//! ```text
//! ẋ_k = u(x_k)²
//! ṁ_k = m_k · u(x_k) · Σ_j m_j sgn(x_k − x_j) e^{−|x_k − x_j|}
//! ```
//!
//! With `P = diag(m)`, `E_ij = e^{−|x_i − x_j|}` and the sign matrix `T`,
//! the polynomial `det(I − λ TPEP)` is conserved, and its `λ^k` coefficient
//! is `(−1)^k` times the sum of all `k × k` minors of the symmetric `PEP`.
//! This module integrates the flow with fixed-step RK4 and tracks both
//! quantities in double precision.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::IndexSet;

/// Largest peakon count for which constants of motion are enumerated.
pub const MAX_PEAKONS: usize = 8;

pub const DEFAULT_COLLISION_EPSILON: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct PeakonState {
    #[serde(default)]
    pub t: f64,
    pub x: Vec<f64>,
    pub m: Vec<f64>,
}

impl PeakonState {
    /// Validated state: `n >= 1`, finite values, strictly increasing positions.
    pub fn new(t: f64, x: Vec<f64>, m: Vec<f64>) -> Result<Self> {
        let s = PeakonState { t, x, m };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.x.is_empty() {
            return Err(Error::InvalidState("need at least one peakon".into()));
        }
        if self.x.len() != self.m.len() {
            return Err(Error::InvalidState(format!(
                "{} positions but {} amplitudes",
                self.x.len(),
                self.m.len()
            )));
        }
        if !self.t.is_finite() || self.x.iter().chain(&self.m).any(|v| !v.is_finite()) {
            return Err(Error::InvalidState("non-finite value".into()));
        }
        if self.x.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidState(
                "positions must be strictly increasing".into(),
            ));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// Smallest gap between neighbouring positions; infinite for one peakon.
    pub fn min_gap(&self) -> f64 {
        self.x
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min)
    }

    /// `u(x) = Σ m_i e^{−|x − x_i|}`.
    pub fn wave(&self, at: f64) -> f64 {
        self.x
            .iter()
            .zip(&self.m)
            .map(|(&xi, &mi)| mi * (-(at - xi).abs()).exp())
            .sum()
    }
}

fn sgn(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Time derivatives `(ẋ, ṁ)`.
pub fn ode_rhs(s: &PeakonState) -> (Vec<f64>, Vec<f64>) {
    let n = s.n();
    let mut dx = Vec::with_capacity(n);
    let mut dm = Vec::with_capacity(n);
    for k in 0..n {
        let mut u = 0.0;
        let mut ux = 0.0;
        for i in 0..n {
            let d = s.x[k] - s.x[i];
            let w = s.m[i] * (-d.abs()).exp();
            u += w;
            ux += sgn(d) * w;
        }
        dx.push(u * u);
        dm.push(s.m[k] * u * ux);
    }
    (dx, dm)
}

/// One classical fourth-order Runge–Kutta step.
pub fn rk4_step(s: &PeakonState, dt: f64) -> PeakonState {
    let shifted = |base: &PeakonState, kx: &[f64], km: &[f64], h: f64| PeakonState {
        t: base.t + h,
        x: base.x.iter().zip(kx).map(|(a, b)| a + h * b).collect(),
        m: base.m.iter().zip(km).map(|(a, b)| a + h * b).collect(),
    };
    let (k1x, k1m) = ode_rhs(s);
    let (k2x, k2m) = ode_rhs(&shifted(s, &k1x, &k1m, dt / 2.0));
    let (k3x, k3m) = ode_rhs(&shifted(s, &k2x, &k2m, dt / 2.0));
    let (k4x, k4m) = ode_rhs(&shifted(s, &k3x, &k3m, dt));
    let combine = |base: &[f64], a: &[f64], b: &[f64], c: &[f64], d: &[f64]| -> Vec<f64> {
        (0..base.len())
            .map(|i| base[i] + dt / 6.0 * (a[i] + 2.0 * b[i] + 2.0 * c[i] + d[i]))
            .collect()
    };
    PeakonState {
        t: s.t + dt,
        x: combine(&s.x, &k1x, &k2x, &k3x, &k4x),
        m: combine(&s.m, &k1m, &k2m, &k3m, &k4m),
    }
}

/// Dense square matrix of doubles, row-major.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RealMatrix {
    n: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let data = (0..n * n).map(|idx| f(idx / n, idx % n)).collect();
        RealMatrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 0-based access.
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.n + c]
    }

    pub fn mul(&self, rhs: &RealMatrix) -> RealMatrix {
        assert_eq!(self.n, rhs.n, "size mismatch");
        RealMatrix::from_fn(self.n, |r, c| {
            (0..self.n).map(|t| self.get(r, t) * rhs.get(t, c)).sum()
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Determinant of the submatrix on 1-based `rows` × `cols`, by Gaussian
    /// elimination with partial pivoting.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> f64 {
        let k = rows.len();
        let mut a: Vec<Vec<f64>> = rows
            .iter()
            .map(|&r| cols.iter().map(|&c| self.get(r - 1, c - 1)).collect())
            .collect();
        let mut det = 1.0;
        for col in 0..k {
            let pivot = (col..k)
                .max_by(|&p, &q| a[p][col].abs().total_cmp(&a[q][col].abs()))
                .expect("non-empty range");
            if a[pivot][col] == 0.0 {
                return 0.0;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= a[col][col];
            let (head, tail) = a.split_at_mut(col + 1);
            let pivot_row = &head[col];
            for row in tail {
                let f = row[col] / pivot_row[col];
                for (v, p) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                    *v -= f * p;
                }
            }
        }
        det
    }

    pub fn sum_all_minors(&self, k: usize) -> f64 {
        let subsets: Vec<IndexSet> = IndexSet::subsets(self.n, k).collect();
        subsets
            .iter()
            .flat_map(|i| {
                subsets
                    .iter()
                    .map(move |j| self.minor(i.elems(), j.elems()))
            })
            .sum()
    }

    pub fn sum_principal_minors(&self, k: usize) -> f64 {
        IndexSet::subsets(self.n, k)
            .map(|j| self.minor(j.elems(), j.elems()))
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeakonMatrices {
    pub p: RealMatrix,
    pub e: RealMatrix,
    pub t: RealMatrix,
}

impl PeakonMatrices {
    /// `P E P`, formed entrywise as `(m_r m_c) e_rc` so it is exactly symmetric.
    pub fn pep(&self) -> RealMatrix {
        RealMatrix::from_fn(self.p.n, |r, c| {
            (self.p.get(r, r) * self.p.get(c, c)) * self.e.get(r, c)
        })
    }

    pub fn tpep(&self) -> RealMatrix {
        self.t.mul(&self.pep())
    }
}

pub fn build_matrices(s: &PeakonState) -> PeakonMatrices {
    let n = s.n();
    PeakonMatrices {
        p: RealMatrix::from_fn(n, |r, c| if r == c { s.m[r] } else { 0.0 }),
        e: RealMatrix::from_fn(n, |r, c| (-(s.x[r] - s.x[c]).abs()).exp()),
        t: RealMatrix::from_fn(n, |r, c| 1.0 + sgn(r as f64 - c as f64)),
    }
}

fn guard(n: usize) -> Result<()> {
    if n > MAX_PEAKONS {
        Err(Error::TooLarge {
            n,
            limit: MAX_PEAKONS,
        })
    } else {
        Ok(())
    }
}

/// `H_1..H_n`: `H_k` is the sum of all `k × k` minors of `PEP`.
pub fn constants_of_motion(s: &PeakonState) -> Result<Vec<f64>> {
    guard(s.n())?;
    let pep = build_matrices(s).pep();
    Ok((1..=s.n()).map(|k| pep.sum_all_minors(k)).collect())
}

/// Coefficients `c_0..c_n` of `det(I − λ TPEP)` in powers of `λ`.
pub fn char_poly_coefficients(s: &PeakonState) -> Result<Vec<f64>> {
    guard(s.n())?;
    let tpep = build_matrices(s).tpep();
    Ok((0..=s.n())
        .map(|k| {
            if k == 0 {
                1.0
            } else {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                sign * tpep.sum_principal_minors(k)
            }
        })
        .collect())
}

/// Largest `|(−1)^k c_k − H_k| / |H_k|` over `k = 1..n`.
pub fn coefficient_mismatch(h: &[f64], c: &[f64]) -> f64 {
    h.iter()
        .enumerate()
        .map(|(idx, &hk)| {
            let k = idx + 1;
            let signed = if k % 2 == 0 { c[k] } else { -c[k] };
            relative_diff(signed, hk)
        })
        .fold(0.0, f64::max)
}

fn relative_diff(value: f64, reference: f64) -> f64 {
    let diff = (value - reference).abs();
    if reference == 0.0 {
        diff
    } else {
        diff / reference.abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationConfig {
    pub dt: f64,
    pub t_end: f64,
    /// Record a sample every this many steps (the final step is always recorded).
    pub sample_every: usize,
    pub collision_epsilon: f64,
}

impl SimulationConfig {
    pub fn new(dt: f64, t_end: f64) -> Self {
        SimulationConfig {
            dt,
            t_end,
            sample_every: 100,
            collision_epsilon: DEFAULT_COLLISION_EPSILON,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RunStatus {
    #[serde(rename = "ok")]
    Ok,
    #[serde(rename = "collision")]
    Collision,
    #[serde(rename = "numerical failure")]
    NumericalFailure,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sample {
    pub t: f64,
    #[serde(rename = "H")]
    pub h: Vec<f64>,
    pub c: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConservationReport {
    pub n: usize,
    pub dt: f64,
    pub samples: Vec<Sample>,
    /// Per `k`, the largest `|H_k(t) − H_k(0)| / |H_k(0)|` over the samples.
    pub max_rel_drift: Vec<f64>,
    /// Largest relative disagreement between `(−1)^k c_k` and `H_k` over the samples.
    pub max_coeff_mismatch: f64,
    pub status: RunStatus,
    #[serde(skip)]
    pub final_state: PeakonState,
}

impl ConservationReport {
    pub fn worst_drift(&self) -> f64 {
        self.max_rel_drift.iter().copied().fold(0.0, f64::max)
    }
}

/// Integrates from `s0` to `t_end`, sampling the constants of motion.
pub fn simulate(s0: &PeakonState, cfg: &SimulationConfig) -> Result<ConservationReport> {
    s0.validate()?;
    guard(s0.n())?;
    if !(cfg.dt > 0.0 && cfg.dt.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "dt = {} must be positive",
            cfg.dt
        )));
    }
    if !(cfg.t_end > 0.0 && cfg.t_end.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "t_end = {} must be positive",
            cfg.t_end
        )));
    }
    if cfg.sample_every == 0 {
        return Err(Error::InvalidArgument(
            "sample_every must be at least 1".into(),
        ));
    }
    if s0.m.iter().any(|&m| m <= 0.0) {
        return Err(Error::InvalidState("amplitudes must be positive".into()));
    }

    let steps = (cfg.t_end / cfg.dt).round().max(1.0) as usize;
    let t0 = s0.t;
    let mut report = ConservationReport {
        n: s0.n(),
        dt: cfg.dt,
        samples: Vec::new(),
        max_rel_drift: vec![0.0; s0.n()],
        max_coeff_mismatch: 0.0,
        status: RunStatus::Ok,
        final_state: s0.clone(),
    };
    record(&mut report, s0)?;

    let mut state = s0.clone();
    for step in 1..=steps {
        let mut next = rk4_step(&state, cfg.dt);
        next.t = t0 + step as f64 * cfg.dt;
        if next.x.iter().chain(&next.m).any(|v| !v.is_finite()) {
            report.status = RunStatus::NumericalFailure;
            break;
        }
        let ordered = next.x.windows(2).all(|w| w[0] < w[1]);
        if !ordered || next.min_gap() < cfg.collision_epsilon {
            report.status = RunStatus::Collision;
            record(&mut report, &next)?;
            state = next;
            break;
        }
        state = next;
        if step % cfg.sample_every == 0 || step == steps {
            record(&mut report, &state)?;
        }
    }
    report.final_state = state;
    Ok(report)
}

fn record(report: &mut ConservationReport, s: &PeakonState) -> Result<()> {
    let h = constants_of_motion(s)?;
    let c = char_poly_coefficients(s)?;
    if h.iter().chain(&c).any(|v| !v.is_finite()) {
        report.status = RunStatus::NumericalFailure;
    }
    report.max_coeff_mismatch = report.max_coeff_mismatch.max(coefficient_mismatch(&h, &c));
    if let Some(first) = report.samples.first() {
        for (drift, (h0, hk)) in report.max_rel_drift.iter_mut().zip(first.h.iter().zip(&h)) {
            *drift = drift.max(relative_diff(*hk, *h0));
        }
    }
    report.samples.push(Sample { t: s.t, h, c });
    Ok(())
}

/// CSV of `u(x, t)` on `grid`, one column per state.
pub fn waveform_csv(states: &[PeakonState], grid: &[f64]) -> String {
    let mut out = String::from("x");
    for s in states {
        out.push_str(&format!(",u(t={})", s.t));
    }
    out.push('\n');
    for &xv in grid {
        out.push_str(&xv.to_string());
        for s in states {
            out.push(',');
            out.push_str(&s.wave(xv).to_string());
        }
        out.push('\n');
    }
    out
}

/// `points` evenly spaced values from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..points)
            .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const E1: f64 = 0.367_879_441_171_442_33; // e^{-1}

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn state_validation() {
        assert!(PeakonState::new(0.0, vec![], vec![]).is_err());
        assert!(PeakonState::new(0.0, vec![0.0, 0.0], vec![1.0, 1.0]).is_err());
        assert!(PeakonState::new(0.0, vec![1.0, 0.0], vec![1.0, 1.0]).is_err());
        assert!(PeakonState::new(0.0, vec![0.0], vec![1.0, 1.0]).is_err());
        assert!(PeakonState::new(0.0, vec![f64::NAN], vec![1.0]).is_err());
        assert!(PeakonState::new(0.0, vec![0.0, 1.0], vec![1.0, 1.0]).is_ok());
    }

    #[test]
    fn rhs_examples() {
        let s = PeakonState::new(0.0, vec![0.3], vec![1.7]).unwrap();
        let (dx, dm) = ode_rhs(&s);
        assert!(close(dx[0], 1.7 * 1.7, 1e-15));
        assert_eq!(dm[0], 0.0);

        let s = PeakonState::new(0.0, vec![0.0, 1.0, 2.0], vec![0.0; 3]).unwrap();
        let (dx, dm) = ode_rhs(&s);
        assert!(dx.iter().chain(&dm).all(|&v| v == 0.0));

        let s = PeakonState::new(0.0, vec![0.0, 1.0], vec![1.0, 1.0]).unwrap();
        let (dx, dm) = ode_rhs(&s);
        assert!(close(dx[0], (1.0 + E1).powi(2), 1e-15));
        assert!(close(dm[0], (1.0 + E1) * -E1, 1e-15));
        // mirror image for the right peakon
        assert!(close(dx[1], dx[0], 1e-15));
        assert!(close(dm[1], -dm[0], 1e-15));
    }

    #[test]
    fn rk4_examples() {
        let s = PeakonState::new(0.0, vec![-1.0, 2.0], vec![0.0, 0.0]).unwrap();
        let next = rk4_step(&s, 0.01);
        assert_eq!(next.x, s.x);
        assert_eq!(next.m, s.m);
        assert!(close(next.t, 0.01, 1e-18));

        let mut s = PeakonState::new(0.0, vec![0.5], vec![1.3]).unwrap();
        for _ in 0..1000 {
            s = rk4_step(&s, 1e-3);
        }
        assert!(close(s.x[0], 0.5 + 1.3 * 1.3 * 1.0, 1e-10));
        assert_eq!(s.m[0], 1.3);

        let s = PeakonState::new(0.0, vec![-1.0, 0.5, 2.0], vec![1.0, 2.0, 0.5]).unwrap();
        let back = rk4_step(&rk4_step(&s, 1e-3), -1e-3);
        for (a, b) in back.x.iter().zip(&s.x).chain(back.m.iter().zip(&s.m)) {
            assert!(close(*a, *b, 1e-10));
        }
    }

    #[test]
    fn matrices_examples() {
        let s = PeakonState::new(0.0, vec![0.0, 1.0], vec![2.0, 3.0]).unwrap();
        let mats = build_matrices(&s);
        assert_eq!(
            mats.p,
            RealMatrix::from_fn(2, |r, c| [[2.0, 0.0], [0.0, 3.0]][r][c])
        );
        assert!(close(mats.e.get(0, 1), E1, 1e-16));
        assert_eq!(mats.e.get(0, 0), 1.0);
        assert!(mats.e.is_symmetric());
        assert_eq!(
            mats.t,
            RealMatrix::from_fn(2, |r, c| [[1.0, 0.0], [2.0, 1.0]][r][c])
        );

        // coincident positions are unreachable through `new`
        let s = PeakonState {
            t: 0.0,
            x: vec![1.0, 1.0],
            m: vec![1.0, 1.0],
        };
        assert_eq!(build_matrices(&s).e.get(0, 1), 1.0);

        let s = PeakonState::new(0.0, vec![4.0], vec![-2.5]).unwrap();
        let mats = build_matrices(&s);
        assert_eq!(
            (mats.p.get(0, 0), mats.e.get(0, 0), mats.t.get(0, 0)),
            (-2.5, 1.0, 1.0)
        );
    }

    #[test]
    fn constants_examples() {
        let s = PeakonState::new(0.0, vec![2.0], vec![1.5]).unwrap();
        assert_eq!(constants_of_motion(&s).unwrap(), vec![2.25]);
        assert_eq!(char_poly_coefficients(&s).unwrap(), vec![1.0, -2.25]);

        let s = PeakonState::new(0.0, vec![0.0, 1.0, 3.0], vec![0.0; 3]).unwrap();
        assert!(constants_of_motion(&s).unwrap().iter().all(|&h| h == 0.0));
        assert_eq!(
            char_poly_coefficients(&s).unwrap(),
            vec![1.0, 0.0, 0.0, 0.0]
        );

        let s = PeakonState::new(0.0, vec![0.0, 1.0], vec![1.0, 1.0]).unwrap();
        let h = constants_of_motion(&s).unwrap();
        assert!(close(h[0], 2.0 + 2.0 * E1, 1e-14));
        assert!(close(h[1], 1.0 - E1 * E1, 1e-14));

        let s = PeakonState::new(0.0, vec![-0.7, 0.2, 1.9], vec![0.8, 1.6, 1.1]).unwrap();
        let h = constants_of_motion(&s).unwrap();
        let c = char_poly_coefficients(&s).unwrap();
        assert!(coefficient_mismatch(&h, &c) < 1e-10);

        let big = PeakonState::new(0.0, (0..9).map(f64::from).collect(), vec![1.0; 9]).unwrap();
        assert!(matches!(
            constants_of_motion(&big),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn real_minor_matches_hand_values() {
        let m = RealMatrix::from_fn(3, |r, c| {
            [[0.0, 2.0, 1.0], [1.0, 3.0, 0.0], [4.0, 1.0, 5.0]][r][c]
        });
        // cofactor expansion: 0·15 − 2·5 + 1·(1 − 12) = −21
        assert!(close(m.minor(&[1, 2, 3], &[1, 2, 3]), -21.0, 1e-12));
        assert_eq!(m.minor(&[2], &[1]), 1.0);
        assert!(close(m.minor(&[1, 3], &[2, 3]), 9.0, 1e-12));
    }

    #[test]
    fn single_peakon_conserves_exactly() {
        let s = PeakonState::new(0.0, vec![0.0], vec![0.9]).unwrap();
        let r = simulate(&s, &SimulationConfig::new(1e-2, 10.0)).unwrap();
        assert_eq!(r.status, RunStatus::Ok);
        assert_eq!(r.max_rel_drift, vec![0.0]);
        assert!(close(r.final_state.x[0], 0.81 * 10.0, 1e-9));
    }

    #[test]
    fn simulate_rejects_bad_input() {
        let s = PeakonState::new(0.0, vec![0.0, 1.0], vec![1.0, -1.0]).unwrap();
        assert!(simulate(&s, &SimulationConfig::new(1e-3, 1.0)).is_err());
        let s = PeakonState::new(0.0, vec![0.0, 1.0], vec![1.0, 1.0]).unwrap();
        assert!(simulate(&s, &SimulationConfig::new(0.0, 1.0)).is_err());
        assert!(simulate(&s, &SimulationConfig::new(1e-3, -1.0)).is_err());
    }

    #[test]
    fn collision_guard_trips() {
        let s = PeakonState::new(0.0, vec![0.0, 1.0], vec![1.0, 1.0]).unwrap();
        let cfg = SimulationConfig {
            collision_epsilon: 5.0,
            ..SimulationConfig::new(1e-3, 1.0)
        };
        let r = simulate(&s, &cfg).unwrap();
        assert_eq!(r.status, RunStatus::Collision);
        assert_eq!(r.samples.len(), 2);
    }

    #[test]
    fn report_json_shape() {
        let s = PeakonState::new(0.0, vec![0.0], vec![1.0]).unwrap();
        let cfg = SimulationConfig {
            sample_every: 1,
            ..SimulationConfig::new(0.5, 0.5)
        };
        let json = serde_json::to_string(&simulate(&s, &cfg).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"n":1,"dt":0.5,"samples":[{"t":0.0,"H":[1.0],"c":[1.0,-1.0]},{"t":0.5,"H":[1.0],"c":[1.0,-1.0]}],"max_rel_drift":[0.0],"max_coeff_mismatch":0.0,"status":"ok"}"#
        );
    }

    #[test]
    fn waveform_output() {
        let s = PeakonState::new(0.0, vec![0.0], vec![2.0]).unwrap();
        let csv = waveform_csv(&[s], &linspace(-1.0, 1.0, 3));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "x,u(t=0)");
        assert_eq!(lines[2], "0,2");
        assert_eq!(lines.len(), 4);
        assert_eq!(linspace(0.0, 1.0, 1), vec![0.0]);
    }
}
