//! Verification campaigns behind the command-line tool. Each campaign is a
//! deterministic function of its configuration and returns a serializable
//! report; nothing here prints or touches the filesystem.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lgv::{build_network, count_disjoint_families, path_matrix};
use crate::linalg::{
    minor, random_matrix, random_symmetric, t_matrix, ExactMatrix, IndexSet, Rational,
};
use crate::matchings::{
    canonical_involution, classify_by_separation, decompose_clusters, enumerate_matchings, flip,
    minor_via_matchings, orbit_sum_identity, partition_orbits, sign, sign_flip_law_check_with,
    weight, Matching, OrbitClass,
};
use crate::minor_sums::{
    p_value, sum_all_minors, t_minor_formula, verify_identity, IdentityReport, VerifyOptions,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCampaignConfig {
    pub n_min: usize,
    pub n_max: usize,
    /// Inclusive `k` range, clipped to `1..=n`; `None` means every `k`.
    pub k_range: Option<(usize, usize)>,
    pub trials: usize,
    pub seed: u64,
    pub entry_bound: u32,
    /// Draw general matrices; only the `TX` / interlacing equality is then required.
    pub nonsymmetric: bool,
    pub max_n: usize,
}

impl Default for TheoremCampaignConfig {
    fn default() -> Self {
        TheoremCampaignConfig {
            n_min: 1,
            n_max: 5,
            k_range: None,
            trials: 20,
            seed: 42,
            entry_bound: 9,
            nonsymmetric: false,
            max_n: crate::minor_sums::DEFAULT_MAX_N,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellResult {
    pub n: usize,
    pub k: usize,
    pub trials: usize,
    pub passed: usize,
    /// Trials where all minors of `X` differed from the interlacing sum.
    pub all_minors_mismatches: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub trial: usize,
    pub report: IdentityReport,
    pub matrix: ExactMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCampaign {
    pub command: &'static str,
    pub seed: u64,
    pub entry_bound: u32,
    pub trials: usize,
    pub symmetric: bool,
    pub cells: Vec<CellResult>,
    /// Trials whose required identity failed.
    pub failures: Vec<Witness>,
    /// First trial where all minors of a non-symmetric `X` missed the
    /// interlacing sum (only populated for non-symmetric runs).
    pub all_minors_witness: Option<Witness>,
    pub all_passed: bool,
}

pub fn run_theorem_campaign(cfg: &TheoremCampaignConfig) -> Result<TheoremCampaign> {
    if cfg.trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if cfg.n_min == 0 || cfg.n_min > cfg.n_max {
        return Err(Error::InvalidArgument(format!(
            "bad n range {}..={}",
            cfg.n_min, cfg.n_max
        )));
    }
    if cfg.n_max > cfg.max_n {
        return Err(Error::TooLarge {
            n: cfg.n_max,
            limit: cfg.max_n,
        });
    }
    let opts = VerifyOptions {
        allow_nonsymmetric: cfg.nonsymmetric,
        max_n: cfg.max_n,
    };
    let mut master = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = TheoremCampaign {
        command: "verify-theorem",
        seed: cfg.seed,
        entry_bound: cfg.entry_bound,
        trials: cfg.trials,
        symmetric: !cfg.nonsymmetric,
        cells: Vec::new(),
        failures: Vec::new(),
        all_minors_witness: None,
        all_passed: true,
    };

    for n in cfg.n_min..=cfg.n_max {
        let (k_lo, k_hi) = cfg.k_range.unwrap_or((1, n));
        let ks: Vec<usize> = (k_lo.max(1)..=k_hi.min(n)).collect();
        let matrices: Vec<ExactMatrix> = (0..cfg.trials)
            .map(|_| {
                let s = master.random::<u64>();
                if cfg.nonsymmetric {
                    random_matrix(n, s, cfg.entry_bound)
                } else {
                    random_symmetric(n, s, cfg.entry_bound)
                }
            })
            .collect();
        for &k in &ks {
            let mut cell = CellResult {
                n,
                k,
                trials: cfg.trials,
                passed: 0,
                all_minors_mismatches: 0,
            };
            for (trial, x) in matrices.iter().enumerate() {
                let report = verify_identity(x, k, &opts)?;
                let ok = if cfg.nonsymmetric {
                    report.principal_matches_interlacing()
                } else {
                    report.all_equal
                };
                if !report.all_matches_interlacing() {
                    cell.all_minors_mismatches += 1;
                    if cfg.nonsymmetric && out.all_minors_witness.is_none() {
                        out.all_minors_witness = Some(Witness {
                            trial,
                            report: report.clone(),
                            matrix: x.clone(),
                        });
                    }
                }
                if ok {
                    cell.passed += 1;
                } else {
                    out.all_passed = false;
                    out.failures.push(Witness {
                        trial,
                        report,
                        matrix: x.clone(),
                    });
                }
            }
            out.cells.push(cell);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaSuiteConfig {
    pub max_n: usize,
    /// Largest `n` for the disjoint-path count, which grows quickly.
    pub lgv_max_n: usize,
    pub seed: u64,
    pub entry_bound: u32,
    /// Replace the crossing-number sign with the constant `+1`, so the
    /// harness can be seen to fail.
    pub corrupt_sign: bool,
}

impl Default for LemmaSuiteConfig {
    fn default() -> Self {
        LemmaSuiteConfig {
            max_n: 4,
            lgv_max_n: 6,
            seed: 42,
            entry_bound: 9,
            corrupt_sign: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// First failing case.
    pub witness: Option<Value>,
}

impl LemmaCheck {
    fn new(name: &'static str) -> Self {
        LemmaCheck {
            name,
            cases: 0,
            failures: 0,
            witness: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaSuiteReport {
    pub command: &'static str,
    pub max_n: usize,
    pub lgv_max_n: usize,
    pub checks: Vec<LemmaCheck>,
    pub all_passed: bool,
}

fn matching_json(tau: &Matching) -> Value {
    json!({ "n": tau.n(), "edges": tau.edges() })
}

/// Exhaustive checks of the path-counting and matching-orbit structure.
pub fn run_lemma_suite(cfg: &LemmaSuiteConfig) -> Result<LemmaSuiteReport> {
    let sign_of = |tau: &Matching| if cfg.corrupt_sign { 1 } else { sign(tau) };
    let mut checks = Vec::new();

    let mut path = LemmaCheck::new("path matrix of the network equals T");
    let mut three_way = LemmaCheck::new("T minor == closed formula == disjoint path count");
    for n in 1..=cfg.lgv_max_n {
        let net = build_network(n);
        let t = t_matrix(n);
        path.record(path_matrix(&net) == t, || json!({ "n": n }));
        for k in 1..=n {
            for i in IndexSet::subsets(n, k) {
                for j in IndexSet::subsets(n, k) {
                    let det = minor(&t, &j, &i)?;
                    let formula = t_minor_formula(&i, &j)?;
                    let count = count_disjoint_families(&net, &j, &i)?;
                    let ok = det == formula && formula == Rational::from_integer(count.into());
                    three_way.record(ok, || {
                        json!({ "n": n, "I": i, "J": j, "det": det.to_string(),
                                "formula": formula.to_string(), "lgv": count })
                    });
                }
            }
        }
    }
    checks.push(path);
    checks.push(three_way);

    let mut count = LemmaCheck::new("|M(n,k)| == C(n,k)^2 k!");
    let mut expansion = LemmaCheck::new("minor equals signed matching expansion");
    let mut weights = LemmaCheck::new("flips preserve weight for symmetric X");
    let mut sign_law = LemmaCheck::new("flip changes sign by (-1)^separation");
    let mut orbit_size = LemmaCheck::new("orbit size == 2^p");
    let mut open_count = LemmaCheck::new("open cluster count == p");
    let mut interlacing =
        LemmaCheck::new("interlacing orbits: one interlacing member, uniform sign");
    let mut balanced = LemmaCheck::new("non-interlacing orbits are sign-balanced");
    let mut even_sep = LemmaCheck::new("orbit interlacing iff all separations even");
    let mut involution = LemmaCheck::new("canonical involution reverses sign and pairs orbit");
    let mut generators = LemmaCheck::new("generators are commuting involutions");
    let mut grand = LemmaCheck::new("orbit-by-orbit sum equals interlacing sum");

    let mut master = ChaCha8Rng::seed_from_u64(cfg.seed);
    for n in 1..=cfg.max_n {
        let x = random_symmetric(n, master.random(), cfg.entry_bound);
        let general = random_matrix(n, master.random(), cfg.entry_bound);
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();

        for k in 0..=n {
            let all: Vec<Matching> = enumerate_matchings(n, k).collect();
            let binom = IndexSet::subsets(n, k).count();
            let fact: usize = (1..=k).product();
            count.record(
                all.len() == binom * binom * fact
                    && all.iter().collect::<HashSet<_>>().len() == all.len(),
                || json!({ "n": n, "k": k, "count": all.len() }),
            );

            if k >= 1 {
                for i in IndexSet::subsets(n, k) {
                    for j in IndexSet::subsets(n, k) {
                        let lhs = minor_via_matchings(&general, &i, &j)?;
                        let rhs = minor(&general, &i, &j)?;
                        expansion.record(lhs == rhs, || json!({ "n": n, "I": i, "J": j }));
                    }
                }
            }

            for tau in &all {
                let w = weight(tau, &x)?;
                let p = p_value(&tau.domain(), &tau.codomain())?;
                open_count.record(decompose_clusters(tau).open_count() == p, || {
                    matching_json(tau)
                });
                for &(i, j) in &pairs {
                    let flipped = flip(tau, i, j)?;
                    weights.record(
                        weight(&flipped, &x)? == w,
                        || json!({ "tau": matching_json(tau), "i": i, "j": j }),
                    );
                    let law = sign_flip_law_check_with(tau, i, j, sign_of)?;
                    sign_law.record(law.holds, || {
                        json!({ "tau": matching_json(tau), "i": i, "j": j,
                                "separation": law.separation })
                    });
                    let back = flip(&flipped, i, j)?;
                    let mut ok = back == *tau;
                    if n <= 3 {
                        for &(a, b) in &pairs {
                            ok &= flip(&flip(tau, i, j)?, a, b)? == flip(&flip(tau, a, b)?, i, j)?;
                        }
                    }
                    generators.record(ok, || json!({ "tau": matching_json(tau), "i": i, "j": j }));
                }
            }

            for o in partition_orbits(n, k) {
                let first = &o.members[0];
                let p = p_value(&first.domain(), &first.codomain())?;
                let witness =
                    || json!({ "orbit": o.members.iter().map(matching_json).collect::<Vec<_>>() });
                orbit_size.record(o.members.len() == 1 << p, witness);
                let signs: Vec<i32> = o.members.iter().map(sign_of).collect();
                let predicted: Vec<OrbitClass> =
                    o.members.iter().map(classify_by_separation).collect();
                even_sep.record(predicted.iter().all(|&c| c == o.classification), witness);
                match o.classification {
                    OrbitClass::Interlacing => {
                        let reps = o.members.iter().filter(|m| m.is_interlacing()).count();
                        let uniform = signs.iter().all(|&s| s == signs[0]);
                        interlacing.record(reps == 1 && uniform, witness);
                    }
                    OrbitClass::NonInterlacing => {
                        balanced.record(signs.iter().sum::<i32>() == 0, witness);
                        let mut ok = true;
                        for m in &o.members {
                            let partner = canonical_involution(m)?;
                            ok &= partner != *m
                                && sign_of(&partner) == -sign_of(m)
                                && canonical_involution(&partner)? == *m
                                && o.members.contains(&partner);
                        }
                        involution.record(ok, witness);
                    }
                }
            }

            let report = orbit_sum_identity(&x, k)?;
            let ok = report.all_hold() && (k == 0 || report.matching_sum == sum_all_minors(&x, k)?);
            grand.record(ok, || json!({ "k": k, "matrix": x, "report": report }));
        }
    }

    checks.extend([
        count,
        expansion,
        weights,
        sign_law,
        orbit_size,
        open_count,
        interlacing,
        balanced,
        even_sep,
        involution,
        generators,
        grand,
    ]);
    let all_passed = checks.iter().all(LemmaCheck::passed);
    Ok(LemmaSuiteReport {
        command: "verify-lemmas",
        max_n: cfg.max_n,
        lgv_max_n: cfg.lgv_max_n,
        checks,
        all_passed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditMember {
    pub edges: Vec<(usize, usize)>,
    pub sign: i32,
    #[serde(with = "crate::serde_rational")]
    pub weight: Rational,
    pub interlacing: bool,
    /// Endpoint separation of each cluster, in cluster order.
    pub separations: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditOrbit {
    pub classification: OrbitClass,
    pub p: usize,
    pub members: Vec<AuditMember>,
    /// `Σ sign · weight` over the orbit.
    #[serde(with = "crate::serde_rational")]
    pub contribution: Rational,
    #[serde(with = "crate::serde_rational")]
    pub running_total: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitAudit {
    pub command: &'static str,
    pub n: usize,
    pub k: usize,
    pub matrix: ExactMatrix,
    pub matchings: usize,
    pub orbits: Vec<AuditOrbit>,
    #[serde(with = "crate::serde_rational")]
    pub interlacing_total: Rational,
    #[serde(with = "crate::serde_rational")]
    pub non_interlacing_total: Rational,
    /// Sum of all `k × k` minors, from determinants.
    #[serde(with = "crate::serde_rational")]
    pub all_minors: Rational,
    /// Interlacing sum, from determinants.
    #[serde(with = "crate::serde_rational")]
    pub interlacing_sum: Rational,
    pub consistent: bool,
}

/// Lists every orbit of `M_{n,k}` with the ledger of running totals.
pub fn orbit_audit(x: &ExactMatrix, k: usize) -> Result<OrbitAudit> {
    if !x.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = x.rows();
    if k > n {
        return Err(Error::Domain(format!("k = {k} exceeds n = {n}")));
    }
    let mut orbits = Vec::new();
    let mut running = Rational::from_integer(0.into());
    let mut interlacing_total = running.clone();
    let mut non_interlacing_total = running.clone();
    let mut matchings = 0;
    for o in partition_orbits(n, k) {
        let first = &o.members[0];
        let p = p_value(&first.domain(), &first.codomain())?;
        let mut contribution = Rational::from_integer(0.into());
        let mut members = Vec::with_capacity(o.members.len());
        for m in &o.members {
            let w = weight(m, x)?;
            let s = sign(m);
            if s > 0 {
                contribution += &w;
            } else {
                contribution -= &w;
            }
            members.push(AuditMember {
                edges: m.edges().to_vec(),
                sign: s,
                weight: w,
                interlacing: m.is_interlacing(),
                separations: decompose_clusters(m)
                    .clusters
                    .iter()
                    .map(|c| c.separation)
                    .collect(),
            });
        }
        matchings += members.len();
        running += &contribution;
        match o.classification {
            OrbitClass::Interlacing => interlacing_total += &contribution,
            OrbitClass::NonInterlacing => non_interlacing_total += &contribution,
        }
        orbits.push(AuditOrbit {
            classification: o.classification,
            p,
            members,
            contribution,
            running_total: running.clone(),
        });
    }
    let one = Rational::from_integer(1.into());
    let (all_minors, interlacing_sum) = if k == 0 {
        (one.clone(), one)
    } else {
        (
            sum_all_minors(x, k)?,
            crate::minor_sums::interlacing_sum(x, k)?,
        )
    };
    let consistent = running == all_minors
        && interlacing_total == interlacing_sum
        && non_interlacing_total == Rational::from_integer(0.into());
    Ok(OrbitAudit {
        command: "orbit-audit",
        n,
        k,
        matrix: x.clone(),
        matchings,
        orbits,
        interlacing_total,
        non_interlacing_total,
        all_minors,
        interlacing_sum,
        consistent,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LgvRow {
    #[serde(rename = "I")]
    pub i: IndexSet,
    #[serde(rename = "J")]
    pub j: IndexSet,
    #[serde(with = "crate::serde_rational")]
    pub formula_value: Rational,
    #[serde(with = "crate::serde_rational")]
    pub det_value: Rational,
    pub lgv_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LgvAudit {
    pub command: &'static str,
    pub n: usize,
    pub rows: Vec<LgvRow>,
    pub all_agree: bool,
}

/// For every `(I, J)`: the closed formula, `|T_{JI}|`, and the number of
/// disjoint path families from sources `J` to sinks `I`.
pub fn lgv_audit(n: usize) -> Result<LgvAudit> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let net = build_network(n);
    let t = t_matrix(n);
    let mut rows = Vec::new();
    for k in 1..=n {
        for i in IndexSet::subsets(n, k) {
            for j in IndexSet::subsets(n, k) {
                rows.push(LgvRow {
                    formula_value: t_minor_formula(&i, &j)?,
                    det_value: minor(&t, &j, &i)?,
                    lgv_count: count_disjoint_families(&net, &j, &i)?,
                    i: i.clone(),
                    j,
                });
            }
        }
    }
    let all_agree = rows.iter().all(|r| {
        r.formula_value == r.det_value && r.det_value == Rational::from_integer(r.lgv_count.into())
    });
    Ok(LgvAudit {
        command: "lgv-audit",
        n,
        rows,
        all_agree,
    })
}
