//! Randomized verification of the bounds and identities relating the degree
//! Theil family, the von Neumann Theil index and the Renyi generalization.
//!
//! Each suite counts how many instances it checked and how many failed,
//! keeping the first failure message. Graph suites run on the catalog plus
//! `trials` random connected graphs with `3 <= n <= n_max`.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::experiments::random_connected_graph;
use crate::graph::{CatalogId, DegreeVector, Graph};
use crate::indices::{
    betweenness, classify_entropy_form, classify_theorem_case, degree_theil, degree_theil_of,
    jain_index, max_degree_set, monotonicity_check, np_set_split, IndexError, TheoremCase,
    DEFAULT_K_GRID, IDENTITY_TOL, PROPERTY_SLACK,
};
use crate::spectral::{self, renyi2_entropy_degree_form};

/// Largest graph size the brute-force betweenness oracle is run on.
pub const BETWEENNESS_ORACLE_MAX_N: usize = 8;
pub const SPLIT_EXPONENTS: [f64; 4] = [0.5, 1.0, 2.0, 5.0];
pub const LIMIT_K: f64 = 200.0;
pub const LIMIT_TOL: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub trials: usize,
    pub seed: u64,
    pub n_max: usize,
    /// Flips the `T_d1 <= T_Q` inequality so the battery must fail. Used to
    /// confirm the suite can detect a wrong result.
    #[doc(hidden)]
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            trials: 1000,
            seed: 7,
            n_max: 12,
            inject_fault: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            failed: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(context());
            }
        }
    }

    fn record_result(&mut self, r: Result<bool, IndexError>, context: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, context),
            Err(e) => self.record(false, || format!("{}: {e}", context())),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    pub suites: Vec<SuiteResult>,
}

impl VerificationSummary {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }
}

/// `ln n - H_{d,k}` from the shares `d_i^k / sum d_j^k`, as an independent
/// route to `T_{d,k}`.
pub fn degree_theil_via_entropy(d: &DegreeVector, k: f64) -> f64 {
    let powers: Vec<f64> = d
        .iter()
        .map(|di| if di == 0 { 0.0 } else { (di as f64).powf(k) })
        .collect();
    let total: f64 = powers.iter().sum();
    let entropy: f64 = -powers
        .iter()
        .filter(|&&x| x > 0.0)
        .map(|x| {
            let p = x / total;
            p * p.ln()
        })
        .sum::<f64>();
    (d.len() as f64).ln() - entropy
}

/// Betweenness by explicit enumeration of every shortest path between every
/// ordered pair, accumulated in exact rationals.
pub fn betweenness_brute_force(g: &Graph) -> Vec<Ratio<u64>> {
    let n = g.n();
    let mut score = vec![Ratio::from_integer(0u64); n];
    for s in 0..n {
        let dist = bfs_distances(g, s);
        for t in 0..n {
            if t == s || dist[t] == usize::MAX {
                continue;
            }
            let mut paths = Vec::new();
            let mut current = vec![s];
            enumerate_paths(g, &dist, t, &mut current, &mut paths);
            let total = paths.len() as u64;
            let mut through = vec![0u64; n];
            for path in &paths {
                for &v in &path[1..path.len() - 1] {
                    through[v] += 1;
                }
            }
            for v in 0..n {
                if through[v] > 0 {
                    score[v] += Ratio::new(through[v], total);
                }
            }
        }
    }
    score
}

fn bfs_distances(g: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut frontier = vec![s];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &v in &frontier {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    dist
}

fn enumerate_paths(
    g: &Graph,
    dist: &[usize],
    target: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *current.last().unwrap();
    if last == target {
        out.push(current.clone());
        return;
    }
    if current.len() > dist[target] {
        return;
    }
    for &w in g.neighbors(last) {
        // Walk only along strictly increasing BFS layers from the source.
        if dist[w] == current.len() {
            current.push(w);
            enumerate_paths(g, dist, target, current, out);
            current.pop();
        }
    }
}

/// Whether Brandes accumulation matches the enumeration oracle.
pub fn betweenness_matches_oracle(g: &Graph) -> bool {
    let fast = betweenness(g);
    let exact = betweenness_brute_force(g);
    fast.iter().zip(&exact).all(|(f, e)| {
        let e = *e.numer() as f64 / *e.denom() as f64;
        (f - e).abs() <= 1e-12 * e.max(1.0)
    })
}

/// Checks the catalog limit bound is tight enough: `n (d_2/d_max)^k <= tol`,
/// with `d_2` the largest degree below the maximum.
pub fn limit_bound_applies(d: &DegreeVector, k: f64, tol: f64) -> bool {
    let max = d.max();
    match d.iter().filter(|&x| x < max).max() {
        None | Some(0) => true,
        Some(second) => d.len() as f64 * (second as f64 / max as f64).powf(k) <= tol,
    }
}

struct Battery {
    entropy_bound: SuiteResult,
    td1_below_tq: SuiteResult,
    case_b: SuiteResult,
    sufficient: SuiteResult,
    monotonicity: SuiteResult,
    limit: SuiteResult,
    renyi2: SuiteResult,
    jain: SuiteResult,
    np_split: SuiteResult,
    betweenness: SuiteResult,
    entropy_form: SuiteResult,
    degree_theil_routes: SuiteResult,
    inject_fault: bool,
}

impl Battery {
    fn new(inject_fault: bool) -> Self {
        Self {
            entropy_bound: SuiteResult::new("entropy_upper_bound"),
            td1_below_tq: SuiteResult::new("td1_le_tq"),
            case_b: SuiteResult::new("case_b_bounded"),
            sufficient: SuiteResult::new("renyi2_sufficient_condition"),
            monotonicity: SuiteResult::new("td_k_monotone_in_k"),
            limit: SuiteResult::new("td_k_limit"),
            renyi2: SuiteResult::new("renyi2_degree_identity"),
            jain: SuiteResult::new("jain_lower_bound"),
            np_split: SuiteResult::new("np_split_ordering"),
            betweenness: SuiteResult::new("betweenness_oracle"),
            entropy_form: SuiteResult::new("entropy_form_consistency"),
            degree_theil_routes: SuiteResult::new("degree_theil_two_routes"),
            inject_fault,
        }
    }

    fn check_graph(&mut self, label: &str, g: &Graph) {
        let ctx = || {
            format!(
                "{label} {}",
                crate::graph::io::to_edge_list(g).replace('\n', ";")
            )
        };
        let n = g.n();
        let degrees = g.degrees();

        let spectrum = match spectral::density_matrix(g).and_then(|rho| rho.spectrum()) {
            Ok(s) => s,
            Err(e) => {
                self.entropy_bound
                    .record(false, || format!("{}: {e}", ctx()));
                return;
            }
        };
        let h = spectrum.von_neumann_entropy();
        let t_q = (n as f64).ln() - h;

        self.entropy_bound
            .record(h <= ((n - 1) as f64).ln() + IDENTITY_TOL, || {
                format!("{}: H = {h}", ctx())
            });

        let t_d1 = degree_theil(g, 1.0);
        self.td1_below_tq.record_result(
            t_d1.clone().map(|t| {
                if self.inject_fault {
                    t >= t_q + IDENTITY_TOL
                } else {
                    t <= t_q + IDENTITY_TOL
                }
            }),
            || format!("{}: T_d1 = {t_d1:?}, T_Q = {t_q}", ctx()),
        );

        match classify_theorem_case(g) {
            Ok(verdict) => {
                if verdict.case != TheoremCase::A {
                    let worst = DEFAULT_K_GRID
                        .iter()
                        .map(|&k| degree_theil_of(&degrees, k))
                        .collect::<Result<Vec<_>, _>>()
                        .map(|v| v.into_iter().fold(f64::NEG_INFINITY, f64::max));
                    self.case_b
                        .record_result(worst.clone().map(|w| w <= t_q + IDENTITY_TOL), || {
                            format!("{}: max T_dk = {worst:?}, T_Q = {t_q}", ctx())
                        });
                }
                if verdict.sufficient_condition_holds {
                    self.sufficient.record(verdict.case != TheoremCase::B, || {
                        format!("{}: premise holds but case B", ctx())
                    });
                }
                let entropy_form = classify_entropy_form(g);
                self.entropy_form
                    .record_result(entropy_form.clone().map(|c| c == verdict.case), || {
                        format!("{}: {:?} vs {entropy_form:?}", ctx(), verdict.case)
                    });
            }
            Err(e) => self
                .case_b
                .record(false, || format!("{}: classification failed: {e}", ctx())),
        }

        self.monotonicity
            .record_result(monotonicity_check(g, &DEFAULT_K_GRID), ctx);

        if limit_bound_applies(&degrees, LIMIT_K, LIMIT_TOL) {
            let target = (n as f64).ln() - (max_degree_set(&degrees).multiplicity() as f64).ln();
            let t = degree_theil_of(&degrees, LIMIT_K);
            self.limit
                .record_result(t.clone().map(|t| (t - target).abs() <= LIMIT_TOL), || {
                    format!("{}: T_d200 = {t:?}, limit {target}", ctx())
                });
        }

        for k in [0.5, 1.0, 3.0] {
            let route = degree_theil_via_entropy(&degrees, k);
            let t = degree_theil_of(&degrees, k);
            self.degree_theil_routes
                .record_result(t.clone().map(|t| (t - route).abs() <= IDENTITY_TOL), || {
                    format!("{}: k={k} theil {t:?} vs entropy route {route}", ctx())
                });
        }

        let h2_spec = spectrum.renyi_entropy(2.0);
        let h2_deg = renyi2_entropy_degree_form(&degrees);
        self.renyi2.record(
            matches!((&h2_spec, &h2_deg), (Ok(a), Ok(b)) if (a - b).abs() <= IDENTITY_TOL),
            || format!("{}: {h2_spec:?} vs {h2_deg:?}", ctx()),
        );

        let jain = jain_index(&degrees);
        self.jain.record(
            matches!((&h2_spec, &jain), (Ok(h2), Ok(j)) if (n as f64).ln() - h2 >= -j.ln() - PROPERTY_SLACK),
            || format!("{}: H2 {h2_spec:?}, J {jain:?}", ctx()),
        );

        if n <= BETWEENNESS_ORACLE_MAX_N {
            self.betweenness.record(betweenness_matches_oracle(g), ctx);
        }
    }

    fn check_degree_vector(&mut self, d: &DegreeVector) {
        for k in SPLIT_EXPONENTS {
            let split = np_set_split(d, k);
            self.np_split.record_result(
                split.clone().map(|s| {
                    let max_n = s.negative.iter().map(|&i| d.as_slice()[i]).max();
                    let min_p = s.positive.iter().map(|&i| d.as_slice()[i]).min();
                    match (max_n, min_p) {
                        (Some(a), Some(b)) => a <= b,
                        _ => true,
                    }
                }),
                || format!("degrees {:?}, k={k}: {split:?}", d.as_slice()),
            );
        }
    }

    fn finish(self) -> VerificationSummary {
        VerificationSummary {
            suites: vec![
                self.entropy_bound,
                self.td1_below_tq,
                self.case_b,
                self.sufficient,
                self.monotonicity,
                self.limit,
                self.degree_theil_routes,
                self.renyi2,
                self.jain,
                self.np_split,
                self.betweenness,
                self.entropy_form,
            ],
        }
    }
}

/// Runs the whole battery. Deterministic for a fixed configuration.
pub fn run_verification(config: &VerifyConfig) -> VerificationSummary {
    let n_max = config.n_max.max(3);
    let mut battery = Battery::new(config.inject_fault);
    for id in CatalogId::ALL {
        battery.check_graph(id.name(), &id.graph());
    }
    for n in 3..=n_max {
        let g = Graph::complete(n).expect("n >= 3");
        let h = spectral::density_matrix(&g)
            .and_then(|rho| spectral::von_neumann_entropy(&rho))
            .unwrap_or(f64::NAN);
        let target = ((n - 1) as f64).ln();
        battery
            .entropy_bound
            .record((h - target).abs() <= IDENTITY_TOL, || {
                format!("K{n}: H = {h}, ln(n-1) = {target}")
            });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for trial in 0..config.trials {
        let n = rng.random_range(3..=n_max);
        let g = random_connected_graph(n, &mut rng);
        battery.check_graph(&format!("trial {trial}"), &g);

        let len = rng.random_range(2..=n_max);
        let d = DegreeVector::new((0..len).map(|_| rng.random_range(1..=20)).collect());
        battery.check_degree_vector(&d);
    }
    battery.finish()
}
