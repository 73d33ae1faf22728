//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so every verdict is printed; exits nonzero if any criterion fails.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quantum_theil::experiments::{random_connected_graph, reproduce_ordering, Metric};
use quantum_theil::indices::{
    classify_theorem_case, degree_theil, degree_theil_of, find_crossing_k, generalized_theil,
    jain_index, max_degree_set, monotonicity_check, np_set_split, von_neumann_theil, Crossing,
    TheoremCase, CROSSING_K_MAX, DEFAULT_K_GRID,
};
use quantum_theil::spectral::{density_matrix, renyi2_entropy_degree_form};
use quantum_theil::verify::{betweenness_brute_force, betweenness_matches_oracle};
use quantum_theil::{CatalogId, DegreeVector, Graph};

const IDENTITY_TOL: f64 = 1e-9;
const SLACK: f64 = 1e-10;
const LIMIT_TOL: f64 = 1e-4;
const RANDOM_GRAPHS: usize = 1000;
const RANDOM_SMALL_GRAPHS: usize = 200;
const RANDOM_DEGREE_VECTORS: usize = 1000;
const SEED: u64 = 20_240_601;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn(&Corpus) -> Verdict);

struct Corpus {
    catalog: Vec<(String, Graph)>,
    random: Vec<(String, Graph)>,
}

impl Corpus {
    fn build() -> Self {
        let catalog = CatalogId::ALL
            .iter()
            .map(|id| (id.name().to_string(), id.graph()))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let random = (0..RANDOM_GRAPHS)
            .map(|i| {
                let n = rng.random_range(3..=12);
                (format!("random #{i}"), random_connected_graph(n, &mut rng))
            })
            .collect();
        Self { catalog, random }
    }

    fn all(&self) -> impl Iterator<Item = &(String, Graph)> {
        self.catalog.iter().chain(&self.random)
    }
}

fn h(g: &Graph) -> f64 {
    density_matrix(g)
        .unwrap()
        .spectrum()
        .unwrap()
        .von_neumann_entropy()
}

fn metric(m: Metric, id: CatalogId) -> f64 {
    m.evaluate(&id.graph()).unwrap()
}

fn c1_orderings(_: &Corpus) -> Verdict {
    let mut failures = Vec::new();
    for m in Metric::ALL {
        let r = reproduce_ordering(m).map_err(|e| e.to_string())?;
        for v in &r.violations {
            failures.push(format!("{}: {v}", m.name()));
        }
    }
    if failures.is_empty() {
        Ok("cd, cb, td1, tq: 4/4 MATCH".into())
    } else {
        Err(failures.join("; "))
    }
}

fn c2_endpoints(_: &Corpus) -> Verdict {
    for m in Metric::ALL {
        let star = metric(m, CatalogId::Star);
        let complete = metric(m, CatalogId::Complete);
        for id in CatalogId::ALL {
            let v = metric(m, id);
            if v > star + IDENTITY_TOL || v < complete - IDENTITY_TOL {
                return Err(format!(
                    "{}: {id} = {v} outside [{complete}, {star}]",
                    m.name()
                ));
            }
        }
    }
    if metric(Metric::Cd, CatalogId::Star) != 1.0 || metric(Metric::Cb, CatalogId::Star) != 1.0 {
        return Err("C_D or C_B of the star is not exactly 1".into());
    }
    for id in [CatalogId::Circle, CatalogId::Complete] {
        for m in [Metric::Cd, Metric::Cb, Metric::Td1] {
            let v = metric(m, id);
            if v != 0.0 {
                return Err(format!("{} of {id} is {v}, not 0", m.name()));
            }
        }
    }
    Ok("star first, complete last in all four; exact zeros and ones".into())
}

fn c3_entropy_bound(c: &Corpus) -> Verdict {
    for n in 3..=50 {
        let got = h(&Graph::complete(n).unwrap());
        let want = ((n - 1) as f64).ln();
        if (got - want).abs() > IDENTITY_TOL {
            return Err(format!("H(K{n}) = {got}, ln(n-1) = {want}"));
        }
    }
    for (label, g) in &c.random {
        let bound = ((g.n() - 1) as f64).ln();
        if h(g) > bound + IDENTITY_TOL {
            return Err(format!("{label}: H = {} > {bound}", h(g)));
        }
    }
    Ok(format!(
        "K3..K50 attain ln(n-1); {} random graphs below",
        c.random.len()
    ))
}

fn c4_td1_below_tq(c: &Corpus) -> Verdict {
    let mut worst = f64::NEG_INFINITY;
    for (label, g) in c.all() {
        let gap = degree_theil(g, 1.0).unwrap() - von_neumann_theil(g).unwrap();
        if gap > IDENTITY_TOL {
            return Err(format!("{label}: T_d1 - T_Q = {gap}"));
        }
        worst = worst.max(gap);
    }
    Ok(format!(
        "max T_d1 - T_Q = {worst:.3e} over {} graphs",
        c.all().count()
    ))
}

fn c5_statement_b(c: &Corpus) -> Verdict {
    let (mut b_graphs, mut premise) = (0, 0);
    for (label, g) in c.all() {
        let verdict = classify_theorem_case(g).map_err(|e| format!("{label}: {e}"))?;
        if verdict.case != TheoremCase::A {
            b_graphs += 1;
            for k in DEFAULT_K_GRID {
                let t = degree_theil(g, k).unwrap();
                if t > verdict.t_q + IDENTITY_TOL {
                    return Err(format!("{label}: T_d,{k} = {t} > T_Q = {}", verdict.t_q));
                }
            }
        }
        if verdict.sufficient_condition_holds {
            premise += 1;
            if verdict.case == TheoremCase::B {
                return Err(format!("{label}: sufficient condition holds but case B"));
            }
        }
    }
    Ok(format!(
        "{b_graphs} case-B/boundary graphs bounded on the k-grid; {premise} premise graphs all case A/boundary"
    ))
}

fn c6_crossing(c: &Corpus) -> Verdict {
    let mut found = Vec::new();
    for (label, g) in &c.catalog {
        let verdict = classify_theorem_case(g).map_err(|e| e.to_string())?;
        if verdict.case != TheoremCase::A {
            continue;
        }
        let t_q = verdict.t_q;
        match find_crossing_k(g, CROSSING_K_MAX).map_err(|e| format!("{label}: {e}"))? {
            Crossing::At(k) => {
                let t = degree_theil(g, k).unwrap();
                if (t - t_q).abs() > IDENTITY_TOL {
                    return Err(format!("{label}: T_d,{k} = {t} vs T_Q = {t_q}"));
                }
                found.push(format!("{label} k*={k:.6}"));
            }
            Crossing::Asymptotic => {
                let t = degree_theil(g, CROSSING_K_MAX).unwrap();
                if t >= t_q {
                    return Err(format!("{label}: asymptotic but T_d,200 = {t} >= {t_q}"));
                }
                found.push(format!("{label} asymptotic (T_d,200 = {t:.6} < {t_q:.6})"));
            }
            Crossing::AtKEqualsOne => {
                let t = degree_theil(g, 1.0).unwrap();
                if (t - t_q).abs() > IDENTITY_TOL {
                    return Err(format!(
                        "{label}: crossing at k = 1 but T_d1 = {t} vs {t_q}"
                    ));
                }
                found.push(format!("{label} k*=1"));
            }
        }
    }
    if found.is_empty() {
        return Err("no case-A graph in the catalog".into());
    }
    Ok(found.join(", "))
}

fn c7_monotone_and_limit(c: &Corpus) -> Verdict {
    for (label, g) in c.all() {
        if !monotonicity_check(g, &DEFAULT_K_GRID).unwrap() {
            return Err(format!("{label}: T_d,k decreases on the k-grid"));
        }
    }
    let mut worst: f64 = 0.0;
    for (label, g) in &c.catalog {
        let d = g.degrees();
        let limit = (g.n() as f64).ln() - (max_degree_set(&d).multiplicity() as f64).ln();
        let gap = (degree_theil_of(&d, 200.0).unwrap() - limit).abs();
        if gap > LIMIT_TOL {
            return Err(format!("{label}: |T_d,200 - limit| = {gap}"));
        }
        worst = worst.max(gap);
    }
    Ok(format!(
        "monotone on {} graphs; max catalog limit gap {worst:.3e}",
        c.all().count()
    ))
}

fn c8_renyi2(c: &Corpus) -> Verdict {
    let mut worst: f64 = 0.0;
    for (label, g) in c.all() {
        let spectral = density_matrix(g)
            .unwrap()
            .spectrum()
            .unwrap()
            .renyi_entropy(2.0)
            .unwrap();
        let closed = renyi2_entropy_degree_form(&g.degrees()).unwrap();
        let gap = (spectral - closed).abs();
        if gap > IDENTITY_TOL {
            return Err(format!("{label}: {spectral} vs {closed}"));
        }
        worst = worst.max(gap);
    }
    Ok(format!("max deviation {worst:.3e}"))
}

fn c9_jain(c: &Corpus) -> Verdict {
    for (label, g) in c.all() {
        let t2 = generalized_theil(g, 2.0).unwrap();
        let neg_log_j = -jain_index(&g.degrees()).unwrap().ln();
        if t2 < neg_log_j - SLACK {
            return Err(format!("{label}: T_Q^(2) = {t2} < -ln J = {neg_log_j}"));
        }
    }
    let star = CatalogId::Star.graph();
    let t2 = generalized_theil(&star, 2.0).unwrap();
    let neg_log_j = -jain_index(&star.degrees()).unwrap().ln();
    if (t2 - 0.96508).abs() > 5e-6 || (neg_log_j - 0.71377).abs() > 5e-6 {
        return Err(format!("star spot values {t2}, {neg_log_j}"));
    }
    Ok(format!("star: T_Q^(2) = {t2:.5} >= -ln J = {neg_log_j:.5}"))
}

fn c10_betweenness(c: &Corpus) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let small: Vec<Graph> = (0..RANDOM_SMALL_GRAPHS)
        .map(|_| {
            let n = rng.random_range(3..=8);
            random_connected_graph(n, &mut rng)
        })
        .collect();
    let graphs = c.catalog.iter().map(|(_, g)| g).chain(&small);
    let mut count = 0;
    for g in graphs {
        if !betweenness_matches_oracle(g) {
            return Err(format!(
                "mismatch on {g}: oracle {:?}",
                betweenness_brute_force(g)
            ));
        }
        count += 1;
    }
    Ok(format!(
        "{count} graphs with n <= 8 agree with path enumeration"
    ))
}

fn c11_np_split(_: &Corpus) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    for trial in 0..RANDOM_DEGREE_VECTORS {
        let len = rng.random_range(2..=20);
        let d = DegreeVector::new((0..len).map(|_| rng.random_range(1..=20)).collect());
        for k in [0.5, 1.0, 2.0, 5.0] {
            let split = np_set_split(&d, k).map_err(|e| e.to_string())?;
            let max_n = split.negative.iter().map(|&i| d.as_slice()[i]).max();
            let min_p = split.positive.iter().map(|&i| d.as_slice()[i]).min();
            if let (Some(a), Some(b)) = (max_n, min_p) {
                if a > b {
                    return Err(format!("trial {trial}, k={k}: max N {a} > min P {b}"));
                }
            }
        }
    }
    Ok(format!("{RANDOM_DEGREE_VECTORS} vectors x 4 exponents"))
}

fn c12_circle_versus_complete(_: &Corpus) -> Verdict {
    let circle = CatalogId::Circle.graph();
    let complete = CatalogId::Complete.graph();
    let (tq_c, tq_k) = (
        von_neumann_theil(&circle).unwrap(),
        von_neumann_theil(&complete).unwrap(),
    );
    if tq_c <= tq_k {
        return Err(format!("T_Q(circle) = {tq_c} <= T_Q(complete) = {tq_k}"));
    }
    for v in 0..circle.n() {
        let cd = Metric::Cd
            .evaluate(&circle.remove_vertex(v).unwrap())
            .unwrap();
        if cd <= 0.0 {
            return Err(format!("removing {v} leaves C_D = {cd}"));
        }
    }
    Ok(format!(
        "T_Q {tq_c:.6} > {tq_k:.6}; every vertex deletion gives C_D > 0"
    ))
}

fn main() {
    let corpus = Corpus::build();
    let criteria: [Criterion; 12] = [
        ("published orderings reproduced", c1_orderings),
        ("extremal endpoints", c2_endpoints),
        ("entropy bound and attainment", c3_entropy_bound),
        ("T_d1 <= T_Q", c4_td1_below_tq),
        ("statement B and sufficient condition", c5_statement_b),
        ("case-A crossing exponent", c6_crossing),
        ("monotonicity in k and limit", c7_monotone_and_limit),
        ("Renyi-2 degree identity", c8_renyi2),
        ("Jain lower bound", c9_jain),
        ("betweenness oracle", c10_betweenness),
        ("N/P split ordering", c11_np_split),
        ("circle versus complete", c12_circle_versus_complete),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check(&corpus) {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
