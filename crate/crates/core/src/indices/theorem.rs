//! The dichotomy between the degree Theil family and `T_Q`.
//!
//! `T_{d,k}` is nondecreasing in `k` and tends to `ln n - ln|M|`, where `|M|`
//! counts the vertices of maximum degree. For a connected graph exactly one
//! of two things happens:
//!
//! * case A, `ln n - ln|M| >= T_Q`: the family starts at or below `T_Q`
//!   (`k = 1`) and reaches it, so some `k*` has `T_{d,k*} = T_Q`;
//! * case B, `ln n - ln|M| <= T_Q`: `T_{d,k} <= T_Q` for every `k`.
//!
//! A sufficient condition for case A is `(sum d)^2 / (sum d + sum d^2) >= |M|`,
//! i.e. the Renyi-2 entropy of the graph state is at least `ln|M|`.

use serde::{Serialize, Serializer};

use super::{degree_theil_of, von_neumann_theil, IndexError, CLASSIFY_TOL, PROPERTY_SLACK};
use crate::graph::{DegreeVector, Graph};
use crate::spectral;

/// Vertices attaining the maximum degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxDegreeSet {
    pub members: Vec<usize>,
    pub max_degree: usize,
}

impl MaxDegreeSet {
    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }
}

pub fn max_degree_set(d: &DegreeVector) -> MaxDegreeSet {
    let max_degree = d.max();
    let members = d
        .iter()
        .enumerate()
        .filter(|&(_, di)| di == max_degree)
        .map(|(i, _)| i)
        .collect();
    MaxDegreeSet {
        members,
        max_degree,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremCase {
    A,
    B,
    /// Threshold and `T_Q` agree within [`CLASSIFY_TOL`]; both statements hold.
    Boundary,
}

impl TheoremCase {
    pub fn name(self) -> &'static str {
        match self {
            TheoremCase::A => "A",
            TheoremCase::B => "B",
            TheoremCase::Boundary => "boundary",
        }
    }

    fn from_gap(gap: f64) -> Self {
        if gap.abs() <= CLASSIFY_TOL {
            TheoremCase::Boundary
        } else if gap > 0.0 {
            TheoremCase::A
        } else {
            TheoremCase::B
        }
    }
}

impl Serialize for TheoremCase {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Outcome of the search for `k*` with `T_{d,k*} = T_Q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Crossing {
    /// A finite exponent in `(1, k_max]`.
    At(f64),
    /// `T_{d,k_max}` is still below `T_Q`: the crossing lies beyond the
    /// bracket or only in the limit.
    Asymptotic,
    /// `T_{d,1}` already equals `T_Q`.
    AtKEqualsOne,
}

impl Serialize for Crossing {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Crossing::At(k) => s.serialize_f64(*k),
            Crossing::Asymptotic => s.serialize_str("asymptotic"),
            Crossing::AtKEqualsOne => s.serialize_str("at_k_equals_one"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub case: TheoremCase,
    /// `ln n - ln|M|`, the supremum of `T_{d,k}` over `k`.
    pub threshold: f64,
    pub t_q: f64,
    pub max_degree_multiplicity: usize,
    /// Whether `(sum d)^2 >= |M| (sum d + sum d^2)`; evaluated in integers.
    pub sufficient_condition_holds: bool,
    pub crossing_k: Option<Crossing>,
}

struct Classified {
    degrees: DegreeVector,
    case: TheoremCase,
    threshold: f64,
    t_q: f64,
    multiplicity: usize,
}

fn classify(g: &Graph) -> Result<Classified, IndexError> {
    if g.m() == 0 {
        return Err(IndexError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(IndexError::Disconnected);
    }
    let degrees = g.degrees();
    let multiplicity = max_degree_set(&degrees).multiplicity();
    let n = g.n() as f64;
    let threshold = n.ln() - (multiplicity as f64).ln();
    let t_q = von_neumann_theil(g)?;
    Ok(Classified {
        degrees,
        case: TheoremCase::from_gap(threshold - t_q),
        threshold,
        t_q,
        multiplicity,
    })
}

fn sufficient_condition(d: &DegreeVector, multiplicity: usize) -> bool {
    let sum = d.sum() as u128;
    let sq = d.sum_of_squares() as u128;
    sum * sum >= multiplicity as u128 * (sum + sq)
}

/// Classifies a connected graph into case A, case B, or the boundary between
/// them. Case A and boundary verdicts carry the crossing search result over
/// `[1, CROSSING_K_MAX]`.
pub fn classify_theorem_case(g: &Graph) -> Result<TheoremVerdict, IndexError> {
    let c = classify(g)?;
    let crossing_k = match c.case {
        TheoremCase::B => None,
        TheoremCase::A | TheoremCase::Boundary => {
            Some(search_crossing(&c.degrees, c.t_q, super::CROSSING_K_MAX)?)
        }
    };
    Ok(TheoremVerdict {
        case: c.case,
        threshold: c.threshold,
        t_q: c.t_q,
        max_degree_multiplicity: c.multiplicity,
        sufficient_condition_holds: sufficient_condition(&c.degrees, c.multiplicity),
        crossing_k,
    })
}

/// The same dichotomy phrased with entropies: `H(G)` against `ln|M|`.
///
/// `H(G) <= ln|M|` corresponds to case B and `H(G) >= ln|M|` to case A; the
/// returned label uses the `T`-form naming so the two can be compared.
pub fn classify_entropy_form(g: &Graph) -> Result<TheoremCase, IndexError> {
    if g.m() == 0 {
        return Err(IndexError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(IndexError::Disconnected);
    }
    let h = spectral::von_neumann_entropy(&spectral::density_matrix(g)?)?;
    let multiplicity = max_degree_set(&g.degrees()).multiplicity() as f64;
    Ok(TheoremCase::from_gap(h - multiplicity.ln()))
}

/// Bisection for `T_{d,k} = T_Q` on `[1, k_max]`.
pub fn find_crossing_k(g: &Graph, k_max: f64) -> Result<Crossing, IndexError> {
    if !(k_max >= 1.0 && k_max.is_finite()) {
        return Err(IndexError::InvalidExponent(k_max));
    }
    let c = classify(g)?;
    if c.case == TheoremCase::B {
        return Err(IndexError::WrongCase);
    }
    search_crossing(&c.degrees, c.t_q, k_max)
}

fn search_crossing(d: &DegreeVector, t_q: f64, k_max: f64) -> Result<Crossing, IndexError> {
    let gap = |k: f64| degree_theil_of(d, k).map(|t| t - t_q);
    let at_one = gap(1.0)?;
    if at_one.abs() <= CLASSIFY_TOL {
        return Ok(Crossing::AtKEqualsOne);
    }
    if at_one > 0.0 {
        return Err(IndexError::NoBracket {
            t_d1: at_one + t_q,
            t_q,
        });
    }
    let at_max = gap(k_max)?;
    if at_max < -CLASSIFY_TOL {
        return Ok(Crossing::Asymptotic);
    }
    if at_max.abs() <= CLASSIFY_TOL {
        return Ok(Crossing::At(k_max));
    }

    // gap(lo) < 0 < gap(hi) throughout.
    let (mut lo, mut hi) = (1.0_f64, k_max);
    let mut best = (hi, at_max.abs());
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let g_mid = gap(mid)?;
        if g_mid.abs() < best.1 {
            best = (mid, g_mid.abs());
        }
        if g_mid.abs() <= CLASSIFY_TOL {
            return Ok(Crossing::At(mid));
        }
        if g_mid < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Crossing::At(best.0))
}

/// Whether `T_{d,k}` is nondecreasing along an ascending grid of positive `k`.
pub fn monotonicity_check(g: &Graph, k_grid: &[f64]) -> Result<bool, IndexError> {
    let d = g.degrees();
    if let Some(&bad) = k_grid.iter().find(|&&k| !(k > 0.0 && k.is_finite())) {
        return Err(IndexError::InvalidExponent(bad));
    }
    let values = k_grid
        .iter()
        .map(|&k| degree_theil_of(&d, k))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(k_grid
        .windows(2)
        .zip(values.windows(2))
        .all(|(k, t)| k[0] <= k[1] && t[1] >= t[0] - PROPERTY_SLACK))
}

/// Vertices whose relative degree power `d_i^k / sum d_j^k` decreases in `k`
/// (`negative`) versus those where it is nondecreasing (`positive`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NpSplit {
    pub negative: Vec<usize>,
    pub positive: Vec<usize>,
    /// `exp(sum d_j^k ln d_j / sum d_j^k)`, the degree-power weighted
    /// geometric mean of the degrees.
    pub threshold: f64,
}

/// Splits vertices at the weighted geometric mean degree.
///
/// The derivative of `d_i^k / sum d_j^k` has the sign of `ln d_i` minus the
/// `d^k`-weighted mean of `ln d`, so `i` is negative iff `d_i` lies strictly
/// below the threshold. Vertices at the threshold (within rounding) have zero
/// derivative and go to `positive`. Degree-0 vertices sit below any positive
/// threshold and are counted as negative.
pub fn np_set_split(d: &DegreeVector, k: f64) -> Result<NpSplit, IndexError> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(IndexError::InvalidExponent(k));
    }
    let max = d.max();
    if max == 0 {
        return Err(IndexError::EmptyGraph);
    }
    let ln_max = (max as f64).ln();
    let mut weight_sum = 0.0;
    let mut weighted_ln = 0.0;
    for di in d.iter().filter(|&di| di > 0) {
        let ln_d = (di as f64).ln();
        let w = (k * (ln_d - ln_max)).exp();
        weight_sum += w;
        weighted_ln += w * ln_d;
    }
    let mean_ln = weighted_ln / weight_sum;
    let tol = 1e-12 * mean_ln.abs().max(1.0);

    let (negative, positive) = (0..d.len()).partition(|&i| {
        let di = d.as_slice()[i];
        di == 0 || (di as f64).ln() < mean_ln - tol
    });
    Ok(NpSplit {
        negative,
        positive,
        threshold: mean_ln.exp(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CatalogId;
    use crate::indices::degree_theil;

    #[test]
    fn max_degree_sets() {
        assert_eq!(
            max_degree_set(&CatalogId::Star.graph().degrees()).multiplicity(),
            1
        );
        assert_eq!(
            max_degree_set(&CatalogId::Circle.graph().degrees()).multiplicity(),
            7
        );
        let lollipop = max_degree_set(&CatalogId::Lollipop.graph().degrees());
        assert_eq!(lollipop.members, vec![2]);
        assert_eq!(lollipop.max_degree, 3);
    }

    #[test]
    fn regular_graphs_are_case_b() {
        for g in [CatalogId::Circle.graph(), CatalogId::Complete.graph()] {
            let v = classify_theorem_case(&g).unwrap();
            assert_eq!(v.case, TheoremCase::B);
            assert_eq!(v.threshold, 0.0);
            assert!(v.crossing_k.is_none());
        }
        let k7 = classify_theorem_case(&CatalogId::Complete.graph()).unwrap();
        assert!((k7.t_q - 0.154_15).abs() < 1e-5);
    }

    #[test]
    fn star_is_case_a_with_finite_crossing() {
        let g = CatalogId::Star.graph();
        let v = classify_theorem_case(&g).unwrap();
        assert_eq!(v.case, TheoremCase::A);
        assert!((v.threshold - 7f64.ln()).abs() < 1e-15);
        assert!(v.sufficient_condition_holds);
        let Some(Crossing::At(k)) = v.crossing_k else {
            panic!("expected a finite crossing, got {:?}", v.crossing_k);
        };
        assert!(k > 1.0 && k < 200.0);
        assert!((degree_theil(&g, k).unwrap() - v.t_q).abs() <= 1e-9);
        assert_eq!(find_crossing_k(&g, 200.0).unwrap(), Crossing::At(k));
    }

    #[test]
    fn crossing_outside_bracket_is_asymptotic() {
        let g = CatalogId::Star.graph();
        assert_eq!(find_crossing_k(&g, 1.1).unwrap(), Crossing::Asymptotic);
    }

    #[test]
    fn crossing_errors() {
        assert_eq!(
            find_crossing_k(&CatalogId::Complete.graph(), 200.0),
            Err(IndexError::WrongCase)
        );
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(classify_theorem_case(&split), Err(IndexError::Disconnected));
        assert_eq!(
            find_crossing_k(&split, 200.0),
            Err(IndexError::Disconnected)
        );
    }

    #[test]
    fn entropy_form_agrees_on_catalog() {
        for id in CatalogId::ALL {
            let g = id.graph();
            assert_eq!(
                classify_entropy_form(&g).unwrap(),
                classify_theorem_case(&g).unwrap().case,
                "{id}"
            );
        }
    }

    #[test]
    fn monotone_on_star_and_regular() {
        let grid = [0.5, 1.0, 2.0, 4.0, 8.0];
        assert!(monotonicity_check(&CatalogId::Star.graph(), &grid).unwrap());
        assert!(monotonicity_check(&CatalogId::Circle.graph(), &grid).unwrap());
        assert!(!monotonicity_check(&CatalogId::Star.graph(), &[2.0, 1.0]).unwrap());
        assert!(monotonicity_check(&CatalogId::Star.graph(), &[0.0]).is_err());
    }

    #[test]
    fn np_split_examples() {
        let regular = np_set_split(&CatalogId::Complete.graph().degrees(), 1.0).unwrap();
        assert!(regular.negative.is_empty());
        assert_eq!(regular.positive.len(), 7);

        let star = np_set_split(&CatalogId::Star.graph().degrees(), 1.0).unwrap();
        assert_eq!(star.positive, vec![0]);
        assert_eq!(star.negative, vec![1, 2, 3, 4, 5, 6]);
        assert!((star.threshold - 6f64.sqrt()).abs() < 1e-12);

        let s = np_set_split(&DegreeVector::new(vec![1, 2, 3]), 2.0).unwrap();
        let expected = ((4.0 * 2f64.ln() + 9.0 * 3f64.ln()) / 14.0).exp();
        assert!((s.threshold - expected).abs() < 1e-12);
        assert!((s.threshold - 2.47).abs() < 5e-3);
        assert_eq!(s.negative, vec![0, 1]);
        assert_eq!(s.positive, vec![2]);

        assert!(np_set_split(&DegreeVector::new(vec![0, 0]), 1.0).is_err());
        assert!(np_set_split(&DegreeVector::new(vec![1, 2]), -1.0).is_err());
    }
}
