//! The 10-graph ordering experiment and the vertex-removal study.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{CatalogId, Graph};
use crate::indices::{
    degree_theil, freeman_betweenness_centralization, freeman_degree_centralization,
    von_neumann_theil, IndexError,
};

/// Adjacent pairs may increase by at most this much and still count as ordered.
pub const TIE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    /// Freeman degree centralization.
    Cd,
    /// Freeman betweenness centralization.
    Cb,
    /// Degree Theil index at `k = 1`.
    Td1,
    /// Von Neumann Theil index.
    Tq,
}

impl Metric {
    pub const ALL: [Metric; 4] = [Metric::Cd, Metric::Cb, Metric::Td1, Metric::Tq];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Cd => "cd",
            Metric::Cb => "cb",
            Metric::Td1 => "td1",
            Metric::Tq => "tq",
        }
    }

    pub fn evaluate(self, g: &Graph) -> Result<f64, IndexError> {
        match self {
            Metric::Cd => freeman_degree_centralization(g),
            Metric::Cb => freeman_betweenness_centralization(g),
            Metric::Td1 => degree_theil(g, 1.0),
            Metric::Tq => von_neumann_theil(g),
        }
    }

    /// Published most-to-least centralized sequence of the catalog.
    pub fn published_order(self) -> [CatalogId; 10] {
        use CatalogId::*;
        match self {
            Metric::Cd => [
                Star,
                Wheel,
                BalancedTree,
                Lollipop,
                Barbell,
                Bipartite34,
                TwoStoryHouse,
                Path,
                Circle,
                Complete,
            ],
            Metric::Cb => [
                Star,
                Barbell,
                BalancedTree,
                Wheel,
                Lollipop,
                Path,
                TwoStoryHouse,
                Bipartite34,
                Circle,
                Complete,
            ],
            Metric::Td1 => [
                Star,
                BalancedTree,
                Wheel,
                Path,
                Lollipop,
                Barbell,
                TwoStoryHouse,
                Bipartite34,
                Circle,
                Complete,
            ],
            Metric::Tq => [
                Star,
                BalancedTree,
                Path,
                Lollipop,
                Barbell,
                Circle,
                TwoStoryHouse,
                Wheel,
                Bipartite34,
                Complete,
            ],
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Metric {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Metric::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown metric `{s}` (expected cd, cb, td1 or tq)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RankedGraph {
    pub graph: CatalogId,
    pub value: f64,
}

/// An adjacent pair of the published order whose values increase.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrderViolation {
    pub position: usize,
    pub earlier: RankedGraph,
    pub later: RankedGraph,
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "position {}: {} = {:.12} < {} = {:.12}",
            self.position + 1,
            self.earlier.graph,
            self.earlier.value,
            self.later.graph,
            self.later.value
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderingResult {
    pub metric: Metric,
    /// Nonincreasing by value; ties keep catalog order.
    pub ranked: Vec<RankedGraph>,
    pub published_order: Vec<CatalogId>,
    pub matches: bool,
    pub violations: Vec<OrderViolation>,
}

/// Evaluates `metric` on every catalog graph and tests whether the published
/// sequence is a nonincreasing arrangement of the values.
pub fn reproduce_ordering(metric: Metric) -> Result<OrderingResult, IndexError> {
    let values = CatalogId::ALL
        .into_iter()
        .map(|id| {
            metric
                .evaluate(&id.graph())
                .map(|value| RankedGraph { graph: id, value })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let value_of = |id: CatalogId| values.iter().find(|r| r.graph == id).unwrap().value;

    let mut ranked = values.clone();
    ranked.sort_by(|a, b| b.value.total_cmp(&a.value).then(a.graph.cmp(&b.graph)));

    let published_order = metric.published_order().to_vec();
    let violations: Vec<_> = published_order
        .windows(2)
        .enumerate()
        .filter_map(|(position, pair)| {
            let earlier = RankedGraph {
                graph: pair[0],
                value: value_of(pair[0]),
            };
            let later = RankedGraph {
                graph: pair[1],
                value: value_of(pair[1]),
            };
            (later.value > earlier.value + TIE_TOL).then_some(OrderViolation {
                position,
                earlier,
                later,
            })
        })
        .collect();
    Ok(OrderingResult {
        metric,
        ranked,
        published_order,
        matches: violations.is_empty(),
        violations,
    })
}

/// The four metrics of one graph; `None` where a metric is undefined
/// (fewer than three vertices, or no edges for the entropic ones).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetricValues {
    pub c_d: Option<f64>,
    pub c_b: Option<f64>,
    pub t_d1: Option<f64>,
    pub t_q: Option<f64>,
}

impl MetricValues {
    pub fn of(g: &Graph) -> Self {
        Self {
            c_d: freeman_degree_centralization(g).ok(),
            c_b: freeman_betweenness_centralization(g).ok(),
            t_d1: degree_theil(g, 1.0).ok(),
            t_q: von_neumann_theil(g).ok(),
        }
    }

    fn delta(after: &Self, before: &Self) -> Self {
        let d = |a: Option<f64>, b: Option<f64>| Some(a? - b?);
        Self {
            c_d: d(after.c_d, before.c_d),
            c_b: d(after.c_b, before.c_b),
            t_d1: d(after.t_d1, before.t_d1),
            t_q: d(after.t_q, before.t_q),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerturbationRecord {
    pub base: String,
    pub removed_vertex: usize,
    pub before: MetricValues,
    pub after: MetricValues,
    pub delta: MetricValues,
    /// The vertex-deleted graph has more than one component.
    pub disconnected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExperimentError {
    #[error("perturbation study needs at least 3 vertices, got {n}")]
    TooSmall { n: usize },
    #[error("no connected simple graph on {n} vertices has {m} edges")]
    InfeasibleEdgeCount { n: usize, m: usize },
}

/// Removes each vertex in turn and recomputes the metrics.
pub fn perturbation_study(
    base: &str,
    g: &Graph,
) -> Result<Vec<PerturbationRecord>, ExperimentError> {
    if g.n() < 3 {
        return Err(ExperimentError::TooSmall { n: g.n() });
    }
    let before = MetricValues::of(g);
    Ok((0..g.n())
        .map(|v| {
            let h = g.remove_vertex(v).expect("v < n");
            let after = MetricValues::of(&h);
            PerturbationRecord {
                base: base.to_string(),
                removed_vertex: v,
                before,
                after,
                delta: MetricValues::delta(&after, &before),
                disconnected: !h.is_connected(),
            }
        })
        .collect())
}

/// A connected graph with exactly `m` edges: a random spanning tree first,
/// then uniformly chosen extra edges. Not uniform over connected graphs.
pub fn random_graph(n: usize, m: usize, seed: u64) -> Result<Graph, ExperimentError> {
    let max_edges = n * n.saturating_sub(1) / 2;
    if n == 0 || m + 1 < n || m > max_edges {
        return Err(ExperimentError::InfeasibleEdgeCount { n, m });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::with_capacity(m);
    for i in 1..n {
        let parent = order[rng.random_range(0..i)];
        edges.push((order[i], parent));
    }
    let tree = Graph::new(n, edges.iter().copied()).expect("spanning tree is simple");
    let mut extra: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !tree.has_edge(i, j))
        .collect();
    extra.shuffle(&mut rng);
    edges.extend(extra.into_iter().take(m - (n - 1)));
    Ok(Graph::new(n, edges).expect("sampled edges are distinct"))
}

/// Picks `m` uniformly in `[n-1, n(n-1)/2]` and samples a connected graph.
pub fn random_connected_graph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let m = rng.random_range(n - 1..=n * (n - 1) / 2);
    random_graph(n, m, rng.random()).expect("edge count is feasible")
}
