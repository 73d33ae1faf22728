//! Undirected simple graphs and the matrices derived from them.
//!
//! Vertices are labeled `0..n`. Edges are stored canonically as `(i, j)`
//! with `i < j`, sorted, so two graphs with the same edge set compare equal
//! regardless of the order edges were supplied in.

mod catalog;
pub mod io;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

pub use catalog::CatalogId;

use crate::linalg::SquareMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// An undirected simple graph on `n` labeled vertices.
///
/// Isolated vertices are allowed. Values are immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Validates and builds a graph. Edge orientation and order are irrelevant.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge { u: e.0, v: e.1 });
            }
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut neighbors = vec![Vec::new(); n];
        for &(i, j) in &edges {
            neighbors[i].push(j);
            neighbors[j].push(i);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges,
            neighbors,
        })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, std::iter::empty())
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Cycle on `n >= 3` vertices; smaller `n` degrades to a path.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Self::path(n);
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Self::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    /// Hub `0` joined to leaves `1..n`.
    pub fn star(n: usize) -> Result<Self, GraphError> {
        Self::new(n, (1..n).map(|i| (0, i)))
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        Self::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `i < j`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors
            .get(u)
            .is_some_and(|list| list.binary_search(&v).is_ok())
    }

    pub fn degrees(&self) -> DegreeVector {
        DegreeVector(self.neighbors.iter().map(Vec::len).collect())
    }

    pub fn adjacency(&self) -> SquareMatrix {
        let mut a = SquareMatrix::zeros(self.n);
        for &(i, j) in &self.edges {
            a[(i, j)] = 1.0;
            a[(j, i)] = 1.0;
        }
        a
    }

    /// Combinatorial Laplacian `L = D - A`.
    pub fn laplacian(&self) -> LaplacianMatrix {
        let mut l = SquareMatrix::zeros(self.n);
        for (i, list) in self.neighbors.iter().enumerate() {
            l[(i, i)] = list.len() as f64;
        }
        for &(i, j) in &self.edges {
            l[(i, j)] = -1.0;
            l[(j, i)] = -1.0;
        }
        LaplacianMatrix(l)
    }

    /// BFS from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in &self.neighbors[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    /// Deletes `v` and its incident edges; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Self, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        Self::new(
            self.n - 1,
            self.edges
                .iter()
                .filter(|&&(i, j)| i != v && j != v)
                .map(|&(i, j)| (shift(i), shift(j))),
        )
    }

    /// Relabels vertex `i` as `perm[i]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, GraphError> {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        Self::new(self.n, self.edges.iter().map(|&(i, j)| (perm[i], perm[j])))
    }

    /// 64-bit FNV-1a digest of the canonical edge-list encoding, as hex.
    pub fn fingerprint(&self) -> String {
        let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
        for byte in io::to_edge_list(self).bytes() {
            hash ^= u64::from(byte);
            hash = hash.wrapping_mul(0x0100_0000_01b3);
        }
        format!("{hash:016x}")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m())
    }
}

/// Vertex degrees, indexed by vertex label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeVector(Vec<usize>);

impl DegreeVector {
    /// Wraps an arbitrary degree list, e.g. for testing degree-only identities.
    pub fn new(degrees: Vec<usize>) -> Self {
        Self(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn sum_of_squares(&self) -> usize {
        self.0.iter().map(|d| d * d).sum()
    }

    pub fn max(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn sorted(&self) -> Vec<usize> {
        let mut d = self.0.clone();
        d.sort_unstable();
        d
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

/// `L = D - A` of a graph. Symmetric, zero row sums, trace `2m`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaplacianMatrix(SquareMatrix);

impl LaplacianMatrix {
    pub fn matrix(&self) -> &SquareMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> SquareMatrix {
        self.0
    }

    pub fn trace(&self) -> f64 {
        self.0.trace()
    }
}
