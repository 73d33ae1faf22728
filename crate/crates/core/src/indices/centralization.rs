//! Freeman centralization over degree and betweenness.

use std::collections::VecDeque;

use super::IndexError;
use crate::graph::Graph;

/// Betweenness of every vertex, summed over ordered source-target pairs.
///
/// Single-source shortest-path counting with dependency accumulation
/// (Brandes). Pairs in different components contribute nothing.
pub fn betweenness(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let mut score = vec![0.0; n];
    let mut stack = Vec::with_capacity(n);
    let mut queue = VecDeque::with_capacity(n);
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut sigma = vec![0u64; n];
    let mut dist = vec![usize::MAX; n];
    let mut delta = vec![0.0; n];

    for s in 0..n {
        for v in 0..n {
            preds[v].clear();
            sigma[v] = 0;
            dist[v] = usize::MAX;
            delta[v] = 0.0;
        }
        sigma[s] = 1;
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }
        while let Some(w) = stack.pop() {
            let coeff = (1.0 + delta[w]) / sigma[w] as f64;
            for &v in &preds[w] {
                delta[v] += sigma[v] as f64 * coeff;
            }
            if w != s {
                score[w] += delta[w];
            }
        }
    }
    score
}

/// `C_D = sum (d_max - d_i) / ((n-1)(n-2))`.
pub fn freeman_degree_centralization(g: &Graph) -> Result<f64, IndexError> {
    let n = g.n();
    if n < 3 {
        return Err(IndexError::TooSmall { n });
    }
    let d = g.degrees();
    let max = d.max();
    let spread: usize = d.iter().map(|di| max - di).sum();
    Ok(spread as f64 / ((n - 1) * (n - 2)) as f64)
}

/// `C_B = sum (g_max - g_i) / ((n-1)^2 (n-2))` with ordered-pair betweenness,
/// which puts the star at exactly 1.
pub fn freeman_betweenness_centralization(g: &Graph) -> Result<f64, IndexError> {
    let n = g.n();
    if n < 3 {
        return Err(IndexError::TooSmall { n });
    }
    let b = betweenness(g);
    let max = b.iter().copied().fold(0.0, f64::max);
    let spread: f64 = b.iter().map(|x| max - x).sum();
    Ok(spread / ((n - 1) * (n - 1) * (n - 2)) as f64)
}
