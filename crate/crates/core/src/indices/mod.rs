//! Inequality and centralization indices of graphs.
//!
//! The Theil index of nonnegative characteristics `x_1..x_n` with mean `mu`
//! is `T = (1/n) sum (x_i/mu) ln(x_i/mu)`. It lies in `[0, ln n]` and equals
//! `ln n - H` where `H` is the Shannon entropy of the shares `x_i / sum x`.
//! Applying it to degree powers `d_i^k` gives the degree Theil index
//! `T_{d,k}`; replacing the share distribution by the spectrum of the graph
//! state gives the von Neumann Theil index `T_Q = ln n - H(rho_G)`.

mod centralization;
mod report;
mod theorem;

use thiserror::Error;

use crate::graph::{DegreeVector, Graph};
use crate::spectral::{self, SpectralError, Spectrum};

pub use centralization::{
    betweenness, freeman_betweenness_centralization, freeman_degree_centralization,
};
pub use report::{centralization_report, CentralizationReport, KValue, PValue, ReportConfig};
pub use theorem::{
    classify_entropy_form, classify_theorem_case, find_crossing_k, max_degree_set,
    monotonicity_check, np_set_split, Crossing, MaxDegreeSet, NpSplit, TheoremCase, TheoremVerdict,
};

/// Band around the `ln n - ln|M|` threshold treated as a tie.
pub const CLASSIFY_TOL: f64 = 1e-9;
/// Tolerance for numerical identities between two routes to the same value.
pub const IDENTITY_TOL: f64 = 1e-9;
/// Slack allowed on inequalities checked in floating point.
pub const PROPERTY_SLACK: f64 = 1e-10;
/// Upper end of the crossing-exponent search bracket.
pub const CROSSING_K_MAX: f64 = 200.0;

pub const DEFAULT_K_GRID: [f64; 9] = [0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 50.0, 200.0];
pub const DEFAULT_P_GRID: [f64; 3] = [0.5, 2.0, 3.0];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IndexError {
    #[error("characteristic vector is empty")]
    NoCharacteristics,
    #[error("characteristic {index} is {value}; characteristics must be finite and nonnegative")]
    InvalidCharacteristic { index: usize, value: f64 },
    #[error("all characteristics are zero")]
    AllZero,
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("degree exponent must be positive, got {0}")]
    InvalidExponent(f64),
    #[error("Renyi order must be positive and different from 1, got {0}")]
    InvalidOrder(f64),
    #[error("centralization needs at least 3 vertices, got {n}")]
    TooSmall { n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("crossing search requires case A, but ln n - ln|M| < T_Q")]
    WrongCase,
    #[error("T_d1 = {t_d1} exceeds T_Q = {t_q}; the crossing bracket is invalid")]
    NoBracket { t_d1: f64, t_q: f64 },
    #[error(transparent)]
    Spectral(SpectralError),
}

impl From<SpectralError> for IndexError {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::EmptyGraph => IndexError::EmptyGraph,
            SpectralError::InvalidOrder(p) => IndexError::InvalidOrder(p),
            other => IndexError::Spectral(other),
        }
    }
}

/// Nonnegative agent characteristics, not all zero.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacteristicVector(Vec<f64>);

impl CharacteristicVector {
    pub fn new(x: Vec<f64>) -> Result<Self, IndexError> {
        if x.is_empty() {
            return Err(IndexError::NoCharacteristics);
        }
        if let Some((index, &value)) = x
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_finite() || **v < 0.0)
        {
            return Err(IndexError::InvalidCharacteristic { index, value });
        }
        if x.iter().all(|&v| v == 0.0) {
            return Err(IndexError::AllZero);
        }
        Ok(Self(x))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mean(&self) -> f64 {
        self.0.iter().sum::<f64>() / self.0.len() as f64
    }

    /// `x_i / sum_j x_j`.
    pub fn shares(&self) -> Vec<f64> {
        let total: f64 = self.0.iter().sum();
        self.0.iter().map(|x| x / total).collect()
    }
}

pub fn theil_index(x: &CharacteristicVector) -> f64 {
    let mu = x.mean();
    let n = x.len() as f64;
    let t = x
        .as_slice()
        .iter()
        .filter(|&&v| v > 0.0)
        .map(|&v| {
            let r = v / mu;
            r * r.ln()
        })
        .sum::<f64>()
        / n;
    t.max(0.0)
}

/// Degree powers `d_i^k`, rescaled by `d_max^k` so large `k` cannot overflow.
/// The Theil index is scale invariant, so the rescaling is harmless.
fn degree_power_characteristics(
    d: &DegreeVector,
    k: f64,
) -> Result<CharacteristicVector, IndexError> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(IndexError::InvalidExponent(k));
    }
    let max = d.max();
    if max == 0 {
        return Err(IndexError::EmptyGraph);
    }
    let max = max as f64;
    let x = d
        .iter()
        .map(|di| {
            if di == 0 {
                0.0
            } else {
                (k * (di as f64 / max).ln()).exp()
            }
        })
        .collect();
    CharacteristicVector::new(x)
}

/// `T_{d,k}` computed from a degree vector.
pub fn degree_theil_of(d: &DegreeVector, k: f64) -> Result<f64, IndexError> {
    Ok(theil_index(&degree_power_characteristics(d, k)?))
}

/// `T_{d,k}(G) = ln n - H_{d,k}(G)` for `k > 0`.
pub fn degree_theil(g: &Graph, k: f64) -> Result<f64, IndexError> {
    degree_theil_of(&g.degrees(), k)
}

/// `ln n - H` for an entropy `H` in nats.
pub fn theil_from_entropy(n: usize, entropy: f64) -> f64 {
    (n as f64).ln() - entropy
}

pub fn von_neumann_theil_of(spectrum: &Spectrum) -> f64 {
    theil_from_entropy(spectrum.eigenvalues().len(), spectrum.von_neumann_entropy())
}

/// `T_Q(G) = ln n - H(rho_G)`, the relative entropy of `rho_G` to `I/n`.
pub fn von_neumann_theil(g: &Graph) -> Result<f64, IndexError> {
    let spectrum = spectral::density_matrix(g)?.spectrum()?;
    Ok(von_neumann_theil_of(&spectrum))
}

pub fn generalized_theil_of(spectrum: &Spectrum, p: f64) -> Result<f64, IndexError> {
    Ok(theil_from_entropy(
        spectrum.eigenvalues().len(),
        spectrum.renyi_entropy(p)?,
    ))
}

/// `T_Q^(p)(G) = ln n - H^(p)(rho_G)`.
pub fn generalized_theil(g: &Graph, p: f64) -> Result<f64, IndexError> {
    if !(p > 0.0 && p.is_finite() && p != 1.0) {
        return Err(IndexError::InvalidOrder(p));
    }
    let spectrum = spectral::density_matrix(g)?.spectrum()?;
    generalized_theil_of(&spectrum, p)
}

/// Jain fairness `(sum d)^2 / (n sum d^2)`, in `[1/n, 1]`.
pub fn jain_index(d: &DegreeVector) -> Result<f64, IndexError> {
    let sum = d.sum() as f64;
    if sum == 0.0 {
        return Err(IndexError::EmptyGraph);
    }
    Ok(sum * sum / (d.len() as f64 * d.sum_of_squares() as f64))
}
