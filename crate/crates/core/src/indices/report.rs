use serde::Serialize;

use super::{
    classify_theorem_case, degree_theil_of, freeman_betweenness_centralization,
    freeman_degree_centralization, generalized_theil_of, jain_index, von_neumann_theil_of,
    IndexError, TheoremVerdict, DEFAULT_K_GRID, DEFAULT_P_GRID,
};
use crate::graph::Graph;
use crate::spectral;

#[derive(Debug, Clone, PartialEq)]
pub struct ReportConfig {
    pub k_grid: Vec<f64>,
    pub p_grid: Vec<f64>,
}

impl Default for ReportConfig {
    fn default() -> Self {
        Self {
            k_grid: DEFAULT_K_GRID.to_vec(),
            p_grid: DEFAULT_P_GRID.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KValue {
    pub k: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PValue {
    pub p: f64,
    pub value: f64,
}

/// Every index for one graph. Entropic values are in nats.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CentralizationReport {
    pub label: String,
    pub fingerprint: String,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub degree_theil: Vec<KValue>,
    pub t_q: f64,
    pub generalized_theil: Vec<PValue>,
    /// `None` below three vertices.
    pub c_d: Option<f64>,
    pub c_b: Option<f64>,
    pub jain: f64,
    pub neg_log_jain: f64,
    /// `None` for disconnected graphs.
    pub verdict: Option<TheoremVerdict>,
}

pub fn centralization_report(
    label: &str,
    g: &Graph,
    config: &ReportConfig,
) -> Result<CentralizationReport, IndexError> {
    let spectrum = spectral::density_matrix(g)?.spectrum()?;
    let degrees = g.degrees();
    let degree_theil = config
        .k_grid
        .iter()
        .map(|&k| degree_theil_of(&degrees, k).map(|value| KValue { k, value }))
        .collect::<Result<_, _>>()?;
    let generalized_theil = config
        .p_grid
        .iter()
        .map(|&p| generalized_theil_of(&spectrum, p).map(|value| PValue { p, value }))
        .collect::<Result<_, _>>()?;
    let small = |r: Result<f64, IndexError>| match r {
        Ok(v) => Ok(Some(v)),
        Err(IndexError::TooSmall { .. }) => Ok(None),
        Err(e) => Err(e),
    };
    let connected = g.is_connected();
    let jain = jain_index(&degrees)?;
    Ok(CentralizationReport {
        label: label.to_string(),
        fingerprint: g.fingerprint(),
        n: g.n(),
        m: g.m(),
        connected,
        degree_theil,
        t_q: von_neumann_theil_of(&spectrum),
        generalized_theil,
        c_d: small(freeman_degree_centralization(g))?,
        c_b: small(freeman_betweenness_centralization(g))?,
        jain,
        neg_log_jain: -jain.ln(),
        verdict: if connected {
            Some(classify_theorem_case(g)?)
        } else {
            None
        },
    })
}
