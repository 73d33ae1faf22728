//! Graph states and their entropies.
//!
//! A graph with at least one edge defines the density matrix
//! `rho = L / Tr(L)`: symmetric, positive semi-definite, unit trace. Its
//! spectrum drives the von Neumann entropy `-sum lambda ln lambda` and the
//! Renyi family `ln(sum lambda^p) / (1 - p)`. All logarithms are natural.

use thiserror::Error;

use crate::graph::{DegreeVector, Graph};
use crate::linalg::{symmetric_eigen, SquareMatrix};

/// Symmetry tolerance accepted by [`eigenvalues_sym`].
pub const SYMMETRY_TOL: f64 = 1e-12;
/// Relative width of the window below zero that is clamped to zero.
pub const CLAMP_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("graph has no edges; its Laplacian has zero trace")]
    EmptyGraph,
    #[error("matrix is not symmetric (max asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },
    #[error("eigenvalue {eigenvalue:e} is below the PSD clamp window")]
    NotPsdAfterClamp { eigenvalue: f64 },
    #[error("Renyi order must be positive and different from 1, got {0}")]
    InvalidOrder(f64),
}

/// `rho_G = L(G) / Tr L(G)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(SquareMatrix);

impl DensityMatrix {
    pub fn matrix(&self) -> &SquareMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn spectrum(&self) -> Result<Spectrum, SpectralError> {
        eigenvalues_sym(&self.0, true)
    }
}

/// Ascending eigenvalues plus the number of tiny negative values lifted to 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    clamped_count: usize,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn clamped_count(&self) -> usize {
        self.clamped_count
    }

    /// Eigenvalues within `tol` of zero.
    pub fn zero_multiplicity(&self, tol: f64) -> usize {
        self.eigenvalues.iter().filter(|x| x.abs() <= tol).count()
    }

    /// `-sum lambda ln lambda`, with `0 ln 0 = 0`.
    pub fn von_neumann_entropy(&self) -> f64 {
        -self
            .eigenvalues
            .iter()
            .filter(|&&x| x > 0.0)
            .map(|&x| x * x.ln())
            .sum::<f64>()
    }

    /// `ln(sum lambda^p) / (1 - p)` for `p > 0`, `p != 1`.
    pub fn renyi_entropy(&self, p: f64) -> Result<f64, SpectralError> {
        check_order(p)?;
        let trace_power: f64 = self
            .eigenvalues
            .iter()
            .filter(|&&x| x > 0.0)
            .map(|&x| x.powf(p))
            .sum();
        Ok(trace_power.ln() / (1.0 - p))
    }
}

fn check_order(p: f64) -> Result<(), SpectralError> {
    if !p.is_finite() || p <= 0.0 || p == 1.0 {
        return Err(SpectralError::InvalidOrder(p));
    }
    Ok(())
}

pub fn density_matrix(g: &Graph) -> Result<DensityMatrix, SpectralError> {
    if g.m() == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    let trace = (2 * g.m()) as f64;
    Ok(DensityMatrix(
        g.laplacian().into_matrix().scaled(1.0 / trace),
    ))
}

/// Eigenvalues of a symmetric matrix, ascending.
///
/// With `expect_psd`, values in `[-CLAMP_TOL * max(1, lambda_max), 0)` become 0
/// and are counted; anything lower is an error.
pub fn eigenvalues_sym(matrix: &SquareMatrix, expect_psd: bool) -> Result<Spectrum, SpectralError> {
    let mut asymmetry: f64 = 0.0;
    for i in 0..matrix.dim() {
        for j in 0..i {
            asymmetry = asymmetry.max((matrix[(i, j)] - matrix[(j, i)]).abs());
        }
    }
    if asymmetry > SYMMETRY_TOL {
        return Err(SpectralError::NotSymmetric { asymmetry });
    }

    let mut eigenvalues = symmetric_eigen(matrix, false).values;
    let mut clamped_count = 0;
    if expect_psd {
        let lambda_max = eigenvalues.last().copied().unwrap_or(0.0);
        let floor = -CLAMP_TOL * lambda_max.max(1.0);
        for x in &mut eigenvalues {
            if *x < floor {
                return Err(SpectralError::NotPsdAfterClamp { eigenvalue: *x });
            }
            if *x < 0.0 {
                *x = 0.0;
                clamped_count += 1;
            }
        }
    }
    Ok(Spectrum {
        eigenvalues,
        clamped_count,
    })
}

pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64, SpectralError> {
    Ok(rho.spectrum()?.von_neumann_entropy())
}

pub fn renyi_entropy(rho: &DensityMatrix, p: f64) -> Result<f64, SpectralError> {
    check_order(p)?;
    rho.spectrum()?.renyi_entropy(p)
}

/// Renyi-2 entropy from degrees alone: `ln((sum d)^2 / (sum d + sum d^2))`.
///
/// Follows from `Tr L^2 = sum d + sum d^2` and `Tr L = sum d`.
pub fn renyi2_entropy_degree_form(d: &DegreeVector) -> Result<f64, SpectralError> {
    let sum = d.sum() as f64;
    if sum == 0.0 {
        return Err(SpectralError::EmptyGraph);
    }
    let sq = d.sum_of_squares() as f64;
    Ok((sum * sum / (sum + sq)).ln())
}
