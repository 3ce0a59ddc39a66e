//! Generalized adjacency spectra and energies.

mod jacobi;
mod matrix;
mod spectrum;

pub use jacobi::{eigen_symmetric, EigenResult, CONVERGENCE_TOL, MAX_SWEEPS, RESIDUAL_TOL};
pub use matrix::{adjacency_matrix, build_alpha_matrix, signless_laplacian, SymMatrix};
pub use spectrum::{
    default_cluster_tol, distinct_eigenvalues, energy_of, moment_sums, spectral_radius, spectrum,
    unchecked_spectrum,
    Cluster, MomentSums, Spectrum, IDENTITY_TOL,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("alpha = {0} is outside [0, 1]")]
    AlphaOutOfRange(f64),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal mass {off_diagonal:e})")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },
    #[error("eigenpair residual {residual:e} exceeds {limit:e}")]
    Residual { residual: f64, limit: f64 },
    #[error("moment identity `{identity}` violated: computed {computed}, expected {expected}")]
    IdentityViolation { identity: &'static str, computed: f64, expected: f64 },
    #[error("spectral radius {radius} is below the average degree {average}")]
    RadiusBelowAverageDegree { radius: f64, average: f64 },
}
