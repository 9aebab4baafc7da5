//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by covariance-matrix algebra and rate computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar parameter lies outside its mathematical domain.
    #[error("{name} = {value} is out of domain ({requirement})")]
    OutOfDomain {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },

    /// Matrix dimensions do not match the declared mode count or each other.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A covariance matrix failed its symmetry check.
    #[error("covariance matrix is not symmetric (relative asymmetry {asymmetry:.3e})")]
    NotSymmetric { asymmetry: f64 },

    /// A covariance matrix violates the uncertainty principle.
    #[error("unphysical covariance matrix: min symplectic eigenvalue {nu_min} < 1")]
    Unphysical { nu_min: f64 },

    /// The moduli of eig(iΩV) could not be grouped into one value per mode.
    #[error("symplectic spectrum pairing failed: |{a} - {b}| exceeds tolerance")]
    PairingFailed { a: f64, b: f64 },

    /// A matrix offered as a symplectic map does not satisfy S Ω Sᵀ = Ω.
    #[error("not a symplectic map: max |SΩSᵀ - Ω| = {defect:.3e}")]
    NotSymplectic { defect: f64 },

    /// An invalid mode index, permutation or selection was supplied.
    #[error("invalid mode selection: {0}")]
    InvalidModes(String),

    /// Homodyne conditioning on a quadrature with no variance.
    #[error("homodyne conditioning is singular: measured quadrature variance {variance}")]
    SingularConditioning { variance: f64 },

    /// An optimizer search box or grid configuration is unusable.
    #[error("invalid search configuration: {0}")]
    InvalidSearchConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
