//! Continuous-variable quantum state tomography.
//!
//! `cvtomo` estimates the covariance matrix of single- and two-mode Gaussian
//! optical states from phase-tagged homodyne quadrature samples, using an
//! iterative maximum-likelihood fixed point on binned variance statistics.
//! Alongside the Gaussian estimator it provides a generic truncated-Fock-space
//! ML reconstruction as an assumption-free baseline, Wigner-function
//! evaluation for both representations, and Jarque-Bera / Shapiro-Wilk
//! normality tests to assess the Gaussian hypothesis on the raw samples.
//!
//! Conventions used throughout: quadratures X = (a + a†)/√2, Y = i(a† − a)/√2,
//! so the vacuum variance is 1/2; quadrature ordering (X₁, Y₁, X₂, Y₂);
//! detection efficiency η enters through η-rescaled outcomes (raw values
//! divided by √η) whose variance model is wᵀGw + δ²_η with
//! δ²_η = (1 − η)/(2η).
//!
//! Start with the runnable programs under `examples/`; each one exercises a
//! major capability end to end. The `cvtomo` binary exposes the same
//! functionality as subcommands for shell pipelines.

pub mod cli;
pub mod data;
pub mod error;
pub mod fock;
pub mod gaussian;
pub mod gaussianity;
pub mod mle;
pub mod quadrature;
pub mod rng;

pub use error::{Error, Result};
pub use gaussian::{CovarianceMatrix, DisplacementVector, ModeSelector, Setting};
