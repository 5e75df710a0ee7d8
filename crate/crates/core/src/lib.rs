//! Exact analysis of Laplacian quantum walks on simple graphs.
//!
//! The crate decides proper fractional revival, periodicity and perfect
//! state transfer with exact integer and rational arithmetic, and checks
//! every positive decision against an independent floating-point evaluation
//! of `U(t) = exp(itL)`.

pub mod algebra;
pub mod campaign;
pub mod constructors;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod revival;
pub mod spectral;
pub mod time;
