//! Decoherence of a two-qubit probe coupled to an anisotropic XY spin chain
//! with Dzyaloshinskii-Moriya interaction, and the resulting dynamics of the
//! memory-assisted entropic uncertainty bound.
//!
//! The crate is organized around four pieces:
//!
//! * [`chain`] — spectral quantities of the chain and the closed-form
//!   decoherence factors |F_mu_nu(t)|,
//! * [`dynamics`] — evolution of a Bell-diagonal probe state into an X-form
//!   density matrix,
//! * [`information`] — entropic quantities along two independent routes
//!   (X-state closed forms and a generic measurement/eigensolver pipeline),
//! * [`verification`] — the oracle harness comparing the two routes and
//!   checking analytic limits, with a JSON report.
//!
//! All model code is generic over the scalar type through [`scalar::Real`]
//! (f32 or f64); the aliases below fix f64 for ordinary use.

pub mod chain;
pub mod dynamics;
pub mod error;
pub mod information;
pub mod linalg;
pub mod scalar;
pub mod verification;

pub use error::{Error, Result};
pub use scalar::Real;

pub use chain::{AngleConvention, ModeIndex};

/// Chain configuration over f64.
pub type ChainParams = chain::ChainParams<f64>;
/// Effective pointer-state fields over f64.
pub type EffectiveFields = chain::EffectiveFields<f64>;
/// Decoherence factor pair over f64.
pub type DecoherencePair = chain::DecoherencePair<f64>;
/// Precomputed per-mode spectral table over f64.
pub type ModeTable = chain::ModeTable<f64>;
/// Bell-diagonal probe state over f64.
pub type BellDiagonalState = dynamics::BellDiagonalState<f64>;
/// Evolved X-form probe state over f64.
pub type XState = dynamics::XState<f64>;
/// Single-qubit measurement basis over f64.
pub type MeasurementBasis = information::MeasurementBasis<f64>;
/// Observable pair with complementarity over f64.
pub type MeasurementSetting = information::MeasurementSetting<f64>;
/// Uncertainty quantities at one time point over f64.
pub type UncertaintyReport = information::UncertaintyReport<f64>;
