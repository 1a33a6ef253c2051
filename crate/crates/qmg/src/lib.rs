//! Simulation and analysis toolkit for N-player quantum Minority games.
//!
//! The library is organized around a dense statevector core ([`hilbert`]),
//! a library of entangled initial states ([`states`]), the single-qubit
//! strategy parameterization ([`moves`]), exact Minority-game payoff
//! evaluation in fixed and randomized measurement bases ([`game`]),
//! coalition scenario composition and optimizers ([`coalitions`]), and
//! reproduction/reporting utilities ([`analysis`], [`config`]).
//!
//! Conventions used throughout:
//! * Player `k` (1-based) owns bit `k` of a basis index, player 1 being the
//!   most significant bit, so index `b` spells the ket `|b1 b2 ... bN>`.
//! * Global phase is never normalized away; states are compared through
//!   probabilities or [`hilbert::equal_up_to_global_phase`].

pub mod analysis;
pub mod coalitions;
pub mod config;
pub mod error;
pub mod game;
pub mod hilbert;
pub mod moves;
pub mod states;

pub use error::{Error, Result};

/// Tolerance for validating user-supplied data (unitarity, normalization).
pub const VALIDATION_TOL: f64 = 1e-9;

/// Tolerance for internal assertions and invariant checks.
pub const ASSERT_TOL: f64 = 1e-12;

/// Hard cap on qubit count; dense vectors above this are refused.
pub const MAX_QUBITS: usize = 20;
