//! Quantum distribution functions for systems with an arbitrary, including
//! small and non-integer, number of particles.
//!
//! The usual Fermi-Dirac and Bose-Einstein distributions assume large
//! occupation numbers so that factorials in the statistical weight can be
//! replaced by Stirling's formula. Writing the factorials through the gamma
//! function instead, `N! = Γ(N+1)`, yields exact level entropies and exact
//! occupation equations in terms of the psi (digamma) function. The exact
//! per-state population of a level with degeneracy `z` is pinned at 0 (or 1
//! for fermions) outside a finite window of the parameter
//! `θ = (ε − μ)/T`, in contrast with the exponential tails of the classical
//! distributions.
//!
//! Modules:
//! - [`specfun`]: log-gamma, digamma, trigamma, harmonic numbers and the
//!   log-factorial variants, plus an identity battery used for self-checks.
//! - [`fermi`]: fermion formulas (exact, corrected, classical) for the
//!   distribution and the level entropy.
//! - [`bose`]: boson counterparts, including the finite-sum form and the
//!   condensation-related boundaries.
//! - [`ensemble`]: grand-canonical assembly over a level spectrum, chemical
//!   potential solving, and the boson onset/condensation temperatures.

pub mod bose;
pub mod ensemble;
mod error;
pub mod fermi;
mod solve;
pub mod specfun;

pub use error::{Error, Result};
