//! Phase-space information entropy of one-dimensional quantum states.
//!
//! A state localized in position spreads in momentum; the Shannon entropies
//! of the two densities obey `S_x + S_k >= 1 - log 2`, with equality for
//! Gaussians. This crate measures both sides of that trade-off:
//!
//! * [`gridwave`]: sampled wavefunctions on a self-dual grid with a unitary
//!   centered Fourier transform, parity, eigenspace projectors, and entropies.
//! * [`combcalc`]: an exact calculus for periodic trains of Dirac deltas
//!   (combs) whose Gaussian-regularized entropies have closed forms.
//! * [`states`]: reference states (Gaussians, oscillator eigenstates, comb
//!   regularizations) sampled onto grids.
//! * [`eigensearch`]: surveys of comb families constrained to Fourier
//!   eigenspaces, reporting the least-entropy members.
//! * [`optimize`]: projected-gradient entropy minimization over a grid
//!   subspace.
//! * [`bounds`]: closed-form entropy and norm bounds.
//! * [`literal`]: a plain-text syntax for combs.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod combcalc;
pub mod eigensearch;
mod error;
pub mod gridwave;
pub mod literal;
pub mod optimize;
pub mod states;

pub use error::{Error, Result};
