//! Solver library for a one-dimensional bar whose fracture is modeled through
//! the inverse deformation: a nonconvex two-well energy in the inverse stretch
//! `H`, regularized by a higher-gradient term with coefficient `eps`, under the
//! unilateral constraint `H >= 0` and hard loading.
//!
//! The crate is organized around four solver layers plus shared numerics:
//!
//! * [`constitutive`] — stored-energy models `W`, their inverse-form duals
//!   `W*`, and the structural constants `kappa`, `gamma`, `M`.
//! * [`linearize`] — bifurcation points of the homogeneous state from the
//!   characteristic equation, and stability of the trivial branch.
//! * [`branch`] — semi-analytic construction of bifurcating branches by
//!   phase-plane quadrature: chords of `W*`, the quadratures `g0`/`g1`,
//!   fracture points, broken profiles and surface energy.
//! * [`discrete`] — an independent finite-difference oracle: direct
//!   constrained minimization, Euler-Lagrange and variational-inequality
//!   residuals, and second-variation spectra.
//!
//! All solver types are immutable after construction and safe to share across
//! threads; sweeps over `H1`, `eps` or mode are embarrassingly parallel.

pub mod branch;
pub mod config;
pub mod constitutive;
pub mod discrete;
pub mod error;
pub mod expr;
pub mod fields;
pub mod interp;
pub mod linearize;
pub mod quad;
pub mod roots;
pub mod tridiag;

pub use constitutive::{ConstitutiveModel, ModelSpec, ValidationReport};
pub use error::Error;

/// Result alias used across the solver modules.
pub type Result<T> = std::result::Result<T, Error>;
