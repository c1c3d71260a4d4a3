//! Multidimensional analytic signals generated by idempotent Fourier
//! multipliers in the geometric algebra G_3.
//!
//! A real 1-D or 2-D signal f is extended to a multivector-valued analytic
//! signal f_A = (f + H[f]) / 2, where H multiplies the spectrum by a field
//! a(w) with a(w)^2 = 1, so psi(w) = (1 + a(w)) / 2 is an idempotent
//! projector. Scalar-valued choices of a reproduce single-orthant (Hahn)
//! signals; vector + pseudovector choices reproduce the hypercomplex and
//! monogenic signals and a parametric family beyond them. Applying H twice
//! is the identity, so f and H[f] carry the same information.
//!
//! Modules:
//! - [`ga`]: dense multivector arithmetic in G_L (L = 3, 7).
//! - [`grid`]: DFT bin bookkeeping, signed frequencies, exceptional bins.
//! - [`field`]: grids of multivectors (spatial or frequency domain).
//! - [`spectral`]: FFT with I_3 as the imaginary unit, plus a brute-force
//!   oracle of the defining double sum.
//! - [`multipliers`]: named multiplier constructors, validation and the
//!   generalized / generic / ordinary classification.
//! - [`analytic`]: the transform engine - extended Hilbert transform,
//!   decompositions, partial/Riesz transforms, reconstruction.
//! - [`io`]: PGM/PNG ingestion, raw field archives, plot exports.
//! - [`selftest`]: the runnable verification checks behind `clifsig selftest`.

// Per-bin loops here index several parallel planes at once; iterator
// rewrites obscure that.
#![allow(clippy::needless_range_loop)]

pub mod analytic;
pub mod error;
pub mod field;
pub mod ga;
pub mod grid;
pub mod io;
pub mod multipliers;
pub mod parallel;
pub mod selftest;
pub mod spectral;

pub use error::{Error, Result};
pub use field::{Domain, MultivectorField};
pub use ga::{AlgebraTable, Multivector};
pub use grid::FrequencyGrid;
