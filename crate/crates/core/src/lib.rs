//! Second-order finite-difference solver for strongly degenerate
//! convection-diffusion equations of sedimentation-consolidation type,
//! accelerated by point-value multiresolution.
//!
//! The crate is split into:
//!
//! - [`model`]: flux density, effective-stress diffusion and the batch /
//!   continuous initial-boundary value problems.
//! - [`scheme`]: limited reconstruction, Engquist-Osher flux, boundary rows
//!   and Heun time stepping on a uniform grid.
//! - [`mr`]: dyadic grid hierarchy, interpolatory wavelet transform,
//!   thresholding with safety points and the hybrid flux evaluation.
//! - [`driver`]: reference and multiresolution runs plus error/compression
//!   metrics.
//! - [`cli`]: run configuration files and output writers.

pub mod cli;
pub mod driver;
mod error;
pub mod model;
pub mod mr;
pub mod scheme;

pub use error::{Error, Result};
