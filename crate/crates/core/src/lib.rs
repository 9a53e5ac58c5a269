//! Dependence modelling with vine copulas and uncertainty propagation.
//!
//! The crate builds joint input models from univariate [`margins`] and a
//! copula — independence, multivariate Gaussian, or a C-/D-vine assembled
//! from bivariate [`paircop`] families — and pushes them through
//! computational models with Monte Carlo estimators ([`moments`]), sparse
//! Hermite polynomial chaos ([`pce`]), and reliability methods
//! ([`reliability`]). The [`transform`] module provides the isoprobabilistic
//! (Rosenblatt) map to independent standard variables that the spectral and
//! reliability methods require; [`fit`] infers vine structure and parameters
//! from data.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization and the command
//! line front end live in the companion `vinuq` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod fit;
pub mod linalg;
pub mod margins;
pub mod models;
pub mod moments;
pub mod paircop;
pub mod pce;
pub mod reliability;
pub mod rng;
pub mod special;
pub mod stats;
pub mod transform;
pub mod vine;

pub use error::{Error, Result};
