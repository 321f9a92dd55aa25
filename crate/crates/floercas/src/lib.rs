//! Exact computer algebra for the Floer and Fukaya-Floer cohomology of
//! `Σ_g × S¹`, and the Donaldson-series calculators built on them.
//!
//! Everything is computed over `Q(sqrt(-1))` with arbitrary-precision
//! rationals; there is no floating point anywhere.

pub mod check;
pub mod cli;
pub mod donaldson;
pub mod error;
pub mod exactalg;
pub mod floer;
pub mod fukaya;
pub mod groebner;
pub mod par;
pub mod poly;

pub use error::{Error, Result};
pub use exactalg::{GaussianRational, TruncatedSeries};
