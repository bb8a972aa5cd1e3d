//! Sombor index of unicyclic graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] holds the small dense [`Graph`] type, the edge-list text
//!   format, unicyclic decomposition and exact canonical forms.
//! * [`sombor`] computes `SO(G) = Σ_{uv ∈ E} √(d(u)² + d(v)²)`, builds the
//!   candidate extremal graph `𝒢(N, k)` and checks the supporting
//!   inequalities.
//! * [`transforms`] implements the SO-increasing rewrites on unicyclic
//!   graphs together with a greedy ascent driver.
//! * [`enumeration`] generates every unicyclic graph on up to ten vertices
//!   and searches each class `𝒰(N, k)` for its maximisers.
//!
//! Numeric code is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below fix the `f64` instantiation that the search and rewrite layers use.

pub mod enumeration;
mod error;
pub mod graph;
mod scalar;
pub mod sombor;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::{CanonicalForm, Graph, NotUnicyclic, UnicyclicWitness};
pub use scalar::Scalar;
pub use sombor::{ExtremalParams, SomborValue};

/// Sombor value in binary64, the precision every tolerance is pinned to.
pub type So64 = SomborValue<f64>;
/// Sombor value in binary32.
pub type So32 = SomborValue<f32>;

/// Absolute tolerance for "equal Sombor index" claims.
pub const EQ_TOL: f64 = 1e-9;
/// Minimum delta accepted as a strict increase.
pub const STRICT_TOL: f64 = 1e-12;
