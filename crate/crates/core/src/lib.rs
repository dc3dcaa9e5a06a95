//! Multiple chessboard complexes, θ-collapse maps and their degrees, and an
//! exact-rational search for colored Tverberg partitions of multisets.
//!
//! The crate is organised bottom-up:
//!
//! - [`simplicial`]: facet-presented abstract simplicial complexes.
//! - [`homology`]: reduced integral homology through Smith normal form.
//! - [`chessboard`]: the complexes `Δ^{K;L}_{m,n}`, pseudomanifold audits,
//!   orientations, the row action and fixed-point subcomplexes.
//! - [`maps`]: collapse maps, degrees, p-adic valuations and the mod-p
//!   obstruction report.
//! - [`geometry`]: exact point configurations, convex-hull intersection by a
//!   rational simplex method and the rainbow partition search.
//! - [`constraints`]: multisets, proper collections and unavoidable complexes.

pub mod chessboard;
pub mod constraints;
pub mod error;
pub mod geometry;
pub mod homology;
pub mod maps;
pub mod simplicial;

pub use error::{Error, Result};
