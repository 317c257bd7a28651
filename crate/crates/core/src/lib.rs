//! Exact combinatorial machinery for deciding whether a 2-dimensional
//! complex embeds in 3-space.
//!
//! The pipeline works entirely with exact arithmetic: the dual matroid of a
//! complex is read off its signed edge/face incidence matrix over GF(3),
//! split complexes normalise the local structure, graph realizations of the
//! dual matroid are searched for combinatorially, and embeddings are
//! certified by planar rotation systems built from mod-3 flow orientations.
//! A family of matroids with connectivity constraints provides arbitrarily
//! large minimal non-embeddable instances, and an integer-lattice module
//! covers matrices that represent matroids over the integers.

pub mod complex;
pub mod corpus;
pub mod cyclic;
pub mod embed;
pub mod error;
pub mod field;
pub mod graph;
pub mod intlin;
pub mod json;
pub mod matroid;
pub mod obstruction;
pub mod realize;
pub mod regular;
pub mod split;

pub use complex::{Complex2, HomologyReport, LinkGraph, LocalConnectivity};
pub use embed::{ConstraintSet, DualGraph, EmbedReport, RotationSystem, Verdict};
pub use error::Error;
pub use graph::Multigraph;
pub use matroid::{ConnectivityReport, GraphRealization, Matroid};
pub use obstruction::ConstrainedMatroid;
pub use regular::IntegerMatrix;
pub use split::SplitResult;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
