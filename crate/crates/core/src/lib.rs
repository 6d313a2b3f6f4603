//! Visibility polynomials of simple undirected graphs.
//!
//! A set `X` of vertices is a *mutual-visibility set* when every pair in
//! `X` is joined by a shortest path whose internal vertices avoid `X`. The
//! visibility polynomial counts these sets by size:
//! `V(G) = Σ r_i x^i`.
//!
//! The crate provides
//! - graph construction for the common families and their compositions
//!   ([`class`], [`graph`]),
//! - the mutual-visibility test and per-graph statistics ([`visibility`]),
//! - exhaustive and pruned enumeration ([`enumerate`]),
//! - closed forms and composition laws ([`closed_form`]),
//! - graph6 ingestion and batch grouping of polynomials ([`graph6`], [`batch`]).

pub mod analysis;
pub mod batch;
pub mod class;
pub mod closed_form;
pub mod distance;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod polynomial;
pub mod verify;
pub mod visibility;

/// Vertex sets are single machine words in the enumeration engines.
pub const MAX_ENUMERATION_ORDER: usize = 64;

pub use class::{build_class, ClassSpec};
pub use closed_form::{poly_for_class, poly_join, resolve_class, Route};
pub use distance::{all_pairs_distances, induced_diameter, Distance, DistanceMatrix};
pub use enumerate::{count_by_size_and_diameter, polynomial_bruteforce, polynomial_pruned};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use graph6::{encode_graph6, parse_graph6};
pub use polynomial::Polynomial;
pub use visibility::{compute_stats, is_mutual_visibility_set, VisStats, VisibilityTester};
