//! Balanced incomplete block designs and the bigeodetic blocks built from them.
//!
//! The crate is organised around a small pipeline:
//!
//! * [`design`] holds the `(b, n, r, k, λ)` data model, exact verification,
//!   block-intersection statistics and cyclic difference-set development.
//! * [`catalog`] ships the hand-transcribed designs, the known biplane and
//!   triplane parameter lists, and JSON / plain-text design files.
//! * [`search`] is an exhaustive backtracking search for small designs.
//! * [`construct`] turns a design into its star graph `K_n*(r, k, λ)`: one hub
//!   per point, one clique per block, and a pendant edge from every block copy
//!   of a point to that point's hub.
//! * [`analysis`] computes distances, geodesic counts, diameter, vertex
//!   connectivity and `B(k, n, d)` class membership.
//! * [`numbertheory`] decides the Bruck-Ryser-Chowla condition, including a
//!   complete solver for ternary diagonal forms `ax² + by² + cz² = 0`.
//! * [`pattern`] cross-tabulates the biplane existence pattern against the
//!   BRC verdicts and the known biplanes.
//!
//! ```
//! use bigeodetic::{analysis, catalog, construct};
//!
//! let entry = catalog::get_design("fig4").unwrap();
//! let star = construct::star_construct(&entry.design).unwrap();
//! let report = analysis::classify(star.graph()).unwrap();
//! assert_eq!(report.class_membership, Some((4, 4, 4)));
//! ```

pub mod analysis;
pub mod catalog;
pub mod construct;
pub mod design;
pub mod graph;
pub mod numbertheory;
pub mod pattern;
pub mod search;

pub use analysis::{classify, GraphReport};
pub use construct::{star_construct, StarGraph, VertexLabel};
pub use design::{Design, DesignParams, IntersectionProfile, VerificationReport};
pub use graph::Graph;
pub use numbertheory::{brc_check, BrcVerdict};

/// Any error produced by the library, for callers that do not care which
/// stage failed.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Design(#[from] design::DesignError),
    #[error(transparent)]
    Catalog(#[from] catalog::CatalogError),
    #[error(transparent)]
    NumberTheory(#[from] numbertheory::NumberTheoryError),
    #[error(transparent)]
    Search(#[from] search::SearchError),
    #[error(transparent)]
    Construct(#[from] construct::ConstructError),
    #[error(transparent)]
    Graph(#[from] graph::GraphError),
    #[error(transparent)]
    Analysis(#[from] analysis::AnalysisError),
    #[error(transparent)]
    Pattern(#[from] pattern::PatternError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
