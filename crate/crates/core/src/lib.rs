//! Exact combinatorial models of curves, markings and subsurface projections
//! on punctured surfaces, together with the coarse-geometry machinery built
//! on top of them: curve-complex distances, the quasidistance formula,
//! consistency/realization, Sigma-hulls with retraction, product regions,
//! junctures, Dehn twist flats, and finite-scale jets.
//!
//! Everything is integer-exact: curves are normal coordinates on a fixed
//! ideal triangulation, intersection numbers come from a linked-pair count
//! on the dual graph, and all metrics are computed by explicit search.

pub mod campaign;
pub mod cells;
pub mod complexes;
pub mod consistency;
pub mod curves;
pub mod enumerate;
pub mod error;
pub mod farey;
pub mod hulls;
pub mod intersect;
pub mod jets;
pub mod marking;
pub mod quasidistance;
pub mod regions;
pub mod sampling;
pub mod schema;
pub mod subsurface;
pub mod surface;
pub mod twist;

pub use curves::{Curve, MultiCurve};
pub use error::Error;
pub use marking::{Marking, PartialMarking};
pub use subsurface::Subsurface;
pub use surface::Surface;

/// Shorthand used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
