//! Covering polygons with unit discs centered on an optimally placed
//! hexagonal lattice.
//!
//! The pipeline: pick the lattice orientation minimizing the expected number
//! of intersected cells ([`orientation`]), then the translation minimizing the
//! actual count ([`placement`]); or search orientation and translation jointly
//! ([`combined`]). Every result can be checked against closed-form bounds and
//! an exact coverage verifier ([`bounds`]).

pub mod bounds;
pub mod combined;
pub mod error;
pub mod geom;
pub mod io;
pub mod lattice;
pub mod orientation;
pub mod placement;

pub use error::{Error, Result};
pub use geom::{Angle, Circle, ConvexPolygon, Point2, Polygon, SimplePolygon};
pub use lattice::LatticeIndex;
