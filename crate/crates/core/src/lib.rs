//! Packing and covering density pairs of convex disks.
//!
//! * [`geom`]: convex polygon kernel (areas, support functions, hexagons
//!   cut out by support lines).
//! * [`leaf`]: circle/hexagon hybrid disks, the arcs of density pairs they
//!   trace and the leaf region enclosed by those arcs.
//! * [`dowker`]: largest inscribed and smallest circumscribed hexagons of
//!   centrally symmetric polygons, giving exact lattice densities.
//! * [`regions`]: the pentagon `P`, the region `P0`, the octagon range `U`.
//! * [`sampler`]: seeded random centrally symmetric polygons and the density
//!   scatter.
//! * [`validate`]: the invariant suite behind `omega validate`.

pub mod dowker;
pub mod error;
pub mod geom;
pub mod leaf;
pub mod regions;
pub mod sampler;
pub mod validate;

pub use error::{Error, Result};
pub use geom::{ConvexPolygon, CsPolygon, Hexagon, Point};
pub use leaf::DensityPoint;
