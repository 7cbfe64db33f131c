//! Exact rational 2D geometry kernel: predicates, visibility,
//! trapezoidations, bars, slabs and region-coverage decisions.

pub mod clip;
pub mod cover;
pub mod decomp;
pub mod point;
pub mod polygon;
pub mod slab;

pub use point::{line_through, on_segment, orientation, pt, ray, ray_through, seg, Line, Point, Ray, Segment, Vec2};
pub use polygon::{AxisRectangle, ConvexPolygon, GeomError, SimplePolygon};
pub use slab::{Slab, SlabDir};
