//! Compiler and exact verification suite for convex-cover hardness
//! instances.
//!
//! The pipeline takes a Range-ETR-Inv formula, rewrites it into an
//! inequality-only form, compiles it into a polygon instance with marked
//! corners and marked rectangles (the restricted cover problem), optionally
//! transforms that into a plain minimum-convex-cover instance by attaching
//! spikes, generates witness triangle covers from satisfying assignments,
//! and checks every geometric property the construction relies on with
//! exact rational arithmetic.

pub mod corridor;
pub mod formula;
pub mod gadget;
pub mod layout;
pub mod model;
pub mod geom;
pub mod num;

pub use num::Q;
