//! Exact arithmetic kernel: rational scalars, plane vectors, and the
//! incidence predicates everything else is decided by.

mod predicates;
mod rat;
mod vec;

pub use predicates::{orient, point_on_lattice_segment, point_on_segment, segments_intersect};
pub use rat::{ParseRatError, Rat};
pub use vec::{det2, det2_lattice, dot2, dot2_lattice, LatticeVec, Vec2};
