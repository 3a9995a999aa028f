//! Exact plane geometry over the rationals, built around one identity: the
//! signed area of any closed lattice polygon equals its welp, the sum of its
//! winding numbers over all lattice points. From that identity the classic
//! lattice point count `area = interior + boundary/2 - 1` follows for simple
//! positively oriented polygons, and this crate verifies every step of that
//! route by brute force, in exact arithmetic, with zero tolerance.
//!
//! The pieces:
//!
//! * [`kernel`]: arbitrary-precision rationals ([`Rat`]), plane vectors
//!   ([`Vec2`], [`LatticeVec`]), and the exact orientation and segment
//!   predicates.
//! * [`measures`]: the discrete angle measure [`dang`] (values in quarter
//!   turns, computed from two signs) and its floating-point euclidean
//!   counterpart [`ang`], plus the axiom checker that validates both.
//! * [`polygon`]: vertex chains, signed area via the per-edge trapezoid
//!   term [`area_edge`], exact simplicity and orientation tests.
//! * [`winding`]: winding numbers, the welp sum, and exact point
//!   classification (interior / exterior / edge / vertex).
//! * [`pick`]: interior and boundary lattice counts and [`PickReport`],
//!   which evaluates both sides of both area identities independently.
//! * [`hopf`]: turning angles, the turning number, and the secant
//!   identities.
//! * [`generators`]: named example polygons and seeded random families.
//! * [`format`]: the small JSON polygon document format.
//!
//! Everything is deterministic: no floating point in any decision (floats
//! appear only in explicitly approximate cross-checks), and the seeded
//! generators draw from a fixed named stream, so results are reproducible
//! across platforms.

pub mod error;
pub mod format;
pub mod generators;
pub mod hopf;
pub mod kernel;
pub mod measures;
pub mod pick;
pub mod polygon;
pub mod rng;
pub mod winding;

pub use error::{Error, Result};
pub use format::{parse_polygon, polygon_to_json};
pub use generators::{
    farey_sunburst, figure_eight, oblique_square, primitive_count, random_closed_polygon,
    random_simple_polygon, rectangle,
};
pub use hopf::{
    check_umlaufsatz, secant_square_identity, secant_triangle_identity, turning_angles,
    turning_angles_with, vertex_angle_consistency, TurningProfile,
};
pub use kernel::{
    det2, det2_lattice, dot2, dot2_lattice, orient, point_on_lattice_segment, point_on_segment,
    segments_intersect, LatticeVec, ParseRatError, Rat, Vec2,
};
pub use measures::{
    ang, axiom_samples, check_ang_axioms, check_angle_axioms, check_dang_axioms, dang,
    dang_lattice, AngleTurns, ApproxTurns, AxiomOutcome, AxiomReport, AxiomSample, Counterexample,
    DegenerateReason, DegenerateSample,
};
pub use pick::{
    boundary_angle_sum, boundary_count_gcd, count_lattice_points, pick_report, pick_report_for,
    LatticeCount, PickReport, TheoremStatus,
};
pub use polygon::{area_edge, IntegerPolygon, Polygon};
pub use rng::{Seed, SplitMix64};
pub use winding::{
    classify, default_box_radius, involution_cancellation_check, welp, welp_edge, winding_ang,
    winding_dang, winding_dang_lattice, Classifier, LatticeBox, PointClass, PointKind,
};
