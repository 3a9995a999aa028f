//! Winding numbers and the weighted-enclosed-lattice-point sum (welp).
//!
//! The winding of a closed polygon `P` around a point `q` is the sum of the
//! discrete angle measure over the translated edges, `Dang(P - q)`. Summing
//! that winding over every lattice point gives the welp of the polygon:
//!
//! ```text
//! welp(P) = sum over lattice q of Dang(P - q)
//! ```
//!
//! The sum has finite support: every lattice point outside the smallest
//! centered box containing the vertices contributes 0 (tested, and visible
//! from the formula: beyond the box all translated vertices share the sign of
//! their first coordinate or wind back and forth with cancelling quarters).
//! So welp is *always computed by brute force over the box*. The central
//! identity of this crate, `welp_edge(u, v, box) = area_edge(u, v)`, is
//! verified edge by edge in the test suites; the implementation never
//! substitutes one side for the other.
//!
//! Everything here is a plain fold over box points in exact integer
//! arithmetic (quarter turns in `i64`, widened products in `i128`). The
//! per-point terms are independent, so a data-parallel split over `q` would
//! be sound; this implementation stays sequential because the largest boxes
//! in scope are tiny.

use crate::error::{Error, Result};
use crate::kernel::{point_on_lattice_segment, LatticeVec, Rat, Vec2};
use crate::measures::{ang, dang, dang_quarters, AngleTurns, ApproxTurns};
use crate::polygon::{IntegerPolygon, Polygon};

/// Centered square of lattice points `{-r..r}^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeBox {
    radius: i64,
}

impl LatticeBox {
    /// A box of the given radius. Negative radii are programming errors.
    pub fn new(radius: i64) -> LatticeBox {
        assert!(radius >= 0, "lattice box radius must be nonnegative");
        LatticeBox { radius }
    }

    /// The smallest centered box containing every vertex of `p`.
    pub fn covering(p: &IntegerPolygon) -> LatticeBox {
        LatticeBox::new(p.max_norm_radius())
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn contains(&self, q: LatticeVec) -> bool {
        q.max_norm() <= self.radius
    }

    pub fn point_count(&self) -> u64 {
        let side = (2 * self.radius + 1) as u64;
        side * side
    }

    /// Row-major scan of the box points.
    pub fn points(&self) -> impl Iterator<Item = LatticeVec> {
        let r = self.radius;
        (-r..=r).flat_map(move |y| (-r..=r).map(move |x| LatticeVec::new(x, y)))
    }

    fn check_vertex(&self, v: LatticeVec) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::OutOfBox { x: v.x.to_string(), y: v.y.to_string(), radius: self.radius })
        }
    }
}

/// Default welp box radius for a polygon: the maximum Chebyshev norm over
/// the vertices, rounded up to an integer for rational input.
pub fn default_box_radius(p: &Polygon) -> i64 {
    p.vertices()
        .iter()
        .map(|v| {
            let cx = v.x.abs().ceil().to_i64().expect("vertex magnitude exceeds i64");
            let cy = v.y.abs().ceil().to_i64().expect("vertex magnitude exceeds i64");
            cx.max(cy)
        })
        .max()
        .unwrap_or(0)
}

/// Exact winding of the closed polygon around `q`: `Dang(P - q)`.
///
/// `q` may be any rational point, on or off the curve. (On-curve values are
/// the half and quarter turns of the boundary; off-curve values are integers
/// for closed polygons.)
pub fn winding_dang(p: &Polygon, q: &Vec2) -> AngleTurns {
    p.edges().map(|(u, v)| dang(&(u - q), &(v - q))).sum()
}

/// Euclidean counterpart of [`winding_dang`], used only for cross-checks.
pub fn winding_ang(p: &Polygon, q: &Vec2) -> ApproxTurns {
    p.edges().map(|(u, v)| ang(&(u - q), &(v - q))).sum()
}

/// Integer fast path of [`winding_dang`], counting quarter turns.
pub(crate) fn winding_quarters(p: &IntegerPolygon, q: LatticeVec) -> i64 {
    p.edges().map(|(u, v)| dang_quarters(u - q, v - q)).sum()
}

/// [`winding_dang`] for lattice queries on lattice polygons. Same value,
/// integer arithmetic.
pub fn winding_dang_lattice(p: &IntegerPolygon, q: LatticeVec) -> AngleTurns {
    AngleTurns::from_quarters(winding_quarters(p, q))
}

fn welp_edge_quarters(u: LatticeVec, v: LatticeVec, b: &LatticeBox) -> i64 {
    b.points().map(|q| dang_quarters(u - q, v - q)).sum()
}

/// Brute-force welp contribution of one edge: the sum of `dang(u-q, v-q)`
/// over every lattice point `q` of the box. Errors if an endpoint is outside
/// the box (the finite-support argument needs the box to cover the edge).
pub fn welp_edge(u: LatticeVec, v: LatticeVec, b: &LatticeBox) -> Result<Rat> {
    b.check_vertex(u)?;
    b.check_vertex(v)?;
    Ok(Rat::from_quarters(welp_edge_quarters(u, v, b)))
}

/// Brute-force welp of a closed lattice polygon over the box.
///
/// Computed twice, in both summation orders -- point-major (winding per box
/// point) and edge-major (welp_edge per edge) -- and the two totals are
/// asserted equal. The box must contain every vertex.
pub fn welp(p: &IntegerPolygon, b: &LatticeBox) -> Result<Rat> {
    if !p.is_closed() {
        return Err(Error::NotClosed);
    }
    for &v in p.vertices() {
        b.check_vertex(v)?;
    }
    let point_major: i64 = b.points().map(|q| winding_quarters(p, q)).sum();
    let edge_major: i64 = p.edges().map(|(u, v)| welp_edge_quarters(u, v, b)).sum();
    assert_eq!(
        point_major, edge_major,
        "welp summation orders disagree; finite rearrangement of the same terms"
    );
    Ok(Rat::from_quarters(point_major))
}

/// Checks the cancellation that powers the welp-area identity: for an edge
/// `(u, v)` with `u.x != v.x`, the rectangle
/// `R = {min(u.x, v.x) .. max(u.x, v.x)} x {u.y + v.y - r .. r}`
/// is closed under the involution `q -> u + v - q`, paired points carry
/// opposite `dang` values, and the whole rectangle sums to zero.
///
/// Returns `true` when every pair cancels pointwise and the sum vanishes.
pub fn involution_cancellation_check(u: LatticeVec, v: LatticeVec, b: &LatticeBox) -> Result<bool> {
    if u.x == v.x {
        return Err(Error::DegenerateEdge);
    }
    b.check_vertex(u)?;
    b.check_vertex(v)?;
    let r = b.radius();
    let (x_lo, x_hi) = (u.x.min(v.x), u.x.max(v.x));
    let (y_lo, y_hi) = (u.y + v.y - r, r);

    let reflect = |q: LatticeVec| u + v - q;
    let mut sum = 0i64;
    for y in y_lo..=y_hi {
        for x in x_lo..=x_hi {
            let q = LatticeVec::new(x, y);
            let rq = reflect(q);
            debug_assert!(
                (x_lo..=x_hi).contains(&rq.x) && (y_lo..=y_hi).contains(&rq.y),
                "involution must map the rectangle to itself"
            );
            let here = dang_quarters(u - q, v - q);
            let there = dang_quarters(u - rq, v - rq);
            if here != -there {
                return Ok(false);
            }
            sum += here;
        }
    }
    Ok(sum == 0)
}

/// Where a lattice point sits relative to a simple closed curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    Exterior,
    Interior,
    /// On the open interior of edge `(p_i, p_{i+1})`; carries that `i`.
    OnEdge(usize),
    /// Equal to distinct vertex `p_i`; carries that `i`.
    AtVertex(usize),
}

/// Classification of a lattice point: its location and its exact winding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointClass {
    pub kind: PointKind,
    pub winding: Rat,
}

/// Validated classifier over a simple, positively oriented closed polygon.
///
/// Validation (closedness, simplicity, orientation) happens once in [`new`];
/// the per-point [`classify`] then only performs the membership tests and the
/// winding sum. Use this for sweeps; [`classify`] the free function is the
/// one-shot convenience.
///
/// [`new`]: Classifier::new
/// [`classify`]: Classifier::classify
pub struct Classifier<'a> {
    poly: &'a IntegerPolygon,
}

impl<'a> Classifier<'a> {
    pub fn new(poly: &'a IntegerPolygon) -> Result<Classifier<'a>> {
        if !poly.is_closed() {
            return Err(Error::NotClosed);
        }
        if !poly.is_simple()? {
            return Err(Error::NotSimple);
        }
        if !poly.is_positively_oriented() {
            return Err(Error::NotPositivelyOriented);
        }
        Ok(Classifier { poly })
    }

    pub fn polygon(&self) -> &IntegerPolygon {
        self.poly
    }

    /// Classifies `q`. Boundary membership is decided first by exact
    /// predicates; off-curve points must wind 0 (exterior) or 1 (interior).
    /// Any other off-curve winding would contradict the Jordan values for a
    /// simple curve and aborts loudly as an internal error.
    pub fn classify(&self, q: LatticeVec) -> Result<PointClass> {
        let winding = Rat::from_quarters(winding_quarters(self.poly, q));

        let pts = self.poly.distinct_vertices();
        if let Some(i) = pts.iter().position(|&p| p == q) {
            return Ok(PointClass { kind: PointKind::AtVertex(i), winding });
        }
        for (i, (u, v)) in self.poly.edges().enumerate() {
            if point_on_lattice_segment(q, u, v) {
                return Ok(PointClass { kind: PointKind::OnEdge(i), winding });
            }
        }

        if winding.is_zero() {
            Ok(PointClass { kind: PointKind::Exterior, winding })
        } else if winding == Rat::one() {
            Ok(PointClass { kind: PointKind::Interior, winding })
        } else {
            Err(Error::Internal(format!(
                "off-curve lattice point {q} has winding {winding}, expected 0 or 1 \
                 for a simple positively oriented polygon"
            )))
        }
    }
}

/// One-shot classification; validates the polygon on every call. For sweeps
/// construct a [`Classifier`] once instead.
pub fn classify(p: &IntegerPolygon, q: LatticeVec) -> Result<PointClass> {
    Classifier::new(p)?.classify(q)
}
