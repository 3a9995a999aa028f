//! Lattice point counts and the two area identities they feed.
//!
//! For any closed lattice polygon the signed area equals the welp, the
//! winding-weighted count of all lattice points (the *lemma*; no simplicity
//! assumption). For a simple, positively oriented lattice polygon the area
//! further satisfies
//!
//! ```text
//! area = interior + boundary / 2 - 1
//! ```
//!
//! (the *theorem*), where `interior` and `boundary` count the lattice points
//! strictly inside and on the curve. [`pick_report`] evaluates both sides of
//! both identities independently and reports whether they hold; it never
//! derives one side from the other.
//!
//! Boundary points are counted two ways and cross-asserted: by classifying
//! every point of the covering box, and by the per-edge divisor count
//! `gcd(|dx|, |dy|)` summed over edges.

use crate::error::{Error, Result};
use crate::kernel::Rat;
use crate::polygon::{IntegerPolygon, Polygon};
use crate::winding::{welp, Classifier, LatticeBox, PointKind};
use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// Number of lattice points strictly inside and on a simple closed curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeCount {
    pub interior: u64,
    pub boundary: u64,
}

/// Counts the lattice points on a simple closed lattice curve as the sum of
/// `gcd(|dx|, |dy|)` over its edges. Each edge covers that many lattice
/// points when its start is counted and its end is left to the next edge, so
/// the closed curve is covered exactly once.
pub fn boundary_count_gcd(p: &IntegerPolygon) -> Result<u64> {
    if !p.is_closed() {
        return Err(Error::NotClosed);
    }
    if !p.is_simple()? {
        return Err(Error::NotSimple);
    }
    Ok(p.edges()
        .map(|(u, v)| {
            let d = v - u;
            d.x.unsigned_abs().gcd(&d.y.unsigned_abs())
        })
        .sum())
}

/// Counts interior and boundary lattice points of a simple, positively
/// oriented closed polygon by classifying every point of its covering box.
///
/// The boundary total is asserted against [`boundary_count_gcd`]; the two
/// counts come from unrelated computations and must agree.
pub fn count_lattice_points(p: &IntegerPolygon) -> Result<LatticeCount> {
    let classifier = Classifier::new(p)?;
    let b = LatticeBox::covering(p);
    let mut interior = 0u64;
    let mut boundary = 0u64;
    for q in b.points() {
        match classifier.classify(q)?.kind {
            PointKind::Interior => interior += 1,
            PointKind::OnEdge(_) | PointKind::AtVertex(_) => boundary += 1,
            PointKind::Exterior => {}
        }
    }
    let by_gcd = boundary_count_gcd(p)?;
    assert_eq!(boundary, by_gcd, "classifier boundary sweep and per-edge gcd count disagree");
    Ok(LatticeCount { interior, boundary })
}

/// Sum of the winding numbers over the boundary lattice points of a simple,
/// positively oriented closed polygon. Edge-interior points contribute 1/2
/// and vertices contribute their turning fraction, so for a boundary of `J`
/// points the sum works out to `J/2 - 1`; this function computes it the slow
/// way, point by point.
pub fn boundary_angle_sum(p: &IntegerPolygon) -> Result<Rat> {
    let classifier = Classifier::new(p)?;
    let b = LatticeBox::covering(p);
    let mut sum = Rat::zero();
    for q in b.points() {
        let class = classifier.classify(q)?;
        match class.kind {
            PointKind::OnEdge(_) | PointKind::AtVertex(_) => sum += class.winding,
            PointKind::Interior | PointKind::Exterior => {}
        }
    }
    Ok(sum)
}

/// Whether the counting identity `area = interior + boundary/2 - 1` applies
/// and holds for a polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremStatus {
    /// Simple, positively oriented, and the identity holds.
    Holds,
    /// Simple and positively oriented but the identity fails. Never observed;
    /// reported rather than asserted so a failure would surface as data.
    Fails,
    /// The polygon is not simple or not positively oriented, so interior and
    /// boundary counts are not defined.
    NotApplicable,
}

/// Everything the area identities say about one polygon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PickReport {
    /// Signed area from the edge sum.
    pub area: Rat,
    /// Winding-weighted lattice count over the box, computed independently.
    pub welp: Rat,
    /// Interior lattice points; `None` when counting does not apply.
    pub interior: Option<u64>,
    /// Boundary lattice points; `None` when counting does not apply.
    pub boundary: Option<u64>,
    /// Whether `area == welp`. Holds for every closed lattice polygon.
    pub lemma_holds: bool,
    /// Status of `area == interior + boundary/2 - 1`.
    pub theorem: TheoremStatus,
    /// Radius of the box the welp was summed over.
    pub box_radius: i64,
}

/// Evaluates both area identities for a closed lattice polygon.
///
/// The welp box is the covering box, enlarged to `radius` when a larger one
/// is requested (a smaller request is ignored; the box must cover the
/// vertices). Both sides of each identity are computed independently.
pub fn pick_report(p: &IntegerPolygon, radius: Option<i64>) -> Result<PickReport> {
    if !p.is_closed() {
        return Err(Error::NotClosed);
    }
    let covering = LatticeBox::covering(p);
    let b = LatticeBox::new(covering.radius().max(radius.unwrap_or(0)));

    let area = p.area();
    let welp_value = welp(p, &b)?;
    let lemma_holds = area == welp_value;

    let countable = p.is_simple()? && p.is_positively_oriented();
    let (interior, boundary, theorem) = if countable {
        let count = count_lattice_points(p)?;
        let rhs = Rat::from(count.interior) + Rat::from(count.boundary) * Rat::half() - Rat::one();
        let status = if area == rhs { TheoremStatus::Holds } else { TheoremStatus::Fails };
        (Some(count.interior), Some(count.boundary), status)
    } else {
        (None, None, TheoremStatus::NotApplicable)
    };

    Ok(PickReport {
        area,
        welp: welp_value,
        interior,
        boundary,
        lemma_holds,
        theorem,
        box_radius: b.radius(),
    })
}

/// [`pick_report`] for rational input; the vertices must be integers.
pub fn pick_report_for(p: &Polygon, radius: Option<i64>) -> Result<PickReport> {
    pick_report(&p.to_integer()?, radius)
}
