//! Polygon constructors: fixed named examples and seeded random families.
//!
//! Everything here is a pure function of its arguments. The random families
//! consume a fixed, fully specified 64-bit stream (see [`crate::rng`]), so a
//! seed identifies one polygon on every platform, forever.
//!
//! [`random_simple_polygon`] draws distinct lattice points and orders them
//! counterclockwise around their centroid, which makes the result
//! star-shaped and therefore simple. Ordering uses the exact angular
//! comparator (half-plane split, then determinant sign); draws that would
//! make the order ambiguous (a point on the centroid, two points at the same
//! angle) or that produce a straight vertex (three consecutive collinear
//! vertices) are rejected and redrawn from the same stream. Straight vertices
//! are excluded so that every vertex of a generated polygon is a genuine
//! corner; the library itself handles straight vertices fine. The star
//! family does not sample uniformly from all simple polygons; it is a test
//! population, not a survey.

use crate::error::{Error, Result};
use crate::kernel::{det2, det2_lattice, LatticeVec, Rat, Vec2};
use crate::polygon::IntegerPolygon;
use crate::rng::{Seed, SplitMix64};
use num_integer::Integer;
use std::cmp::Ordering;

/// Axis-aligned rectangle `[0, a] x [0, b]`, counterclockwise.
pub fn rectangle(a: i64, b: i64) -> Result<IntegerPolygon> {
    if a < 1 || b < 1 {
        return Err(Error::NonPositiveSide { a, b });
    }
    IntegerPolygon::closed_from_points(&[(0, 0), (a, 0), (a, b), (0, b)])
}

/// The tilted square with corners on the axes at distance 3, area 18.
/// Its boundary passes through 12 lattice points and encloses 13.
pub fn oblique_square() -> IntegerPolygon {
    IntegerPolygon::closed_from_points(&[(3, 0), (0, 3), (-3, 0), (0, -3)])
        .expect("fixed vertex list is valid")
}

/// A closed but self-intersecting quadrilateral: two lobes of opposite
/// orientation whose signed areas cancel exactly.
pub fn figure_eight() -> IntegerPolygon {
    IntegerPolygon::closed_from_points(&[(1, 0), (4, 1), (0, 3), (3, 4)])
        .expect("fixed vertex list is valid")
}

/// True when `v` lies in the half-plane swept first when turning
/// counterclockwise from the positive x-axis: `y > 0`, or `y = 0, x > 0`.
fn first_half(v: LatticeVec) -> bool {
    v.y > 0 || (v.y == 0 && v.x > 0)
}

fn first_half_rational(v: &Vec2) -> bool {
    let sy = v.y.signum();
    sy > 0 || (sy == 0 && v.x.signum() > 0)
}

/// Exact counterclockwise order on nonzero lattice vectors, starting at the
/// direction of (1, 0): compare half-planes, then the determinant sign.
/// `Equal` means the vectors point the same way.
fn angular_cmp(a: LatticeVec, b: LatticeVec) -> Ordering {
    match (first_half(a), first_half(b)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        // det2(a, b) > 0 means b lies counterclockwise of a, so a comes first.
        _ => 0.cmp(&det2_lattice(a, b)),
    }
}

/// Rational twin of [`angular_cmp`], used to sort around a centroid.
fn angular_cmp_rational(a: &Vec2, b: &Vec2) -> Ordering {
    match (first_half_rational(a), first_half_rational(b)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => 0.cmp(&det2(a, b).signum()),
    }
}

/// Drops every point of the cyclic sequence at which the turn is degenerate
/// (the two incident segments are parallel), keeping actual corners. Each
/// point is judged against its original neighbours, which is sound here:
/// the inputs are star-shaped vertex lists, where removing a straight point
/// merges collinear segments without bending any kept corner straight.
fn collapse_straight(points: &[LatticeVec]) -> Vec<LatticeVec> {
    let n = points.len();
    (0..n)
        .filter(|&i| {
            let prev = points[(i + n - 1) % n];
            let next = points[(i + 1) % n];
            det2_lattice(points[i] - prev, next - points[i]) != 0
        })
        .map(|i| points[i])
        .collect()
}

/// The sunburst polygon of order `m`: the closed counterclockwise curve
/// through all primitive lattice vectors (gcd(|x|, |y|) = 1) of max-norm at
/// most `m`, with collinear runs merged into single edges.
///
/// Every primitive vector of the ball lies *on* the curve; the vertex list
/// keeps only the actual corners. For `m = 6` that is 64 corners out of 96
/// primitives (runs like (6,1), (5,1), (4,1), (3,1) are collinear). The
/// curve starts at (1, 0) whenever (1, 0) is a corner, which holds for all
/// `m >= 2`; for `m = 1` the corners are the four diagonal vectors and the
/// curve is the square `[-1, 1]^2` of area 4.
///
/// The result is simple and positively oriented: the corners are in strictly
/// increasing angular order around the origin, so the curve is star-shaped.
pub fn farey_sunburst(m: i64) -> Result<IntegerPolygon> {
    if m < 1 {
        return Err(Error::ParameterTooSmall { name: "m", min: 1, value: m });
    }
    let mut primitives: Vec<LatticeVec> = Vec::new();
    for x in -m..=m {
        for y in -m..=m {
            if x.unsigned_abs().gcd(&y.unsigned_abs()) == 1 {
                primitives.push(LatticeVec::new(x, y));
            }
        }
    }
    primitives.sort_by(|&a, &b| angular_cmp(a, b));
    debug_assert!(
        primitives.windows(2).all(|w| angular_cmp(w[0], w[1]) == Ordering::Less),
        "distinct primitive vectors occupy distinct rays"
    );
    let mut corners = collapse_straight(&primitives);
    corners.push(corners[0]);
    IntegerPolygon::new(corners)
}

/// Count of primitive lattice vectors with max-norm at most `m`; the number
/// of lattice points on the sunburst curve of order `m`. Exposed for
/// cross-checks.
pub fn primitive_count(m: i64) -> u64 {
    let mut count = 0;
    for x in -m..=m {
        for y in -m..=m {
            if x.unsigned_abs().gcd(&y.unsigned_abs()) == 1 {
                count += 1;
            }
        }
    }
    count
}

const RETRY_BUDGET: u32 = 256;

fn check_family_parameters(k: usize, k_min: usize, r: i64) -> Result<()> {
    if k < k_min {
        return Err(Error::ParameterTooSmall { name: "k", min: k_min as i64, value: k as i64 });
    }
    if r < 1 {
        return Err(Error::ParameterTooSmall { name: "r", min: 1, value: r });
    }
    Ok(())
}

/// Draws `k` distinct lattice points in `{-r..r}^2`, giving up on the current
/// attempt (returning `None`) if distinctness takes too many draws.
fn draw_distinct(rng: &mut SplitMix64, k: usize, r: i64) -> Option<Vec<LatticeVec>> {
    let mut points: Vec<LatticeVec> = Vec::with_capacity(k);
    let mut draws = 0usize;
    while points.len() < k {
        draws += 1;
        if draws > 64 * k {
            return None;
        }
        let x = rng.next_in_range(-r, r);
        let y = rng.next_in_range(-r, r);
        let p = LatticeVec::new(x, y);
        if !points.contains(&p) {
            points.push(p);
        }
    }
    Some(points)
}

/// Seeded star-shaped simple polygon: `k` distinct lattice points in
/// `{-r..r}^2`, ordered counterclockwise around their centroid.
///
/// Draws are rejected and retried (same stream, fixed budget of 256
/// attempts) when a point lands on the centroid, two points share an angle,
/// or three consecutive vertices are collinear. Accepted output is closed,
/// simple, positively oriented, and has `k` distinct vertices, all of them
/// corners; those facts are re-checked by the exact predicates before the
/// polygon is returned.
pub fn random_simple_polygon(seed: Seed, k: usize, r: i64) -> Result<IntegerPolygon> {
    check_family_parameters(k, 3, r)?;
    let mut rng = SplitMix64::new(seed);

    'attempt: for _ in 0..RETRY_BUDGET {
        let Some(points) = draw_distinct(&mut rng, k, r) else {
            continue 'attempt;
        };

        let sum = points.iter().fold((0i64, 0i64), |(sx, sy), p| (sx + p.x, sy + p.y));
        let centroid = Vec2::new(Rat::new(sum.0, k as i64), Rat::new(sum.1, k as i64));

        let mut spokes: Vec<(Vec2, LatticeVec)> = Vec::with_capacity(k);
        for &p in &points {
            let spoke = &p.to_vec2() - &centroid;
            if spoke.is_zero() {
                continue 'attempt;
            }
            spokes.push((spoke, p));
        }
        spokes.sort_by(|a, b| angular_cmp_rational(&a.0, &b.0));
        if spokes.windows(2).any(|w| angular_cmp_rational(&w[0].0, &w[1].0) == Ordering::Equal) {
            continue 'attempt;
        }

        let ordered: Vec<LatticeVec> = spokes.into_iter().map(|(_, p)| p).collect();
        for i in 0..k {
            let prev = ordered[(i + k - 1) % k];
            let next = ordered[(i + 1) % k];
            if det2_lattice(ordered[i] - prev, next - ordered[i]) == 0 {
                continue 'attempt;
            }
        }

        let mut vertices = ordered;
        vertices.push(vertices[0]);
        let polygon = IntegerPolygon::new(vertices)?;
        if polygon.is_simple()? && polygon.is_positively_oriented() {
            return Ok(polygon);
        }
    }
    Err(Error::ExhaustedRetries { attempts: RETRY_BUDGET })
}

/// Seeded closed polygon with no simplicity guarantee: `k` distinct lattice
/// points of `{-r..r}^2` in the order drawn, closed by repeating the first.
/// Self-intersections are expected and welcome; the closed-curve identities
/// hold regardless.
pub fn random_closed_polygon(seed: Seed, k: usize, r: i64) -> Result<IntegerPolygon> {
    check_family_parameters(k, 2, r)?;
    let mut rng = SplitMix64::new(seed);
    for _ in 0..RETRY_BUDGET {
        if let Some(mut points) = draw_distinct(&mut rng, k, r) {
            points.push(points[0]);
            return IntegerPolygon::new(points);
        }
    }
    Err(Error::ExhaustedRetries { attempts: RETRY_BUDGET })
}
