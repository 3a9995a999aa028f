//! Polygons as explicit vertex chains.
//!
//! A [`Polygon`] stores the full chain `p_0, ..., p_n` including the closing
//! vertex; nothing is implicit. `is_closed` is simply `p_n == p_0`, and the
//! parser/generators always materialize the closing copy. An
//! [`IntegerPolygon`] is the lattice-only view required by the counting
//! operations; it converts losslessly to a `Polygon`.
//!
//! The signed area is the sum of exact trapezoid areas
//! `area_edge(u, v) = (u.x - v.x) * (u.y + v.y) / 2` over the edges, i.e. the
//! shoelace formula arranged per edge. Positive area means counterclockwise.

use crate::error::{Error, Result};
use crate::kernel::{det2, dot2, point_on_segment, segments_intersect, LatticeVec, Rat, Vec2};

/// Signed area of the trapezoid between the segment `[u, v]` and the x-axis:
/// `(u.x - v.x) * (u.y + v.y) / 2`.
///
/// Summed over the edges of a closed polygon this is the signed polygon area.
pub fn area_edge(u: &Vec2, v: &Vec2) -> Rat {
    &(&(&u.x - &v.x) * &(&u.y + &v.y)) * &Rat::half()
}

/// Chain of vertices `p_0, ..., p_n` with rational coordinates, `n >= 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polygon {
    vertices: Vec<Vec2>,
}

impl Polygon {
    /// Builds a polygon from the explicit vertex chain. At least two entries
    /// are required (the degenerate closed polygon `(p, p)` is the minimum).
    pub fn new(vertices: Vec<Vec2>) -> Result<Polygon> {
        if vertices.len() < 2 {
            return Err(Error::TooFewVertices);
        }
        Ok(Polygon { vertices })
    }

    /// Convenience: integer vertices, closing copy appended if missing.
    /// A single point becomes the degenerate closed polygon `(p, p)`.
    pub fn closed_from_ints(points: &[(i64, i64)]) -> Result<Polygon> {
        let mut vertices: Vec<Vec2> = points.iter().map(|&(x, y)| Vec2::from_ints(x, y)).collect();
        match vertices.first() {
            Some(first) if vertices.len() == 1 || vertices.last() != Some(first) => {
                let first = first.clone();
                vertices.push(first);
            }
            _ => {}
        }
        Polygon::new(vertices)
    }

    /// The stored chain `p_0 ..= p_n`, closing vertex included.
    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    /// Number of edges, i.e. `n` for the chain `p_0 ..= p_n`.
    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Edges `(p_{i-1}, p_i)` in order.
    pub fn edges(&self) -> impl Iterator<Item = (&Vec2, &Vec2)> {
        self.vertices.windows(2).map(|w| (&w[0], &w[1]))
    }

    /// For a closed polygon, the vertices with the closing copy dropped.
    pub fn distinct_vertices(&self) -> &[Vec2] {
        debug_assert!(self.is_closed());
        &self.vertices[..self.vertices.len() - 1]
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    /// Exact signed area via trapezoid sums. Defined for open chains too
    /// (it is then the signed area under the partial path).
    pub fn area(&self) -> Rat {
        self.edges().map(|(u, v)| area_edge(u, v)).sum()
    }

    pub fn is_positively_oriented(&self) -> bool {
        self.area().signum() > 0
    }

    /// Index of the first zero-length edge, if any.
    pub fn zero_length_edge(&self) -> Option<usize> {
        self.edges().position(|(u, v)| u == v)
    }

    /// Exact simplicity test: true iff the closed curve is injective away
    /// from the deliberate `p_n = p_0` repeat. Requires a closed polygon.
    ///
    /// O(n^2) pairwise segment tests; no vertex may repeat, no vertex may sit
    /// inside another edge, non-adjacent edges must be disjoint, and at a
    /// shared vertex the two edges may touch only there (a collinear forward
    /// continuation is fine, doubling back is not). Zero-length edges make
    /// the polygon non-simple.
    pub fn is_simple(&self) -> Result<bool> {
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        if self.zero_length_edge().is_some() {
            return Ok(false);
        }
        let pts = self.distinct_vertices();
        let n = pts.len();
        // n == 1 is a single repeated vertex: caught by the zero-length test.
        debug_assert!(n >= 2);

        for i in 0..n {
            for j in i + 1..n {
                if pts[i] == pts[j] {
                    return Ok(false);
                }
            }
        }

        let edge = |k: usize| (&pts[k], &pts[(k + 1) % n]);
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = edge(i);
                let (c, d) = edge(j);
                let adjacent_forward = j == i + 1;
                let adjacent_wrap = i == 0 && j == n - 1;
                if adjacent_forward || adjacent_wrap {
                    // Shared vertex: b == c (forward) or d == a (wraparound).
                    // The edges overlap beyond it iff the three points are
                    // collinear with the middle directions opposed.
                    let (prev, mid, next) = if adjacent_forward { (a, b, d) } else { (c, d, b) };
                    let into = mid - prev;
                    let out = next - mid;
                    if det2(&into, &out).is_zero() && dot2(&into, &out).signum() < 0 {
                        return Ok(false);
                    }
                } else if segments_intersect(a, b, c, d) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The polygon translated by `-q`, i.e. `P - q` with every vertex shifted
    /// so that `q` becomes the origin.
    pub fn translated(&self, q: &Vec2) -> Polygon {
        Polygon { vertices: self.vertices.iter().map(|p| p - q).collect() }
    }

    /// The same chain walked backwards.
    pub fn reversed(&self) -> Polygon {
        Polygon { vertices: self.vertices.iter().rev().cloned().collect() }
    }

    /// Re-roots a closed polygon at distinct-vertex index `k` (cyclic
    /// rotation of the vertex cycle, same curve).
    pub fn rotated(&self, k: usize) -> Result<Polygon> {
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        let pts = self.distinct_vertices();
        let n = pts.len();
        let k = k % n;
        let mut vertices: Vec<Vec2> = Vec::with_capacity(n + 1);
        vertices.extend(pts[k..].iter().cloned());
        vertices.extend(pts[..k].iter().cloned());
        vertices.push(pts[k].clone());
        Ok(Polygon { vertices })
    }

    /// Returns the polygon with positive orientation, reversing if needed.
    /// Zero-area polygons have no orientation to normalize.
    pub fn normalize_positive(&self) -> Result<Polygon> {
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        match self.area().signum() {
            0 => Err(Error::ZeroArea),
            s if s > 0 => Ok(self.clone()),
            _ => Ok(self.reversed()),
        }
    }

    /// Lattice view of this polygon; fails unless every coordinate is an
    /// integer (in `i64` range).
    pub fn to_integer(&self) -> Result<IntegerPolygon> {
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for p in &self.vertices {
            match p.to_lattice() {
                Some(v) => vertices.push(v),
                None => return Err(Error::NonIntegerVertices),
            }
        }
        Ok(IntegerPolygon { vertices })
    }

    /// True iff `q` lies on some edge of the polygon.
    pub fn contains_on_boundary(&self, q: &Vec2) -> bool {
        self.edges().any(|(u, v)| point_on_segment(q, u, v))
    }
}

/// Polygon with all vertices on the integer lattice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerPolygon {
    vertices: Vec<LatticeVec>,
}

impl IntegerPolygon {
    pub fn new(vertices: Vec<LatticeVec>) -> Result<IntegerPolygon> {
        if vertices.len() < 2 {
            return Err(Error::TooFewVertices);
        }
        Ok(IntegerPolygon { vertices })
    }

    /// Vertices as coordinate pairs, closing copy appended if missing.
    /// A single point becomes the degenerate closed polygon `(p, p)`.
    pub fn closed_from_points(points: &[(i64, i64)]) -> Result<IntegerPolygon> {
        let mut vertices: Vec<LatticeVec> =
            points.iter().map(|&(x, y)| LatticeVec::new(x, y)).collect();
        match vertices.first() {
            Some(&first) if vertices.len() == 1 || vertices.last() != Some(&first) => {
                vertices.push(first)
            }
            _ => {}
        }
        IntegerPolygon::new(vertices)
    }

    pub fn vertices(&self) -> &[LatticeVec] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn edges(&self) -> impl Iterator<Item = (LatticeVec, LatticeVec)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn distinct_vertices(&self) -> &[LatticeVec] {
        debug_assert!(self.is_closed());
        &self.vertices[..self.vertices.len() - 1]
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    /// Exact signed area. Twice the area is accumulated in `i128` (lattice
    /// shoelace terms are integers), then halved exactly.
    pub fn area(&self) -> Rat {
        let twice: i128 = self
            .edges()
            .map(|(u, v)| (u.x as i128 - v.x as i128) * (u.y as i128 + v.y as i128))
            .sum();
        Rat::from(twice) * Rat::half()
    }

    pub fn is_positively_oriented(&self) -> bool {
        self.area().signum() > 0
    }

    pub fn is_simple(&self) -> Result<bool> {
        self.to_polygon().is_simple()
    }

    pub fn zero_length_edge(&self) -> Option<usize> {
        self.edges().position(|(u, v)| u == v)
    }

    /// Rational view; always succeeds.
    pub fn to_polygon(&self) -> Polygon {
        Polygon { vertices: self.vertices.iter().map(|v| v.to_vec2()).collect() }
    }

    pub fn translated(&self, q: LatticeVec) -> IntegerPolygon {
        IntegerPolygon { vertices: self.vertices.iter().map(|&p| p - q).collect() }
    }

    pub fn reversed(&self) -> IntegerPolygon {
        IntegerPolygon { vertices: self.vertices.iter().rev().copied().collect() }
    }

    pub fn normalize_positive(&self) -> Result<IntegerPolygon> {
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        match self.area().signum() {
            0 => Err(Error::ZeroArea),
            s if s > 0 => Ok(self.clone()),
            _ => Ok(self.reversed()),
        }
    }

    /// Radius of the smallest centered lattice box containing every vertex.
    pub fn max_norm_radius(&self) -> i64 {
        self.vertices.iter().map(|v| v.max_norm()).max().unwrap_or(0)
    }
}

impl TryFrom<&Polygon> for IntegerPolygon {
    type Error = Error;
    fn try_from(p: &Polygon) -> Result<IntegerPolygon> {
        p.to_integer()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closed(points: &[(i64, i64)]) -> Polygon {
        Polygon::closed_from_ints(points).unwrap()
    }

    fn unit_square() -> Polygon {
        closed(&[(0, 0), (1, 0), (1, 1), (0, 1)])
    }

    #[test]
    fn area_edge_pinned_values() {
        let e = |a: (i64, i64), b: (i64, i64)| {
            area_edge(&Vec2::from_ints(a.0, a.1), &Vec2::from_ints(b.0, b.1))
        };
        assert_eq!(e((3, 1), (1, 3)), Rat::int(4));
        assert_eq!(e((1, 1), (0, 1)), Rat::one());
        assert_eq!(e((0, 0), (1, 0)), Rat::zero());
        assert_eq!(e((1, 3), (3, 1)), Rat::int(-4), "reversal negates");
    }

    #[test]
    fn unit_square_has_area_one() {
        assert_eq!(unit_square().area(), Rat::one());
        assert_eq!(unit_square().reversed().area(), Rat::int(-1));
    }

    #[test]
    fn oblique_square_has_area_18() {
        let p = closed(&[(3, 0), (0, 3), (-3, 0), (0, -3)]);
        assert_eq!(p.area(), Rat::int(18));
    }

    #[test]
    fn open_chain_is_not_closed() {
        let p = Polygon::new(vec![
            Vec2::from_ints(1, 0),
            Vec2::from_ints(4, 1),
            Vec2::from_ints(0, 3),
            Vec2::from_ints(3, 4),
        ])
        .unwrap();
        assert!(!p.is_closed());
        assert!(matches!(p.is_simple(), Err(Error::NotClosed)));
        assert!(matches!(p.normalize_positive(), Err(Error::NotClosed)));
    }

    #[test]
    fn too_few_vertices_rejected() {
        assert!(matches!(Polygon::new(vec![Vec2::zero()]), Err(Error::TooFewVertices)));
    }

    #[test]
    fn figure_eight_is_closed_but_not_simple() {
        let p = closed(&[(1, 0), (4, 1), (0, 3), (3, 4)]);
        assert!(p.is_closed());
        assert!(!p.is_simple().unwrap());
    }

    #[test]
    fn collinear_pass_through_vertex_is_simple() {
        // (1,0) sits mid-edge between (0,0) and (2,0); the curve is still
        // injective, so this triangle with a flat vertex is simple.
        let p = closed(&[(0, 0), (1, 0), (2, 0), (0, 1)]);
        assert!(p.is_simple().unwrap());
    }

    #[test]
    fn backtracking_spike_is_not_simple() {
        let p = closed(&[(0, 0), (2, 0), (1, 0), (1, 2)]);
        assert!(!p.is_simple().unwrap());
    }

    #[test]
    fn repeated_vertex_is_not_simple() {
        let p = closed(&[(0, 0), (2, 0), (2, 2), (0, 0), (0, 2), (-1, 1)]);
        assert!(!p.is_simple().unwrap());
    }

    #[test]
    fn zero_length_edge_is_not_simple() {
        let p = closed(&[(0, 0), (1, 0), (1, 0), (1, 1)]);
        assert!(!p.is_simple().unwrap());
        let point = closed(&[(5, 5)]);
        assert!(point.is_closed());
        assert!(!point.is_simple().unwrap());
    }

    #[test]
    fn digon_is_not_simple() {
        let p = closed(&[(0, 0), (3, 1)]);
        assert!(!p.is_simple().unwrap());
    }

    #[test]
    fn vertex_touching_edge_is_not_simple() {
        // Vertex (1,1) of the second lobe lies in the interior of the edge
        // from (2,0) to (0,2).
        let p = closed(&[(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)]);
        // Edge (2,0)->(1,1) and (1,1)->(2,2) meet edge... construct explicit:
        // the non-adjacent edge test must catch [0,0]->[2,0] touching nothing,
        // but [(2,2),(0,2)] and [(2,0),(1,1)] are disjoint. Use a sharper case:
        let q = closed(&[(0, 0), (4, 0), (4, 4), (2, 0), (0, 4)]);
        // (2,0) lies inside edge [(0,0),(4,0)].
        assert!(!q.is_simple().unwrap());
        // p above is a genuinely simple "dart"; sanity check it stays simple.
        assert!(p.is_simple().unwrap());
    }

    #[test]
    fn translation_subtracts_q() {
        let p = unit_square().translated(&Vec2::from_ints(1, 1));
        let expect = closed(&[(-1, -1), (0, -1), (0, 0), (-1, 0)]);
        assert_eq!(p, expect);
    }

    #[test]
    fn rotation_keeps_curve_and_area() {
        let p = closed(&[(0, 0), (3, 0), (3, 2), (0, 2)]);
        for k in 0..4 {
            let r = p.rotated(k).unwrap();
            assert!(r.is_closed());
            assert_eq!(r.area(), p.area());
            assert!(r.is_simple().unwrap());
        }
        let r1 = p.rotated(1).unwrap();
        assert_eq!(r1.vertices()[0], Vec2::from_ints(3, 0));
        assert_eq!(r1.vertices()[4], Vec2::from_ints(3, 0));
    }

    #[test]
    fn normalize_positive_flips_clockwise_input() {
        let cw = unit_square().reversed();
        assert!(cw.area().signum() < 0);
        let ccw = cw.normalize_positive().unwrap();
        assert_eq!(ccw.area(), Rat::one());
        // Already-positive input is returned unchanged.
        assert_eq!(ccw.normalize_positive().unwrap(), ccw);
    }

    #[test]
    fn normalize_positive_rejects_zero_area() {
        let flat = closed(&[(0, 0), (1, 0), (0, 0)]);
        assert!(matches!(flat.normalize_positive(), Err(Error::ZeroArea)));
    }

    #[test]
    fn integer_view_roundtrip_and_rejection() {
        let p = unit_square();
        let ip = p.to_integer().unwrap();
        assert_eq!(ip.to_polygon(), p);
        assert_eq!(ip.area(), p.area());

        let mut vs = p.vertices().to_vec();
        vs[1] = Vec2::new(Rat::half(), Rat::zero());
        let rational = Polygon::new(vs).unwrap();
        assert!(matches!(rational.to_integer(), Err(Error::NonIntegerVertices)));
    }

    #[test]
    fn integer_area_matches_rational_area() {
        let p = IntegerPolygon::closed_from_points(&[(3, 0), (0, 3), (-3, 0), (0, -3)]).unwrap();
        assert_eq!(p.area(), Rat::int(18));
        assert_eq!(p.area(), p.to_polygon().area());
        assert_eq!(p.max_norm_radius(), 3);
    }

    #[test]
    fn half_integrality_of_integer_polygon_area() {
        let p = IntegerPolygon::closed_from_points(&[(0, 0), (2, 1), (1, 3)]).unwrap();
        let doubled = p.area() * Rat::int(2);
        assert!(doubled.is_integer());
    }
}
