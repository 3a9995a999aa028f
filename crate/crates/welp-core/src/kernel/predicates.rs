//! Exact incidence predicates on closed segments.
//!
//! Everything here is decided by signs of exact rational (or widened integer)
//! expressions; there are no tolerances. Segments are closed: endpoints count
//! as part of the segment, and two segments that merely touch, or overlap
//! collinearly, do intersect.

use super::rat::Rat;
use super::vec::{det2, det2_lattice, LatticeVec, Vec2};

/// Sign of the turn a->b->c: +1 left (counterclockwise), -1 right, 0 collinear.
pub fn orient(a: &Vec2, b: &Vec2, c: &Vec2) -> i32 {
    det2(&(b - a), &(c - a)).signum()
}

/// True iff `q` lies on the closed segment `[u, v]`. Degenerate segments are
/// allowed: `[u, u]` contains exactly `u`.
pub fn point_on_segment(q: &Vec2, u: &Vec2, v: &Vec2) -> bool {
    if !det2(&(v - u), &(q - u)).is_zero() {
        return false;
    }
    within(&u.x, &q.x, &v.x) && within(&u.y, &q.y, &v.y)
}

fn within(a: &Rat, m: &Rat, b: &Rat) -> bool {
    (a <= m && m <= b) || (b <= m && m <= a)
}

/// Integer fast path of [`point_on_segment`]; agrees with it exactly on
/// lattice inputs.
pub fn point_on_lattice_segment(q: LatticeVec, u: LatticeVec, v: LatticeVec) -> bool {
    if det2_lattice(v - u, q - u) != 0 {
        return false;
    }
    within_i64(u.x, q.x, v.x) && within_i64(u.y, q.y, v.y)
}

fn within_i64(a: i64, m: i64, b: i64) -> bool {
    (a <= m && m <= b) || (b <= m && m <= a)
}

/// True iff the closed segments `[a, b]` and `[c, d]` share at least one
/// point. Handles all degeneracies: shared endpoints, collinear overlap,
/// zero-length segments.
pub fn segments_intersect(a: &Vec2, b: &Vec2, c: &Vec2, d: &Vec2) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);

    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && point_on_segment(a, c, d))
        || (d2 == 0 && point_on_segment(b, c, d))
        || (d3 == 0 && point_on_segment(c, a, b))
        || (d4 == 0 && point_on_segment(d, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: i64, y: i64) -> Vec2 {
        Vec2::from_ints(x, y)
    }

    #[test]
    fn point_on_segment_basics() {
        assert!(point_on_segment(&v(1, 1), &v(0, 0), &v(2, 2)));
        assert!(point_on_segment(&v(0, 0), &v(0, 0), &v(2, 2)), "endpoints included");
        assert!(point_on_segment(&v(2, 2), &v(0, 0), &v(2, 2)));
        assert!(!point_on_segment(&v(3, 3), &v(0, 0), &v(2, 2)), "collinear but outside");
        assert!(!point_on_segment(&v(1, 2), &v(0, 0), &v(2, 2)));
        assert!(point_on_segment(&v(1, 1), &v(1, 1), &v(1, 1)), "degenerate segment");
        assert!(!point_on_segment(&v(1, 2), &v(1, 1), &v(1, 1)));
    }

    #[test]
    fn point_on_segment_rational_midpoint() {
        let q = Vec2::new(Rat::half(), Rat::half());
        assert!(point_on_segment(&q, &v(0, 0), &v(1, 1)));
        assert!(!point_on_segment(&q, &v(0, 0), &v(1, 2)));
    }

    #[test]
    fn proper_crossing() {
        assert!(segments_intersect(&v(0, 0), &v(2, 2), &v(0, 2), &v(2, 0)));
        assert!(!segments_intersect(&v(0, 0), &v(1, 1), &v(3, 0), &v(3, 5)));
    }

    #[test]
    fn touching_counts_as_intersecting() {
        // Shared endpoint.
        assert!(segments_intersect(&v(0, 0), &v(2, 0), &v(2, 0), &v(3, 4)));
        // Endpoint in the interior of the other segment.
        assert!(segments_intersect(&v(0, 0), &v(4, 0), &v(2, 0), &v(2, 3)));
        // Collinear overlap.
        assert!(segments_intersect(&v(0, 0), &v(3, 0), &v(2, 0), &v(5, 0)));
        // Collinear, disjoint.
        assert!(!segments_intersect(&v(0, 0), &v(1, 0), &v(2, 0), &v(5, 0)));
    }

    #[test]
    fn parallel_segments_do_not_intersect() {
        assert!(!segments_intersect(&v(0, 0), &v(4, 0), &v(0, 1), &v(4, 1)));
    }

    #[test]
    fn lattice_fast_path_matches_rational_predicate() {
        let pts = [-3i64, -1, 0, 2, 5];
        for &ux in &pts {
            for &uy in &pts {
                for &vx in &pts {
                    for &vy in &pts {
                        for &qx in &pts {
                            for &qy in &pts {
                                let (u, vv, q) = (
                                    LatticeVec::new(ux, uy),
                                    LatticeVec::new(vx, vy),
                                    LatticeVec::new(qx, qy),
                                );
                                assert_eq!(
                                    point_on_lattice_segment(q, u, vv),
                                    point_on_segment(&q.to_vec2(), &u.to_vec2(), &vv.to_vec2()),
                                    "disagreement at q={q:?} u={u:?} v={vv:?}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}
