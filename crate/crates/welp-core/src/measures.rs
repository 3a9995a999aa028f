//! Angle measures on pairs of plane vectors.
//!
//! An angle measure assigns to vectors `u`, `v` the fraction of a full turn
//! needed to rotate `u` onto `v`. Two measures live here:
//!
//! * [`dang`], the discrete measure. It counts signed crossings of the
//!   vertical axis: a segment of directions passing from the right half-plane
//!   to the left above the origin contributes +1/2, ending on the axis
//!   contributes a quarter, and so on. Its values are the quarter-turn
//!   multiples {0, ±1/4, ±1/2}, computed exactly from two signs. Summed
//!   around a closed polygon it produces exact winding numbers.
//! * [`ang`], the euclidean measure `theta / 2pi` with `theta` the usual
//!   signed angle in `]-pi, pi[`. It is evaluated in floating point and only
//!   ever used to cross-check the exact results.
//!
//! Both follow the same convention at the boundary of their domain: opposite
//! (antiparallel) directions and zero vectors measure 0, not 1/2. For `ang`
//! that case is decided by exact sign tests *before* any floating-point
//! evaluation, so `ang((1,0), (-10^9, -1))` is a small negative number while
//! `ang((1,0), (-10^9, 0))` is exactly 0.
//!
//! [`check_angle_axioms`] runs any measure through the four defining axioms
//! (positive scaling, symmetry, addition along segments, normalization) on a
//! caller-supplied sample set.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub};

use crate::kernel::{det2, det2_lattice, dot2, point_on_segment, LatticeVec, Rat, Vec2};
use crate::rng::{Seed, SplitMix64};

/// Exact angle expressed in turns (1 turn = 360 degrees).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AngleTurns(Rat);

impl AngleTurns {
    pub fn zero() -> AngleTurns {
        AngleTurns(Rat::zero())
    }

    pub fn from_quarters(q: i64) -> AngleTurns {
        AngleTurns(Rat::from_quarters(q))
    }

    pub fn from_turns(turns: Rat) -> AngleTurns {
        AngleTurns(turns)
    }

    pub fn turns(&self) -> &Rat {
        &self.0
    }

    pub fn into_turns(self) -> Rat {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for AngleTurns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for AngleTurns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} turns", self.0)
    }
}

impl Add for AngleTurns {
    type Output = AngleTurns;
    fn add(self, rhs: AngleTurns) -> AngleTurns {
        AngleTurns(self.0 + rhs.0)
    }
}

impl AddAssign for AngleTurns {
    fn add_assign(&mut self, rhs: AngleTurns) {
        self.0 += rhs.0;
    }
}

impl Neg for AngleTurns {
    type Output = AngleTurns;
    fn neg(self) -> AngleTurns {
        AngleTurns(-self.0)
    }
}

impl Sub for AngleTurns {
    type Output = AngleTurns;
    fn sub(self, rhs: AngleTurns) -> AngleTurns {
        AngleTurns(self.0 - rhs.0)
    }
}

impl Sum for AngleTurns {
    fn sum<I: Iterator<Item = AngleTurns>>(iter: I) -> AngleTurns {
        iter.fold(AngleTurns::zero(), |acc, x| acc + x)
    }
}

impl serde::Serialize for AngleTurns {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> serde::Deserialize<'de> for AngleTurns {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<AngleTurns, D::Error> {
        Rat::deserialize(deserializer).map(AngleTurns)
    }
}

/// Approximate angle in turns, from the floating-point euclidean measure.
#[derive(Clone, Copy, PartialEq, PartialOrd, Debug)]
pub struct ApproxTurns(pub f64);

impl ApproxTurns {
    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for ApproxTurns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for ApproxTurns {
    type Output = ApproxTurns;
    fn add(self, rhs: ApproxTurns) -> ApproxTurns {
        ApproxTurns(self.0 + rhs.0)
    }
}

impl Neg for ApproxTurns {
    type Output = ApproxTurns;
    fn neg(self) -> ApproxTurns {
        ApproxTurns(-self.0)
    }
}

impl Sum for ApproxTurns {
    fn sum<I: Iterator<Item = ApproxTurns>>(iter: I) -> ApproxTurns {
        iter.fold(ApproxTurns(0.0), |acc, x| acc + x)
    }
}

/// Discrete angle measure: `1/4 * |sign(u.x) - sign(v.x)| * sign(det2(u, v))`.
///
/// Zero vectors are fine; they land in the `det2 = 0` case and measure 0.
pub fn dang(u: &Vec2, v: &Vec2) -> AngleTurns {
    let axis_crossings = (u.x.signum() - v.x.signum()).abs() as i64;
    let turn_sign = det2(u, v).signum() as i64;
    AngleTurns::from_quarters(axis_crossings * turn_sign)
}

/// [`dang`] restricted to lattice vectors, counted in quarter turns.
///
/// This is the same formula evaluated in integer arithmetic; the brute-force
/// lattice sums run on it. Unit tests pin its agreement with [`dang`].
pub(crate) fn dang_quarters(u: LatticeVec, v: LatticeVec) -> i64 {
    let axis_crossings = (u.x.signum() - v.x.signum()).abs();
    let turn_sign = det2_lattice(u, v).signum() as i64;
    axis_crossings * turn_sign
}

/// [`dang`] on lattice vectors.
pub fn dang_lattice(u: LatticeVec, v: LatticeVec) -> AngleTurns {
    AngleTurns::from_quarters(dang_quarters(u, v))
}

/// Euclidean angle measure in turns: `atan2(det2(u,v), dot2(u,v)) / 2pi`,
/// giving a value in `]-1/2, 1/2[`.
///
/// By convention antiparallel pairs and zero vectors measure 0 (the
/// "democratic" choice: neither +1/2 nor -1/2 wins). That case is detected
/// with exact sign predicates, never by comparing floats.
pub fn ang(u: &Vec2, v: &Vec2) -> ApproxTurns {
    if u.is_zero() || v.is_zero() {
        return ApproxTurns(0.0);
    }
    let det = det2(u, v);
    let dot = dot2(u, v);
    if det.is_zero() && dot.signum() < 0 {
        return ApproxTurns(0.0);
    }
    let theta = det.to_f64().atan2(dot.to_f64());
    ApproxTurns(theta / std::f64::consts::TAU)
}

/// One input for the axiom harness: the vector pair `(u, v)`, a point `s`
/// that should lie on the segment `[u, v]`, and a scaling factor `lambda`.
#[derive(Clone, Debug)]
pub struct AxiomSample {
    pub u: Vec2,
    pub v: Vec2,
    pub s: Vec2,
    pub lambda: Rat,
}

/// Why a sample was rejected instead of checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegenerateReason {
    /// The scaling factor is zero or negative; the scaling axiom only speaks
    /// about positive factors.
    NonPositiveLambda,
    /// `s` is not on the segment `[u, v]`, so the addition axiom does not
    /// apply to this triple.
    MidpointOffSegment,
    /// The origin lies on `[u, v]`; the addition axiom is restricted to
    /// segments avoiding the origin because measures with the democratic
    /// antiparallel convention genuinely fail additivity across it.
    OriginOnSegment,
}

impl fmt::Display for DegenerateReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            DegenerateReason::NonPositiveLambda => "scaling factor is not positive",
            DegenerateReason::MidpointOffSegment => "s does not lie on [u, v]",
            DegenerateReason::OriginOnSegment => "origin lies on [u, v]",
        };
        f.write_str(text)
    }
}

/// A sample that violated its own precondition, reported rather than skipped.
#[derive(Clone, Debug, serde::Serialize)]
pub struct DegenerateSample {
    pub index: usize,
    pub reason: DegenerateReason,
}

/// First counterexample found for one axiom.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Counterexample {
    /// Index into the sample slice, or `None` for the normalization axiom,
    /// which tests the fixed pair (e1, e2).
    pub sample: Option<usize>,
    pub detail: String,
}

/// Outcome of one axiom over the whole sample set.
#[derive(Clone, Debug, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomOutcome {
    Pass,
    Fail(Counterexample),
}

impl AxiomOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomOutcome::Pass)
    }
}

impl fmt::Display for AxiomOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomOutcome::Pass => f.write_str("pass"),
            AxiomOutcome::Fail(c) => match c.sample {
                Some(i) => write!(f, "fail at sample {}: {}", i, c.detail),
                None => write!(f, "fail: {}", c.detail),
            },
        }
    }
}

/// Result of running a measure through the four angle-measure axioms.
#[derive(Clone, Debug, serde::Serialize)]
pub struct AxiomReport {
    pub scaling: AxiomOutcome,
    pub symmetry: AxiomOutcome,
    pub addition: AxiomOutcome,
    pub normalization: AxiomOutcome,
    pub degenerate: Vec<DegenerateSample>,
    pub samples_checked: usize,
}

impl AxiomReport {
    /// All four axioms hold and no sample was degenerate.
    pub fn all_pass(&self) -> bool {
        self.scaling.passed()
            && self.symmetry.passed()
            && self.addition.passed()
            && self.normalization.passed()
            && self.degenerate.is_empty()
    }
}

/// Runs the measure `mu` through the four axioms of an angle measure:
///
/// 1. positive scaling: `mu(u, v) = mu(lambda u, v) = mu(u, lambda v)`;
/// 2. symmetry: `mu(v, u) = -mu(u, v)` and `mu(-u, -v) = mu(u, v)`;
/// 3. addition: `mu(u, v) = mu(u, s) + mu(s, v)` for `s` on `[u, v]`,
///    where `[u, v]` avoids the origin;
/// 4. normalization: `mu(e1, e2) = quarter_turn`.
///
/// The measure is a plain function so exact and approximate measures share
/// this harness; `eq` decides value equality (exact comparison for [`dang`],
/// a tolerance for [`ang`]) and `quarter_turn` is the expected normalization
/// value in the measure's own value type.
///
/// Samples violating their own preconditions are recorded in
/// `report.degenerate` and excluded from the axiom verdicts; they still make
/// [`AxiomReport::all_pass`] false so bad sample sets cannot vacuously pass.
pub fn check_angle_axioms<T, M, E>(
    mu: M,
    quarter_turn: T,
    eq: E,
    samples: &[AxiomSample],
) -> AxiomReport
where
    T: Clone + fmt::Display + Add<Output = T> + Neg<Output = T>,
    M: Fn(&Vec2, &Vec2) -> T,
    E: Fn(&T, &T) -> bool,
{
    let mut scaling = AxiomOutcome::Pass;
    let mut symmetry = AxiomOutcome::Pass;
    let mut addition = AxiomOutcome::Pass;
    let mut degenerate = Vec::new();
    let mut checked = 0usize;

    let origin = Vec2::zero();
    for (index, sample) in samples.iter().enumerate() {
        let AxiomSample { u, v, s, lambda } = sample;

        let reason = if lambda.signum() <= 0 {
            Some(DegenerateReason::NonPositiveLambda)
        } else if !point_on_segment(s, u, v) {
            Some(DegenerateReason::MidpointOffSegment)
        } else if point_on_segment(&origin, u, v) {
            Some(DegenerateReason::OriginOnSegment)
        } else {
            None
        };
        if let Some(reason) = reason {
            degenerate.push(DegenerateSample { index, reason });
            continue;
        }
        checked += 1;

        let base = mu(u, v);

        if scaling.passed() {
            let su = Vec2::new(lambda * &u.x, lambda * &u.y);
            let sv = Vec2::new(lambda * &v.x, lambda * &v.y);
            let left = mu(&su, v);
            let right = mu(u, &sv);
            if !eq(&base, &left) || !eq(&base, &right) {
                scaling = AxiomOutcome::Fail(Counterexample {
                    sample: Some(index),
                    detail: format!(
                        "mu(u,v) = {base}, mu({lambda}*u, v) = {left}, mu(u, {lambda}*v) = {right}"
                    ),
                });
            }
        }

        if symmetry.passed() {
            let swapped = mu(v, u);
            let negated = mu(&-u, &-v);
            if !eq(&swapped, &(-base.clone())) || !eq(&negated, &base) {
                symmetry = AxiomOutcome::Fail(Counterexample {
                    sample: Some(index),
                    detail: format!("mu(u,v) = {base}, mu(v,u) = {swapped}, mu(-u,-v) = {negated}"),
                });
            }
        }

        if addition.passed() {
            let first = mu(u, s);
            let second = mu(s, v);
            let total = first.clone() + second.clone();
            if !eq(&base, &total) {
                addition = AxiomOutcome::Fail(Counterexample {
                    sample: Some(index),
                    detail: format!("mu(u,v) = {base} but mu(u,s) + mu(s,v) = {first} + {second}"),
                });
            }
        }
    }

    let e1 = Vec2::from_ints(1, 0);
    let e2 = Vec2::from_ints(0, 1);
    let measured = mu(&e1, &e2);
    let normalization = if eq(&measured, &quarter_turn) {
        AxiomOutcome::Pass
    } else {
        AxiomOutcome::Fail(Counterexample {
            sample: None,
            detail: format!("mu(e1, e2) = {measured}, expected {quarter_turn}"),
        })
    };

    AxiomReport { scaling, symmetry, addition, normalization, degenerate, samples_checked: checked }
}

/// [`check_angle_axioms`] for [`dang`] with exact equality.
pub fn check_dang_axioms(samples: &[AxiomSample]) -> AxiomReport {
    check_angle_axioms(dang, AngleTurns::from_quarters(1), |a, b| a == b, samples)
}

/// [`check_angle_axioms`] for [`ang`] with absolute tolerance `tol`.
pub fn check_ang_axioms(samples: &[AxiomSample], tol: f64) -> AxiomReport {
    check_angle_axioms(
        ang,
        ApproxTurns(0.25),
        move |a: &ApproxTurns, b: &ApproxTurns| (a.0 - b.0).abs() <= tol,
        samples,
    )
}

/// Deterministic sample set for the axiom harness.
///
/// Lattice pairs `u, v` are drawn from `{-9..9}^2` and redrawn while the
/// segment `[u, v]` passes through the origin (so every emitted sample meets
/// the addition-axiom precondition). `s` is a rational point of `[u, v]` and
/// `lambda` a positive rational with numerator and denominator up to 9.
pub fn axiom_samples(seed: Seed, count: usize) -> Vec<AxiomSample> {
    let mut rng = SplitMix64::new(seed);
    let mut samples = Vec::with_capacity(count);
    let origin = Vec2::zero();
    while samples.len() < count {
        let u = Vec2::from_ints(rng.next_in_range(-9, 9), rng.next_in_range(-9, 9));
        let v = Vec2::from_ints(rng.next_in_range(-9, 9), rng.next_in_range(-9, 9));
        if point_on_segment(&origin, &u, &v) {
            continue;
        }
        // s = u + t(v - u) for rational t in [0, 1].
        let den = rng.next_in_range(1, 8);
        let num = rng.next_in_range(0, den);
        let t = Rat::new(num, den);
        let d = &v - &u;
        let s = Vec2::new(&u.x + &(&t * &d.x), &u.y + &(&t * &d.y));
        let lambda = Rat::new(rng.next_in_range(1, 9), rng.next_in_range(1, 9));
        samples.push(AxiomSample { u, v, s, lambda });
    }
    samples
}
