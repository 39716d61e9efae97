//! Polar-Manhattan geometry on `(0, 2] × [0, 1]`.
//!
//! A segment between `(t1, φ1)` and `(t2, φ2)` with `t1 ≤ t2` first sweeps
//! the arc of radius `t1` from `φ1` to `φ2` (length `φ0 = t1·|φ2 − φ1|`),
//! then runs radially out along `φ2`.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::segment::Intersection;
use super::Point;

type Polar<'a> = (&'a BigRational, &'a BigRational);

pub(crate) fn distance((t1, p1): Polar<'_>, (t2, p2): Polar<'_>) -> BigRational {
    (t2 - t1).abs() + t1.min(t2) * (p2 - p1).abs()
}

/// The point at parameter `tau` of the segment from `inner` to `outer`.
pub(crate) fn eval((t1, p1): Polar<'_>, (_, p2): Polar<'_>, tau: &BigRational) -> (BigRational, BigRational) {
    let phi0 = t1 * (p2 - p1).abs();
    if tau < &phi0 {
        let phi = (tau * p2 + (&phi0 - tau) * p1) / &phi0;
        (t1.clone(), phi)
    } else {
        (tau - &phi0 + t1, p2.clone())
    }
}

pub(crate) fn param((t1, p1): Polar<'_>, (t2, p2): Polar<'_>, (t, phi): Polar<'_>) -> Option<BigRational> {
    let (lo, hi) = if p1 <= p2 { (p1, p2) } else { (p2, p1) };
    if t == t1 && lo <= phi && phi <= hi {
        return Some(t1 * (phi - p1).abs());
    }
    if phi == p2 && t1 <= t && t <= t2 {
        return Some(t1 * (p2 - p1).abs() + t - t1);
    }
    None
}

enum Leg {
    /// Arc at the start radius by the signed angle, then radially out.
    Out { t: BigRational, arc: BigRational },
    /// Radially in to `t`, then the arc by the signed angle.
    In { t: BigRational, arc: BigRational },
}

fn classify(t0: &BigRational, phi0: &BigRational, end: &Point) -> Leg {
    let Point::Polar { t, phi } = end else { unreachable!("x2 point") };
    let arc = phi - phi0;
    if t >= t0 {
        Leg::Out { t: t.clone(), arc }
    } else {
        Leg::In { t: t.clone(), arc }
    }
}

/// Both segments leave `x` and have positive length.
pub(crate) fn intersect(x: &Point, e1: &Point, e2: &Point) -> Intersection {
    let Point::Polar { t: t0, phi: phi0 } = x else { unreachable!("x2 point") };
    let at = |t: &BigRational, arc: &BigRational| Intersection::Segment { end: Point::polar(t.clone(), phi0 + arc) };
    let zero = BigRational::zero();
    let shorter = |a: &BigRational, b: &BigRational| if a.abs() <= b.abs() { a.clone() } else { b.clone() };
    let disjoint = Intersection::DisjointBeyond(x.clone());
    match (classify(t0, phi0, e1), classify(t0, phi0, e2)) {
        (Leg::Out { t: ta, arc: a }, Leg::Out { t: tb, arc: b }) => {
            if a.is_zero() && b.is_zero() {
                at(if ta <= tb { &ta } else { &tb }, &zero)
            } else if a.is_zero() || b.is_zero() || a.signum() != b.signum() {
                disjoint
            } else if a == b {
                at(if ta <= tb { &ta } else { &tb }, &a)
            } else {
                at(t0, &shorter(&a, &b))
            }
        }
        (Leg::In { t: ta, arc: a }, Leg::In { t: tb, arc: b }) => {
            if ta != tb {
                at(if ta >= tb { &ta } else { &tb }, &zero)
            } else if a.is_zero() || b.is_zero() || a.signum() != b.signum() {
                at(&ta, &zero)
            } else {
                at(&ta, &shorter(&a, &b))
            }
        }
        _ => disjoint,
    }
}
