//! The circle of length `3a`, points represented in `[0, 3a)`.

use crate::group::GroupElement;

fn wrap(period: &GroupElement, v: GroupElement) -> GroupElement {
    if v.is_negative() {
        &v + period
    } else if &v >= period {
        &v - period
    } else {
        v
    }
}

pub(crate) fn distance(period: &GroupElement, a: &GroupElement, b: &GroupElement) -> GroupElement {
    let d = (a - b).abs();
    let around = period - &d;
    if around < d {
        around
    } else {
        d
    }
}

/// Whether the short way from `a` to `b` runs in the increasing direction.
/// The two ways never tie, since `3a/2` is not a group element.
pub(crate) fn goes_up(period: &GroupElement, a: &GroupElement, b: &GroupElement) -> bool {
    let forward = wrap(period, b - a);
    &forward.double() < period
}

pub(crate) fn step(period: &GroupElement, a: &GroupElement, up: bool, t: &GroupElement) -> GroupElement {
    wrap(period, if up { a + t } else { a - t })
}

pub(crate) fn param(period: &GroupElement, a: &GroupElement, up: bool, v: &GroupElement) -> GroupElement {
    wrap(period, if up { v - a } else { a - v })
}
