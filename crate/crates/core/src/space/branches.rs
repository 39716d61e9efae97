//! The three-branch space: points `(x, i)` with `0 ≤ 2x < λ0`.

use crate::group::GroupElement;

use super::segment::{Intersection, NoMaxSet};
use super::Point;

pub(crate) fn distance(lambda0: &GroupElement, (x, i): (&GroupElement, u8), (y, j): (&GroupElement, u8)) -> GroupElement {
    if i == j {
        (x - y).abs()
    } else {
        &(lambda0 - x) - y
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum BranchPath {
    /// Within one branch, towards larger `x` when `up`.
    Along { up: bool },
    /// Up the start branch to the missing midpoint, then down the end branch.
    Across,
}

impl BranchPath {
    pub(crate) fn reversed(&self) -> BranchPath {
        match self {
            BranchPath::Along { up } => BranchPath::Along { up: !up },
            BranchPath::Across => BranchPath::Across,
        }
    }
}

pub(crate) fn geodesic((x, i): (&GroupElement, u8), (y, j): (&GroupElement, u8)) -> BranchPath {
    if i == j {
        BranchPath::Along { up: y >= x }
    } else {
        BranchPath::Across
    }
}

pub(crate) fn eval(
    lambda0: &GroupElement,
    path: &BranchPath,
    (x, i): (&GroupElement, u8),
    j: u8,
    t: &GroupElement,
) -> (GroupElement, u8) {
    match path {
        BranchPath::Along { up: true } => (x + t, i),
        BranchPath::Along { up: false } => (x - t, i),
        BranchPath::Across => {
            let s = x + t;
            if &s.double() < lambda0 {
                (s, i)
            } else {
                debug_assert!(&s.double() != lambda0, "λ0 is not divisible by 2");
                (lambda0 - &s, j)
            }
        }
    }
}

pub(crate) fn param_of(
    path: &BranchPath,
    (x, i): (&GroupElement, u8),
    (y, j): (&GroupElement, u8),
    length: &GroupElement,
    (u, k): (&GroupElement, u8),
) -> Option<GroupElement> {
    match path {
        BranchPath::Along { up } if k == i => Some(if *up { u - x } else { x - u }),
        BranchPath::Along { .. } => None,
        BranchPath::Across if k == i && u >= x => Some(u - x),
        BranchPath::Across if k == j && u >= y => Some(length - &(u - y)),
        BranchPath::Across => None,
    }
}

enum Leg {
    Down(GroupElement),
    Up(GroupElement),
    Across(u8, GroupElement),
}

fn classify(x: &GroupElement, i: u8, end: &Point) -> Leg {
    let Point::Branch { x: y, branch: k } = end else { unreachable!("x1 point") };
    if *k != i {
        Leg::Across(*k, y.clone())
    } else if y < x {
        Leg::Down(y.clone())
    } else {
        Leg::Up(y.clone())
    }
}

/// Both segments leave `x` and have positive length.
pub(crate) fn intersect(lambda0: &GroupElement, x: &Point, e1: &Point, e2: &Point) -> Intersection {
    let Point::Branch { x: x0, branch: i } = x else { unreachable!("x1 point") };
    let i = *i;
    let on = |y: &GroupElement, b: u8| Intersection::Segment { end: Point::branch(y.clone(), b) };
    match (classify(x0, i, e1), classify(x0, i, e2)) {
        (Leg::Down(a), Leg::Down(b)) => on(if a >= b { &a } else { &b }, i),
        (Leg::Up(a), Leg::Up(b)) => on(if a <= b { &a } else { &b }, i),
        (Leg::Up(a), Leg::Across(..)) | (Leg::Across(..), Leg::Up(a)) => on(&a, i),
        (Leg::Across(j, a), Leg::Across(k, b)) if j == k => on(if a >= b { &a } else { &b }, j),
        (Leg::Across(..), Leg::Across(..)) => Intersection::NoMax(NoMaxSet {
            lambda0: lambda0.clone(),
            branch: i,
            floor: x0.clone(),
        }),
        _ => Intersection::DisjointBeyond(x.clone()),
    }
}
