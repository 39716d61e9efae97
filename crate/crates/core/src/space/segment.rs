//! Segment maps: isometric embeddings `[0, D] → X` with closed-form
//! evaluation, inversion and intersection.

use crate::group::{GroupElement, GroupError};

use super::branches::{self, BranchPath};
use super::tree::TreePiece;
use super::{circle, grid, polar, Kind, Point, Space, SpaceError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Path {
    /// Interval: `start ± t`.
    Line { up: bool },
    /// Circle: `start ± t` modulo `3a`.
    Circle { up: bool },
    Tree(Vec<TreePiece>),
    Branch(BranchPath),
    /// Polar-Manhattan: the two-piece map runs from the endpoint with the
    /// smaller radius; `inner_first` says whether that endpoint is `start`.
    Polar { inner_first: bool },
    /// Axis-parallel polyline through the listed corners, `start` first.
    Staircase(Vec<(GroupElement, GroupElement)>),
}

/// A parametrized segment with domain `[0, length]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentMap {
    space: Space,
    start: Point,
    end: Point,
    length: GroupElement,
    path: Path,
}

/// The set `{(u, branch) : u ≥ floor, 2u < λ0}`: an increasing union of
/// segments with no last point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoMaxSet {
    pub lambda0: GroupElement,
    pub branch: u8,
    pub floor: GroupElement,
}

impl NoMaxSet {
    /// `depth` points of the set, strictly increasing along the branch.
    pub fn chain(&self, depth: usize) -> Result<Vec<Point>, GroupError> {
        Ok(self
            .lambda0
            .half_chain(Some(&self.floor), depth)?
            .into_iter()
            .map(|x| Point::Branch { x, branch: self.branch })
            .collect())
    }
}

/// Shape of `s1 ∩ s2` for two segments leaving the same point `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Intersection {
    /// The segment `[x, end]`, `end ≠ x`.
    Segment { end: Point },
    /// Only the common endpoint: `s1 ∩ s2 = {x}`.
    DisjointBeyond(Point),
    /// No last point, so not a segment.
    NoMax(NoMaxSet),
    /// Several components, given as closed parameter ranges along `s1`.
    Scattered { ranges: Vec<(GroupElement, GroupElement)> },
}

impl Intersection {
    pub fn is_segment(&self) -> bool {
        matches!(self, Intersection::Segment { .. } | Intersection::DisjointBeyond(_))
    }

    /// The far end of the intersection when it is a segment.
    pub fn segment_end(&self) -> Option<&Point> {
        match self {
            Intersection::Segment { end } | Intersection::DisjointBeyond(end) => Some(end),
            _ => None,
        }
    }
}

impl SegmentMap {
    pub(crate) fn geodesic(space: &Space, p: &Point, q: &Point) -> SegmentMap {
        let path = match (&space.0.kind, p, q) {
            (Kind::Interval { .. }, Point::Value(a), Point::Value(b)) => Path::Line { up: b >= a },
            (Kind::X3 { period, .. }, Point::Value(a), Point::Value(b)) => {
                Path::Circle { up: circle::goes_up(period, a, b) }
            }
            (Kind::Tree(tree), Point::Tree(a), Point::Tree(b)) => Path::Tree(tree.geodesic(a, b)),
            (Kind::X1 { .. }, Point::Branch { x, branch: i }, Point::Branch { x: y, branch: j }) => {
                Path::Branch(branches::geodesic((x, *i), (y, *j)))
            }
            (Kind::X2, Point::Polar { t: t1, .. }, Point::Polar { t: t2, .. }) => {
                Path::Polar { inner_first: t1 <= t2 }
            }
            (Kind::L1Grid { .. }, Point::Grid { u: u1, w: w1 }, Point::Grid { u: u2, w: w2 }) => {
                Path::Staircase(grid::staircase((u1, w1), (u2, w2)))
            }
            _ => unreachable!("points validated against the space"),
        };
        SegmentMap {
            space: space.clone(),
            start: p.clone(),
            end: q.clone(),
            length: space.distance_unchecked(p, q),
            path,
        }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn start(&self) -> &Point {
        &self.start
    }

    pub fn end(&self) -> &Point {
        &self.end
    }

    /// `D = d(start, end)`.
    pub fn length(&self) -> &GroupElement {
        &self.length
    }

    fn in_domain(&self, t: &GroupElement) -> bool {
        t.group() == self.length.group() && !t.is_negative() && t <= &self.length
    }

    /// The point at parameter `t ∈ [0, D]`.
    pub fn eval(&self, t: &GroupElement) -> Result<Point, SpaceError> {
        if !self.in_domain(t) {
            return Err(SpaceError::OutOfRange { t: t.to_string(), length: self.length.to_string() });
        }
        Ok(self.eval_unchecked(t))
    }

    fn eval_unchecked(&self, t: &GroupElement) -> Point {
        match (&self.space.0.kind, &self.path, &self.start, &self.end) {
            (Kind::Interval { .. }, Path::Line { up }, Point::Value(a), _) => {
                Point::Value(if *up { a + t } else { a - t })
            }
            (Kind::X3 { period, .. }, Path::Circle { up }, Point::Value(a), _) => {
                Point::Value(circle::step(period, a, *up, t))
            }
            (Kind::Tree(tree), Path::Tree(pieces), _, _) => {
                if pieces.is_empty() {
                    self.start.clone()
                } else {
                    Point::Tree(tree.eval(pieces, t))
                }
            }
            (Kind::X1 { lambda0 }, Path::Branch(path), Point::Branch { x, branch: i }, Point::Branch { branch: j, .. }) => {
                let (x, b) = branches::eval(lambda0, path, (x, *i), *j, t);
                Point::Branch { x, branch: b }
            }
            (Kind::X2, Path::Polar { inner_first }, Point::Polar { t: t1, phi: p1 }, Point::Polar { t: t2, phi: p2 }) => {
                let tau = t.as_rational().expect("x2 parameters are rational");
                let (t, phi) = if *inner_first {
                    polar::eval((t1, p1), (t2, p2), tau)
                } else {
                    let d = self.length.as_rational().expect("rational");
                    polar::eval((t2, p2), (t1, p1), &(d - tau))
                };
                Point::Polar { t, phi }
            }
            (Kind::L1Grid { .. }, Path::Staircase(corners), _, _) => {
                let (u, w) = grid::eval(corners, t);
                Point::Grid { u, w }
            }
            _ => unreachable!("segment path matches its space"),
        }
    }

    /// The parameter `t` with `eval(t) = p`, found by inverting the
    /// closed-form pieces; `None` when `p` is not on the segment.
    pub fn param_of(&self, p: &Point) -> Option<GroupElement> {
        if !self.space.contains_point(p) {
            return None;
        }
        let zero = GroupElement::zero(self.space.group());
        let t = match (&self.space.0.kind, &self.path, &self.start, &self.end, p) {
            (Kind::Interval { .. }, Path::Line { up }, Point::Value(a), _, Point::Value(v)) => {
                let t = if *up { v - a } else { a - v };
                Some(t)
            }
            (Kind::X3 { period, .. }, Path::Circle { up }, Point::Value(a), _, Point::Value(v)) => {
                Some(circle::param(period, a, *up, v))
            }
            (Kind::Tree(tree), Path::Tree(pieces), _, _, Point::Tree(tp)) => {
                if pieces.is_empty() {
                    (p == &self.start).then_some(zero)
                } else {
                    tree.param_of(pieces, tp)
                }
            }
            (
                Kind::X1 { .. },
                Path::Branch(path),
                Point::Branch { x, branch: i },
                Point::Branch { x: y, branch: j },
                Point::Branch { x: u, branch: k },
            ) => branches::param_of(path, (x, *i), (y, *j), &self.length, (u, *k)),
            (
                Kind::X2,
                Path::Polar { inner_first },
                Point::Polar { t: t1, phi: p1 },
                Point::Polar { t: t2, phi: p2 },
                Point::Polar { t, phi },
            ) => {
                let tau = if *inner_first {
                    polar::param((t1, p1), (t2, p2), (t, phi))
                } else {
                    polar::param((t2, p2), (t1, p1), (t, phi))
                        .map(|tau| self.length.as_rational().expect("rational") - tau)
                };
                tau.map(GroupElement::from_rational)
            }
            (Kind::L1Grid { .. }, Path::Staircase(corners), _, _, Point::Grid { u, w }) => {
                grid::param(corners, (u, w))
            }
            _ => None,
        }?;
        self.in_domain(&t).then_some(t)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.param_of(p).is_some()
    }

    /// The same segment traversed from `end` to `start`.
    pub fn reverse(&self) -> SegmentMap {
        let path = match &self.path {
            Path::Line { up } => Path::Line { up: !up },
            Path::Circle { up } => Path::Circle { up: !up },
            Path::Tree(pieces) => Path::Tree(super::Tree::reverse(pieces)),
            Path::Branch(b) => Path::Branch(b.reversed()),
            Path::Polar { inner_first } => Path::Polar { inner_first: !inner_first },
            Path::Staircase(corners) => Path::Staircase(corners.iter().rev().cloned().collect()),
        };
        SegmentMap {
            space: self.space.clone(),
            start: self.end.clone(),
            end: self.start.clone(),
            length: self.length.clone(),
            path,
        }
    }

    /// `self` followed by `next`, if the concatenation is again a segment,
    /// i.e. iff `d(start, next.end) = D1 + D2`.
    pub fn concat(&self, next: &SegmentMap) -> Result<Option<SegmentMap>, SpaceError> {
        if self.space != next.space {
            return Err(SpaceError::Precondition("segments live in different spaces".into()));
        }
        if self.end != next.start {
            return Err(SpaceError::Precondition(format!(
                "endpoint mismatch: {} ≠ {}",
                self.space.format_point(&self.end),
                self.space.format_point(&next.start)
            )));
        }
        let total = &self.length + &next.length;
        if self.space.distance_unchecked(&self.start, &next.end) != total {
            return Ok(None);
        }
        Ok(Some(match (&self.path, &next.path) {
            (Path::Staircase(a), Path::Staircase(b)) => SegmentMap {
                space: self.space.clone(),
                start: self.start.clone(),
                end: next.end.clone(),
                length: total,
                path: Path::Staircase(grid::join(a, b)),
            },
            // Uniquely geodesic: the isometric union is the geodesic.
            _ => SegmentMap::geodesic(&self.space, &self.start, &next.end),
        }))
    }

    /// This segment traversed from `x`, which must be one of its endpoints.
    pub fn oriented_from(&self, x: &Point) -> Option<SegmentMap> {
        if &self.start == x {
            Some(self.clone())
        } else if &self.end == x {
            Some(self.reverse())
        } else {
            None
        }
    }

    /// Decides the shape of `self ∩ other` where `x` is an endpoint of both.
    pub fn intersect_at_common_endpoint(&self, other: &SegmentMap, x: &Point) -> Result<Intersection, SpaceError> {
        if self.space != other.space {
            return Err(SpaceError::Precondition("segments live in different spaces".into()));
        }
        let (Some(s1), Some(s2)) = (self.oriented_from(x), other.oriented_from(x)) else {
            return Err(SpaceError::Precondition(format!(
                "{} is not a common endpoint",
                self.space.format_point(x)
            )));
        };
        let disjoint = Intersection::DisjointBeyond(x.clone());
        if s1.length.is_zero() || s2.length.is_zero() {
            return Ok(disjoint);
        }
        Ok(match (&self.space.0.kind, &s1.path, &s2.path) {
            (Kind::Interval { .. }, Path::Line { up: a }, Path::Line { up: b })
            | (Kind::X3 { .. }, Path::Circle { up: a }, Path::Circle { up: b }) => {
                // Arcs of a circle are shorter than half of it, so arcs leaving
                // in opposite directions cannot meet again.
                if a == b {
                    let shorter = if s1.length <= s2.length { &s1 } else { &s2 };
                    Intersection::Segment { end: shorter.end.clone() }
                } else {
                    disjoint
                }
            }
            (Kind::Tree(tree), Path::Tree(a), Path::Tree(b)) => {
                let overlap = tree.common_prefix(a, b);
                if overlap.is_zero() {
                    disjoint
                } else {
                    Intersection::Segment { end: s1.eval_unchecked(&overlap) }
                }
            }
            (Kind::X1 { lambda0 }, Path::Branch(_), Path::Branch(_)) => {
                branches::intersect(lambda0, x, &s1.end, &s2.end)
            }
            (Kind::X2, Path::Polar { .. }, Path::Polar { .. }) => polar::intersect(x, &s1.end, &s2.end),
            (Kind::L1Grid { .. }, Path::Staircase(a), Path::Staircase(b)) => {
                let ranges = grid::intersect(a, b);
                match ranges.as_slice() {
                    [(lo, hi)] if lo.is_zero() && hi.is_zero() => disjoint,
                    [(lo, hi)] if lo.is_zero() => Intersection::Segment { end: s1.eval_unchecked(hi) },
                    _ => Intersection::Scattered { ranges },
                }
            }
            _ => unreachable!("segment paths match their space"),
        })
    }
}
