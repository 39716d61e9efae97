//! Concrete Λ-metric spaces with closed-form distances and geodesics.
//!
//! | kind       | points                         | distance                          |
//! |------------|--------------------------------|-----------------------------------|
//! | `interval` | `v ∈ [a, b]`                   | `|v − w|`                         |
//! | `tree`     | vertex or `(edge, offset)`     | path metric                       |
//! | `x1`       | `(x, i)`, `0 ≤ 2x < λ0`, i∈1..3 | `|x − y|` or `λ0 − x − y`         |
//! | `x2`       | `(t, φ) ∈ (0,2] × [0,1]` over ℚ | `|t2 − t1| + min(t1,t2)·|φ2 − φ1|` |
//! | `x3`       | `v ∈ [0, 3a)`                  | shortest way round a circle of length `3a` |
//! | `l1grid`   | `(u, w) ∈ [0, side]²`          | `|Δu| + |Δw|`                     |
//!
//! `l1grid` is the one space that is not uniquely geodesic; it exists as a
//! negative fixture for the checkers.

mod branches;
mod circle;
mod grid;
mod literal;
mod polar;
mod segment;
mod tree;

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{derive_rng, ElementSampler, GroupElement, GroupError, GroupId, HalfMax, ParseError, SampleRng};

pub use segment::{Intersection, NoMaxSet, SegmentMap};
pub use tree::{Edge, Tree, TreePoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("point {0} does not belong to this space")]
    ForeignPoint(String),
    #[error("invalid space parameter: {0}")]
    InvalidParameter(String),
    #[error("parameter {t} outside segment domain [0, {length}]")]
    OutOfRange { t: String, length: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

impl From<ParseError> for SpaceError {
    fn from(e: ParseError) -> Self {
        SpaceError::Group(GroupError::Parse(e))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceKind {
    Interval,
    Tree,
    X1,
    X2,
    X3,
    L1Grid,
}

impl SpaceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SpaceKind::Interval => "interval",
            SpaceKind::Tree => "tree",
            SpaceKind::X1 => "x1",
            SpaceKind::X2 => "x2",
            SpaceKind::X3 => "x3",
            SpaceKind::L1Grid => "l1grid",
        }
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A point of one of the built-in spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    /// Interval value or canonical circle representative.
    Value(GroupElement),
    Tree(TreePoint),
    /// `(x, i)` on branch `i ∈ {1, 2, 3}` of the three-branch space.
    Branch { x: GroupElement, branch: u8 },
    /// Polar pair `(t, φ)`.
    Polar { t: BigRational, phi: BigRational },
    /// `(u, w)` in the ℓ1 square.
    Grid { u: GroupElement, w: GroupElement },
}

impl Point {
    pub fn branch(x: GroupElement, branch: u8) -> Point {
        Point::Branch { x, branch }
    }

    pub fn polar(t: BigRational, phi: BigRational) -> Point {
        Point::Polar { t, phi }
    }
}

#[derive(Debug, PartialEq, Eq)]
enum Kind {
    Interval { lo: GroupElement, hi: GroupElement },
    Tree(Tree),
    X1 { lambda0: GroupElement },
    X2,
    X3 { a: GroupElement, period: GroupElement },
    L1Grid { side: GroupElement },
}

#[derive(Debug, PartialEq, Eq)]
struct SpaceData {
    group: GroupId,
    kind: Kind,
}

/// A built-in Λ-metric space. Cloning is cheap; the data is shared.
#[derive(Clone, Debug)]
pub struct Space(Arc<SpaceData>);

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Space {}

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

impl Space {
    fn new(group: GroupId, kind: Kind) -> Space {
        Space(Arc::new(SpaceData { group, kind }))
    }

    /// The closed Λ-interval `[lo, hi]`.
    pub fn interval(lo: GroupElement, hi: GroupElement) -> Result<Space, SpaceError> {
        if lo.group() != hi.group() {
            return Err(GroupError::Mixed(lo.group(), hi.group()).into());
        }
        if lo > hi {
            return Err(SpaceError::InvalidParameter(format!("interval needs a ≤ b, got {lo}..{hi}")));
        }
        Ok(Space::new(lo.group(), Kind::Interval { lo, hi }))
    }

    pub fn tree(tree: Tree) -> Space {
        Space::new(tree.group(), Kind::Tree(tree))
    }

    /// Three copies of `I = {t : 0 ≤ 2t ≤ λ0}` glued along a missing branch point.
    pub fn x1(lambda0: GroupElement) -> Result<Space, SpaceError> {
        let group = lambda0.group();
        match lambda0.max_half() {
            Ok(HalfMax::None) => {}
            Ok(HalfMax::Max(m)) => {
                return Err(SpaceError::InvalidParameter(format!(
                    "x1 requires a λ0 with no half-maximum, but {{t : 0 ≤ 2t ≤ {lambda0}}} has maximum {m} in {group}"
                )))
            }
            Err(_) => {
                return Err(SpaceError::InvalidParameter(format!("x1 requires λ0 > 0, got {lambda0}")))
            }
        }
        let zero = GroupElement::zero(group);
        let positive = lambda0.half_chain(Some(&zero), 1)?;
        debug_assert!(positive[0].is_positive());
        Ok(Space::new(group, Kind::X1 { lambda0 }))
    }

    /// Polar-Manhattan space on `(0, 2] × [0, 1]`; needs an ordered field.
    pub fn x2(group: GroupId) -> Result<Space, SpaceError> {
        if !group.is_field() {
            return Err(SpaceError::InvalidParameter(format!(
                "x2 requires an ordered field (its segment maps divide), {group} is not one"
            )));
        }
        Ok(Space::new(group, Kind::X2))
    }

    /// The circle `[0, 3a]/(0 ∼ 3a)` with `a` not divisible by 2.
    pub fn x3(a: GroupElement) -> Result<Space, SpaceError> {
        if !a.is_positive() {
            return Err(SpaceError::InvalidParameter(format!("x3 requires a > 0, got {a}")));
        }
        if let Some(h) = a.try_halve() {
            return Err(SpaceError::InvalidParameter(format!(
                "x3 requires an a not divisible by 2, but {a} = 2·{h}"
            )));
        }
        let period = a.mul_int(&3.into());
        Ok(Space::new(a.group(), Kind::X3 { a, period }))
    }

    pub fn l1grid(side: GroupElement) -> Result<Space, SpaceError> {
        if side.is_negative() {
            return Err(SpaceError::InvalidParameter(format!("l1grid side must be ≥ 0, got {side}")));
        }
        Ok(Space::new(side.group(), Kind::L1Grid { side }))
    }

    pub fn group(&self) -> GroupId {
        self.0.group
    }

    pub fn kind(&self) -> SpaceKind {
        match &self.0.kind {
            Kind::Interval { .. } => SpaceKind::Interval,
            Kind::Tree(_) => SpaceKind::Tree,
            Kind::X1 { .. } => SpaceKind::X1,
            Kind::X2 => SpaceKind::X2,
            Kind::X3 { .. } => SpaceKind::X3,
            Kind::L1Grid { .. } => SpaceKind::L1Grid,
        }
    }

    pub fn as_tree(&self) -> Option<&Tree> {
        match &self.0.kind {
            Kind::Tree(t) => Some(t),
            _ => None,
        }
    }

    /// `λ0` of the three-branch space.
    pub fn lambda0(&self) -> Option<&GroupElement> {
        match &self.0.kind {
            Kind::X1 { lambda0 } => Some(lambda0),
            _ => None,
        }
    }

    /// `a` of the circle space.
    pub fn circle_unit(&self) -> Option<&GroupElement> {
        match &self.0.kind {
            Kind::X3 { a, .. } => Some(a),
            _ => None,
        }
    }

    /// Side length of the ℓ1 square.
    pub fn grid_side(&self) -> Option<&GroupElement> {
        match &self.0.kind {
            Kind::L1Grid { side } => Some(side),
            _ => None,
        }
    }

    pub fn is_uniquely_geodesic(&self) -> bool {
        self.kind() != SpaceKind::L1Grid
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        let g = self.group();
        match (&self.0.kind, p) {
            (Kind::Interval { lo, hi }, Point::Value(v)) => v.group() == g && lo <= v && v <= hi,
            (Kind::Tree(tree), Point::Tree(tp)) => tree.contains(tp),
            (Kind::X1 { lambda0 }, Point::Branch { x, branch }) => {
                x.group() == g && (1..=3).contains(branch) && !x.is_negative() && &x.double() < lambda0
            }
            (Kind::X2, Point::Polar { t, phi }) => {
                t.is_positive() && *t <= rational(2) && !phi.is_negative() && *phi <= BigRational::one()
            }
            (Kind::X3 { period, .. }, Point::Value(v)) => v.group() == g && !v.is_negative() && v < period,
            (Kind::L1Grid { side }, Point::Grid { u, w }) => {
                let zero = GroupElement::zero(g);
                [u, w].iter().all(|c| c.group() == g && &&zero <= c && c <= &side)
            }
            _ => false,
        }
    }

    fn check(&self, p: &Point) -> Result<(), SpaceError> {
        if self.contains_point(p) {
            Ok(())
        } else {
            Err(SpaceError::ForeignPoint(format!("{p:?}")))
        }
    }

    pub fn distance(&self, p: &Point, q: &Point) -> Result<GroupElement, SpaceError> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.distance_unchecked(p, q))
    }

    pub(crate) fn distance_unchecked(&self, p: &Point, q: &Point) -> GroupElement {
        match (&self.0.kind, p, q) {
            (Kind::Interval { .. }, Point::Value(a), Point::Value(b)) => (a - b).abs(),
            (Kind::Tree(tree), Point::Tree(a), Point::Tree(b)) => tree.distance(a, b),
            (Kind::X1 { lambda0 }, Point::Branch { x, branch: i }, Point::Branch { x: y, branch: j }) => {
                branches::distance(lambda0, (x, *i), (y, *j))
            }
            (Kind::X2, Point::Polar { t: t1, phi: p1 }, Point::Polar { t: t2, phi: p2 }) => {
                GroupElement::from_rational(polar::distance((t1, p1), (t2, p2)))
            }
            (Kind::X3 { period, .. }, Point::Value(a), Point::Value(b)) => circle::distance(period, a, b),
            (Kind::L1Grid { .. }, Point::Grid { u: u1, w: w1 }, Point::Grid { u: u2, w: w2 }) => {
                &(u1 - u2).abs() + &(w1 - w2).abs()
            }
            _ => unreachable!("points validated against the space"),
        }
    }

    /// The canonical segment from `p` to `q`. For every space except
    /// `l1grid` it is the unique one.
    pub fn geodesic(&self, p: &Point, q: &Point) -> Result<SegmentMap, SpaceError> {
        self.check(p)?;
        self.check(q)?;
        Ok(SegmentMap::geodesic(self, p, q))
    }

    /// One point drawn with `rng`, inside the space's domain.
    pub fn sample_point(&self, sampler: &ElementSampler, rng: &mut SampleRng) -> Point {
        let g = self.group();
        let zero = GroupElement::zero(g);
        match &self.0.kind {
            Kind::Interval { lo, hi } => Point::Value(sampler.between(lo, hi, rng)),
            Kind::Tree(tree) => Point::Tree(tree.sample(sampler, rng)),
            Kind::X1 { lambda0 } => {
                let x = loop {
                    let x = sampler.between(&zero, lambda0, rng);
                    if &x.double() < lambda0 {
                        break x;
                    }
                };
                let branch = rand::Rng::gen_range(rng, 1..=3u8);
                Point::Branch { x, branch }
            }
            Kind::X2 => {
                let two = GroupElement::from_int(g, 2);
                let one = GroupElement::one(g);
                let t = loop {
                    let t = sampler.between(&zero, &two, rng);
                    if t.is_positive() {
                        break t;
                    }
                };
                let phi = sampler.between(&zero, &one, rng);
                Point::Polar {
                    t: t.as_rational().expect("x2 is rational").clone(),
                    phi: phi.as_rational().expect("x2 is rational").clone(),
                }
            }
            Kind::X3 { period, .. } => {
                let v = sampler.between(&zero, period, rng);
                Point::Value(if &v == period { zero } else { v })
            }
            Kind::L1Grid { side } => Point::Grid {
                u: sampler.between(&zero, side, rng),
                w: sampler.between(&zero, side, rng),
            },
        }
    }

    /// `n` points, a deterministic function of `(space, seed, n)`.
    pub fn sample(&self, seed: u64, n: usize) -> Vec<Point> {
        let sampler = ElementSampler::for_group(self.group());
        (0..n as u64)
            .map(|i| self.sample_point(&sampler, &mut derive_rng(seed, 0x5a4d, i)))
            .collect()
    }

    pub fn format_point(&self, p: &Point) -> String {
        literal::format_point(self, p)
    }

    pub fn parse_point(&self, text: &str) -> Result<Point, SpaceError> {
        let p = literal::parse_point(self, text)?;
        self.check(&p).map_err(|_| SpaceError::ForeignPoint(text.to_string()))?;
        Ok(p)
    }

    /// Parses a space description such as `x1:1`, `interval:0..5` or `tree:@edges.txt`.
    pub fn parse_spec(group: GroupId, spec: &str) -> Result<Space, SpaceError> {
        literal::parse_spec(group, spec)
    }

    /// The description this space would be parsed from (trees are described
    /// inline by their edge list).
    pub fn describe(&self) -> String {
        match &self.0.kind {
            Kind::Interval { lo, hi } => format!("interval:{lo}..{hi}"),
            Kind::Tree(tree) => format!("tree[{} vertices]", tree.vertex_count()),
            Kind::X1 { lambda0 } => format!("x1:{lambda0}"),
            Kind::X2 => "x2".to_string(),
            Kind::X3 { a, .. } => format!("x3:{a}"),
            Kind::L1Grid { side } => format!("l1grid:{side}"),
        }
    }
}
