//! Axiom (3) through the half-maximum construction.
//!
//! For `a = d(x, y) ≤ b = d(x, z)` with segments `φ = [x, y]`, `ψ = [x, z]`:
//! `z̃ = ψ(a)`, `r = max{t : 0 ≤ 2t ≤ d(y, z̃)}`, `ℓ = d(y, z̃) − r`,
//! `y′ = φ(a − ℓ)`, `z′ = ψ(a − ℓ)`. When the construction applies, the
//! intersection `[x, y] ∩ [x, z]` should be `[x, y′]` with `y′ = z′`.

use crate::group::{GroupElement, HalfMax};
use crate::space::{Intersection, Point, Space, SpaceError, SpaceKind, TreePoint};

use super::{CheckConfig, CheckName, CheckReport, Relation, Tally, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    /// Whether `y` and `z` were exchanged to make `a ≤ b`.
    pub swapped: bool,
    pub a: GroupElement,
    pub b: GroupElement,
    pub z_tilde: Point,
    pub r: GroupElement,
    pub ell: GroupElement,
    pub y_prime: Point,
    pub z_prime: Point,
}

impl Construction {
    /// `d(x, y′) = a − ℓ`.
    pub fn overlap(&self) -> GroupElement {
        &self.a - &self.ell
    }

    /// `ℓ ≥ r` and `ℓ ≤ a`.
    pub fn identities_hold(&self) -> bool {
        self.ell >= self.r && self.ell <= self.a
    }
}

/// Orders `(y, z)` so that `d(x, y) ≤ d(x, z)`.
fn ordered<'a>(space: &Space, x: &Point, y: &'a Point, z: &'a Point) -> Result<(bool, &'a Point, &'a Point), SpaceError> {
    let swapped = space.distance(x, y)? > space.distance(x, z)?;
    Ok(if swapped { (true, z, y) } else { (false, y, z) })
}

/// Runs the construction on `(x, y, z)`; `None` when `d(y, z̃)` has no half-maximum.
pub fn axiom3_construction(space: &Space, x: &Point, y: &Point, z: &Point) -> Result<Option<Construction>, SpaceError> {
    let (swapped, y, z) = ordered(space, x, y, z)?;
    let phi = space.geodesic(x, y)?;
    let psi = space.geodesic(x, z)?;
    let a = phi.length().clone();
    let z_tilde = psi.eval(&a)?;
    let dy = space.distance(y, &z_tilde)?;
    let r = if dy.is_zero() {
        dy.clone()
    } else {
        match dy.max_half()? {
            HalfMax::Max(r) => r,
            HalfMax::None => return Ok(None),
        }
    };
    let ell = &dy - &r;
    let c = Construction {
        swapped,
        b: psi.length().clone(),
        y_prime: phi.eval(&(&a - &ell))?,
        z_prime: psi.eval(&(&a - &ell))?,
        a,
        z_tilde,
        r,
        ell,
    };
    Ok(Some(c))
}

fn axiom3_probes(space: &Space) -> Vec<[Point; 3]> {
    let g = space.group();
    match space.kind() {
        SpaceKind::X1 => {
            let zero = GroupElement::zero(g);
            vec![[1, 2, 3].map(|b| Point::branch(zero.clone(), b))]
        }
        SpaceKind::Tree => {
            let tree = space.as_tree().expect("tree");
            match (tree.vertex("u"), tree.vertex("v"), tree.vertex("w")) {
                (Some(u), Some(v), Some(w)) => vec![[u, v, w].map(|n| Point::Tree(TreePoint::Vertex(n)))],
                _ => Vec::new(),
            }
        }
        _ => Vec::new(),
    }
}

pub(super) fn intersection_witness(
    space: &Space,
    x: &Point,
    y: &Point,
    z: &Point,
    depth: usize,
) -> Result<Option<Witness>, SpaceError> {
    let (_, y, z) = ordered(space, x, y, z)?;
    let s1 = space.geodesic(x, y)?;
    let s2 = space.geodesic(x, z)?;
    let base = |relation, statement: String| {
        Witness::new(relation, statement)
            .point(space, "x", x)
            .point(space, "y", y)
            .point(space, "z", z)
            .segment("s1", &s1)
            .segment("s2", &s2)
    };
    Ok(match s1.intersect_at_common_endpoint(&s2, x)? {
        Intersection::NoMax(set) => {
            let chain = set.chain(depth)?;
            let mut w = base(
                Relation::NoMaxIntersection,
                format!(
                    "s1 ∩ s2 = {{(u, {}) : u ≥ {}, 2u < {}}} has no maximum",
                    set.branch, set.floor, set.lambda0
                ),
            )
            .value("lambda0", &set.lambda0)
            .value("floor", &set.floor)
            .value("branch", set.branch);
            w.chain = chain.iter().map(|p| space.format_point(p)).collect();
            Some(w)
        }
        Intersection::Scattered { ranges } => {
            let shown: Vec<String> = ranges.iter().map(|(lo, hi)| format!("[{lo}, {hi}]")).collect();
            let w = base(
                Relation::ScatteredIntersection,
                format!("s1 ∩ s2 has {} components, at parameters {}", ranges.len(), shown.join(" ∪ ")),
            )
            .value("components", ranges.len());
            Some(w)
        }
        Intersection::Segment { .. } | Intersection::DisjointBeyond(_) => None,
    })
}

pub fn check_axiom3(space: &Space, cfg: &CheckConfig) -> CheckReport {
    let mut tally = Tally::new(CheckName::Axiom3, space, cfg);
    let sampler = cfg.sampler(space.group());
    let probes = axiom3_probes(space);
    let random = (0..cfg.samples).map(|i| {
        let rng = &mut cfg.rng(CheckName::Axiom3, i);
        [(); 3].map(|_| space.sample_point(&sampler, rng))
    });
    for [x, y, z] in probes.into_iter().chain(random).take(cfg.samples) {
        tally.samples += 1;
        let construction = axiom3_construction(space, &x, &y, &z).expect("sampled points lie in the space");
        if let Some(c) = &construction {
            tally.bump("construction_runs");
            if !c.identities_hold() {
                let w = Witness::new(
                    Relation::ConstructionIdentity,
                    format!("ℓ = {}, r = {}, a = {}: ℓ ≥ r and ℓ ≤ a do not both hold", c.ell, c.r, c.a),
                )
                .point(space, "x", &x)
                .point(space, "y", &y)
                .point(space, "z", &z)
                .value("ell", &c.ell)
                .value("r", &c.r)
                .value("a", &c.a);
                return tally.finish(Some(w));
            }
            let (_, yy, zz) = ordered(space, &x, &y, &z).expect("in space");
            let s1 = space.geodesic(&x, yy).expect("in space");
            let s2 = space.geodesic(&x, zz).expect("in space");
            let meet = s1.intersect_at_common_endpoint(&s2, &x).expect("common endpoint");
            if c.y_prime == c.z_prime && meet.segment_end() == Some(&c.y_prime) {
                tally.bump("construction_agrees");
            } else {
                tally.bump("construction_disagrees");
            }
            let d_yz = space.distance(&y, &z).expect("in space");
            if c.overlap().double() == &(&c.a + &c.b) - &d_yz {
                tally.bump("gromov_agrees");
            }
        } else {
            tally.bump("no_half_max");
        }
        if let Some(w) = intersection_witness(space, &x, &y, &z, cfg.chain_depth).expect("in space") {
            return tally.finish(Some(w));
        }
    }
    tally.finish(None)
}
