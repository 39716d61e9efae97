use crate::group::{GroupElement, GroupId, HalfMax};
use crate::space::{Intersection, Point, Space, SpaceError};

use super::axiom3::{axiom3_construction, intersection_witness};
use super::chain::WitnessChain;
use super::checks::fork_at;
use super::{CheckReport, Relation, Witness};

fn missing(what: &str) -> SpaceError {
    SpaceError::Precondition(format!("witness lacks `{what}`"))
}

fn point(space: &Space, w: &Witness, name: &str) -> Result<Point, SpaceError> {
    space.parse_point(w.points.get(name).ok_or_else(|| missing(name))?)
}

fn value(group: GroupId, w: &Witness, name: &str) -> Result<GroupElement, SpaceError> {
    Ok(GroupElement::parse(group, w.values.get(name).ok_or_else(|| missing(name))?)?)
}

/// Re-evaluates a failing report's witness from its literals. `Ok(true)`
/// means the recorded violation reproduces exactly.
pub fn reverify(space: Option<&Space>, report: &CheckReport) -> Result<bool, SpaceError> {
    let Some(w) = &report.witness else {
        return Ok(false);
    };
    let group = report.group;
    if w.relation == Relation::NoHalfMax {
        let lambda0 = value(group, w, "lambda0")?;
        let elements = w
            .chain
            .iter()
            .map(|t| GroupElement::parse(group, t))
            .collect::<Result<Vec<_>, _>>()?;
        let chain = WitnessChain { lambda0: lambda0.clone(), elements };
        return Ok(lambda0.max_half()? == HalfMax::None && chain.verify());
    }
    let space = space.ok_or_else(|| SpaceError::Precondition("a space is needed to re-verify".into()))?;
    let p = |name: &str| point(space, w, name);
    let d = |a: &Point, b: &Point| space.distance(a, b);
    Ok(match w.relation {
        Relation::Positivity => {
            let (x, y) = (p("x")?, p("y")?);
            let dxy = d(&x, &y)?;
            dxy.is_negative() || dxy.is_zero() != (x == y)
        }
        Relation::Symmetry => {
            let (x, y) = (p("x")?, p("y")?);
            d(&x, &y)? != d(&y, &x)?
        }
        Relation::Triangle => {
            let (x, y, z) = (p("x")?, p("y")?, p("z")?);
            d(&x, &z)? > &d(&x, &y)? + &d(&y, &z)?
        }
        Relation::Isometry => {
            let s = space.geodesic(&p("p")?, &p("q")?)?;
            let (t1, t2) = (value(group, w, "t1")?, value(group, w, "t2")?);
            d(&s.eval(&t1)?, &s.eval(&t2)?)? != (&t1 - &t2).abs()
        }
        Relation::Concat => {
            let (pp, q, r) = (p("p")?, p("q")?, p("r")?);
            let s1 = space.geodesic(&q, &pp)?;
            let s2 = space.geodesic(&q, &r)?;
            let single = s1.intersect_at_common_endpoint(&s2, &q)? == Intersection::DisjointBeyond(q.clone());
            let total = s1.length() + s2.length();
            single
                && s1.reverse().concat(&s2)?.is_none()
                && value(group, w, "D1 + D2")? == total
                && value(group, w, "d(p,r)")? == d(&pp, &r)?
        }
        Relation::NoMaxIntersection | Relation::ScatteredIntersection => {
            let (x, y, z) = (p("x")?, p("y")?, p("z")?);
            let Some(again) = intersection_witness(space, &x, &y, &z, w.chain.len().max(1))? else {
                return Ok(false);
            };
            let s1 = space.geodesic(&x, &y)?;
            let s2 = space.geodesic(&x, &z)?;
            let chain = w.chain.iter().map(|c| space.parse_point(c)).collect::<Result<Vec<_>, _>>()?;
            let on_both = chain.iter().all(|c| s1.contains(c) && s2.contains(c));
            let increasing = chain.windows(2).all(|pair| d(&x, &pair[0]).ok() < d(&x, &pair[1]).ok());
            again.relation == w.relation && (w.chain.is_empty() || (again.chain == w.chain && on_both && increasing))
        }
        Relation::ConstructionIdentity => {
            let c = axiom3_construction(space, &p("x")?, &p("y")?, &p("z")?)?;
            c.is_some_and(|c| !c.identities_hold())
        }
        Relation::SecondGeodesic => {
            let (pp, q, m) = (p("p")?, p("q")?, p("m")?);
            !space.geodesic(&pp, &q)?.contains(&m) && &d(&pp, &m)? + &d(&m, &q)? == d(&pp, &q)?
        }
        Relation::DoubleFork => {
            let (x, y, z, pp) = (p("x")?, p("y")?, p("z")?, p("p")?);
            let (a, b) = fork_at(space, &x, &y, &z, &pp)?;
            let trivial = Intersection::DisjointBeyond(z.clone());
            a != trivial && b != trivial
        }
        Relation::NoHalfMax => unreachable!("handled above"),
    })
}
