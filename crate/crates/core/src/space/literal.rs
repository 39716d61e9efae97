//! Text forms of space descriptions and points.
//!
//! ```text
//! interval:a..b   tree:@edges.txt   tree:star   x1:λ0   x2   x3:a   l1grid:side
//! ```
//!
//! Points: a group literal (interval, x3), a vertex name or `edge#offset`
//! (tree), `x@i` (x1), `t,φ` (x2), `u;w` (l1grid).

use crate::group::{GroupElement, GroupError, GroupId};

use super::{Kind, Point, Space, SpaceError, Tree};

fn element_at(group: GroupId, text: &str, offset: usize) -> Result<GroupElement, SpaceError> {
    GroupElement::parse(group, text).map_err(|e| match e {
        GroupError::Parse(p) => SpaceError::from(p.offset(offset)),
        other => other.into(),
    })
}

fn split<'a>(text: &'a str, sep: &str, what: &str) -> Result<(&'a str, &'a str, usize), SpaceError> {
    let i = text
        .find(sep)
        .ok_or_else(|| SpaceError::InvalidParameter(format!("expected {what}, got `{text}`")))?;
    Ok((&text[..i], &text[i + sep.len()..], i + sep.len()))
}

pub(crate) fn parse_spec(group: GroupId, spec: &str) -> Result<Space, SpaceError> {
    let (kind, arg) = match spec.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (spec, None),
    };
    let need = |what: &str| {
        arg.ok_or_else(|| SpaceError::InvalidParameter(format!("`{kind}` needs a parameter: {kind}:{what}")))
    };
    let at = kind.len() + 1;
    match kind {
        "interval" => {
            let (lo, hi, off) = split(need("a..b")?, "..", "a..b")?;
            Space::interval(element_at(group, lo, at)?, element_at(group, hi, at + off)?)
        }
        "tree" => match need("@file")? {
            "star" => Ok(Space::tree(Tree::star(group))),
            file if file.starts_with('@') => {
                let text = std::fs::read_to_string(&file[1..])
                    .map_err(|e| SpaceError::InvalidParameter(format!("cannot read {}: {e}", &file[1..])))?;
                Ok(Space::tree(Tree::parse(group, &text)?))
            }
            other => Err(SpaceError::InvalidParameter(format!("tree expects @file or star, got `{other}`"))),
        },
        "x1" => Space::x1(element_at(group, need("λ0")?, at)?),
        "x2" if arg.is_none() => Space::x2(group),
        "x3" => Space::x3(element_at(group, need("a")?, at)?),
        "l1grid" => Space::l1grid(element_at(group, need("side")?, at)?),
        _ => Err(SpaceError::InvalidParameter(format!(
            "unknown space `{spec}` (expected interval, tree, x1, x2, x3 or l1grid)"
        ))),
    }
}

fn rational_at(text: &str, offset: usize) -> Result<num_rational::BigRational, SpaceError> {
    Ok(element_at(GroupId::Rational, text, offset)?.as_rational().expect("rational").clone())
}

pub(crate) fn parse_point(space: &Space, text: &str) -> Result<Point, SpaceError> {
    let g = space.group();
    match &space.0.kind {
        Kind::Interval { .. } | Kind::X3 { .. } => Ok(Point::Value(element_at(g, text, 0)?)),
        Kind::Tree(tree) => Ok(Point::Tree(tree.parse_point(text)?)),
        Kind::X1 { .. } => {
            let (x, b, off) = split(text, "@", "x@branch")?;
            let branch: u8 = b
                .parse()
                .map_err(|_| SpaceError::InvalidParameter(format!("bad branch `{b}` at position {off}")))?;
            Ok(Point::branch(element_at(g, x, 0)?, branch))
        }
        Kind::X2 => {
            let (t, phi, off) = split(text, ",", "t,phi")?;
            Ok(Point::polar(rational_at(t, 0)?, rational_at(phi, off)?))
        }
        Kind::L1Grid { .. } => {
            let (u, w, off) = split(text, ";", "u;w")?;
            Ok(Point::Grid { u: element_at(g, u, 0)?, w: element_at(g, w, off)? })
        }
    }
}

pub(crate) fn format_point(space: &Space, p: &Point) -> String {
    let r = |q: &num_rational::BigRational| GroupElement::from_rational(q.clone()).to_string();
    match (&space.0.kind, p) {
        (Kind::Tree(tree), Point::Tree(tp)) => tree.format_point(tp),
        (_, Point::Value(v)) => v.to_string(),
        (_, Point::Branch { x, branch }) => format!("{x}@{branch}"),
        (_, Point::Polar { t, phi }) => format!("{},{}", r(t), r(phi)),
        (_, Point::Grid { u, w }) => format!("{u};{w}"),
        (_, Point::Tree(tp)) => format!("{tp:?}"),
    }
}
