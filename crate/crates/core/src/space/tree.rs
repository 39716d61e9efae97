//! Finite simplicial Λ-trees with the path metric.

use std::collections::HashMap;

use crate::group::{ElementSampler, GroupElement, GroupId, SampleRng};
use rand::Rng;

use super::SpaceError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub length: GroupElement,
}

/// A point of a tree. Points on an edge interior carry the offset from the
/// edge's first endpoint `u`; offsets `0` and `length` are always stored as
/// the corresponding vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TreePoint {
    Vertex(usize),
    Edge { edge: usize, offset: GroupElement },
}

/// Traversal of part of one edge, from offset `from` to offset `to`
/// (offsets measured from the edge's `u` endpoint).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct TreePiece {
    pub edge: usize,
    pub from: GroupElement,
    pub to: GroupElement,
}

impl TreePiece {
    fn length(&self) -> GroupElement {
        (&self.to - &self.from).abs()
    }

    fn reversed(&self) -> TreePiece {
        TreePiece { edge: self.edge, from: self.to.clone(), to: self.from.clone() }
    }

    fn ascending(&self) -> bool {
        self.to >= self.from
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    group: GroupId,
    names: Vec<String>,
    edges: Vec<Edge>,
    /// `dist[a][b]`, path-metric distance between vertices.
    dist: Vec<Vec<GroupElement>>,
    /// `via[root][v]`: the vertex preceding `v` on the path from `root`, and the edge used.
    via: Vec<Vec<Option<(usize, usize)>>>,
}

impl Tree {
    pub fn new(group: GroupId, names: Vec<String>, edges: Vec<Edge>) -> Result<Tree, SpaceError> {
        let n = names.len();
        if n == 0 {
            return Err(SpaceError::InvalidParameter("tree needs at least one vertex".into()));
        }
        let mut seen = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.contains(['#', ' ', '\t']) {
                return Err(SpaceError::InvalidParameter(format!("invalid vertex name `{name}`")));
            }
            if seen.insert(name.as_str(), i).is_some() {
                return Err(SpaceError::InvalidParameter(format!("duplicate vertex `{name}`")));
            }
        }
        if edges.len() + 1 != n {
            return Err(SpaceError::InvalidParameter(format!(
                "a tree on {n} vertices has {} edges, got {}",
                n - 1,
                edges.len()
            )));
        }
        let mut adjacency = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            if e.u >= n || e.v >= n || e.u == e.v {
                return Err(SpaceError::InvalidParameter(format!("edge {id} has invalid endpoints")));
            }
            if e.length.group() != group || !e.length.is_positive() {
                return Err(SpaceError::InvalidParameter(format!(
                    "edge {id} needs a positive {group} length, got {}",
                    e.length
                )));
            }
            adjacency[e.u].push((e.v, id));
            adjacency[e.v].push((e.u, id));
        }

        let mut dist = Vec::with_capacity(n);
        let mut via = Vec::with_capacity(n);
        for root in 0..n {
            let mut d: Vec<Option<GroupElement>> = vec![None; n];
            let mut prev = vec![None; n];
            d[root] = Some(GroupElement::zero(group));
            let mut stack = vec![root];
            while let Some(a) = stack.pop() {
                let da = d[a].clone().expect("visited");
                for &(b, e) in &adjacency[a] {
                    if d[b].is_none() {
                        d[b] = Some(&da + &edges[e].length);
                        prev[b] = Some((a, e));
                        stack.push(b);
                    }
                }
            }
            if d.iter().any(Option::is_none) {
                return Err(SpaceError::InvalidParameter("tree is not connected".into()));
            }
            dist.push(d.into_iter().map(Option::unwrap).collect());
            via.push(prev);
        }
        Ok(Tree { group, names, edges, dist, via })
    }

    /// Parses an edge list: one `u v length` line per edge; blank lines and
    /// lines starting with `#` are skipped. Vertices are numbered in order of
    /// first appearance.
    pub fn parse(group: GroupId, text: &str) -> Result<Tree, SpaceError> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [u, v, len] = fields[..] else {
                return Err(SpaceError::InvalidParameter(format!(
                    "line {}: expected `u v length`",
                    lineno + 1
                )));
            };
            let mut vertex = |name: &str| {
                *index.entry(name.to_string()).or_insert_with(|| {
                    names.push(name.to_string());
                    names.len() - 1
                })
            };
            let (u, v) = (vertex(u), vertex(v));
            let length = GroupElement::parse(group, len)
                .map_err(|e| SpaceError::InvalidParameter(format!("line {}: {e}", lineno + 1)))?;
            edges.push(Edge { u, v, length });
        }
        Tree::new(group, names, edges)
    }

    /// Center `c` joined to leaves `u`, `v`, `w` by unit edges.
    pub fn star(group: GroupId) -> Tree {
        let one = GroupElement::one(group);
        let names = ["c", "u", "v", "w"].map(String::from).to_vec();
        let edges = (1..4).map(|leaf| Edge { u: 0, v: leaf, length: one.clone() }).collect();
        Tree::new(group, names, edges).expect("star is a tree")
    }

    /// A random tree on `vertices` vertices: each new vertex attaches to a
    /// uniformly chosen earlier one, with a positive sampled edge length.
    pub fn random(group: GroupId, vertices: usize, sampler: &ElementSampler, rng: &mut SampleRng) -> Tree {
        let vertices = vertices.max(1);
        let names = (0..vertices).map(|i| format!("v{i}")).collect();
        let edges = (1..vertices)
            .map(|v| Edge { u: rng.gen_range(0..v), v, length: sampler.positive(group, rng) })
            .collect();
        Tree::new(group, names, edges).expect("random attachment yields a tree")
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn name(&self, vertex: usize) -> &str {
        &self.names[vertex]
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn vertex_distance(&self, a: usize, b: usize) -> &GroupElement {
        &self.dist[a][b]
    }

    pub fn to_edge_list(&self) -> String {
        self.edges
            .iter()
            .map(|e| format!("{} {} {}\n", self.names[e.u], self.names[e.v], e.length))
            .collect()
    }

    pub(crate) fn canonical(&self, edge: usize, offset: GroupElement) -> TreePoint {
        let e = &self.edges[edge];
        if offset.is_zero() {
            TreePoint::Vertex(e.u)
        } else if offset == e.length {
            TreePoint::Vertex(e.v)
        } else {
            TreePoint::Edge { edge, offset }
        }
    }

    pub(crate) fn contains(&self, p: &TreePoint) -> bool {
        match p {
            TreePoint::Vertex(v) => *v < self.names.len(),
            TreePoint::Edge { edge, offset } => self.edges.get(*edge).is_some_and(|e| {
                offset.group() == self.group && offset.is_positive() && offset < &e.length
            }),
        }
    }

    /// Vertices through which a path may leave `p`, with the distance to each.
    fn exits(&self, p: &TreePoint) -> Vec<(usize, GroupElement)> {
        match p {
            TreePoint::Vertex(v) => vec![(*v, GroupElement::zero(self.group))],
            TreePoint::Edge { edge, offset } => {
                let e = &self.edges[*edge];
                vec![(e.u, offset.clone()), (e.v, &e.length - offset)]
            }
        }
    }

    /// Offset of vertex `v` along edge `edge`.
    fn vertex_offset(&self, edge: usize, v: usize) -> GroupElement {
        let e = &self.edges[edge];
        if v == e.u {
            GroupElement::zero(self.group)
        } else {
            e.length.clone()
        }
    }

    /// Exit pair realizing the distance between points on different edges.
    fn best_exits(&self, p: &TreePoint, q: &TreePoint) -> (usize, usize, GroupElement) {
        let mut best: Option<(usize, usize, GroupElement)> = None;
        for (a, da) in self.exits(p) {
            for (b, db) in self.exits(q) {
                let total = &(&da + &self.dist[a][b]) + &db;
                if best.as_ref().is_none_or(|(_, _, d)| &total < d) {
                    best = Some((a, b, total));
                }
            }
        }
        best.expect("every point has an exit")
    }

    pub(crate) fn distance(&self, p: &TreePoint, q: &TreePoint) -> GroupElement {
        if let (TreePoint::Edge { edge: e1, offset: o1 }, TreePoint::Edge { edge: e2, offset: o2 }) = (p, q) {
            if e1 == e2 {
                return (o1 - o2).abs();
            }
        }
        self.best_exits(p, q).2
    }

    /// Edges from `a` to `b` in path order, each with its entry vertex.
    fn vertex_path(&self, a: usize, b: usize) -> Vec<(usize, usize)> {
        let mut steps = Vec::new();
        let mut cur = b;
        while cur != a {
            let (prev, edge) = self.via[a][cur].expect("connected");
            steps.push((prev, edge));
            cur = prev;
        }
        steps.reverse();
        steps
    }

    pub(crate) fn geodesic(&self, p: &TreePoint, q: &TreePoint) -> Vec<TreePiece> {
        if let (TreePoint::Edge { edge: e1, offset: o1 }, TreePoint::Edge { edge: e2, offset: o2 }) = (p, q) {
            if e1 == e2 {
                return vec![TreePiece { edge: *e1, from: o1.clone(), to: o2.clone() }];
            }
        }
        let (a, b, _) = self.best_exits(p, q);
        let mut pieces = Vec::new();
        if let TreePoint::Edge { edge, offset } = p {
            pieces.push(TreePiece { edge: *edge, from: offset.clone(), to: self.vertex_offset(*edge, a) });
        }
        for (entry, edge) in self.vertex_path(a, b) {
            let from = self.vertex_offset(edge, entry);
            let to = &self.edges[edge].length - &from;
            pieces.push(TreePiece { edge, from, to });
        }
        if let TreePoint::Edge { edge, offset } = q {
            pieces.push(TreePiece { edge: *edge, from: self.vertex_offset(*edge, b), to: offset.clone() });
        }
        pieces
    }

    pub(crate) fn eval(&self, pieces: &[TreePiece], t: &GroupElement) -> TreePoint {
        let mut rest = t.clone();
        for (i, piece) in pieces.iter().enumerate() {
            let len = piece.length();
            if rest <= len || i + 1 == pieces.len() {
                let offset = if piece.ascending() { &piece.from + &rest } else { &piece.from - &rest };
                return self.canonical(piece.edge, offset);
            }
            rest = &rest - &len;
        }
        unreachable!("eval on an empty path only happens for zero-length segments")
    }

    /// Parameter at which the path passes through `p`, if it does.
    pub(crate) fn param_of(&self, pieces: &[TreePiece], p: &TreePoint) -> Option<GroupElement> {
        let reps: Vec<(usize, GroupElement)> = match p {
            TreePoint::Vertex(v) => self
                .edges
                .iter()
                .enumerate()
                .filter(|(_, e)| e.u == *v || e.v == *v)
                .map(|(id, _)| (id, self.vertex_offset(id, *v)))
                .collect(),
            TreePoint::Edge { edge, offset } => vec![(*edge, offset.clone())],
        };
        let mut start = GroupElement::zero(self.group);
        for piece in pieces {
            for (edge, offset) in &reps {
                if *edge == piece.edge {
                    let (lo, hi) = if piece.ascending() { (&piece.from, &piece.to) } else { (&piece.to, &piece.from) };
                    if lo <= offset && offset <= hi {
                        return Some(&start + &(offset - &piece.from).abs());
                    }
                }
            }
            start = &start + &piece.length();
        }
        None
    }

    pub(crate) fn reverse(pieces: &[TreePiece]) -> Vec<TreePiece> {
        pieces.iter().rev().map(TreePiece::reversed).collect()
    }

    /// Length of the common initial stretch of two paths leaving the same point.
    pub(crate) fn common_prefix(&self, a: &[TreePiece], b: &[TreePiece]) -> GroupElement {
        let mut overlap = GroupElement::zero(self.group);
        for (pa, pb) in a.iter().zip(b) {
            if pa.edge != pb.edge || pa.from != pb.from || pa.ascending() != pb.ascending() {
                break;
            }
            let (la, lb) = (pa.length(), pb.length());
            overlap = &overlap + la.min(&lb);
            if la != lb {
                break;
            }
        }
        overlap
    }

    pub(crate) fn sample(&self, sampler: &ElementSampler, rng: &mut SampleRng) -> TreePoint {
        if self.edges.is_empty() {
            return TreePoint::Vertex(0);
        }
        let edge = rng.gen_range(0..self.edges.len());
        let zero = GroupElement::zero(self.group);
        let offset = sampler.between(&zero, &self.edges[edge].length, rng);
        self.canonical(edge, offset)
    }

    pub(crate) fn format_point(&self, p: &TreePoint) -> String {
        match p {
            TreePoint::Vertex(v) => self.names[*v].clone(),
            TreePoint::Edge { edge, offset } => format!("{edge}#{offset}"),
        }
    }

    pub(crate) fn parse_point(&self, text: &str) -> Result<TreePoint, SpaceError> {
        match text.split_once('#') {
            Some((edge, offset)) => {
                let edge: usize = edge
                    .parse()
                    .map_err(|_| SpaceError::InvalidParameter(format!("bad edge index in `{text}`")))?;
                if edge >= self.edges.len() {
                    return Err(SpaceError::ForeignPoint(text.to_string()));
                }
                let offset = GroupElement::parse(self.group, offset)?;
                if offset.is_negative() || offset > self.edges[edge].length {
                    return Err(SpaceError::ForeignPoint(text.to_string()));
                }
                Ok(self.canonical(edge, offset))
            }
            None => self
                .vertex(text)
                .map(TreePoint::Vertex)
                .ok_or_else(|| SpaceError::ForeignPoint(text.to_string())),
        }
    }
}
