//! Reference computations for the integration tests. They read values only
//! through printed literals and recompute everything with plain `BigRational`
//! and `BigInt` arithmetic, so they share no code with the library.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn int(text: &str) -> BigInt {
    text.parse().unwrap_or_else(|_| panic!("oracle cannot read integer `{text}`"))
}

/// Value of an `int`, `rational`, `dyadic` or `triadic` literal.
pub fn rational(text: &str) -> BigRational {
    match text.split_once('/') {
        None => BigRational::from_integer(int(text)),
        Some((p, rest)) => match rest.split_once('^') {
            Some((base, k)) => {
                let den = num_traits::pow(int(base), k.parse().expect("exponent"));
                BigRational::new(int(p), den)
            }
            None => BigRational::new(int(p), int(rest)),
        },
    }
}

pub fn pair(text: &str, sep: char) -> (BigInt, BigInt) {
    let (a, b) = text.split_once(sep).expect("pair literal");
    (int(a), int(b))
}

/// Convergents `p/q` of √2 alternate around it; returns a bracket
/// `lo < √2 < hi` with denominators above `min_den`.
pub fn sqrt2_bracket(min_den: &BigInt) -> (BigRational, BigRational) {
    let (mut p, mut d) = (BigInt::one(), BigInt::one());
    let mut prev = BigRational::from_integer(BigInt::one());
    loop {
        let (np, nd) = (&p + &d * 2, &p + &d);
        p = np;
        d = nd;
        let cur = BigRational::new(p.clone(), d.clone());
        if &d > min_den {
            return if cur < prev { (cur, prev) } else { (prev, cur) };
        }
        prev = cur;
    }
}

/// Sign of `a + b√2` by a rational sandwich, refined until decisive.
pub fn sign_sqrt2(a: &BigInt, b: &BigInt) -> Ordering {
    if b.is_zero() {
        return a.cmp(&BigInt::zero());
    }
    let mut bound = BigInt::from(1_000_000);
    loop {
        let (lo, hi) = sqrt2_bracket(&bound);
        let a = BigRational::from_integer(a.clone());
        let b = BigRational::from_integer(b.clone());
        let (x, y) = (&a + &b * &lo, &a + &b * &hi);
        let zero = BigRational::zero();
        if x > zero && y > zero {
            return Ordering::Greater;
        }
        if x < zero && y < zero {
            return Ordering::Less;
        }
        bound *= 1000;
    }
}

/// An exact value of any of the six groups, read from its literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Q(BigRational),
    Surd(BigInt, BigInt),
    Lex(BigInt, BigInt),
}

impl Value {
    pub fn read(group: &str, text: &str) -> Value {
        match group {
            "zsqrt2" => {
                let (a, b) = pair(text, ',');
                Value::Surd(a, b)
            }
            "lex-int" => {
                let (x, y) = pair(text, ':');
                Value::Lex(x, y)
            }
            _ => Value::Q(rational(text)),
        }
    }

    pub fn double(&self) -> Value {
        match self {
            Value::Q(r) => Value::Q(r * BigRational::from_integer(2.into())),
            Value::Surd(a, b) => Value::Surd(a * 2, b * 2),
            Value::Lex(x, y) => Value::Lex(x * 2, y * 2),
        }
    }

    pub fn cmp(&self, other: &Value) -> Ordering {
        match (self, other) {
            (Value::Q(a), Value::Q(b)) => a.cmp(b),
            (Value::Surd(a, b), Value::Surd(c, d)) => sign_sqrt2(&(a - c), &(b - d)),
            (Value::Lex(a, b), Value::Lex(c, d)) => (a, b).cmp(&(c, d)),
            _ => panic!("mixed oracle values"),
        }
    }

    pub fn zero_like(&self) -> Value {
        match self {
            Value::Q(_) => Value::Q(BigRational::zero()),
            Value::Surd(..) => Value::Surd(BigInt::zero(), BigInt::zero()),
            Value::Lex(..) => Value::Lex(BigInt::zero(), BigInt::zero()),
        }
    }
}

/// Strictly increasing and inside `{t : 0 ≤ 2t ≤ λ0}`.
pub fn chain_ok(group: &str, lambda0: &str, chain: &[String]) -> bool {
    let l = Value::read(group, lambda0);
    let vals: Vec<Value> = chain.iter().map(|t| Value::read(group, t)).collect();
    let inside = vals
        .iter()
        .all(|t| t.cmp(&t.zero_like()) != Ordering::Less && t.double().cmp(&l) != Ordering::Greater);
    inside && vals.windows(2).all(|w| w[0].cmp(&w[1]) == Ordering::Less)
}

/// `max{t ∈ ℤ : 0 ≤ 2t ≤ n}` by enumeration.
pub fn brute_max_half(n: i64) -> Option<i64> {
    (0..=n).filter(|t| 2 * t <= n).max()
}

pub fn polar(text: &str) -> (BigRational, BigRational) {
    let (t, phi) = text.split_once(',').expect("t,phi");
    (rational(t), rational(phi))
}

pub fn polar_distance(p: &str, r: &str) -> BigRational {
    let ((t1, p1), (t2, p2)) = (polar(p), polar(r));
    (&t2 - &t1).abs() + t1.min(t2) * (p2 - p1).abs()
}

/// `min |q − p + 3ak|` over `k ∈ {−2, …, 2}`.
pub fn circle_distance(a: &BigRational, p: &str, r: &str) -> BigRational {
    let (p, r) = (rational(p), rational(r));
    (-2..=2)
        .map(|k| (&r - &p + a * BigRational::from_integer((3 * k).into())).abs())
        .min()
        .expect("five candidates")
}

pub fn branch(text: &str) -> (BigRational, u8) {
    let (x, b) = text.split_once('@').expect("x@i");
    (rational(x), b.parse().expect("branch"))
}

pub fn branch_distance(lambda0: &BigRational, p: &str, r: &str) -> BigRational {
    let ((x, i), (y, j)) = (branch(p), branch(r));
    if i == j {
        (x - y).abs()
    } else {
        lambda0 - x - y
    }
}

pub fn grid_distance(p: &str, r: &str) -> BigRational {
    let (u1, w1) = p.split_once(';').expect("u;w");
    let (u2, w2) = r.split_once(';').expect("u;w");
    (rational(u1) - rational(u2)).abs() + (rational(w1) - rational(w2)).abs()
}

type Anchor = (usize, BigRational);

/// Path metric of a weighted tree given as `(u, v, length)` triples, by
/// Floyd–Warshall on the vertices.
pub struct TreeOracle {
    names: HashMap<String, usize>,
    edges: Vec<(usize, usize, BigRational)>,
    dist: Vec<Vec<Option<BigRational>>>,
}

impl TreeOracle {
    pub fn from_edge_list(text: &str) -> TreeOracle {
        let mut names = HashMap::new();
        let mut edges = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let mut id = |name: &str| {
                let n = names.len();
                *names.entry(name.to_string()).or_insert(n)
            };
            let (u, v) = (id(parts[0]), id(parts[1]));
            edges.push((u, v, rational(parts[2])));
        }
        let n = names.len();
        let mut dist = vec![vec![None; n]; n];
        for (i, row) in dist.iter_mut().enumerate() {
            row[i] = Some(BigRational::zero());
        }
        for (u, v, l) in &edges {
            dist[*u][*v] = Some(l.clone());
            dist[*v][*u] = Some(l.clone());
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if let (Some(a), Some(b)) = (dist[i][k].clone(), dist[k][j].clone()) {
                        let via = a + b;
                        if dist[i][j].as_ref().is_none_or(|d| &via < d) {
                            dist[i][j] = Some(via);
                        }
                    }
                }
            }
        }
        TreeOracle { names, edges, dist }
    }

    /// `(edge, offset)` for `edge#offset`, or the vertex.
    fn anchors(&self, text: &str) -> (Option<Anchor>, Vec<Anchor>) {
        match text.split_once('#') {
            Some((e, off)) => {
                let e: usize = e.parse().expect("edge index");
                let off = rational(off);
                let (u, v, l) = &self.edges[e];
                (Some((e, off.clone())), vec![(*u, off.clone()), (*v, l - off)])
            }
            None => (None, vec![(self.names[text], BigRational::zero())]),
        }
    }

    pub fn distance(&self, p: &str, r: &str) -> BigRational {
        let (pe, pa) = self.anchors(p);
        let (re, ra) = self.anchors(r);
        if let (Some((e1, o1)), Some((e2, o2))) = (&pe, &re) {
            if e1 == e2 {
                return (o1 - o2).abs();
            }
        }
        pa.iter()
            .flat_map(|(u, a)| ra.iter().map(move |(v, b)| (u, a, v, b)))
            .map(|(u, a, v, b)| a + self.dist[*u][*v].clone().expect("connected") + b)
            .min()
            .expect("anchors")
    }
}
