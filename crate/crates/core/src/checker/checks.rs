use num_rational::BigRational;

use crate::group::GroupElement;
use crate::space::{Intersection, Point, SegmentMap, Space, SpaceKind};

use super::{CheckConfig, CheckName, CheckReport, Evidence, Relation, Tally, Witness};

fn sample_distance(space: &Space) -> impl Fn(&Point, &Point) -> GroupElement + '_ {
    move |p, q| space.distance(p, q).expect("sampled points lie in the space")
}

pub fn check_metric(space: &Space, cfg: &CheckConfig) -> CheckReport {
    check_metric_with(space, cfg, sample_distance(space))
}

/// [`check_metric`] against an arbitrary distance function on the points
/// of `space`.
pub fn check_metric_with(
    space: &Space,
    cfg: &CheckConfig,
    d: impl Fn(&Point, &Point) -> GroupElement,
) -> CheckReport {
    let mut tally = Tally::new(CheckName::Metric, space, cfg);
    let sampler = cfg.sampler(space.group());
    for i in 0..cfg.samples {
        let rng = &mut cfg.rng(CheckName::Metric, i);
        let pts = [
            space.sample_point(&sampler, rng),
            space.sample_point(&sampler, rng),
            space.sample_point(&sampler, rng),
        ];
        tally.samples += 1;
        if let Some(w) = metric_violation(space, &d, &pts) {
            return tally.finish(Some(w));
        }
    }
    tally.finish(None)
}

fn metric_violation(space: &Space, d: &impl Fn(&Point, &Point) -> GroupElement, pts: &[Point; 3]) -> Option<Witness> {
    let named = |w: Witness, order: [usize; 3]| {
        ["x", "y", "z"].iter().zip(order).fold(w, |w, (n, k)| w.point(space, n, &pts[k]))
    };
    for (a, b) in [(0, 1), (1, 2), (0, 2), (0, 0)] {
        let (p, q) = (&pts[a], &pts[b]);
        let dpq = d(p, q);
        if dpq.is_negative() || (dpq.is_zero() != (p == q)) {
            let w = Witness::new(Relation::Positivity, format!("d(x,y) = {dpq} with x {} y", if p == q { "=" } else { "≠" }))
                .point(space, "x", p)
                .point(space, "y", q)
                .value("d(x,y)", &dpq);
            return Some(w);
        }
        let dqp = d(q, p);
        if dpq != dqp {
            let w = Witness::new(Relation::Symmetry, format!("d(x,y) = {dpq} ≠ {dqp} = d(y,x)"))
                .point(space, "x", p)
                .point(space, "y", q)
                .value("d(x,y)", &dpq)
                .value("d(y,x)", &dqp);
            return Some(w);
        }
    }
    for order in [[0, 1, 2], [1, 0, 2], [0, 2, 1]] {
        let [x, y, z] = order.map(|k| &pts[k]);
        let (dxy, dyz, dxz) = (d(x, y), d(y, z), d(x, z));
        let through = &dxy + &dyz;
        if dxz > through {
            let w = Witness::new(Relation::Triangle, format!("d(x,z) = {dxz} > {through} = d(x,y) + d(y,z)"))
                .value("d(x,y)", &dxy)
                .value("d(y,z)", &dyz)
                .value("d(x,z)", &dxz);
            return Some(named(w, order));
        }
    }
    None
}

const PARAMETER_PAIRS: usize = 4;

pub fn check_axiom1(space: &Space, cfg: &CheckConfig) -> CheckReport {
    let mut tally = Tally::new(CheckName::Axiom1, space, cfg);
    let sampler = cfg.sampler(space.group());
    let d = sample_distance(space);
    let zero = GroupElement::zero(space.group());
    for i in 0..cfg.samples {
        let rng = &mut cfg.rng(CheckName::Axiom1, i);
        let p = space.sample_point(&sampler, rng);
        let q = if i == 0 { p.clone() } else { space.sample_point(&sampler, rng) };
        tally.samples += 1;
        let s = space.geodesic(&p, &q).expect("sampled points lie in the space");
        let length = s.length().clone();
        let ends = [(zero.clone(), &p), (length.clone(), &q)];
        let mut params = Vec::new();
        for (t, expected) in ends {
            if &s.eval(&t).expect("in domain") != expected {
                tally.bump("endpoint_mismatch");
            }
            params.push(t);
        }
        for _ in 0..PARAMETER_PAIRS {
            params.push(sampler.between(&zero, &length, rng));
            params.push(sampler.between(&zero, &length, rng));
        }
        for pair in params.chunks(2) {
            let (t1, t2) = (&pair[0], &pair[1]);
            let (e1, e2) = (s.eval(t1).expect("in domain"), s.eval(t2).expect("in domain"));
            let got = d(&e1, &e2);
            let want = (t1 - t2).abs();
            tally.bump("isometry_checks");
            if s.param_of(&e1).as_ref() != Some(t1) {
                tally.bump("inversion_mismatch");
            }
            if got != want {
                let w = Witness::new(Relation::Isometry, format!("d(s(t1), s(t2)) = {got} ≠ {want} = |t1 − t2|"))
                    .point(space, "p", &p)
                    .point(space, "q", &q)
                    .segment("s", &s)
                    .value("t1", t1)
                    .value("t2", t2)
                    .value("d(s(t1),s(t2))", &got);
                return tally.finish(Some(w));
            }
        }
    }
    tally.finish(None)
}

fn polar(t: i64, phi: i64) -> Point {
    Point::polar(BigRational::from_integer(t.into()), BigRational::from_integer(phi.into()))
}

/// Triples `(p, q, r)` tried before the random ones.
fn axiom2_probes(space: &Space) -> Vec<[Point; 3]> {
    match space.kind() {
        SpaceKind::X2 => vec![[polar(2, 0), polar(1, 0), polar(2, 1)]],
        SpaceKind::X3 => {
            let a = space.circle_unit().expect("x3").clone();
            let g = a.group();
            vec![[Point::Value(GroupElement::zero(g)), Point::Value(a.clone()), Point::Value(a.double())]]
        }
        _ => Vec::new(),
    }
}

const ATTEMPTS_PER_PAIR: usize = 50;

pub fn check_axiom2(space: &Space, cfg: &CheckConfig) -> CheckReport {
    let mut tally = Tally::new(CheckName::Axiom2, space, cfg);
    let sampler = cfg.sampler(space.group());
    let d = sample_distance(space);
    let probes = axiom2_probes(space);
    let random = (0..cfg.samples * ATTEMPTS_PER_PAIR).map(|i| {
        let rng = &mut cfg.rng(CheckName::Axiom2, i);
        [(); 3].map(|_| space.sample_point(&sampler, rng))
    });
    for [p, q, r] in probes.into_iter().chain(random) {
        if tally.samples == cfg.samples {
            break;
        }
        tally.bump("attempts");
        let s1 = space.geodesic(&q, &p).expect("in space");
        let s2 = space.geodesic(&q, &r).expect("in space");
        let meet = s1.intersect_at_common_endpoint(&s2, &q).expect("q is a common endpoint");
        if meet != Intersection::DisjointBeyond(q.clone()) {
            continue;
        }
        tally.samples += 1;
        if s1.reverse().concat(&s2).expect("endpoints match").is_none() {
            let total = s1.length() + s2.length();
            let direct = d(&p, &r);
            let w = Witness::new(Relation::Concat, format!("D1 + D2 = {total} ≠ {direct} = d(p,r), with s1 ∩ s2 = {{q}}"))
                .point(space, "p", &p)
                .point(space, "q", &q)
                .point(space, "r", &r)
                .segment("s1", &s1)
                .segment("s2", &s2)
                .value("D1 + D2", &total)
                .value("d(p,r)", &direct);
            return tally.finish(Some(w));
        }
    }
    let mut report = tally.finish(None);
    if report.samples < cfg.samples {
        report.note = Some(format!(
            "only {} of {} pairs meeting in a single endpoint were found",
            report.samples, cfg.samples
        ));
    }
    report
}

fn unique_probes(space: &Space) -> Vec<[Point; 3]> {
    let g = space.group();
    match space.kind() {
        SpaceKind::L1Grid => {
            let side = space.grid_side().expect("l1grid").clone();
            let zero = GroupElement::zero(g);
            let grid = |u: &GroupElement, w: &GroupElement| Point::Grid { u: u.clone(), w: w.clone() };
            vec![[grid(&zero, &zero), grid(&side, &side), grid(&zero, &side)]]
        }
        _ => Vec::new(),
    }
}

/// A point off the segment `[p, q]` that still satisfies
/// `d(p, m) + d(m, q) = d(p, q)`, if `m` is one.
fn second_geodesic(space: &Space, p: &Point, q: &Point, m: &Point) -> Option<Witness> {
    let d = sample_distance(space);
    let s = space.geodesic(p, q).expect("in space");
    if s.contains(m) {
        return None;
    }
    let (dpq, dpm, dmq) = (d(p, q), d(p, m), d(m, q));
    let via = &dpm + &dmq;
    (via == dpq).then(|| {
        Witness::new(
            Relation::SecondGeodesic,
            format!("d(p,m) + d(m,q) = {dpm} + {dmq} = {dpq} = d(p,q) with m off the segment [p,q]"),
        )
        .point(space, "p", p)
        .point(space, "q", q)
        .point(space, "m", m)
        .segment("s", &s)
        .value("d(p,q)", &dpq)
        .value("d(p,m)", &dpm)
        .value("d(m,q)", &dmq)
    })
}

pub fn check_unique(space: &Space, cfg: &CheckConfig) -> CheckReport {
    let mut tally = Tally::new(CheckName::Unique, space, cfg);
    let sampler = cfg.sampler(space.group());
    let probes = unique_probes(space);
    let random = (0..cfg.samples).map(|i| {
        let rng = &mut cfg.rng(CheckName::Unique, i);
        [(); 3].map(|_| space.sample_point(&sampler, rng))
    });
    for [p, q, m] in probes.into_iter().chain(random).take(cfg.samples) {
        tally.samples += 1;
        let s = space.geodesic(&p, &q).expect("in space");
        if s.contains(&m) {
            tally.bump("on_segment");
            continue;
        }
        if let Some(w) = second_geodesic(space, &p, &q, &m) {
            return tally.finish(Some(w));
        }
    }
    tally.finish(None)
}

/// The two intersections of the fork lemma at `z ∈ [x, y]`:
/// `[x, z] ∩ [z, p]` and `[y, z] ∩ [z, p]`.
pub fn fork_at(
    space: &Space,
    x: &Point,
    y: &Point,
    z: &Point,
    p: &Point,
) -> Result<(Intersection, Intersection), crate::space::SpaceError> {
    let zp = space.geodesic(z, p)?;
    let xz = space.geodesic(x, z)?;
    let yz = space.geodesic(y, z)?;
    Ok((xz.intersect_at_common_endpoint(&zp, z)?, yz.intersect_at_common_endpoint(&zp, z)?))
}

fn describe_far_end(space: &Space, meet: &Intersection, depth: usize) -> String {
    match meet {
        Intersection::Segment { end } | Intersection::DisjointBeyond(end) => space.format_point(end),
        Intersection::NoMax(set) => {
            let chain = set.chain(depth.min(3)).unwrap_or_default();
            let shown: Vec<String> = chain.iter().map(|p| space.format_point(p)).collect();
            format!("no last point ({}, …)", shown.join(", "))
        }
        Intersection::Scattered { ranges } => format!("{} components", ranges.len()),
    }
}

pub fn check_fork(space: &Space, cfg: &CheckConfig) -> CheckReport {
    let unique = check_unique(space, cfg);
    if !unique.pass {
        return CheckReport {
            name: CheckName::Fork,
            note: Some("skipped: the fork lemma assumes a uniquely geodesic space; the witness shows a second geodesic".into()),
            evidence: Evidence::Certificate,
            ..unique
        };
    }
    let mut tally = Tally::new(CheckName::Fork, space, cfg);
    let sampler = cfg.sampler(space.group());
    let zero = GroupElement::zero(space.group());
    for i in 0..cfg.samples {
        let rng = &mut cfg.rng(CheckName::Fork, i);
        let x = space.sample_point(&sampler, rng);
        let y = space.sample_point(&sampler, rng);
        let p = space.sample_point(&sampler, rng);
        let s: SegmentMap = space.geodesic(&x, &y).expect("in space");
        let t = sampler.between(&zero, s.length(), rng);
        let z = s.eval(&t).expect("in domain");
        tally.samples += 1;
        let (a, b) = fork_at(space, &x, &y, &z, &p).expect("sampled points lie in the space");
        let trivial = |m: &Intersection| m == &Intersection::DisjointBeyond(z.clone());
        match (trivial(&a), trivial(&b)) {
            (true, true) => tally.bump("both_trivial"),
            (true, false) | (false, true) => tally.bump("one_trivial"),
            (false, false) => {
                let (xe, ye) = (describe_far_end(space, &a, cfg.chain_depth), describe_far_end(space, &b, cfg.chain_depth));
                let w = Witness::new(
                    Relation::DoubleFork,
                    format!("[x,z] ∩ [z,p] reaches {xe} and [y,z] ∩ [z,p] reaches {ye}, neither is {{z}}"),
                )
                .point(space, "x", &x)
                .point(space, "y", &y)
                .point(space, "z", &z)
                .point(space, "p", &p)
                .value("t", &t)
                .value("x'", xe)
                .value("y'", ye);
                return tally.finish(Some(w));
            }
        }
    }
    tally.finish(None)
}
