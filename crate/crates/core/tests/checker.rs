mod common;

use lambda_trees::checker::{
    axiom3_construction, condition_a_probe, fork_at, reverify, run_check, CheckConfig, CheckName, CheckReport,
    Relation,
};
use lambda_trees::group::{GroupElement, GroupId};
use lambda_trees::space::{Intersection, Space};
use num_rational::BigRational;

fn parse(group: GroupId, spec: &str) -> Space {
    Space::parse_spec(group, spec).unwrap()
}

fn run(name: CheckName, space: &Space, seed: u64, samples: usize) -> CheckReport {
    run_check(name, space.group(), Some(space), &CheckConfig::new(seed, samples)).unwrap()
}

const SPACE_CHECKS: [CheckName; 6] = [
    CheckName::Metric,
    CheckName::Axiom1,
    CheckName::Axiom2,
    CheckName::Axiom3,
    CheckName::Unique,
    CheckName::Fork,
];

fn negative_spaces() -> Vec<Space> {
    vec![
        parse(GroupId::Triadic, "x1:1"),
        parse(GroupId::Triadic, "x1:5/3^2"),
        parse(GroupId::LexInt, "x1:1:0"),
        parse(GroupId::LexInt, "x1:3:-4"),
        parse(GroupId::Zsqrt2, "x1:0,1"),
        parse(GroupId::Zsqrt2, "x1:1,1"),
        parse(GroupId::Rational, "x2"),
        parse(GroupId::Int, "x3:1"),
        parse(GroupId::Triadic, "x3:7/3^1"),
        parse(GroupId::Int, "l1grid:1"),
        parse(GroupId::Dyadic, "l1grid:5/2^1"),
    ]
}

#[test]
fn every_failing_report_carries_a_witness_that_reverifies() {
    let mut failures = 0;
    for space in negative_spaces() {
        for seed in 0..3 {
            for name in SPACE_CHECKS {
                let report = run(name, &space, seed, 150);
                if report.pass {
                    assert!(report.witness.is_none() || name == CheckName::Fork);
                    continue;
                }
                failures += 1;
                assert!(report.witness.is_some(), "{name} on {} has no witness", space.describe());
                assert!(
                    reverify(Some(&space), &report).unwrap(),
                    "{name} on {} seed {seed}: {:?}",
                    space.describe(),
                    report.witness
                );
            }
        }
    }
    assert!(failures >= 11 * 3);
}

#[test]
fn x1_fails_axiom3_alone_over_every_group() {
    for spec in [(GroupId::Triadic, "x1:1"), (GroupId::LexInt, "x1:1:0"), (GroupId::Zsqrt2, "x1:0,1")] {
        let space = parse(spec.0, spec.1);
        for name in SPACE_CHECKS {
            let report = run(name, &space, 5, 300);
            assert_eq!(report.pass, name != CheckName::Axiom3, "{name} on {}", space.describe());
        }
        let report = run(CheckName::Axiom3, &space, 5, 300);
        let w = report.witness.unwrap();
        assert_eq!(w.relation, Relation::NoMaxIntersection);
        assert_eq!(w.chain.len(), 20);
    }
}

#[test]
fn x1_chain_climbs_inside_both_segments() {
    let space = parse(GroupId::Triadic, "x1:1");
    let w = run(CheckName::Axiom3, &space, 0, 10).witness.unwrap();
    let one = common::q(1, 1);
    let on = |seg: &[String; 2], p: &str| {
        common::branch_distance(&one, &seg[0], p) + common::branch_distance(&one, p, &seg[1])
            == common::branch_distance(&one, &seg[0], &seg[1])
    };
    let mut last: Option<BigRational> = None;
    for p in &w.chain {
        let (x, branch) = common::branch(p);
        assert_eq!(branch, 1);
        assert!(&x * common::q(2, 1) < one);
        assert!(on(&w.segments["s1"], p) && on(&w.segments["s2"], p));
        assert!(last.is_none_or(|l| l < x));
        last = Some(x);
    }
}

#[test]
fn concat_witnesses_agree_with_the_oracles() {
    let x2 = parse(GroupId::Rational, "x2");
    let w = run(CheckName::Axiom2, &x2, 0, 50).witness.unwrap();
    let (p, q, r) = (&w.points["p"], &w.points["q"], &w.points["r"]);
    let total = common::polar_distance(p, q) + common::polar_distance(q, r);
    assert_eq!(total, common::rational(&w.values["D1 + D2"]));
    assert_eq!(common::polar_distance(p, r), common::rational(&w.values["d(p,r)"]));
    assert_ne!(total, common::polar_distance(p, r));
    assert_eq!((p.as_str(), q.as_str(), r.as_str()), ("2,0", "1,0", "2,1"));
    assert_eq!((w.values["D1 + D2"].as_str(), w.values["d(p,r)"].as_str()), ("3", "2"));

    let x3 = parse(GroupId::Int, "x3:1");
    let w = run(CheckName::Axiom2, &x3, 0, 50).witness.unwrap();
    let one = common::q(1, 1);
    let (p, q, r) = (&w.points["p"], &w.points["q"], &w.points["r"]);
    assert_eq!((p.as_str(), q.as_str(), r.as_str()), ("0", "1", "2"));
    assert_eq!(common::circle_distance(&one, p, r), one);
    assert_eq!(common::circle_distance(&one, p, q) + common::circle_distance(&one, q, r), common::q(2, 1));
}

#[test]
fn grid_witness_is_a_second_geodesic() {
    let grid = parse(GroupId::Int, "l1grid:1");
    let w = run(CheckName::Unique, &grid, 0, 10).witness.unwrap();
    assert_eq!(w.relation, Relation::SecondGeodesic);
    let (p, q, m) = (&w.points["p"], &w.points["q"], &w.points["m"]);
    assert_eq!((p.as_str(), q.as_str(), m.as_str()), ("0;0", "1;1", "0;1"));
    assert_eq!(common::grid_distance(p, m) + common::grid_distance(m, q), common::grid_distance(p, q));
    let fork = run(CheckName::Fork, &grid, 0, 10);
    assert!(!fork.pass && fork.note.is_some());
}

#[test]
fn star_construction_values() {
    let star = parse(GroupId::Rational, "tree:star");
    let p = |s: &str| star.parse_point(s).unwrap();
    let c = axiom3_construction(&star, &p("u"), &p("v"), &p("w")).unwrap().unwrap();
    let two = GroupElement::from_int(GroupId::Rational, 2);
    let one = GroupElement::one(GroupId::Rational);
    assert_eq!((&c.a, &c.b, &c.r, &c.ell), (&two, &two, &one, &one));
    assert_eq!(c.z_tilde, p("w"));
    assert_eq!(c.y_prime, p("c"));
    assert_eq!(c.y_prime, c.z_prime);
    assert!(c.identities_hold());
    let seg = star.geodesic(&p("u"), &p("v")).unwrap();
    let meet = seg.intersect_at_common_endpoint(&star.geodesic(&p("u"), &p("w")).unwrap(), &p("u")).unwrap();
    assert_eq!(meet.segment_end(), Some(&c.y_prime));
    assert!(run(CheckName::Axiom3, &star, 0, 200).pass);
}

#[test]
fn fork_examples() {
    let star = parse(GroupId::Rational, "tree:star");
    let p = |s: &str| star.parse_point(s).unwrap();
    let (a, b) = fork_at(&star, &p("u"), &p("v"), &p("c"), &p("w")).unwrap();
    assert_eq!(a, Intersection::DisjointBeyond(p("c")));
    assert_eq!(b, Intersection::DisjointBeyond(p("c")));

    let iv = parse(GroupId::Int, "interval:0..5");
    let p = |s: &str| iv.parse_point(s).unwrap();
    let (a, b) = fork_at(&iv, &p("0"), &p("5"), &p("2"), &p("4")).unwrap();
    assert_eq!(a, Intersection::DisjointBeyond(p("2")));
    assert_eq!(b.segment_end(), Some(&p("4")));
}

#[test]
fn condition_a_separates_the_groups() {
    let cfg = CheckConfig::new(0, 200);
    for g in GroupId::ALL {
        let report = condition_a_probe(g, &cfg);
        let has_max = matches!(g, GroupId::Int | GroupId::Rational | GroupId::Dyadic);
        assert_eq!(report.pass, has_max, "{g}");
        if let Some(w) = report.witness {
            assert!(common::chain_ok(g.as_str(), &w.values["lambda0"], &w.chain));
        }
    }
}

#[test]
fn reports_are_deterministic_and_serializable() {
    let space = parse(GroupId::Triadic, "x1:1");
    for name in SPACE_CHECKS {
        let a = run(name, &space, 9, 100);
        assert_eq!(a, run(name, &space, 9, 100));
        let json = serde_json::to_string(&a).unwrap();
        let back: CheckReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }
}

#[test]
fn trees_pass_everything() {
    let spaces = [
        parse(GroupId::Int, "interval:0..10"),
        parse(GroupId::Triadic, "tree:star"),
        parse(GroupId::Zsqrt2, "interval:-1,1..3,-1"),
        parse(GroupId::LexInt, "tree:star"),
    ];
    for space in spaces {
        for name in SPACE_CHECKS {
            let report = run(name, &space, 1, 300);
            assert!(report.pass, "{name} on {}: {:?}", space.describe(), report.witness);
        }
    }
}
