mod common;

use std::cmp::Ordering;

use lambda_trees::checker::no_max_witness;
use lambda_trees::group::{GroupElement, GroupError, GroupId, HalfMax};
use proptest::prelude::*;

fn element(group: GroupId) -> BoxedStrategy<GroupElement> {
    let n = -5000i64..5000;
    match group {
        GroupId::Int => n.prop_map(GroupElement::int).boxed(),
        GroupId::Rational => (n, 1i64..500).prop_map(|(p, q)| GroupElement::rational(p, q).unwrap()).boxed(),
        GroupId::Dyadic => (n, 0u32..12).prop_map(|(p, k)| GroupElement::dyadic(p, k)).boxed(),
        GroupId::Triadic => (n, 0u32..8).prop_map(|(p, k)| GroupElement::triadic(p, k)).boxed(),
        GroupId::Zsqrt2 => (n.clone(), n).prop_map(|(a, b)| GroupElement::zsqrt2(a, b)).boxed(),
        GroupId::LexInt => (-3i64..3, n).prop_map(|(x, y)| GroupElement::lex(x, y)).boxed(),
    }
}

fn any_group() -> impl Strategy<Value = GroupId> {
    prop::sample::select(GroupId::ALL.to_vec())
}

fn triple() -> impl Strategy<Value = (GroupElement, GroupElement, GroupElement)> {
    any_group().prop_flat_map(|g| (element(g), element(g), element(g)))
}

fn oracle(e: &GroupElement) -> common::Value {
    common::Value::read(e.group().as_str(), &e.to_string())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn order_is_total_transitive_and_translation_invariant((u, v, w) in triple()) {
        let c = u.compare(&v).unwrap();
        prop_assert_eq!(c, v.compare(&u).unwrap().reverse());
        prop_assert_eq!(c == Ordering::Equal, u == v);
        if u <= v && v <= w {
            prop_assert!(u <= w);
        }
        if u <= v {
            prop_assert!(&u + &w <= &v + &w);
        }
    }

    #[test]
    fn order_agrees_with_the_reference_values((u, v, _) in triple()) {
        prop_assert_eq!(u.compare(&v).unwrap(), oracle(&u).cmp(&oracle(&v)));
    }

    #[test]
    fn addition_is_an_abelian_group((u, v, w) in triple()) {
        let zero = GroupElement::zero(u.group());
        prop_assert_eq!(&u + &v, &v + &u);
        prop_assert_eq!(&(&u + &v) + &w, &u + &(&v + &w));
        prop_assert_eq!(&u + &zero, u.clone());
        prop_assert_eq!(&u + &(-&u), zero);
        prop_assert_eq!(&u - &v, &u + &(-&v));
        prop_assert!(!u.abs().is_negative());
    }

    #[test]
    fn literals_round_trip((u, _, _) in triple()) {
        let text = u.to_string();
        prop_assert_eq!(GroupElement::parse(u.group(), &text).unwrap(), u.clone());
        prop_assert_eq!(GroupElement::parse(u.group(), &text).unwrap().to_string(), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn try_halve_is_sound((t, c, _) in triple()) {
        match t.try_halve() {
            Some(h) => prop_assert_eq!(&h + &h, t),
            None => prop_assert_ne!(&c + &c, t),
        }
    }

    #[test]
    fn max_half_is_sound((lambda0, s, _) in triple()) {
        prop_assume!(!lambda0.is_zero());
        let lambda0 = lambda0.abs();
        let in_s = |t: &GroupElement| !t.is_negative() && t.double() <= lambda0;
        match lambda0.max_half().unwrap() {
            HalfMax::Max(m) => {
                prop_assert!(in_s(&m));
                if in_s(&s) {
                    prop_assert!(s <= m);
                }
            }
            HalfMax::None => {
                let chain = no_max_witness(lambda0.group(), &lambda0, 20).unwrap();
                let lits: Vec<String> = chain.elements.iter().map(ToString::to_string).collect();
                prop_assert!(common::chain_ok(lambda0.group().as_str(), &lambda0.to_string(), &lits));
                prop_assert_eq!(lits.len(), 20);
            }
        }
    }
}

#[test]
fn zsqrt2_order_matches_a_rational_sandwich_of_root_two() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10_000 {
        let mut draw = || rng.gen_range(-100_000i64..100_000);
        let (a, b, c, d) = (draw(), draw(), draw(), draw());
        let (u, v) = (GroupElement::zsqrt2(a, b), GroupElement::zsqrt2(c, d));
        let want = common::sign_sqrt2(&(a - c).into(), &(b - d).into());
        assert_eq!(u.compare(&v).unwrap(), want, "{u} vs {v}");
    }
}

#[test]
fn max_half_on_integers_matches_enumeration() {
    for n in 1..=200 {
        let want = common::brute_max_half(n).map(GroupElement::int);
        assert_eq!(GroupElement::int(n).max_half().unwrap().max(), want.as_ref(), "λ0 = {n}");
    }
}

#[test]
fn triadic_chain_is_the_closed_form() {
    let chain = no_max_witness(GroupId::Triadic, &GroupElement::triadic(1, 0), 20).unwrap();
    for (k, t) in (1u32..=20).zip(&chain.elements) {
        let three_k = 3i64.pow(k);
        assert_eq!(common::rational(&t.to_string()), common::q((three_k - 1) / 2, three_k));
    }
    assert!(chain.verify());
}

#[test]
fn root_two_has_no_half_maximum_near_any_candidate() {
    // Every member of S = {t : 0 ≤ 2t ≤ √2} in the box |a|, |b| ≤ 50 is beaten
    // by a larger member of S.
    let lambda0 = GroupElement::zsqrt2(0, 1);
    assert_eq!(lambda0.max_half().unwrap(), HalfMax::None);
    let l = common::Value::read("zsqrt2", "0,1");
    let mut members = 0;
    for a in -50..=50 {
        for b in -50..=50 {
            let c = common::Value::Surd(a.into(), b.into());
            if c.cmp(&c.zero_like()) == Ordering::Less || c.double().cmp(&l) == Ordering::Greater {
                continue;
            }
            members += 1;
            let cand = GroupElement::zsqrt2(a, b);
            let better = lambda0.half_chain(Some(&cand), 1).unwrap().remove(0);
            let lit = [cand.to_string(), better.to_string()];
            assert!(common::chain_ok("zsqrt2", "0,1", &lit), "{cand} is not beaten by {better}");
        }
    }
    assert!(members > 50);
}

#[test]
fn spec_examples() {
    assert_eq!(GroupElement::int(3).compare(&GroupElement::int(5)).unwrap(), Ordering::Less);
    assert_eq!(GroupElement::zsqrt2(1, 1).compare(&GroupElement::zsqrt2(2, 0)).unwrap(), Ordering::Greater);
    assert_eq!(GroupElement::lex(0, 7).compare(&GroupElement::lex(1, -100)).unwrap(), Ordering::Less);
    assert_eq!(&GroupElement::triadic(1, 1) + &GroupElement::triadic(1, 1), GroupElement::triadic(2, 1));
    assert_eq!(&GroupElement::zsqrt2(1, 1) + &GroupElement::zsqrt2(1, -1), GroupElement::zsqrt2(2, 0));
    assert_eq!(&GroupElement::int(2) + &GroupElement::int(-5), GroupElement::int(-3));
    assert_eq!(GroupElement::triadic(2, 1).try_halve(), Some(GroupElement::triadic(1, 1)));
    assert_eq!(GroupElement::triadic(1, 1).try_halve(), None);
    assert_eq!(GroupElement::dyadic(1, 0).try_halve(), Some(GroupElement::dyadic(1, 1)));
    assert_eq!(GroupElement::int(5).max_half().unwrap(), HalfMax::Max(GroupElement::int(2)));
    assert_eq!(
        GroupElement::from_int(GroupId::Rational, 1).max_half().unwrap(),
        HalfMax::Max(GroupElement::rational(1, 2).unwrap())
    );
    assert_eq!(GroupElement::triadic(1, 0).max_half().unwrap(), HalfMax::None);
    assert_eq!(GroupElement::lex(1, 0).max_half().unwrap(), HalfMax::None);
    assert!(matches!(GroupElement::int(0).max_half(), Err(GroupError::Precondition(_))));

    let t = GroupElement::parse(GroupId::Triadic, "6/3^2").unwrap();
    assert_eq!(t.to_string(), "2/3^1");
    assert_eq!(GroupElement::parse(GroupId::Zsqrt2, "2,-1").unwrap(), GroupElement::zsqrt2(2, -1));
    assert!(matches!(GroupElement::parse(GroupId::Rational, "3/0"), Err(GroupError::Parse(_))));
    assert!(matches!(
        GroupElement::int(1).compare(&GroupElement::rational(1, 1).unwrap()),
        Err(GroupError::Mixed(..))
    ));
}
