//! Condition (a): does `{t : 0 ≤ 2t ≤ λ0}` have a largest element?
//!
//! Prints the half-maximum for each group, or a witness chain climbing
//! towards the missing supremum, then runs the seeded probe.
//!
//! ```bash
//! cargo run --example half_maximum
//! ```

use lambda_trees::checker::{condition_a_probe, no_max_witness, CheckConfig};
use lambda_trees::group::{GroupElement, GroupId, HalfMax};

fn main() {
    let cases = [
        GroupElement::int(7),
        GroupElement::from_int(GroupId::Rational, 1),
        GroupElement::dyadic(3, 1),
        GroupElement::triadic(1, 0),
        GroupElement::zsqrt2(1, 1),
        GroupElement::lex(1, 0),
        GroupElement::lex(2, 7),
    ];
    for lambda0 in cases {
        let group = lambda0.group();
        match lambda0.max_half().expect("positive") {
            HalfMax::Max(m) => println!("{group:>8} λ0 = {lambda0}: maximum {m}"),
            HalfMax::None => {
                let chain = no_max_witness(group, &lambda0, 5).expect("no maximum");
                let shown: Vec<String> = chain.elements.iter().map(ToString::to_string).collect();
                println!("{group:>8} λ0 = {lambda0}: no maximum, {} < …", shown.join(" < "));
            }
        }
    }

    println!();
    let cfg = CheckConfig::new(0, 1000);
    for group in GroupId::ALL {
        let report = condition_a_probe(group, &cfg);
        println!("condition (a) over {group:<8} {}", if report.pass { "holds on every sample" } else { "fails" });
    }
}
