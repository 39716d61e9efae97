//! The three-branch space over ℤ[1/3] with λ0 = 1: axioms (1) and (2) hold
//! but two segments from `(0,1)` overlap in a set with no last point.
//!
//! ```bash
//! cargo run --example three_branches
//! ```

use lambda_trees::checker::{check_axiom2, check_axiom3, CheckConfig};
use lambda_trees::group::GroupElement;
use lambda_trees::space::{Intersection, Space};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x1 = Space::x1(GroupElement::triadic(1, 0))?;
    let x = x1.parse_point("0@1")?;
    let s1 = x1.geodesic(&x, &x1.parse_point("0@2")?)?;
    let s2 = x1.geodesic(&x, &x1.parse_point("0@3")?)?;

    for t in ["1/3^1", "2/3^1", "1"] {
        let t = GroupElement::parse(x1.group(), t)?;
        println!("s1({t}) = {}", x1.format_point(&s1.eval(&t)?));
    }

    if let Intersection::NoMax(set) = s1.intersect_at_common_endpoint(&s2, &x)? {
        let chain: Vec<String> = set.chain(6)?.iter().map(|p| x1.format_point(p)).collect();
        println!("s1 ∩ s2 climbs {} … without a last point", chain.join(", "));
    }

    let cfg = CheckConfig::new(0, 500);
    println!("axiom (2): {}", if check_axiom2(&x1, &cfg).pass { "pass" } else { "fail" });
    let report = check_axiom3(&x1, &cfg);
    println!("axiom (3): {}", report.witness.map_or("pass".into(), |w| w.statement));
    Ok(())
}
