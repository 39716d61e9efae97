//! The polar-Manhattan space over ℚ: uniquely geodesic and satisfying
//! axiom (3), but two segments meeting only at `(1,0)` do not join into one.
//!
//! ```bash
//! cargo run --example polar_manhattan
//! ```

use lambda_trees::checker::{check_axiom2, check_axiom3, check_unique, CheckConfig};
use lambda_trees::group::GroupId;
use lambda_trees::space::Space;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x2 = Space::x2(GroupId::Rational)?;
    let p = x2.parse_point("1,0")?;
    let r = x2.parse_point("2,1")?;
    let s = x2.geodesic(&p, &r)?;
    println!("d(p, r) = {}", s.length());
    for t in ["1/2", "1", "3/2", "2"] {
        let t = lambda_trees::group::GroupElement::parse(GroupId::Rational, t)?;
        println!("  s({t}) = {}", x2.format_point(&s.eval(&t)?));
    }

    let cfg = CheckConfig::new(0, 2000);
    println!("unique geodesics: {}", check_unique(&x2, &cfg).pass);
    println!("axiom (3): {}", check_axiom3(&x2, &cfg).pass);
    let report = check_axiom2(&x2, &cfg);
    let w = report.witness.expect("axiom (2) fails");
    println!("axiom (2) fails: s1 = {:?}, s2 = {:?}", w.segments["s1"], w.segments["s2"]);
    println!("  {}", w.statement);
    Ok(())
}
