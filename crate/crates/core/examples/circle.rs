//! A circle of length 3 over ℤ: segments are arcs shorter than half the
//! circle, so `[0,1] ∪ [1,2]` is not a segment.
//!
//! ```bash
//! cargo run --example circle
//! ```

use lambda_trees::checker::{check_axiom1, check_axiom2, check_axiom3, CheckConfig};
use lambda_trees::group::GroupElement;
use lambda_trees::space::Space;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x3 = Space::x3(GroupElement::int(1))?;
    let v = |s: &str| x3.parse_point(s);
    let (a, b, c) = (v("0")?, v("1")?, v("2")?);
    let s1 = x3.geodesic(&a, &b)?;
    let s2 = x3.geodesic(&b, &c)?;
    println!("d(0,1) + d(1,2) = {}, d(0,2) = {}", s1.length() + s2.length(), x3.distance(&a, &c)?);
    println!("[0,1] ∪ [1,2] is a segment: {}", s1.concat(&s2)?.is_some());

    let cfg = CheckConfig::new(0, 1000);
    for (name, report) in [
        ("axiom (1)", check_axiom1(&x3, &cfg)),
        ("axiom (2)", check_axiom2(&x3, &cfg)),
        ("axiom (3)", check_axiom3(&x3, &cfg)),
    ] {
        println!("{name}: {}", report.witness.map_or("pass".into(), |w| format!("fail, {}", w.statement)));
    }
    Ok(())
}
