//! Exact arithmetic and comparison in the six ordered groups.
//!
//! ```bash
//! cargo run --example group_arithmetic
//! ```

use lambda_trees::group::{GroupElement, GroupId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pairs = [
        (GroupId::Rational, "1/3", "-2/6"),
        (GroupId::Dyadic, "3/2^2", "5/2^3"),
        (GroupId::Triadic, "1/3^1", "2/3^2"),
        (GroupId::Zsqrt2, "-3,2", "1,0"),
        (GroupId::LexInt, "1:-100", "0:5"),
    ];
    for (group, a, b) in pairs {
        let a = GroupElement::parse(group, a)?;
        let b = GroupElement::parse(group, b)?;
        println!(
            "{group:>8}: {a} + {b} = {}, {a} − {b} = {}, order {:?}",
            &a + &b,
            &a - &b,
            a.compare(&b)?
        );
    }

    // -3 + 2√2 ≈ -0.17 is negative, decided with integers only.
    let e = GroupElement::zsqrt2(-3, 2);
    println!("sign of {e}: {:?}", e.signum());

    // Elements of different groups never compare.
    let mixed = GroupElement::int(1).compare(&GroupElement::dyadic(1, 0));
    println!("int vs dyadic: {}", mixed.unwrap_err());
    Ok(())
}
