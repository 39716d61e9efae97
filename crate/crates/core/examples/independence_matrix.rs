//! Which axioms each built-in space satisfies, from 1000 seeded samples.
//!
//! ```bash
//! cargo run --release --example independence_matrix
//! ```

use lambda_trees::checker::{run_check, CheckConfig, CheckName};
use lambda_trees::group::GroupId;
use lambda_trees::space::Space;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spaces = [
        (GroupId::Int, "interval:0..10"),
        (GroupId::Rational, "tree:star"),
        (GroupId::Triadic, "x1:1"),
        (GroupId::Rational, "x2"),
        (GroupId::Int, "x3:1"),
        (GroupId::Int, "l1grid:1"),
    ];
    let checks = [CheckName::Metric, CheckName::Axiom1, CheckName::Axiom2, CheckName::Axiom3, CheckName::Unique, CheckName::Fork];
    let cfg = CheckConfig::new(0, 1000);

    print!("{:<22}", "");
    for c in checks {
        print!("{:>8}", c.as_str());
    }
    println!();
    for (group, spec) in spaces {
        let space = Space::parse_spec(group, spec)?;
        print!("{:<22}", format!("{spec} / {group}"));
        for c in checks {
            let report = run_check(c, group, Some(&space), &cfg)?;
            print!("{:>8}", if report.pass { "pass" } else { "FAIL" });
        }
        println!();
    }
    Ok(())
}
