//! On a random tree over ℚ the half-maximum construction recovers the
//! Gromov product: `d(x, y′) = (d(x,y) + d(x,z) − d(y,z)) / 2`.
//!
//! ```bash
//! cargo run --example tree_gromov
//! ```

use lambda_trees::checker::{axiom3_construction, check_axiom3, CheckConfig};
use lambda_trees::group::{derive_rng, ElementSampler, GroupId};
use lambda_trees::space::{Space, Tree};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sampler = ElementSampler::for_group(GroupId::Rational);
    let tree = Tree::random(GroupId::Rational, 10, &sampler, &mut derive_rng(7, 0, 0));
    print!("{}", tree.to_edge_list());
    let space = Space::tree(tree);

    let pts = space.sample(7, 9);
    for t in pts.chunks(3) {
        let (x, y, z) = (&t[0], &t[1], &t[2]);
        let c = axiom3_construction(&space, x, y, z)?.expect("ℚ is 2-divisible");
        let twice = &(&space.distance(x, y)? + &space.distance(x, z)?) - &space.distance(y, z)?;
        let gromov = twice.try_halve().expect("ℚ is 2-divisible");
        println!(
            "x = {}: a − ℓ = {}, Gromov product = {}, y′ = {}",
            space.format_point(x),
            c.overlap(),
            gromov,
            space.format_point(&c.y_prime)
        );
    }

    let report = check_axiom3(&space, &CheckConfig::new(0, 1000));
    println!("axiom (3): pass = {}, stats = {:?}", report.pass, report.stats);
    Ok(())
}
