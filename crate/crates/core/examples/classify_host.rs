//! The structural classifier on a random colouring: either a certified
//! biased Hamilton cycle, a witness set, or a best-effort cycle.

use hamcolour::graph::EdgeColouring;
use hamcolour::models::{random_min_degree_host, Seed};
use hamcolour::structure::{classify_logged, critical_alpha, Thresholds};
use rand::Rng;

fn main() -> hamcolour::Result<()> {
    let (n, r, b) = (40, 2, 2);
    let seed = Seed::new(19, "classify");
    let host = random_min_degree_host(n, critical_alpha(r), &seed.child("host", 0))?;
    let mut rng = seed.rng(0);
    let colouring = EdgeColouring::from_fn(host, r, |_, _| rng.gen_range(1..=r))?;

    let th = Thresholds::scaled(2);
    let (out, log) = classify_logged(&colouring, b, &th);
    out.verify(&colouring, b, &th)?;
    println!("c* = {}, |X| = {}, |Y| = {}", log.c_star, log.x_size, log.y_size);
    for note in &log.notes {
        println!("  {note}");
    }
    match out.cycle() {
        Some(c) => println!("{} via {}: bias {}", out.kind(), c.route, c.bias),
        None => println!("{}", out.kind()),
    }
    Ok(())
}
