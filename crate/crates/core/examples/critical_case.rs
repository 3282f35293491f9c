//! At the critical density the host alone is balanced; a matching of random
//! edges inside the small side supplies the bias, and the count of
//! majority-colour edges is bookkept against its lower bound.

use hamcolour::adversary::PartitionedColouringPlan;
use hamcolour::graph::EdgeColouring;
use hamcolour::models::{complete_split, gnm, split_independent_side, union, Seed};
use hamcolour::structure::{critical_alpha, critical_biased_hamilton, CriticalParams};
use rand::Rng;

fn main() -> hamcolour::Result<()> {
    let (n, r, m) = (120, 2, 20);
    let alpha = critical_alpha(r);
    let host = complete_split(n, alpha);
    let seed = Seed::new(4, "critical");
    let random = gnm(n, m, &seed.child("random", 0))?;

    let plan = PartitionedColouringPlan::new(n, r, &split_independent_side(n, alpha))?;
    let mut rng = seed.rng(0);
    let colouring = EdgeColouring::from_fn(union(&host, &random)?, r, |u, v| {
        if host.has_edge(u, v) {
            plan.colour_of(u, v)
        } else {
            rng.gen_range(1..=r)
        }
    })?;

    let out = critical_biased_hamilton(&host, &random, &colouring, &CriticalParams::scaled(2, 4))?;
    println!("classifier: {}, bias {}", out.classifier, out.bias);
    if let Some(c) = &out.counting {
        println!(
            "|W| = {}, forced matching {}, d = {}, q = {}, count {} >= floor {}",
            c.w.len(),
            c.matching.len(),
            c.d,
            c.q,
            c.count,
            c.floor
        );
    }
    Ok(())
}
