//! The partitioned colourings on a complete split graph, audited by the exact
//! oracle: the balanced one admits no biased Hamilton cycle, and a few extra
//! random edges buy at most `2(r - 1)m` bias.

use hamcolour::adversary::{balanced_colouring, critical_colouring};
use hamcolour::models::{complete_split, gnm, split_independent_side, Seed};
use hamcolour::oracle::{enumerate_hamilton_cycles, max_bias_fixed_colouring};

fn main() -> hamcolour::Result<()> {
    let (n, r) = (12, 2);
    let alpha = 0.75;
    let split = complete_split(n, alpha);
    let a = split_independent_side(n, alpha);

    let balanced = balanced_colouring(&split, r, &a)?;
    let cycles = enumerate_hamilton_cycles(&split)?;
    let best = max_bias_fixed_colouring(&balanced)?;
    println!("{} Hamilton cycles, best bias {}", cycles.len(), best.report);

    for m in 1..=3 {
        let extra = gnm(n, m, &Seed::new(7, "extra").child("m", m as u64))?;
        let critical = critical_colouring(&split, &extra, r)?;
        let best = max_bias_fixed_colouring(&critical)?;
        let bound = 2 * (i64::from(r) - 1) * m as i64;
        println!("m = {m}: best bias {} (bound {bound})", best.report);
    }
    Ok(())
}
