//! The absorbing construction on a randomly perturbed graph: a dense host
//! plus random edges, coloured online by a random adversary.

use hamcolour::absorber::{perturbed_biased_hamilton, PipelineParams, RandomColouring};
use hamcolour::graph::is_hamilton_cycle;
use hamcolour::models::{random_min_degree_host, Seed};

fn main() -> hamcolour::Result<()> {
    let n = 300;
    let seed = Seed::new(11, "pipeline");
    let params = PipelineParams::default();
    let host = random_min_degree_host(n, params.alpha, &seed.child("host", 0))?;
    let mut adversary = RandomColouring { r: params.r, seed: seed.derive(1) };

    let out = perturbed_biased_hamilton(&host, &mut adversary, &params, &seed.child("run", 0))?;
    assert!(is_hamilton_cycle(&out.union, &out.cycle));
    println!("{}", out.transcript);
    println!(
        "{} random edges added, bias {} after {} attempt(s)",
        out.union.edge_count() - host.edge_count(),
        out.bias,
        out.attempts
    );
    Ok(())
}
