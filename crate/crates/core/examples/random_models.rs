//! Seeded graph models: the same seed always gives the same graph.

use hamcolour::graph::min_degree;
use hamcolour::models::{complete_split, gnm, gnp, random_min_degree_host, union, Seed};

fn main() -> hamcolour::Result<()> {
    let seed = Seed::new(2024, "models");
    let n = 60;

    let sparse = gnm(n, 40, &seed.child("gnm", 0))?;
    let dense = gnp(n, 0.1, &seed.child("gnp", 0));
    let split = complete_split(n, 0.4);
    let host = random_min_degree_host(n, 0.3, &seed.child("host", 0))?;
    println!("G(n, m):         {} edges", sparse.edge_count());
    println!("G(n, p):         {} edges", dense.edge_count());
    println!("complete split:  {} edges, min degree {}", split.edge_count(), min_degree(&split));
    println!("dense host:      {} edges, min degree {}", host.edge_count(), min_degree(&host));

    let perturbed = union(&host, &sparse)?;
    println!("host + G(n, m):  {} edges", perturbed.edge_count());

    let again = gnm(n, 40, &seed.child("gnm", 0))?;
    assert_eq!(sparse, again);
    println!("reseeding reproduces the same G(n, m)");
    Ok(())
}
