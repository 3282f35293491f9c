//! Depth-first long paths in a sparse random graph and near-monochromatic
//! paths in a random colouring, checked against the exact longest path.

use hamcolour::graph::{is_k_joined, EdgeColouring};
use hamcolour::models::{gnp, Seed};
use hamcolour::oracle::longest_path_exact;
use hamcolour::paths::{dfs_long_path, near_monochromatic_path};
use rand::Rng;

fn main() -> hamcolour::Result<()> {
    let seed = Seed::new(5, "paths");
    let g = gnp(14, 0.45, &seed.child("small", 0));
    let k = 3;
    let path = dfs_long_path(&g, k);
    let exact = longest_path_exact(&g)?;
    println!(
        "n = 14: dfs path {} vertices, longest {}, {k}-joined: {}",
        path.len(),
        exact.len(),
        is_k_joined(&g, k)?.holds()
    );

    let big = gnp(2000, 8.0 / 2000.0, &seed.child("big", 0));
    let path = dfs_long_path(&big, 0);
    println!("n = 2000, average degree 8: dfs path {} vertices", path.len());

    let mut rng = seed.rng(1);
    let coloured = EdgeColouring::from_fn(big, 2, |_, _| rng.gen_range(1..=2))?;
    let near = near_monochromatic_path(&coloured, 200, 8)?;
    println!(
        "near-monochromatic path: {} vertices in colour {}, {} off-colour edges",
        near.path.len(),
        near.colour,
        near.off_colour
    );
    Ok(())
}
