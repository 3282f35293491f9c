//! Threads a Hamilton cycle through a prescribed path forest in a graph with
//! minimum degree at least `(n + l) / 2`.

use hamcolour::graph::{is_hamilton_cycle, min_degree, Graph};
use hamcolour::models::{gnp, union, Seed};
use hamcolour::paths::{posa_hamilton_with_forest, PathForest};

fn main() -> hamcolour::Result<()> {
    let n = 40;
    // a Hamilton cycle plus dense random edges keeps the degree high
    let g = union(&Graph::cycle(n), &gnp(n, 0.75, &Seed::new(3, "posa")))?;
    // chords far from the planted cycle, pairwise disjoint
    let mut chords: Vec<(usize, usize)> = Vec::new();
    for &(u, v) in g.edges() {
        let far = v - u > 5 && v - u < n - 5;
        if far && chords.len() < 4 && chords.iter().all(|&(a, b)| ![a, b].contains(&u) && ![a, b].contains(&v)) {
            chords.push((u, v));
        }
    }
    let forest = PathForest::from_edges(&chords)?;
    let l = forest.edge_count();
    println!("min degree {}, need {}", min_degree(&g), (n + l).div_ceil(2));

    let cycle = posa_hamilton_with_forest(&g, &forest)?;
    assert!(is_hamilton_cycle(&g, &cycle));
    assert!(forest.edges().all(|(u, v)| cycle.contains_edge(u, v)));
    println!("cycle through {chords:?}: {:?}", cycle.vertices());
    Ok(())
}
