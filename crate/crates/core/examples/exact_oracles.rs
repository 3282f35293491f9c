//! Brute-force references: Hamilton cycle counts, `h_r` of tiny graphs and
//! maximum matchings.

use hamcolour::graph::Graph;
use hamcolour::oracle::{enumerate_hamilton_cycles, exact_hr_tiny, max_matching_exact};

fn petersen() -> Graph {
    let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    e.extend((0..5).map(|i| (i, i + 5)));
    e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    Graph::from_edges(10, e).expect("petersen")
}

fn main() -> hamcolour::Result<()> {
    for n in 4..=8 {
        println!("K_{n}: {} Hamilton cycles", enumerate_hamilton_cycles(&Graph::complete(n))?.len());
    }
    println!("Petersen: {} Hamilton cycles", enumerate_hamilton_cycles(&petersen())?.len());
    println!("Petersen: maximum matching {}", max_matching_exact(&petersen()).len());
    for n in [4, 5] {
        let h = exact_hr_tiny(&Graph::complete(n), 2)?;
        println!("h_2(K_{n}) = {}/{}", h.numerator, h.denominator);
    }
    Ok(())
}
