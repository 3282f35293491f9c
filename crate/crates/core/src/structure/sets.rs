//! The exceptional sets `X_c`, `Y_c` and c-good matchings inside a
//! neighbourhood.

use rayon::prelude::*;

use crate::graph::{Colour, EdgeColouring, Graph, Matching, Vertex};
use crate::matching::{matching_size_capped, max_matching};

/// `N(v)` and `N_c(v)` as vertex masks.
pub(crate) struct Neighbourhood {
    pub(crate) inside: Vec<bool>,
    pub(crate) c_side: Vec<bool>,
}

impl Neighbourhood {
    pub(crate) fn new(colouring: &EdgeColouring, v: Vertex, c: Colour) -> Self {
        let g = colouring.graph();
        let mut inside = vec![false; g.n()];
        let mut c_side = vec![false; g.n()];
        for &w in g.neighbours(v) {
            inside[w] = true;
            c_side[w] = colouring.colour(v, w) == Some(c);
        }
        Self { inside, c_side }
    }
}

/// `G(v, c)`: `G[N(v)]` minus the edges with both ends in `N_c(v)`.
pub fn outside_c_neighbourhood(colouring: &EdgeColouring, v: Vertex, c: Colour) -> Graph {
    let nb = Neighbourhood::new(colouring, v, c);
    colouring.filter_edges(|a, b, _| nb.inside[a] && nb.inside[b] && !(nb.c_side[a] && nb.c_side[b]))
}

/// Edges of `B(v, c)` that are not coloured `c`: the non-c edges joining
/// `N_c(v)` to the rest of `N(v)`.
pub fn non_c_boundary(colouring: &EdgeColouring, v: Vertex, c: Colour) -> Graph {
    let nb = Neighbourhood::new(colouring, v, c);
    colouring.filter_edges(|a, b, col| {
        nb.inside[a] && nb.inside[b] && nb.c_side[a] != nb.c_side[b] && col != c
    })
}

/// Edges `xy` of `G[N(v)]` that are c-good for `v`: either both ends lie
/// outside `N_c(v)`, or exactly one does and `xy` has colour `c`.
pub fn c_good_edges(colouring: &EdgeColouring, v: Vertex, c: Colour) -> Graph {
    let nb = Neighbourhood::new(colouring, v, c);
    colouring.filter_edges(|a, b, col| {
        nb.inside[a]
            && nb.inside[b]
            && match (nb.c_side[a], nb.c_side[b]) {
                (false, false) => true,
                (true, true) => false,
                _ => col == c,
            }
    })
}

/// Vertices whose `G(v, c)` has no matching of `threshold` edges.
pub fn compute_xc(colouring: &EdgeColouring, c: Colour, threshold: usize) -> Vec<Vertex> {
    let n = colouring.graph().n();
    (0..n)
        .into_par_iter()
        .filter(|&v| matching_size_capped(&outside_c_neighbourhood(colouring, v, c), threshold) < threshold)
        .collect()
}

/// Vertices whose `B(v, c)` has a matching of `threshold` edges, none of
/// colour `c`.
pub fn compute_yc(colouring: &EdgeColouring, c: Colour, threshold: usize) -> Vec<Vertex> {
    let n = colouring.graph().n();
    (0..n)
        .into_par_iter()
        .filter(|&v| matching_size_capped(&non_c_boundary(colouring, v, c), threshold) >= threshold)
        .collect()
}

/// A matching of at least `size` edges of `G[N(v)]`, each c-good for `v`.
///
/// Every edge of `G(v, c)` is c-good unless it is a non-c edge of `B(v, c)`,
/// so the maximum c-good matching is at least `ν(G(v,c)) - ν(B(v,c) minus c)`.
/// Taking the maximum matching of the c-good edges directly can only do
/// better than discarding from a matching of `G(v, c)`.
pub fn c_good_matching(colouring: &EdgeColouring, c: Colour, v: Vertex, size: usize) -> Option<Matching> {
    let m = max_matching(&c_good_edges(colouring, v, c));
    (m.len() >= size).then_some(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_c_good;
    use crate::models::{gnp, Seed};
    use rand::Rng;

    fn brute_matching(g: &Graph) -> usize {
        fn go(edges: &[(Vertex, Vertex)], used: u32) -> usize {
            match edges.split_first() {
                None => 0,
                Some((&(u, v), rest)) => {
                    let skip = go(rest, used);
                    if used & (1 << u) == 0 && used & (1 << v) == 0 {
                        skip.max(1 + go(rest, used | 1 << u | 1 << v))
                    } else {
                        skip
                    }
                }
            }
        }
        go(g.edges(), 0)
    }

    fn random_colouring(g: &Graph, r: Colour, seed: u64) -> EdgeColouring {
        let mut rng = Seed::new(seed, "col").rng(0);
        EdgeColouring::from_fn(g.clone(), r, |_, _| rng.gen_range(1..=r)).unwrap()
    }

    #[test]
    fn trivial_sets() {
        let k = Graph::complete(9);
        let mono = EdgeColouring::monochromatic(k.clone(), 2, 1).unwrap();
        assert_eq!(compute_xc(&mono, 1, 1), (0..9).collect::<Vec<_>>());
        // no edge of colour 2, so G(v, 2) is K_8 with a perfect matching of 4
        assert!(compute_xc(&mono, 2, 4).is_empty());
        assert!(compute_yc(&mono, 2, 1).is_empty());
    }

    #[test]
    fn constructed_y_member() {
        // v = 0; N_1(0) = {1, 2}, the rest of N(0) = {3, 4}; 13 and 24 colour 2
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (2, 4)]).unwrap();
        let col = EdgeColouring::from_fn(g, 2, |u, v| if u == 0 && v <= 2 { 1 } else { 2 }).unwrap();
        assert!(compute_yc(&col, 1, 2).contains(&0));
        assert!(!compute_yc(&col, 1, 3).contains(&0));
    }

    #[test]
    fn sets_match_brute_force() {
        for s in 0..100 {
            let n = 10 + (s as usize % 5);
            let g = gnp(n, 0.6, &Seed::new(s, "xy"));
            let col = random_colouring(&g, 2 + (s % 2) as u8, s);
            let t = 1 + (s as usize % 2);
            for c in 1..=col.r() {
                let xc = compute_xc(&col, c, 2 * t);
                let yc = compute_yc(&col, c, t);
                for v in 0..n {
                    let gx = brute_matching(&outside_c_neighbourhood(&col, v, c));
                    assert_eq!(xc.contains(&v), gx < 2 * t, "seed {s} v {v}");
                    let gy = brute_matching(&non_c_boundary(&col, v, c));
                    assert_eq!(yc.contains(&v), gy >= t, "seed {s} v {v}");
                }
            }
        }
    }

    #[test]
    fn good_matching_edges_are_good() {
        for s in 0..20 {
            let g = gnp(14, 0.7, &Seed::new(s, "good"));
            let col = random_colouring(&g, 2, s);
            for v in 0..14 {
                if let Some(m) = c_good_matching(&col, 1, v, 2) {
                    assert!(m.len() >= 2);
                    for &(x, y) in m.edges() {
                        assert!(is_c_good(&col, v, x, y, 1).unwrap());
                    }
                }
            }
        }
        // every edge off colour 1: all of G[N(v)] is good
        let k = EdgeColouring::monochromatic(Graph::complete(7), 2, 2).unwrap();
        assert_eq!(c_good_matching(&k, 1, 0, 3).map(|m| m.len()), Some(3));
        // all colour 1: nothing is good
        let k = EdgeColouring::monochromatic(Graph::complete(7), 2, 1).unwrap();
        assert_eq!(c_good_matching(&k, 1, 0, 1), None);
    }
}
