//! Colourings that cap the colour bias of every Hamilton cycle.
//!
//! Both constructions split an independent set `A` into parts `A_1..A_{r-1}`
//! of size `n/2r` and give colour `i` to every edge meeting `A_i`. Any
//! Hamilton cycle passes through each vertex of `A_i` exactly once, using two
//! edges, so colour `i` appears on exactly `2|A_i| = n/r` of its edges.

use crate::error::{Error, Result};
use crate::graph::{Colour, EdgeColouring, Graph, Vertex};
use crate::models;

/// Sorted independent set `A` and its equal parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedColouringPlan {
    pub r: Colour,
    pub a: Vec<Vertex>,
    pub parts: Vec<Vec<Vertex>>,
    part_of: Vec<Colour>,
}

impl PartitionedColouringPlan {
    /// Splits the first `(r-1)·n/2r` vertices of sorted `a` into `r-1` parts.
    pub fn new(n: usize, r: Colour, a: &[Vertex]) -> Result<Self> {
        if r < 2 {
            return Err(Error::TooFewColours(r));
        }
        let two_r = 2 * usize::from(r);
        if !n.is_multiple_of(two_r) {
            return Err(Error::IndivisibleN { n, two_r });
        }
        let part = n / two_r;
        let need = (usize::from(r) - 1) * part;
        let mut a = a.to_vec();
        a.sort_unstable();
        a.dedup();
        if let Some(&v) = a.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if a.len() < need {
            return Err(Error::SetTooSmall { got: a.len(), need });
        }
        let parts: Vec<Vec<Vertex>> = a[..need].chunks(part.max(1)).map(<[_]>::to_vec).collect();
        let mut part_of = vec![0; n];
        for (i, p) in parts.iter().enumerate() {
            for &v in p {
                part_of[v] = (i + 1) as Colour;
            }
        }
        Ok(Self { r, a, parts, part_of })
    }

    /// Colour of the pair `uv`: the smaller part index among its endpoints,
    /// or `r` when neither endpoint lies in a part.
    pub fn colour_of(&self, u: Vertex, v: Vertex) -> Colour {
        match (self.part_of[u], self.part_of[v]) {
            (0, 0) => self.r,
            (0, i) | (i, 0) => i,
            (i, j) => i.min(j),
        }
    }

    pub fn apply(&self, g: &Graph) -> Result<EdgeColouring> {
        EdgeColouring::from_fn(g.clone(), self.r, |u, v| self.colour_of(u, v))
    }
}

fn check_independent(g: &Graph, a: &[Vertex]) -> Result<()> {
    let mask = crate::graph::vertex_mask(g.n(), a);
    match g.edges().iter().find(|&&(u, v)| mask[u] && mask[v]) {
        Some(&(u, v)) => Err(Error::NotIndependent { set: "A", u, v }),
        None => Ok(()),
    }
}

/// Colouring in which every Hamilton cycle of `g` has exactly `n/r` edges of
/// each colour, provided `|A| = (r-1)n/2r`.
pub fn balanced_colouring(g: &Graph, r: Colour, a: &[Vertex]) -> Result<EdgeColouring> {
    let plan = PartitionedColouringPlan::new(g.n(), r, a)?;
    check_independent(g, &plan.a)?;
    plan.apply(g)
}

/// Colouring of `split ∪ extra` in which every Hamilton cycle has bias at most
/// `2(r-1)m`, where `m = e(extra)`.
///
/// `A` is read off `split` as its vertices of degree below `n-1`. Edges of
/// `extra` joining two different parts take the smaller part's colour.
pub fn critical_colouring(split: &Graph, extra: &Graph, r: Colour) -> Result<EdgeColouring> {
    let n = split.n();
    let union = models::union(split, extra)?;
    let m = extra.edge_count();
    let bound = n / usize::from(r.max(1));
    if m * usize::from(r.max(1)) >= n {
        return Err(Error::TooManyExtraEdges { m, bound });
    }
    let a: Vec<Vertex> = (0..n).filter(|&v| split.degree(v) + 1 < n).collect();
    check_independent(split, &a)?;
    let plan = PartitionedColouringPlan::new(n, r, &a)?;
    plan.apply(&union)
}

/// Greedy independent set, repeatedly taking a vertex of minimum remaining
/// degree (lowest index on ties). `None` when it falls short of `target`;
/// greedy is not exact, so `None` does not mean no such set exists.
pub fn find_large_independent_set(g: &Graph, target: usize) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut chosen = Vec::new();
    while let Some(v) = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (deg[v], v)) {
        chosen.push(v);
        let mut removed = vec![v];
        removed.extend(g.neighbours(v).iter().copied().filter(|&w| alive[w]));
        for &x in &removed {
            alive[x] = false;
        }
        for &x in &removed {
            for &y in g.neighbours(x) {
                if alive[y] {
                    deg[y] -= 1;
                }
            }
        }
    }
    chosen.sort_unstable();
    (chosen.len() >= target).then_some(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{complete_split, gnm, gnp, split_independent_side, Seed};
    use crate::oracle::{enumerate_hamilton_cycles, max_bias_fixed_colouring};

    fn independence_number(g: &Graph) -> usize {
        fn go(g: &Graph, cand: Vec<Vertex>, size: usize, best: &mut usize) {
            if size + cand.len() <= *best {
                return;
            }
            let Some((&v, rest)) = cand.split_first() else {
                *best = size;
                return;
            };
            let without_nbrs: Vec<Vertex> = rest.iter().copied().filter(|&w| !g.has_edge(v, w)).collect();
            go(g, without_nbrs, size + 1, best);
            go(g, rest.to_vec(), size, best);
        }
        let mut best = 0;
        go(g, (0..g.n()).collect(), 0, &mut best);
        best
    }

    #[test]
    fn balanced_split_has_zero_bias() {
        let g = complete_split(8, 0.75);
        let a = split_independent_side(8, 0.75);
        let col = balanced_colouring(&g, 2, &a).unwrap();
        let cycles = enumerate_hamilton_cycles(&g).unwrap();
        assert!(!cycles.is_empty());
        for c in &cycles {
            assert_eq!(crate::graph::cycle_colour_counts(c, &col).unwrap(), vec![4, 4]);
        }
        assert_eq!(max_bias_fixed_colouring(&col).unwrap().report.bias_numerator, 0);
        // colour 1 exactly on the edges meeting A_1 = {0, 1}
        for ((u, v), c) in col.edges_with_colours() {
            assert_eq!(c == 1, u < 2 || v < 2);
        }
    }

    #[test]
    fn balanced_on_star_is_total() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let col = balanced_colouring(&star, 2, &[1]).unwrap();
        assert_eq!(col.colours(), &[1, 2, 2]);
    }

    #[test]
    fn balanced_errors() {
        let g = complete_split(8, 0.75);
        assert_eq!(balanced_colouring(&g, 2, &[0]), Err(Error::SetTooSmall { got: 1, need: 2 }));
        assert!(matches!(balanced_colouring(&g, 2, &[0, 5]), Err(Error::NotIndependent { .. })));
        assert_eq!(
            balanced_colouring(&complete_split(10, 0.8), 3, &[0, 1]),
            Err(Error::IndivisibleN { n: 10, two_r: 6 })
        );
    }

    #[test]
    fn critical_bounds_small() {
        let split = complete_split(8, 0.75);
        let none = critical_colouring(&split, &Graph::empty(8), 2).unwrap();
        assert_eq!(max_bias_fixed_colouring(&none).unwrap().report.bias_numerator, 0);
        let extra = Graph::from_edges(8, [(0, 1)]).unwrap();
        let col = critical_colouring(&split, &extra, 2).unwrap();
        let mb = max_bias_fixed_colouring(&col).unwrap();
        // bias <= 2(r-1)m = 2, numerator over r = 2
        assert!(mb.report.bias_numerator <= 2 * 2);
        assert!(matches!(
            critical_colouring(&split, &gnm(8, 4, &Seed::new(1, "x")).unwrap(), 2),
            Err(Error::TooManyExtraEdges { .. })
        ));
    }

    #[test]
    fn critical_per_colour_floor() {
        for s in 0..5 {
            let split = complete_split(12, 2.0 / 3.0);
            let a_len = 4;
            // extra edges inside A
            let extra = gnm(a_len, 2, &Seed::new(s, "extra")).unwrap();
            let extra = Graph::from_edges(12, extra.edges().iter().copied()).unwrap();
            let col = critical_colouring(&split, &extra, 3).unwrap();
            let ranges = crate::oracle::OracleGuard::default().colour_count_ranges(&col).unwrap();
            for c in 0..2 {
                assert!(ranges[c].min + 2 * 2 >= 12 / 3);
            }
            let mb = max_bias_fixed_colouring(&col).unwrap();
            assert!(mb.report.bias_numerator <= 2 * 2 * 2 * 3);
        }
    }

    #[test]
    fn independent_set_examples() {
        assert_eq!(find_large_independent_set(&complete_split(8, 0.75), 2), Some(vec![0, 1]));
        assert_eq!(find_large_independent_set(&Graph::complete(5), 2), None);
        for s in 0..20 {
            let g = gnp(20, 0.2, &Seed::new(s, "ind"));
            let exact = independence_number(&g);
            if let Some(set) = find_large_independent_set(&g, 5) {
                assert!(set.len() >= 5 && set.len() <= exact);
                check_independent(&g, &set).unwrap();
            }
        }
    }
}
