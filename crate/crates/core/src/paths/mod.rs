//! Long paths and Hamilton cycles through prescribed structure.

mod dfs;
mod posa;

pub use dfs::{
    dfs_long_path, dfs_long_path_within, monochromatic_cycle, near_monochromatic_path,
    near_monochromatic_path_within,
};
pub use posa::{hamilton_with_forest_search, posa_hamilton_with_forest};

use crate::error::{Error, Result};
use crate::graph::{Colour, Graph, PathSeq, Vertex};

/// Vertex-disjoint paths; `ℓ` is their total edge count.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathForest {
    paths: Vec<PathSeq>,
}

impl PathForest {
    pub fn new(paths: Vec<PathSeq>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for p in &paths {
            if p.is_empty() {
                return Err(Error::InvalidPath("empty path in forest".into()));
            }
            for &v in p.vertices() {
                if !seen.insert(v) {
                    return Err(Error::InvalidPath(format!("vertex {v} in two forest paths")));
                }
            }
        }
        Ok(Self { paths })
    }

    /// Forest of single-edge paths.
    pub fn from_edges(edges: &[(Vertex, Vertex)]) -> Result<Self> {
        Self::new(edges.iter().map(|&(u, v)| PathSeq::new(vec![u, v])).collect::<Result<_>>()?)
    }

    pub fn paths(&self) -> &[PathSeq] {
        &self.paths
    }

    /// Total number of edges `ℓ`.
    pub fn edge_count(&self) -> usize {
        self.paths.iter().map(PathSeq::edge_count).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.paths.iter().flat_map(PathSeq::edges)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.paths.iter().try_for_each(|p| p.validate(g))
    }
}

/// A path whose edges are all one colour except `off_colour` of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearMonoPath {
    pub path: PathSeq,
    pub colour: Colour,
    pub off_colour: usize,
}

/// Joins `pa` to `pb` through an `r`-edge between the last `window` vertices
/// of `pa` and the first `window` of `pb`. The vertices cut off beyond the
/// chosen edge are returned as discarded.
///
/// With `i` the offset inside `pa`'s window and `j` inside `pb`'s, exactly
/// `(window - 1 - i) + j` vertices are discarded; the edge minimising that
/// number is chosen, lowest vertex pair first on ties.
pub fn connect_windows(
    pa: &PathSeq,
    pb: &PathSeq,
    r: &Graph,
    window: usize,
) -> Result<(PathSeq, Vec<Vertex>)> {
    let (la, lb) = (pa.len(), pb.len());
    if window == 0 || window > la.min(lb) {
        return Err(Error::PreconditionViolated(format!(
            "window {window} outside 1..={}",
            la.min(lb)
        )));
    }
    let in_b: std::collections::HashSet<Vertex> = pb.vertices().iter().copied().collect();
    if let Some(&v) = pa.vertices().iter().find(|v| in_b.contains(v)) {
        return Err(Error::PreconditionViolated(format!("paths share vertex {v}")));
    }
    let a = &pa.vertices()[la - window..];
    let b = &pb.vertices()[..window];
    let mut best: Option<(usize, Vertex, Vertex, usize, usize)> = None;
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            if r.has_edge(x, y) {
                let key = (window - 1 - i + j, x, y, i, j);
                if best.is_none_or(|b| (key.0, key.1, key.2) < (b.0, b.1, b.2)) {
                    best = Some(key);
                }
            }
        }
    }
    let (_, _, _, i, j) = best.ok_or(Error::NoConnectingEdge)?;
    let cut_a = la - window + i + 1;
    let mut joined = pa.vertices()[..cut_a].to_vec();
    joined.extend_from_slice(&pb.vertices()[j..]);
    let mut discarded = pa.vertices()[cut_a..].to_vec();
    discarded.extend_from_slice(&pb.vertices()[..j]);
    Ok((PathSeq::from_vec_unchecked(joined), discarded))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> PathSeq {
        PathSeq::new(v.to_vec()).unwrap()
    }

    #[test]
    fn connect_simple() {
        let r = Graph::from_edges(4, [(1, 2)]).unwrap();
        let (joined, discarded) = connect_windows(&p(&[0, 1]), &p(&[2, 3]), &r, 1).unwrap();
        assert_eq!(joined.vertices(), &[0, 1, 2, 3]);
        assert!(discarded.is_empty());
        assert_eq!(
            connect_windows(&p(&[0, 1]), &p(&[2, 3]), &Graph::empty(4), 1),
            Err(Error::NoConnectingEdge)
        );
    }

    #[test]
    fn discard_count_matches_offsets() {
        let pa = p(&[0, 1, 2, 3, 4]);
        let pb = p(&[5, 6, 7, 8, 9]);
        let w = 3;
        for i in 0..w {
            for j in 0..w {
                let x = pa.vertices()[5 - w + i];
                let y = pb.vertices()[j];
                let r = Graph::from_edges(10, [(x, y)]).unwrap();
                let (joined, discarded) = connect_windows(&pa, &pb, &r, w).unwrap();
                assert_eq!(discarded.len(), w - 1 - i + j);
                assert_eq!(joined.len() + discarded.len(), 10);
                let mut union = Graph::path(5).edges().to_vec();
                union.extend([(5, 6), (6, 7), (7, 8), (8, 9), (x.min(y), x.max(y))]);
                joined.validate(&Graph::from_edges(10, union).unwrap()).unwrap();
            }
        }
    }

    #[test]
    fn forest_basics() {
        let f = PathForest::new(vec![p(&[0, 1, 2]), p(&[4, 3])]).unwrap();
        assert_eq!(f.edge_count(), 3);
        assert!(PathForest::new(vec![p(&[0, 1]), p(&[1, 2])]).is_err());
    }
}
