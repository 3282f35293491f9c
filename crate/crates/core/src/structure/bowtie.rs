//! Bowties: two triangles sharing one vertex, used to absorb their centres in
//! two ways with a known difference in one colour.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{colour_bias, ordered, BiasReport, Colour, CycleSeq, EdgeColouring, Graph, Vertex};
use crate::paths::{hamilton_with_forest_search, PathForest};

use super::assembly::splice;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BowtieKind {
    /// All four centre edges coloured `c`, side edges of two different colours.
    I,
    /// Side edges of different colours, the first coloured `c` and both centre
    /// edges at it coloured otherwise.
    II,
}

/// Centre `z` with side edges `sides[0]` and `sides[1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bowtie {
    pub center: Vertex,
    pub sides: [(Vertex, Vertex); 2],
}

impl Bowtie {
    pub fn vertices(&self) -> [Vertex; 5] {
        let [(a, b), (d, e)] = self.sides;
        [self.center, a, b, d, e]
    }

    /// Five distinct vertices spanning both triangles.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut vs = self.vertices();
        vs.sort_unstable();
        let z = self.center;
        vs.windows(2).all(|w| w[0] != w[1])
            && vs.iter().all(|&v| v < g.n())
            && self.sides.iter().all(|&(a, b)| g.has_edge(a, b) && g.has_edge(z, a) && g.has_edge(z, b))
    }

    /// Whether the colour pattern matches `kind` for colour `c`.
    pub fn certifies(&self, colouring: &EdgeColouring, kind: BowtieKind, c: Colour) -> bool {
        if !self.is_valid(colouring.graph()) {
            return false;
        }
        let col = |u, v| colouring.colour(u, v).expect("valid bowtie");
        let z = self.center;
        let [(a, b), (d, e)] = self.sides;
        let (s0, s1) = (col(a, b), col(d, e));
        match kind {
            BowtieKind::I => s0 != s1 && [a, b, d, e].iter().all(|&w| col(z, w) == c),
            BowtieKind::II => s0 == c && s1 != c && col(z, a) != c && col(z, b) != c,
        }
    }
}

/// Greedy search result; `shortfall` counts the bowties requested but not found.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BowtieSearch {
    pub bowties: Vec<Bowtie>,
    pub shortfall: usize,
}

/// Vertex-disjoint bowties of `kind`, one per vertex of `from` while possible.
///
/// Type I bowties are centred at the vertex itself, with both side edges in
/// its `c`-neighbourhood. Type II bowties put the vertex `y` on the `c`-side:
/// a non-c edge `zw` with `yz` coloured `c` and `yw` not gives the triangle
/// `wyz`, and a non-c edge `ab` in `N(w)` completes a bowtie centred at `w`.
pub fn find_bowties(
    colouring: &EdgeColouring,
    c: Colour,
    kind: BowtieKind,
    from: &[Vertex],
    count: usize,
) -> BowtieSearch {
    let g = colouring.graph();
    let mut used = vec![false; g.n()];
    let mut bowties = Vec::new();
    let mut side_edges = HashMap::new();
    for &x in from {
        if bowties.len() >= count {
            break;
        }
        let found = match kind {
            BowtieKind::I => type_one_at(colouring, c, x, &used),
            BowtieKind::II => type_two_at(colouring, c, x, &used, &mut side_edges),
        };
        if let Some(b) = found {
            debug_assert!(b.certifies(colouring, kind, c));
            for v in b.vertices() {
                used[v] = true;
            }
            bowties.push(b);
        }
    }
    let shortfall = count.saturating_sub(bowties.len());
    BowtieSearch { bowties, shortfall }
}

fn type_one_at(colouring: &EdgeColouring, c: Colour, x: Vertex, used: &[bool]) -> Option<Bowtie> {
    if used[x] {
        return None;
    }
    let g = colouring.graph();
    let side: Vec<Vertex> = g
        .neighbours(x)
        .iter()
        .copied()
        .filter(|&w| !used[w] && colouring.colour(x, w) == Some(c))
        .collect();
    let inner: Vec<((Vertex, Vertex), Colour)> = colouring
        .edges_with_colours()
        .filter(|&((a, b), _)| side.binary_search(&a).is_ok() && side.binary_search(&b).is_ok())
        .collect();
    for (i, &((a, b), c1)) in inner.iter().enumerate() {
        for &((d, e), c2) in &inner[i + 1..] {
            if c1 != c2 && a != d && a != e && b != d && b != e {
                return Some(Bowtie { center: x, sides: [(a, b), (d, e)] });
            }
        }
    }
    None
}

/// Non-c edges inside `N(w)`, computed once per `w`.
fn free_edges_around<'a>(
    colouring: &EdgeColouring,
    c: Colour,
    w: Vertex,
    cache: &'a mut HashMap<Vertex, Vec<(Vertex, Vertex)>>,
) -> &'a [(Vertex, Vertex)] {
    cache.entry(w).or_insert_with(|| {
        let g = colouring.graph();
        let mut edges = Vec::new();
        for &a in g.neighbours(w) {
            for &b in g.neighbours(a) {
                if b > a && g.has_edge(w, b) && colouring.colour(a, b) != Some(c) {
                    edges.push((a, b));
                }
            }
        }
        edges.sort_unstable();
        edges
    })
}

fn type_two_at(
    colouring: &EdgeColouring,
    c: Colour,
    y: Vertex,
    used: &[bool],
    cache: &mut HashMap<Vertex, Vec<(Vertex, Vertex)>>,
) -> Option<Bowtie> {
    if used[y] {
        return None;
    }
    let g = colouring.graph();
    let col = |u, v| colouring.colour(u, v);
    for &z in g.neighbours(y) {
        if used[z] || col(y, z) != Some(c) {
            continue;
        }
        for &w in g.neighbours(z) {
            if used[w] || w == y || col(z, w) == Some(c) || !matches!(col(y, w), Some(k) if k != c) {
                continue;
            }
            let side = free_edges_around(colouring, c, w, cache)
                .iter()
                .find(|&&(a, b)| !used[a] && !used[b] && a != y && a != z && b != y && b != z);
            if let Some(&(a, b)) = side {
                return Some(Bowtie { center: w, sides: [(y, z), (a, b)] });
            }
        }
    }
    None
}

/// Both completions of a cycle through the side edges, and the one kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BowtieCycle {
    pub cycle: CycleSeq,
    pub bias: BiasReport,
    /// Bowties actually absorbed.
    pub used: Vec<Bowtie>,
    /// The colour whose side edge is dropped in `h1`.
    pub pivot: Colour,
    pub h1: CycleSeq,
    pub h2: CycleSeq,
}

/// Hamilton cycle from disjoint bowties: a cycle on everything but the centres
/// through all side edges, then each centre absorbed into one of its side
/// edges. `h1` drops the pivot-coloured side edge of every bowtie, `h2` the
/// other one, so their pivot counts differ by one per bowtie. For type I the
/// pivot is the side colour shared by the most bowties and only those are
/// used; for type II it is `c`.
pub fn bowties_to_biased_hamilton(
    colouring: &EdgeColouring,
    bowties: &[Bowtie],
    kind: BowtieKind,
    c: Colour,
) -> Result<BowtieCycle> {
    let g = colouring.graph();
    let n = g.n();
    let side_colour = |(a, b): (Vertex, Vertex)| colouring.colour(a, b).ok_or(Error::MissingEdge(a, b));
    let mut orient = Vec::with_capacity(bowties.len());
    for b in bowties {
        if !b.is_valid(g) {
            return Err(Error::StructureViolation(format!("bowtie at {} is not in the graph", b.center)));
        }
        orient.push((side_colour(b.sides[0])?, side_colour(b.sides[1])?));
    }
    let pivot = match kind {
        BowtieKind::II => c,
        BowtieKind::I => (1..=colouring.r())
            .max_by_key(|&k| (orient.iter().filter(|&&(x, y)| x == k || y == k).count(), std::cmp::Reverse(k)))
            .expect("r >= 2"),
    };
    // each kept bowtie as (centre, pivot side, other side)
    let kept: Vec<(Bowtie, usize)> = bowties
        .iter()
        .zip(&orient)
        .filter_map(|(b, &(x, y))| match (x == pivot, y == pivot) {
            (true, _) => Some((*b, 0)),
            (false, true) => Some((*b, 1)),
            _ => None,
        })
        .collect();

    let mut is_center = vec![false; n];
    for (b, _) in &kept {
        is_center[b.center] = true;
    }
    let rest: Vec<Vertex> = (0..n).filter(|&v| !is_center[v]).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in rest.iter().enumerate() {
        index[v] = i;
    }
    let sub = g.induced(&rest);
    let sides: Vec<(Vertex, Vertex)> =
        kept.iter().flat_map(|(b, _)| b.sides).map(|(a, b)| (index[a], index[b])).collect();
    let local = hamilton_with_forest_search(&sub, &PathForest::from_edges(&sides)?)?;
    let h = CycleSeq::new(local.vertices().iter().map(|&i| rest[i]).collect())?;

    let completion = |which: usize| {
        let inserts: HashMap<_, _> = kept
            .iter()
            .map(|&(b, p)| {
                let (a, e) = b.sides[if which == 0 { p } else { 1 - p }];
                (ordered(a, e), b.center)
            })
            .collect();
        splice(&h, &inserts)
    };
    let (h1, h2) = (completion(0)?, completion(1)?);
    let (b1, b2) = (colour_bias(&h1, colouring)?, colour_bias(&h2, colouring)?);
    let (cycle, bias) = if b1.cmp_bias(&b2).is_ge() { (h1.clone(), b1) } else { (h2.clone(), b2) };
    Ok(BowtieCycle { cycle, bias, used: kept.into_iter().map(|(b, _)| b).collect(), pivot, h1, h2 })
}
