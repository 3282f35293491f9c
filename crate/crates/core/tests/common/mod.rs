//! Reference checks written from the definitions, sharing no code with the
//! library beyond its data types.
#![allow(dead_code)]

use std::collections::HashMap;

use hamcolour::{Colour, EdgeColouring, Graph, Vertex};

/// All vertices distinct and `0..n` covered, cyclically consecutive pairs
/// adjacent.
pub fn is_hamiltonian(g: &Graph, cycle: &[Vertex]) -> bool {
    let n = g.n();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

pub fn is_simple_path(g: &Graph, path: &[Vertex]) -> bool {
    let mut seen = vec![false; g.n()];
    for &v in path {
        if v >= g.n() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

pub fn cycle_edges(cycle: &[Vertex]) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    let k = cycle.len();
    (0..k).map(move |i| (cycle[i], cycle[(i + 1) % k]))
}

pub fn adjacent_in_cycle(cycle: &[Vertex], u: Vertex, v: Vertex) -> bool {
    cycle_edges(cycle).any(|(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
}

/// Edges of each colour along the cycle, indexed by `colour - 1`.
pub fn colour_counts(colouring: &EdgeColouring, cycle: &[Vertex]) -> Vec<usize> {
    let mut counts = vec![0; usize::from(colouring.r())];
    for (u, v) in cycle_edges(cycle) {
        let c = colouring.colour(u, v).expect("cycle edge coloured");
        counts[usize::from(c) - 1] += 1;
    }
    counts
}

/// `(colour, r·count − n)`: the majority colour (smallest on ties) and the
/// bias scaled by `r`.
pub fn scaled_bias(colouring: &EdgeColouring, cycle: &[Vertex]) -> (Colour, i64) {
    let counts = colour_counts(colouring, cycle);
    let r = counts.len() as i64;
    let mut best = 0;
    for (i, &c) in counts.iter().enumerate() {
        if c > counts[best] {
            best = i;
        }
    }
    ((best + 1) as Colour, r * counts[best] as i64 - cycle.len() as i64)
}

/// Maximum matching size by recursion over vertex subsets (n ≤ 20).
pub fn brute_matching(n: usize, edges: &[(Vertex, Vertex)]) -> usize {
    assert!(n <= 20);
    let mut adj = vec![0u32; n];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    fn go(mask: u32, adj: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&m) = memo.get(&mask) {
            return m;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = go(rest, adj, memo);
        let mut nb = adj[v] & rest;
        while nb != 0 {
            let u = nb.trailing_zeros();
            nb &= nb - 1;
            best = best.max(1 + go(rest & !(1 << u), adj, memo));
        }
        memo.insert(mask, best);
        best
    }
    let full = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    go(full, &adj, &mut HashMap::new())
}

/// Every two disjoint `k`-sets span an edge, by enumerating both sets.
pub fn brute_k_joined(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if 2 * k > n || k == 0 {
        return true;
    }
    let sets: Vec<u32> = (0u32..1 << n).filter(|m| m.count_ones() as usize == k).collect();
    let mut nb = vec![0u32; n];
    for &(u, v) in g.edges() {
        nb[u] |= 1 << v;
        nb[v] |= 1 << u;
    }
    for &s in &sets {
        let mut reach = 0;
        for v in 0..n {
            if s >> v & 1 == 1 {
                reach |= nb[v];
            }
        }
        if sets.iter().any(|&t| t & s == 0 && t & reach == 0) {
            return false;
        }
    }
    true
}
