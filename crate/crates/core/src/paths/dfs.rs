use crate::error::{Error, Result};
use crate::graph::{Colour, CycleSeq, EdgeColouring, Graph, PathSeq, Vertex};

use super::NearMonoPath;

/// Depth-first search over the `allowed` vertices whose stack is always a
/// path; returns the deepest stack seen. With `root` set only that vertex is
/// used as a root, so the result starts there.
pub(crate) fn dfs_core(g: &Graph, allowed: &[bool], root: Option<Vertex>) -> Vec<Vertex> {
    let n = g.n();
    let mut visited = vec![false; n];
    let mut next = vec![0usize; n];
    let mut stack: Vec<Vertex> = Vec::new();
    let mut best: Vec<Vertex> = Vec::new();
    let roots: Box<dyn Iterator<Item = Vertex>> = match root {
        Some(r) => Box::new(std::iter::once(r)),
        None => Box::new(0..n),
    };
    for r in roots {
        if visited[r] || !allowed[r] {
            continue;
        }
        visited[r] = true;
        stack.push(r);
        if stack.len() > best.len() {
            best.clone_from(&stack);
        }
        while let Some(&top) = stack.last() {
            let nbrs = g.neighbours(top);
            while next[top] < nbrs.len() && (visited[nbrs[next[top]]] || !allowed[nbrs[next[top]]]) {
                next[top] += 1;
            }
            if let Some(&w) = nbrs.get(next[top]) {
                visited[w] = true;
                stack.push(w);
                if stack.len() > best.len() {
                    best.clone_from(&stack);
                }
            } else {
                stack.pop();
            }
        }
        if best.len() == n {
            break;
        }
    }
    best
}

/// Long path by depth-first search with lowest-index tie-breaking.
///
/// If `g` is `k`-joined the path has at least `n - 2k` vertices: when the
/// stack is empty between roots, finished and unvisited vertices are separated
/// and the last time they have equal size both exceed `k - 1` unless the stack
/// already holds the rest. Otherwise it is still a valid path. `k` is only
/// the caller's claim and does not steer the search.
pub fn dfs_long_path(g: &Graph, _k: usize) -> PathSeq {
    dfs_long_path_within(g, &vec![true; g.n()])
}

/// [`dfs_long_path`] on the subgraph induced by the `allowed` vertices.
pub fn dfs_long_path_within(g: &Graph, allowed: &[bool]) -> PathSeq {
    PathSeq::from_vec_unchecked(dfs_core(g, allowed, None))
}

fn off_colour_count(colouring: &EdgeColouring, path: &[Vertex], c: Colour) -> usize {
    path.windows(2)
        .filter(|w| colouring.colour_unchecked(w[0], w[1]) != c)
        .count()
}

/// Window of `len` consecutive vertices with the fewest off-colour edges.
fn best_window(colouring: &EdgeColouring, path: &[Vertex], c: Colour, len: usize) -> (usize, usize) {
    let off: Vec<usize> = path
        .windows(2)
        .map(|w| usize::from(colouring.colour_unchecked(w[0], w[1]) != c))
        .collect();
    let span = len.saturating_sub(1);
    let mut cur: usize = off[..span].iter().sum();
    let mut best = (cur, 0);
    for start in 1..=path.len() - len {
        cur = cur + off[start + span - 1] - off[start - 1];
        if cur < best.0 {
            best = (cur, start);
        }
    }
    best
}

/// Grows a colour-`c` path by bridging from an endpoint into the longest
/// colour-`c` DFS path that starts at one of its unused neighbours.
fn grow_with_bridges(
    colouring: &EdgeColouring,
    class: &Graph,
    allowed: &[bool],
    c: Colour,
    target: usize,
    budget: usize,
) -> Vec<Vertex> {
    let g = colouring.graph();
    let mut path = dfs_core(class, allowed, None);
    let mut free: Vec<bool> = allowed.to_vec();
    for &v in &path {
        free[v] = false;
    }
    let mut off = 0;
    while path.len() < target && !path.is_empty() {
        let mut best: Option<(Vec<Vertex>, bool, bool)> = None;
        for at_front in [false, true] {
            let end = if at_front { path[0] } else { path[path.len() - 1] };
            for &w in g.neighbours(end) {
                if !free[w] {
                    continue;
                }
                let bridge_off = colouring.colour_unchecked(end, w) != c;
                if bridge_off && off >= budget {
                    continue;
                }
                let ext = dfs_core(class, &free, Some(w));
                let better = match &best {
                    None => true,
                    Some((b, b_off, _)) => (ext.len(), !bridge_off) > (b.len(), !*b_off),
                };
                if better {
                    best = Some((ext, bridge_off, at_front));
                }
            }
        }
        let Some((ext, bridge_off, at_front)) = best else { break };
        if at_front {
            path.reverse();
        }
        for &v in &ext {
            free[v] = false;
        }
        path.extend(ext);
        off += usize::from(bridge_off);
    }
    path
}

/// Near-monochromatic path with at least `target_len` vertices and at most
/// `budget` off-colour edges.
///
/// For each colour a DFS path in that colour class is extended through
/// off-colour bridge edges; the result is cut to the `target_len`-vertex
/// window with the fewest off-colour edges. Across colours the fewest
/// off-colour edges win, smallest colour on ties.
pub fn near_monochromatic_path(colouring: &EdgeColouring, target_len: usize, budget: usize) -> Result<NearMonoPath> {
    near_monochromatic_path_within(colouring, &vec![true; colouring.graph().n()], target_len, budget)
}

pub fn near_monochromatic_path_within(
    colouring: &EdgeColouring,
    allowed: &[bool],
    target_len: usize,
    budget: usize,
) -> Result<NearMonoPath> {
    let n = colouring.graph().n();
    if target_len == 0 || target_len > n {
        return Err(Error::PreconditionViolated(format!("target {target_len} outside 1..={n}")));
    }
    let mut best: Option<NearMonoPath> = None;
    for c in 1..=colouring.r() {
        let class = colouring.colour_class(c);
        let path = grow_with_bridges(colouring, &class, allowed, c, target_len, budget);
        if path.len() < target_len {
            continue;
        }
        let (off, start) = best_window(colouring, &path, c, target_len);
        debug_assert!(off <= off_colour_count(colouring, &path, c));
        if best.as_ref().is_none_or(|b| off < b.off_colour) {
            best = Some(NearMonoPath {
                path: PathSeq::from_vec_unchecked(path[start..start + target_len].to_vec()),
                colour: c,
                off_colour: off,
            });
        }
    }
    best.ok_or(Error::TargetUnreachable(target_len))
}

/// Cycle on `t + 1` vertices: a colour-`c*` path on `t` vertices closed
/// through a vertex `v0` adjacent to both of its ends, where `c*` is the
/// colour with the most edges. The cycle starts at `v0`, so only its first
/// and last edges may have a colour other than `c*`.
pub fn monochromatic_cycle(colouring: &EdgeColouring, t: usize) -> Result<CycleSeq> {
    let g = colouring.graph();
    let n = g.n();
    if t < 2 || t + 1 > n {
        return Err(Error::PreconditionViolated(format!("need 2 <= t <= n - 1, got t={t}, n={n}")));
    }
    let sizes = colouring.class_sizes();
    let c_star = (1..=colouring.r())
        .max_by_key(|&c| (sizes[usize::from(c) - 1], std::cmp::Reverse(c)))
        .expect("r >= 2");
    let class = colouring.colour_class(c_star);
    let all = vec![true; n];
    let mut path = dfs_core(&class, &all, None);
    let mut root = 0;
    while path.len() < t && root < n {
        path = dfs_core(&class, &all, Some(root));
        root += 1;
    }
    if path.len() < t {
        return Err(Error::NoPath(t));
    }
    let mut in_window = vec![false; n];
    for start in 0..=path.len() - t {
        let window = &path[start..start + t];
        for &v in window {
            in_window[v] = true;
        }
        let (a, b) = (window[0], window[t - 1]);
        let v0 = g.neighbours(a).iter().copied().find(|&v| !in_window[v] && g.has_edge(v, b));
        for &v in window {
            in_window[v] = false;
        }
        if let Some(v0) = v0 {
            let mut cycle = vec![v0];
            cycle.extend_from_slice(window);
            debug_assert!(window.windows(2).all(|w| colouring.colour(w[0], w[1]) == Some(c_star)));
            return CycleSeq::new(cycle);
        }
    }
    Err(Error::NoClosingVertex)
}
