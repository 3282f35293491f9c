//! Graphs, edge colourings, paths, cycles and matchings, plus the elementary
//! measured quantities (colour bias, minimum degree, non-isolated edges,
//! k-joinedness, colour-restricted matchings and the `f_c` increment).
//!
//! All types are immutable once built. Vertices are `0..n`, colours `1..=r`.

use std::fmt;

use crate::error::{Error, Result};
use crate::matching;

pub type Vertex = usize;
pub type Colour = u8;

/// Default vertex-count guard for the exhaustive k-joined check.
pub const K_JOINED_GUARD: usize = 16;

#[inline]
pub(crate) fn ordered(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// `⌈alpha * n⌉`, tolerant of the representation error in `alpha`.
pub fn ceil_fraction(alpha: f64, n: usize) -> usize {
    let x = alpha * n as f64;
    let r = x.round();
    if (x - r).abs() < 1e-9 {
        r as usize
    } else {
        x.ceil() as usize
    }
}

/// Undirected simple graph on `0..n` with a canonical (sorted) edge list.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    adj_eid: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unique(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_sorted_unique(n, edges)
    }

    pub fn cycle(n: usize) -> Self {
        let edges = (0..n).map(|i| (i, (i + 1) % n));
        Self::from_edges(n, edges).expect("cycle graph needs n >= 3")
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i));
        Self::from_edges(n, edges).expect("path graph is simple")
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            check_pair(n, u, v)?;
            list.push(ordered(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unique(n, list))
    }

    /// Like [`Graph::from_edges`] but collapses duplicate pairs.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            check_pair(n, u, v)?;
            list.push(ordered(u, v));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted_unique(n, list))
    }

    fn from_sorted_unique(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut adj_eid = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            adj_eid[u].push(id);
            adj[v].push(u);
            adj_eid[v].push(id);
        }
        for v in 0..n {
            let mut pairs: Vec<(usize, usize)> =
                adj[v].iter().copied().zip(adj_eid[v].iter().copied()).collect();
            pairs.sort_unstable();
            adj[v] = pairs.iter().map(|p| p.0).collect();
            adj_eid[v] = pairs.iter().map(|p| p.1).collect();
        }
        Self { n, edges, adj, adj_eid }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Sorted neighbour list.
    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).ok().map(|i| self.adj_eid[a][i])
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Induced subgraph on `vertices`, relabelled so `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        edges.sort_unstable();
        Graph::from_sorted_unique(vertices.len(), edges)
    }

    /// Same vertex set, keeping the edges accepted by `keep`.
    pub fn filter_edges<F>(&self, mut keep: F) -> Graph
    where
        F: FnMut(Vertex, Vertex) -> bool,
    {
        let edges = self.edges.iter().copied().filter(|&(u, v)| keep(u, v)).collect();
        Graph::from_sorted_unique(self.n, edges)
    }

    /// Same vertex set, keeping only edges with both ends in `vertices`.
    pub fn restrict_to(&self, vertices: &[Vertex]) -> Graph {
        let mask = vertex_mask(self.n, vertices);
        self.filter_edges(|u, v| mask[u] && mask[v])
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges.iter().all(|&(u, v)| other.has_edge(u, v))
    }
}

fn check_pair(n: usize, u: Vertex, v: Vertex) -> Result<()> {
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
    }
    Ok(())
}

pub(crate) fn vertex_mask(n: usize, vertices: &[Vertex]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &v in vertices {
        mask[v] = true;
    }
    mask
}

/// Total map from the edges of a graph to colours `1..=r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColouring {
    graph: Graph,
    r: Colour,
    colours: Vec<Colour>,
}

impl EdgeColouring {
    /// `colours[i]` is the colour of `graph.edges()[i]`.
    pub fn new(graph: Graph, r: Colour, colours: Vec<Colour>) -> Result<Self> {
        if r < 2 {
            return Err(Error::TooFewColours(r));
        }
        if colours.len() != graph.edge_count() {
            return Err(Error::ColouringLength { expected: graph.edge_count(), got: colours.len() });
        }
        if let Some(&c) = colours.iter().find(|&&c| c == 0 || c > r) {
            return Err(Error::ColourOutOfRange { colour: c, r });
        }
        Ok(Self { graph, r, colours })
    }

    pub fn from_fn<F>(graph: Graph, r: Colour, mut f: F) -> Result<Self>
    where
        F: FnMut(Vertex, Vertex) -> Colour,
    {
        let colours = graph.edges().iter().map(|&(u, v)| f(u, v)).collect();
        Self::new(graph, r, colours)
    }

    pub fn monochromatic(graph: Graph, r: Colour, c: Colour) -> Result<Self> {
        Self::from_fn(graph, r, |_, _| c)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn r(&self) -> Colour {
        self.r
    }

    /// Colours aligned with `graph().edges()`.
    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn colour(&self, u: Vertex, v: Vertex) -> Option<Colour> {
        self.graph.edge_id(u, v).map(|id| self.colours[id])
    }

    pub(crate) fn colour_unchecked(&self, u: Vertex, v: Vertex) -> Colour {
        self.colour(u, v).expect("edge present")
    }

    pub fn edges_with_colours(&self) -> impl Iterator<Item = ((Vertex, Vertex), Colour)> + '_ {
        self.graph.edges().iter().copied().zip(self.colours.iter().copied())
    }

    /// Spanning subgraph of the edges accepted by `keep(u, v, colour)`.
    pub fn filter_edges<F>(&self, mut keep: F) -> Graph
    where
        F: FnMut(Vertex, Vertex, Colour) -> bool,
    {
        let edges = self.edges_with_colours().filter(|&((u, v), c)| keep(u, v, c)).map(|(e, _)| e).collect();
        Graph::from_sorted_unique(self.graph.n, edges)
    }

    /// Number of edges of each colour, indexed `c - 1`.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.r as usize];
        for &c in &self.colours {
            sizes[c as usize - 1] += 1;
        }
        sizes
    }

    /// Subgraph formed by the edges of colour `c`.
    pub fn colour_class(&self, c: Colour) -> Graph {
        let edges = self
            .edges_with_colours()
            .filter(|&(_, col)| col == c)
            .map(|(e, _)| e)
            .collect();
        Graph::from_sorted_unique(self.graph.n(), edges)
    }

    /// Restriction to a subgraph of the coloured graph.
    pub fn restrict(&self, sub: &Graph) -> Result<Self> {
        if sub.n() != self.graph.n() {
            return Err(Error::SizeMismatch(sub.n(), self.graph.n()));
        }
        let mut colours = Vec::with_capacity(sub.edge_count());
        for &(u, v) in sub.edges() {
            colours.push(self.colour(u, v).ok_or(Error::MissingEdge(u, v))?);
        }
        Self::new(sub.clone(), self.r, colours)
    }

    /// Relabels colours: `perm[c - 1]` is the new colour of `c`.
    pub fn permute_colours(&self, perm: &[Colour]) -> Result<Self> {
        let colours = self.colours.iter().map(|&c| perm[c as usize - 1]).collect();
        Self::new(self.graph.clone(), self.r, colours)
    }
}

/// Ordered sequence of distinct vertices forming a path.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathSeq(Vec<Vertex>);

impl PathSeq {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if let Some(v) = first_repeat(&vertices) {
            return Err(Error::InvalidPath(format!("vertex {v} repeats")));
        }
        Ok(Self(vertices))
    }

    pub(crate) fn from_vec_unchecked(vertices: Vec<Vertex>) -> Self {
        debug_assert!(first_repeat(&vertices).is_none());
        Self(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        for &v in &self.0 {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
        }
        for (u, v) in self.edges() {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidPath(format!("{{{u}, {v}}} is not an edge")));
            }
        }
        Ok(())
    }
}

/// Cyclic sequence of at least three distinct vertices; the last vertex is
/// implicitly joined to the first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleSeq(Vec<Vertex>);

impl CycleSeq {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidCycle(format!("length {} < 3", vertices.len())));
        }
        if let Some(v) = first_repeat(&vertices) {
            return Err(Error::InvalidCycle(format!("vertex {v} repeats")));
        }
        Ok(Self(vertices))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| (self.0[i], self.0[(i + 1) % k]))
    }

    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        let k = self.0.len();
        match self.0.iter().position(|&x| x == u) {
            Some(i) => self.0[(i + 1) % k] == v || self.0[(i + k - 1) % k] == v,
            None => false,
        }
    }

    /// Rotation/reflection-invariant form: starts at the smallest vertex and
    /// the second vertex is smaller than the last.
    pub fn canonical(&self) -> Self {
        let k = self.0.len();
        let start = (0..k).min_by_key(|&i| self.0[i]).unwrap_or(0);
        let mut fwd: Vec<Vertex> = (0..k).map(|i| self.0[(start + i) % k]).collect();
        if fwd[1] > fwd[k - 1] {
            fwd[1..].reverse();
        }
        Self(fwd)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        for &v in &self.0 {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
        }
        for (u, v) in self.edges() {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidCycle(format!("{{{u}, {v}}} is not an edge")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for CycleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

fn first_repeat(vertices: &[Vertex]) -> Option<Vertex> {
    let max = vertices.iter().copied().max()?;
    let mut seen = vec![false; max + 1];
    for &v in vertices {
        if seen[v] {
            return Some(v);
        }
        seen[v] = true;
    }
    None
}

/// Set of pairwise vertex-disjoint edges, stored normalised and sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching(Vec<(Vertex, Vertex)>);

impl Matching {
    pub fn new(edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        let mut list: Vec<_> = edges.into_iter().map(|(u, v)| ordered(u, v)).collect();
        list.sort_unstable();
        let mut ends: Vec<Vertex> = list.iter().flat_map(|&(u, v)| [u, v]).collect();
        if list.iter().any(|&(u, v)| u == v) {
            return Err(Error::InvalidMatching("self-loop".into()));
        }
        ends.sort_unstable();
        if let Some(w) = ends.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidMatching(format!("vertex {} covered twice", w[0])));
        }
        Ok(Self(list))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.0.binary_search(&ordered(u, v)).is_ok()
    }

    pub fn covered(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().flat_map(|&(u, v)| [u, v])
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self.0.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
            Some(&(u, v)) => Err(Error::MissingEdge(u, v)),
            None => Ok(()),
        }
    }
}

/// Majority colour of a cycle and its excess over `n / r`.
///
/// The bias is kept exact as `bias_numerator / bias_denominator` with the
/// denominator equal to `r`, i.e. `count - n/r = (r*count - n) / r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BiasReport {
    pub colour: Colour,
    pub count: usize,
    pub bias_numerator: i64,
    pub bias_denominator: i64,
}

impl BiasReport {
    pub fn from_counts(counts: &[usize], n: usize) -> Self {
        let r = counts.len();
        // first maximum wins, so ties go to the smallest colour
        let (idx, &count) = counts
            .iter()
            .enumerate()
            .fold(None, |best: Option<(usize, &usize)>, (i, c)| match best {
                Some((_, b)) if b >= c => best,
                _ => Some((i, c)),
            })
            .expect("at least one colour");
        Self {
            colour: (idx + 1) as Colour,
            count,
            bias_numerator: (r * count) as i64 - n as i64,
            bias_denominator: r as i64,
        }
    }

    pub fn bias(&self) -> f64 {
        self.bias_numerator as f64 / self.bias_denominator as f64
    }

    /// `bias >= t` for an integer `t`, decided exactly.
    pub fn at_least(&self, t: i64) -> bool {
        self.bias_numerator >= t * self.bias_denominator
    }

    /// Exact comparison of two biases.
    pub fn cmp_bias(&self, other: &Self) -> std::cmp::Ordering {
        (self.bias_numerator * other.bias_denominator)
            .cmp(&(other.bias_numerator * self.bias_denominator))
    }
}

impl fmt::Display for BiasReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "colour {} count {} bias {}/{}",
            self.colour, self.count, self.bias_numerator, self.bias_denominator
        )
    }
}

/// Edge count of each colour along `cycle`, indexed `c - 1`.
pub fn cycle_colour_counts(cycle: &CycleSeq, colouring: &EdgeColouring) -> Result<Vec<usize>> {
    let mut counts = vec![0; colouring.r() as usize];
    for (u, v) in cycle.edges() {
        let c = colouring
            .colour(u, v)
            .ok_or_else(|| Error::InvalidCycle(format!("{{{u}, {v}}} is not an edge")))?;
        counts[c as usize - 1] += 1;
    }
    Ok(counts)
}

/// Colour bias of a cycle: the most frequent colour (smallest id on ties) and
/// `count - n/r` where `n` is the vertex count of the coloured graph.
pub fn colour_bias(cycle: &CycleSeq, colouring: &EdgeColouring) -> Result<BiasReport> {
    let counts = cycle_colour_counts(cycle, colouring)?;
    Ok(BiasReport::from_counts(&counts, colouring.graph().n()))
}

pub fn min_degree(g: &Graph) -> usize {
    g.min_degree()
}

pub fn is_hamilton_cycle(g: &Graph, cycle: &CycleSeq) -> bool {
    cycle.len() == g.n() && cycle.vertices().iter().all(|&v| v < g.n()) && cycle.validate(g).is_ok()
}

/// Number of edges sharing an endpoint with another edge.
pub fn non_isolated_edge_count(g: &Graph) -> usize {
    g.edges().iter().filter(|&&(u, v)| g.degree(u) > 1 || g.degree(v) > 1).count()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KJoined {
    Joined,
    /// Two disjoint k-sets spanning no edge.
    Violated(Vec<Vertex>, Vec<Vertex>),
}

impl KJoined {
    pub fn holds(&self) -> bool {
        matches!(self, KJoined::Joined)
    }
}

pub fn is_k_joined(g: &Graph, k: usize) -> Result<KJoined> {
    is_k_joined_with_guard(g, k, K_JOINED_GUARD)
}

/// Exhaustive k-joined check. For each k-set `S` the vertices outside
/// `S ∪ N(S)` are exactly those with no edge to `S`; a violating partner
/// exists iff there are at least `k` of them, so only one side is enumerated.
pub fn is_k_joined_with_guard(g: &Graph, k: usize, guard: usize) -> Result<KJoined> {
    let n = g.n();
    if k == 0 || 2 * k > n {
        return Err(Error::PreconditionViolated(format!("need 1 <= k <= n/2, got k={k}, n={n}")));
    }
    if n > guard {
        return Err(Error::GuardExceeded { n, guard });
    }
    let nbr: Vec<u64> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let mut s_mask = 0u64;
        let mut closed = 0u64;
        for &v in &subset {
            s_mask |= 1 << v;
            closed |= nbr[v];
        }
        let free = full & !(s_mask | closed);
        if free.count_ones() as usize >= k {
            let other: Vec<usize> = (0..n).filter(|&v| free >> v & 1 == 1).take(k).collect();
            return Ok(KJoined::Violated(subset, other));
        }
        if !next_combination(&mut subset, n) {
            return Ok(KJoined::Joined);
        }
    }
}

/// Advances a sorted k-combination of `0..n` in lexicographic order.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exact maximum matching of `G[U]` using only edges whose colour is not `c`.
pub fn max_matching_avoiding_colour(
    colouring: &EdgeColouring,
    c: Colour,
    within: &[Vertex],
) -> Matching {
    let g = colouring.graph();
    let mask = vertex_mask(g.n(), within);
    let sub = g.filter_edges(|u, v| mask[u] && mask[v] && colouring.colour_unchecked(u, v) != c);
    matching::max_matching(&sub)
}

/// `1[χ(vx)=c] + 1[χ(vy)=c] - 1[χ(xy)=c]`.
pub fn f_c(colouring: &EdgeColouring, v: Vertex, x: Vertex, y: Vertex, c: Colour) -> Result<i32> {
    let col = |a: Vertex, b: Vertex| colouring.colour(a, b).ok_or(Error::MissingEdge(a, b));
    let (vx, vy, xy) = (col(v, x)?, col(v, y)?, col(x, y)?);
    Ok(i32::from(vx == c) + i32::from(vy == c) - i32::from(xy == c))
}

/// Whether `{x, y}` is c-good for `v`, i.e. `f_c(v, x, y) <= 0`.
pub fn is_c_good(colouring: &EdgeColouring, v: Vertex, x: Vertex, y: Vertex, c: Colour) -> Result<bool> {
    Ok(f_c(colouring, v, x, y, c)? <= 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c6_colouring() -> (CycleSeq, EdgeColouring) {
        let g = Graph::cycle(6);
        let cyc = CycleSeq::new((0..6).collect()).unwrap();
        // edges sorted: (0,1),(0,5),(1,2),(2,3),(3,4),(4,5)
        // cycle order 01,12,23,34 colour 1; 45,50 colour 2
        let col = EdgeColouring::from_fn(g, 2, |u, v| if u >= 4 || v == 5 { 2 } else { 1 }).unwrap();
        (cyc, col)
    }

    #[test]
    fn bias_of_c6() {
        let (cyc, col) = c6_colouring();
        let rep = colour_bias(&cyc, &col).unwrap();
        assert_eq!(rep.colour, 1);
        assert_eq!(rep.count, 4);
        assert_eq!((rep.bias_numerator, rep.bias_denominator), (2, 2));
        assert_eq!(rep.bias(), 1.0);
    }

    #[test]
    fn bias_monochromatic_k4() {
        let col = EdgeColouring::monochromatic(Graph::complete(4), 2, 1).unwrap();
        let rep = colour_bias(&CycleSeq::new(vec![0, 1, 2, 3]).unwrap(), &col).unwrap();
        assert_eq!((rep.colour, rep.count), (1, 4));
        assert!(rep.at_least(2) && !rep.at_least(3));
    }

    #[test]
    fn bias_ties_go_to_smallest_colour() {
        let g = Graph::cycle(4);
        let col =
            EdgeColouring::from_fn(g, 3, |u, v| if v == u + 1 && u % 2 == 0 { 3 } else { 2 }).unwrap();
        let rep = colour_bias(&CycleSeq::new(vec![0, 1, 2, 3]).unwrap(), &col).unwrap();
        assert_eq!(rep.colour, 2);
    }

    #[test]
    fn bias_keeps_non_integral_n_over_r() {
        let col = EdgeColouring::monochromatic(Graph::complete(5), 2, 2).unwrap();
        let rep = colour_bias(&CycleSeq::new(vec![0, 1, 2, 3, 4]).unwrap(), &col).unwrap();
        assert_eq!((rep.bias_numerator, rep.bias_denominator), (5, 2));
    }

    #[test]
    fn bias_rejects_non_cycles() {
        let col = EdgeColouring::monochromatic(Graph::cycle(5), 2, 1).unwrap();
        let err = colour_bias(&CycleSeq::new(vec![0, 2, 4, 1, 3]).unwrap(), &col).unwrap_err();
        assert!(matches!(err, Error::InvalidCycle(_)));
        assert!(CycleSeq::new(vec![0, 1, 0]).is_err());
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(min_degree(&Graph::complete(4)), 3);
        assert_eq!(min_degree(&Graph::empty(5)), 0);
        assert_eq!(min_degree(&Graph::empty(0)), 0);
    }

    #[test]
    fn hamilton_cycle_checks() {
        let k4 = Graph::complete(4);
        assert!(is_hamilton_cycle(&k4, &CycleSeq::new(vec![0, 1, 2, 3]).unwrap()));
        assert!(!is_hamilton_cycle(&k4, &CycleSeq::new(vec![0, 1, 2]).unwrap()));
        let c5 = Graph::cycle(5);
        assert!(!is_hamilton_cycle(&c5, &CycleSeq::new(vec![0, 2, 4, 1, 3]).unwrap()));
        assert!(is_hamilton_cycle(&c5, &CycleSeq::new(vec![4, 3, 2, 1, 0]).unwrap()));
    }

    #[test]
    fn non_isolated_examples() {
        assert_eq!(non_isolated_edge_count(&Graph::cycle(3)), 3);
        let pm = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(non_isolated_edge_count(&pm), 0);
        assert_eq!(non_isolated_edge_count(&Graph::path(4)), 3);
    }

    #[test]
    fn k_joined_examples() {
        assert!(is_k_joined(&Graph::complete(6), 1).unwrap().holds());
        let two_tri = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(
            is_k_joined(&two_tri, 3).unwrap(),
            KJoined::Violated(vec![0, 1, 2], vec![3, 4, 5])
        );
        assert_eq!(
            is_k_joined(&Graph::path(5), 1).unwrap(),
            KJoined::Violated(vec![0], vec![2])
        );
        assert!(matches!(
            is_k_joined(&Graph::complete(17), 2),
            Err(Error::GuardExceeded { n: 17, guard: 16 })
        ));
        assert!(is_k_joined(&Graph::complete(4), 3).is_err());
    }

    #[test]
    fn avoiding_colour_matchings() {
        let k4 = Graph::complete(4);
        let mono = EdgeColouring::monochromatic(k4.clone(), 2, 1).unwrap();
        assert!(max_matching_avoiding_colour(&mono, 1, &[0, 1, 2, 3]).is_empty());
        let one = EdgeColouring::from_fn(k4, 2, |u, v| if (u, v) == (1, 3) { 2 } else { 1 }).unwrap();
        let m = max_matching_avoiding_colour(&one, 1, &[0, 1, 2, 3]);
        assert_eq!(m.edges(), &[(1, 3)]);
        assert!(max_matching_avoiding_colour(&one, 1, &[0, 1, 2]).is_empty());
    }

    #[test]
    fn f_c_examples() {
        // v = 0, x = 1, y = 2
        let tri = Graph::cycle(3);
        let col = |vx: u8, vy: u8, xy: u8| {
            EdgeColouring::from_fn(tri.clone(), 2, move |u, v| match (u, v) {
                (0, 1) => vx,
                (0, 2) => vy,
                _ => xy,
            })
            .unwrap()
        };
        assert_eq!(f_c(&col(1, 1, 2), 0, 1, 2, 1).unwrap(), 2);
        assert_eq!(f_c(&col(2, 2, 1), 0, 1, 2, 1).unwrap(), -1);
        assert_eq!(f_c(&col(1, 2, 1), 0, 1, 2, 1).unwrap(), 0);
        assert!(is_c_good(&col(2, 2, 2), 0, 1, 2, 1).unwrap());
        assert!(!is_c_good(&col(1, 1, 1), 0, 1, 2, 1).unwrap());
        let path = EdgeColouring::monochromatic(Graph::path(3), 2, 1).unwrap();
        assert_eq!(f_c(&path, 0, 1, 2, 1), Err(Error::MissingEdge(0, 2)));
    }

    #[test]
    fn graph_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(Graph::from_edges(3, [(0, 3)]), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(Graph::from_edges_dedup(3, [(0, 1), (1, 0)]).unwrap().edge_count(), 1);
    }

    #[test]
    fn canonical_cycle_form() {
        let c = CycleSeq::new(vec![3, 1, 0, 2]).unwrap().canonical();
        assert_eq!(c.vertices(), &[0, 1, 3, 2]);
        let d = CycleSeq::new(vec![2, 0, 1, 3]).unwrap().canonical();
        assert_eq!(d.vertices(), &[0, 1, 3, 2]);
    }
}
