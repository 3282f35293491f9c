//! Absorbing paths and the sprinkling pipeline that turns a dense host plus
//! a few random edges into a Hamilton cycle with large colour bias.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{ceil_fraction, ordered, vertex_mask, BiasReport, Colour, CycleSeq, EdgeColouring, Graph, Matching, PathSeq, Vertex};
use crate::matching::greedy_maximal_matching;
use crate::models::{self, derive_seed, Seed};
use crate::paths::{self, dfs_long_path_within, near_monochromatic_path_within};

/// Answers colour queries for pairs of vertices. An adversary may decide
/// adaptively; the pipeline asks about each edge at most once.
pub trait ColourOracle {
    fn r(&self) -> Colour;
    fn colour(&mut self, u: Vertex, v: Vertex) -> Colour;
}

impl ColourOracle for EdgeColouring {
    fn r(&self) -> Colour {
        EdgeColouring::r(self)
    }

    fn colour(&mut self, u: Vertex, v: Vertex) -> Colour {
        EdgeColouring::colour(self, u, v).expect("queried pair is an edge of the colouring")
    }
}

/// Colours every pair independently and uniformly from a hash of the seed.
#[derive(Clone, Copy, Debug)]
pub struct RandomColouring {
    pub r: Colour,
    pub seed: u64,
}

impl ColourOracle for RandomColouring {
    fn r(&self) -> Colour {
        self.r
    }

    fn colour(&mut self, u: Vertex, v: Vertex) -> Colour {
        let (a, b) = ordered(u, v);
        let h = derive_seed(self.seed, "colour", ((a as u64) << 32) | b as u64);
        1 + (h % u64::from(self.r)) as Colour
    }
}

/// Wraps a closure as an oracle.
pub struct FnOracle<F> {
    r: Colour,
    f: F,
}

impl<F: FnMut(Vertex, Vertex) -> Colour> FnOracle<F> {
    pub fn new(r: Colour, f: F) -> Self {
        Self { r, f }
    }
}

impl<F: FnMut(Vertex, Vertex) -> Colour> ColourOracle for FnOracle<F> {
    fn r(&self) -> Colour {
        self.r
    }

    fn colour(&mut self, u: Vertex, v: Vertex) -> Colour {
        (self.f)(u, v)
    }
}

/// Remembers the first answer for every pair so the colouring stays a function.
struct Memo<'a> {
    inner: &'a mut dyn ColourOracle,
    seen: HashMap<(Vertex, Vertex), Colour>,
}

impl Memo<'_> {
    fn colour(&mut self, u: Vertex, v: Vertex) -> Colour {
        let key = ordered(u, v);
        if let Some(&c) = self.seen.get(&key) {
            return c;
        }
        let c = self.inner.colour(key.0, key.1);
        assert!((1..=self.inner.r()).contains(&c), "oracle returned colour {c}");
        self.seen.insert(key, c);
        c
    }

    fn colour_graph(&mut self, g: &Graph) -> EdgeColouring {
        let r = self.inner.r();
        EdgeColouring::from_fn(g.clone(), r, |u, v| self.colour(u, v)).expect("oracle colours in range")
    }
}

/// Constants of the construction. The proof's inequalities are asymptotic; at
/// desk scale they are checked and reported as transcript warnings.
#[derive(Clone, Debug, PartialEq)]
pub struct PipelineParams {
    pub alpha: f64,
    pub r: Colour,
    /// Absorber size scale: the absorber should have between `εn/8` and `4εn` vertices.
    pub epsilon: f64,
    /// `R_i ~ G(n, c_i/n)`.
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    /// Off-colour edges allowed on `P1`.
    pub k_budget: usize,
    /// Connection windows have `⌈δn⌉` vertices.
    pub delta: f64,
    pub max_retries: usize,
}

impl Default for PipelineParams {
    /// Calibrated at n = 300, α = 0.3, r = 2.
    fn default() -> Self {
        Self { alpha: 0.3, r: 2, epsilon: 0.2, c1: 0.5, c2: 40.0, c3: 40.0, k_budget: 10, delta: 0.03, max_retries: 5 }
    }
}

impl PipelineParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::ConfigInvalid(m.to_string()));
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return bad("alpha must lie in (0, 1]");
        }
        if self.r < 2 {
            return Err(Error::TooFewColours(self.r));
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return bad("epsilon must lie in (0, 1)");
        }
        if [self.c1, self.c2, self.c3].iter().any(|c| !(*c >= 0.0 && c.is_finite())) {
            return bad("sprinkle constants must be non-negative");
        }
        if !(self.delta > 0.0 && self.delta < 0.5) {
            return bad("delta must lie in (0, 1/2)");
        }
        if self.max_retries == 0 {
            return bad("max_retries must be at least 1");
        }
        Ok(())
    }

    /// Inequalities the proof assumes but desk-scale constants may break.
    pub fn asymptotic_warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        let eps_cap = self.alpha * self.alpha / 16384.0;
        if self.epsilon >= eps_cap {
            w.push(format!("epsilon {} is not below alpha^2/2^14 = {eps_cap:.3e}", self.epsilon));
        }
        let lhs = 2.0 * std::f64::consts::E / self.delta;
        let rhs = (self.c3 * self.delta / 2.0).exp();
        if lhs >= rhs {
            w.push(format!("2e/delta = {lhs:.2} is not below exp(C3 delta/2) = {rhs:.2}"));
        }
        w
    }
}

/// Maximal matching of `R` with, for every vertex `x`, the number of its edges
/// inside `N_{G_α}(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsorbingMatching {
    pub matching: Matching,
    pub audit: Vec<usize>,
    /// Vertices whose audit count is below `ε²n`.
    pub shortfall: Vec<Vertex>,
}

pub fn absorbing_matching(g_alpha: &Graph, r: &Graph, eps: f64) -> Result<AbsorbingMatching> {
    if g_alpha.n() != r.n() {
        return Err(Error::SizeMismatch(g_alpha.n(), r.n()));
    }
    let n = g_alpha.n();
    let matching = greedy_maximal_matching(r);
    let audit: Vec<usize> = (0..n)
        .map(|x| matching.edges().iter().filter(|&&(a, b)| g_alpha.has_edge(x, a) && g_alpha.has_edge(x, b)).count())
        .collect();
    let bound = eps * eps * n as f64;
    let shortfall = (0..n).filter(|&x| (audit[x] as f64) < bound).collect();
    Ok(AbsorbingMatching { matching, audit, shortfall })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Connector {
    /// `b - z - a'` through a common host neighbour.
    Short(Vertex),
    /// `b - u - v - a'` with `uv` a random edge.
    Long(Vertex, Vertex),
}

/// Path threading every edge of `core_matching`, joined by connectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsorberPath {
    pub path: PathSeq,
    pub core_matching: Matching,
    pub connectors: Vec<Connector>,
}

/// Joins the edges of `m` in sorted order. Junction `i` goes from `b_i` to
/// `a_{i+1}`: through an unused common host neighbour when the endpoints have
/// at least `αn/2` of them, otherwise through an unused `R2` edge from
/// `N(b_i) \ N(a_{i+1})` to `N(a_{i+1}) \ N(b_i)`. Either kind falls back to
/// the other when no unused choice exists.
pub fn build_absorber(g_alpha: &Graph, r2: &Graph, m: &Matching, params: &PipelineParams) -> Result<AbsorberPath> {
    let n = g_alpha.n();
    if r2.n() != n {
        return Err(Error::SizeMismatch(n, r2.n()));
    }
    let mut used = vec![false; n];
    for v in m.covered() {
        used[v] = true;
    }
    let edges = m.edges();
    let mut seq = Vec::with_capacity(3 * edges.len());
    let mut connectors = Vec::new();
    let threshold = params.alpha * n as f64 / 2.0;
    for (i, &(a, b)) in edges.iter().enumerate() {
        seq.extend([a, b]);
        let Some(&(next_a, _)) = edges.get(i + 1) else { break };
        let nb = vertex_mask(n, g_alpha.neighbours(b));
        let na = vertex_mask(n, g_alpha.neighbours(next_a));
        let common = (0..n).filter(|&z| nb[z] && na[z]).count();
        let short = || (0..n).find(|&z| nb[z] && na[z] && !used[z]);
        let long = || {
            r2.edges().iter().find_map(|&(u, v)| {
                if used[u] || used[v] {
                    return None;
                }
                if nb[u] && !na[u] && na[v] && !nb[v] {
                    Some((u, v))
                } else if nb[v] && !na[v] && na[u] && !nb[u] {
                    Some((v, u))
                } else {
                    None
                }
            })
        };
        let conn = if common as f64 >= threshold {
            short().map(Connector::Short).or_else(|| long().map(|(u, v)| Connector::Long(u, v)))
        } else {
            long().map(|(u, v)| Connector::Long(u, v)).or_else(|| short().map(Connector::Short))
        };
        match conn.ok_or(Error::ConnectionFailed(i))? {
            Connector::Short(z) => {
                used[z] = true;
                seq.push(z);
                connectors.push(Connector::Short(z));
            }
            Connector::Long(u, v) => {
                used[u] = true;
                used[v] = true;
                seq.extend([u, v]);
                connectors.push(Connector::Long(u, v));
            }
        }
    }
    Ok(AbsorberPath { path: PathSeq::new(seq)?, core_matching: m.clone(), connectors })
}

/// Absorbs each `x ∈ U` (ascending) into `a_prime` by replacing a core edge
/// `yz` that is still consecutive and lies in `N_{G_α}(x)` with `y - x - z`.
/// The lowest eligible core edge is used, and each at most once.
pub fn absorb(a_prime: &PathSeq, u: &[Vertex], absorber: &AbsorberPath, g_alpha: &Graph) -> Result<PathSeq> {
    let n = g_alpha.n();
    let mut seq = a_prime.vertices().to_vec();
    let mut on_path = vertex_mask(n, &seq);
    let mut targets = u.to_vec();
    targets.sort_unstable();
    targets.dedup();
    if let Some(&x) = targets.iter().find(|&&x| on_path[x]) {
        return Err(Error::PreconditionViolated(format!("vertex {x} already on the path")));
    }
    let mut spent = vec![false; absorber.core_matching.len()];
    for x in targets {
        let pos = |seq: &[Vertex], v: Vertex| seq.iter().position(|&w| w == v);
        let mut slot = None;
        for (k, &(y, z)) in absorber.core_matching.edges().iter().enumerate() {
            if spent[k] || !on_path[y] || !on_path[z] || !g_alpha.has_edge(x, y) || !g_alpha.has_edge(x, z) {
                continue;
            }
            let (py, pz) = (pos(&seq, y).expect("on path"), pos(&seq, z).expect("on path"));
            if py.abs_diff(pz) == 1 {
                slot = Some((k, py.max(pz)));
                break;
            }
        }
        let (k, at) = slot.ok_or(Error::AbsorptionFailed(x))?;
        spent[k] = true;
        seq.insert(at, x);
        on_path[x] = true;
    }
    Ok(PathSeq::from_vec_unchecked(seq))
}

/// Log of one pipeline run: one line per step plus warnings about broken
/// asymptotic assumptions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Transcript {
    pub steps: Vec<String>,
    pub warnings: Vec<String>,
}

impl Transcript {
    fn step(&mut self, attempt: usize, msg: impl fmt::Display) {
        self.steps.push(format!("attempt {attempt}: {msg}"));
    }
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "step {s}")?;
        }
        for w in &self.warnings {
            writeln!(f, "warning {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineOutcome {
    pub cycle: CycleSeq,
    pub bias: BiasReport,
    pub transcript: Transcript,
    /// `G_α ∪ R1 ∪ R2 ∪ R3` of the successful attempt.
    pub union: Graph,
    pub attempts: usize,
}

/// Closes a path into a cycle through an `r` edge between its last and first
/// `window` vertices, discarding the vertices beyond the chosen edge.
fn close_windows(seq: &[Vertex], r: &Graph, window: usize) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
    let len = seq.len();
    if 2 * window > len {
        return Err(Error::PreconditionViolated(format!("window {window} too large for {len} vertices")));
    }
    let mut best: Option<(usize, usize, usize)> = None;
    for i in 0..window {
        let x = seq[len - window + i];
        for (j, &y) in seq[..window].iter().enumerate() {
            if r.has_edge(x, y) {
                let cost = window - 1 - i + j;
                if best.is_none_or(|b| cost < b.0) {
                    best = Some((cost, i, j));
                }
            }
        }
    }
    let (_, i, j) = best.ok_or(Error::NoConnectingEdge)?;
    let end = len - window + i;
    let kept = seq[j..=end].to_vec();
    let mut discarded = seq[..j].to_vec();
    discarded.extend_from_slice(&seq[end + 1..]);
    Ok((kept, discarded))
}

struct Attempt {
    cycle: CycleSeq,
    union: Graph,
}

fn attempt(
    g_alpha: &Graph,
    oracle: &mut Memo<'_>,
    params: &PipelineParams,
    seed: &Seed,
    k: usize,
    log: &mut Transcript,
) -> Result<Attempt> {
    let n = g_alpha.n();
    let rs = models::sprinkle(n, &[params.c1 / n as f64, params.c2 / n as f64, params.c3 / n as f64], seed);
    let (r1, r2, r3) = (&rs[0], &rs[1], &rs[2]);
    log.step(k, format_args!("sprinkle e(R1)={} e(R2)={} e(R3)={}", r1.edge_count(), r2.edge_count(), r3.edge_count()));

    let am = absorbing_matching(g_alpha, r1, params.epsilon)?;
    log.step(k, format_args!("matching e(M)={} shortfall={}", am.matching.len(), am.shortfall.len()));
    if am.matching.is_empty() {
        return Err(Error::StructureViolation("empty absorbing matching".into()));
    }
    let absorber = build_absorber(g_alpha, r2, &am.matching, params)?;
    let va = absorber.path.len();
    log.step(k, format_args!("absorber v(A)={va} connectors={}", absorber.connectors.len()));
    let (lo, hi) = (params.epsilon * n as f64 / 8.0, 4.0 * params.epsilon * n as f64);
    if (va as f64) < lo || va as f64 > hi {
        log.warnings.push(format!("attempt {k}: v(A)={va} outside [{lo:.1}, {hi:.1}]"));
    }

    let mut free = vec![true; n];
    for &v in absorber.path.vertices() {
        free[v] = false;
    }
    let r2_col = oracle.colour_graph(r2);
    let base = ((2.0 / (f64::from(params.r) + 1.0) - params.epsilon.powi(3)) * (n - va) as f64).floor() as usize;
    let mut p1 = None;
    for shrink in 0..4 {
        let target = base * (10 - shrink) / 10;
        match near_monochromatic_path_within(&r2_col, &free, target.max(2), params.k_budget) {
            Ok(p) => {
                log.step(k, format_args!("P1 v={} colour={} off={} target={target}", p.path.len(), p.colour, p.off_colour));
                p1 = Some(p);
                break;
            }
            Err(e) => log.step(k, format_args!("P1 target {target}: {e}")),
        }
    }
    let p1 = p1.ok_or(Error::TargetUnreachable(base))?;
    for &v in p1.path.vertices() {
        free[v] = false;
    }
    let p2 = dfs_long_path_within(r2, &free);
    log.step(k, format_args!("P2 v={}", p2.len()));

    let window = ((params.delta * n as f64).ceil() as usize).max(1);
    let w1 = window.min(va).min(p1.path.len());
    let (ap1, _) = paths::connect_windows(&absorber.path, &p1.path, r3, w1)?;
    let w2 = window.min(ap1.len()).min(p2.len());
    let (joined, _) = if p2.is_empty() { (ap1.clone(), Vec::new()) } else { paths::connect_windows(&ap1, &p2, r3, w2)? };
    let w3 = window.min(joined.len() / 2);
    let (h0, _) = close_windows(joined.vertices(), r3, w3)?;

    // the absorber survives as the prefix of h0 up to its last vertex kept
    let in_a = vertex_mask(n, absorber.path.vertices());
    let a_len = h0.iter().take_while(|&&v| in_a[v]).count();
    let a_prime = PathSeq::from_vec_unchecked(h0[..a_len].to_vec());
    let on_h0 = vertex_mask(n, &h0);
    let t: Vec<Vertex> = (0..n).filter(|&v| !on_h0[v]).collect();
    log.step(k, format_args!("cycle H0 v={} A'={} T={}", h0.len(), a_len, t.len()));
    if t.len() as f64 > params.epsilon * params.epsilon * n as f64 / 2.0 {
        log.warnings.push(format!("attempt {k}: |T|={} above eps^2 n/2", t.len()));
    }
    let absorbed = absorb(&a_prime, &t, &absorber, g_alpha)?;
    let mut full = absorbed.into_vec();
    full.extend_from_slice(&h0[a_len..]);
    let cycle = CycleSeq::new(full)?;

    let union = [r1, r2, r3].into_iter().try_fold(g_alpha.clone(), |acc, r| models::union(&acc, r))?;
    if !crate::graph::is_hamilton_cycle(&union, &cycle) {
        return Err(Error::InvalidCycle("assembled cycle is not Hamiltonian in the union".into()));
    }
    log.step(k, "absorbed T; Hamilton cycle assembled");
    Ok(Attempt { cycle, union })
}

/// Hamilton cycle of `G_α ∪ R1 ∪ R2 ∪ R3` whose colour bias comes from a long
/// near-monochromatic path `P1`. Each attempt draws fresh sprinkles from the
/// seed; any failed step moves on to the next attempt.
pub fn perturbed_biased_hamilton(
    g_alpha: &Graph,
    colour_oracle: &mut dyn ColourOracle,
    params: &PipelineParams,
    seed: &Seed,
) -> Result<PipelineOutcome> {
    params.validate()?;
    let n = g_alpha.n();
    if colour_oracle.r() != params.r {
        return Err(Error::ConfigInvalid(format!("oracle has {} colours, params {}", colour_oracle.r(), params.r)));
    }
    let mut transcript = Transcript { steps: Vec::new(), warnings: params.asymptotic_warnings() };
    let need = ceil_fraction(params.alpha, n);
    if g_alpha.min_degree() < need {
        return Err(Error::PreconditionViolated(format!("minimum degree {} below ⌈αn⌉ = {need}", g_alpha.min_degree())));
    }
    let mut memo = Memo { inner: colour_oracle, seen: HashMap::new() };
    let mut last = String::new();
    for k in 0..params.max_retries {
        let s = seed.child("attempt", k as u64);
        match attempt(g_alpha, &mut memo, params, &s, k, &mut transcript) {
            Ok(Attempt { cycle, union }) => {
                let counts = cycle.edges().fold(vec![0usize; usize::from(params.r)], |mut acc, (u, v)| {
                    acc[usize::from(memo.colour(u, v)) - 1] += 1;
                    acc
                });
                let bias = BiasReport::from_counts(&counts, n);
                return Ok(PipelineOutcome { cycle, bias, transcript, union, attempts: k + 1 });
            }
            Err(e) => {
                transcript.step(k, format_args!("failed: {e}"));
                last = e.to_string();
            }
        }
    }
    Err(Error::PipelineFailed { attempts: params.max_retries, last })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_hamilton_cycle;
    use crate::models::random_min_degree_host;

    #[test]
    fn matching_of_a_matching() {
        let r = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        let g = Graph::complete(6);
        let am = absorbing_matching(&g, &r, 0.1).unwrap();
        assert_eq!(am.matching.edges(), r.edges());
        assert_eq!(am.audit, vec![2, 2, 2, 2, 2, 2]);
        let empty = absorbing_matching(&g, &Graph::empty(6), 0.1).unwrap();
        assert!(empty.matching.is_empty() && empty.audit.iter().all(|&a| a == 0));
    }

    #[test]
    fn matching_is_maximal() {
        for s in 0..20 {
            let seed = Seed::new(s, "am");
            let r = models::gnp(50, 0.05, &seed);
            let am = absorbing_matching(&Graph::complete(50), &r, 0.1).unwrap();
            let covered = vertex_mask(50, &am.matching.covered().collect::<Vec<_>>());
            assert!(r.edges().iter().all(|&(u, v)| covered[u] || covered[v]));
        }
    }

    #[test]
    fn single_edge_absorber() {
        let m = Matching::new(vec![(0, 1)]).unwrap();
        let a = build_absorber(&Graph::complete(5), &Graph::empty(5), &m, &PipelineParams::default()).unwrap();
        assert_eq!(a.path.vertices(), &[0, 1]);
        assert!(a.connectors.is_empty());
    }

    #[test]
    fn complete_host_uses_short_connectors() {
        let m = Matching::new(vec![(0, 1), (2, 3), (4, 5)]).unwrap();
        let g = Graph::complete(10);
        let a = build_absorber(&g, &Graph::empty(10), &m, &PipelineParams::default()).unwrap();
        assert_eq!(a.connectors, vec![Connector::Short(6), Connector::Short(7)]);
        a.path.validate(&g).unwrap();
    }

    /// 12 vertices: b = 1 sees {4, 5}, a' = 2 sees {6, 7}, so they share no
    /// host neighbour and R2 edge 5-6 bridges them.
    fn gadget() -> (Graph, Graph, Matching) {
        let host = Graph::from_edges(12, [(1, 4), (1, 5), (2, 6), (2, 7), (0, 8), (3, 9)]).unwrap();
        let r2 = Graph::from_edges(12, [(5, 6)]).unwrap();
        (host, r2, Matching::new(vec![(0, 1), (2, 3)]).unwrap())
    }

    #[test]
    fn long_connector_gadget() {
        let (host, r2, m) = gadget();
        let a = build_absorber(&host, &r2, &m, &PipelineParams::default()).unwrap();
        assert_eq!(a.connectors, vec![Connector::Long(5, 6)]);
        assert_eq!(a.path.vertices(), &[0, 1, 5, 6, 2, 3]);
        let mut union = host.edges().to_vec();
        union.extend([(0, 1), (2, 3), (5, 6)]);
        a.path.validate(&Graph::from_edges_dedup(12, union).unwrap()).unwrap();
        assert_eq!(
            build_absorber(&host, &Graph::empty(12), &m, &PipelineParams::default()),
            Err(Error::ConnectionFailed(0))
        );
    }

    #[test]
    fn absorb_cases() {
        let g = Graph::complete(9);
        let m = Matching::new(vec![(0, 1), (2, 3), (4, 5)]).unwrap();
        let a = build_absorber(&g, &Graph::empty(9), &m, &PipelineParams::default()).unwrap();
        assert_eq!(absorb(&a.path, &[], &a, &g).unwrap(), a.path);
        let one = absorb(&a.path, &[8], &a, &g).unwrap();
        assert_eq!(one.len(), a.path.len() + 1);
        assert_eq!((one.first(), one.last()), (a.path.first(), a.path.last()));
        assert_eq!(one.vertices()[..3], [0, 8, 1]);

        // connectors take 6 and 7; exactly one eligible core edge for 8
        let host = Graph::from_edges_dedup(9, a.path.edges().chain([(8, 2), (8, 3)])).unwrap();
        let forced = absorb(&a.path, &[8], &a, &host).unwrap();
        assert!(forced.vertices().windows(3).any(|w| w == [2, 8, 3]));
        assert_eq!(absorb(&a.path, &[8], &a, &Graph::empty(9)), Err(Error::AbsorptionFailed(8)));
    }

    #[test]
    fn absorb_three_vertices() {
        let n = 40;
        let g = Graph::complete(n);
        let m = Matching::new((0..12).map(|i| (2 * i, 2 * i + 1)).collect()).unwrap();
        let a = build_absorber(&g, &Graph::empty(n), &m, &PipelineParams::default()).unwrap();
        let u = [37, 38, 39];
        let out = absorb(&a.path, &u, &a, &g).unwrap();
        out.validate(&g).unwrap();
        let mut verts = out.vertices().to_vec();
        verts.sort_unstable();
        let mut expect = a.path.vertices().to_vec();
        expect.extend(u);
        expect.sort_unstable();
        assert_eq!(verts, expect);
    }

    #[test]
    fn complete_host_pipeline() {
        let n = 60;
        let g = Graph::complete(n);
        let mut oracle = RandomColouring { r: 2, seed: 5 };
        let params = PipelineParams { alpha: 0.9, ..PipelineParams::default() };
        let out = perturbed_biased_hamilton(&g, &mut oracle, &params, &Seed::new(1, "k")).unwrap();
        assert!(is_hamilton_cycle(&out.union, &out.cycle));
    }

    #[test]
    fn pipeline_replays() {
        let n = 150;
        let seed = Seed::new(11, "replay");
        let g = random_min_degree_host(n, 0.3, &seed).unwrap();
        let run = || {
            let mut oracle = RandomColouring { r: 2, seed: 3 };
            perturbed_biased_hamilton(&g, &mut oracle, &PipelineParams::default(), &seed)
        };
        let (a, b) = (run(), run());
        assert_eq!(a, b);
        if let Ok(out) = a {
            assert!(is_hamilton_cycle(&out.union, &out.cycle));
        }
    }
}
