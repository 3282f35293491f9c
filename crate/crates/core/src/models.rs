//! Graph models: `G(n, m)`, `G(n, p)`, complete split hosts, generic
//! minimum-degree hosts, unions and sprinkled random rounds.
//!
//! Every generator is a pure function of its parameters and a [`Seed`].
//! Child streams are derived with FNV-1a over `(master, label, index)`
//! followed by the SplitMix64 finaliser, and drawn from ChaCha8, so the
//! output is identical on every platform and independent of call order.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{ceil_fraction, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    pub master: u64,
    pub label: String,
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a(bytes: impl IntoIterator<Item = u8>, mut h: u64) -> u64 {
    for b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// `splitmix64(fnv1a(master_le ‖ label ‖ 0xff ‖ index_le))`.
pub fn derive_seed(master: u64, label: &str, index: u64) -> u64 {
    let mut h = fnv1a(master.to_le_bytes(), FNV_OFFSET);
    h = fnv1a(label.bytes(), h);
    h = fnv1a([0xff], h);
    h = fnv1a(index.to_le_bytes(), h);
    splitmix64(h)
}

impl Seed {
    pub fn new(master: u64, label: impl Into<String>) -> Self {
        Self { master, label: label.into() }
    }

    pub fn derive(&self, index: u64) -> u64 {
        derive_seed(self.master, &self.label, index)
    }

    /// Independent stream for a sub-task.
    pub fn child(&self, label: &str, index: u64) -> Seed {
        Seed::new(self.derive(index), label)
    }

    pub fn rng(&self, index: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.derive(index))
    }
}

/// Parameters of a randomly perturbed graph `G_alpha ∪ G(n, m)` (or `G(n, p)`).
#[derive(Clone, Debug, PartialEq)]
pub struct PerturbationParams {
    pub n: usize,
    pub alpha: f64,
    pub m: Option<usize>,
    pub p: Option<f64>,
    pub r: u8,
}

impl PerturbationParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(Error::ConfigInvalid(format!("alpha = {} not in (0, 1]", self.alpha)));
        }
        if let Some(m) = self.m {
            let max = pair_count(self.n);
            if m > max {
                return Err(Error::TooManyEdges { m, max });
            }
        }
        if let Some(p) = self.p {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::ConfigInvalid(format!("p = {p} not in [0, 1]")));
            }
        }
        if self.r < 2 {
            return Err(Error::TooFewColours(self.r));
        }
        Ok(())
    }
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Inverse of the row-major enumeration of pairs `u < v`.
fn pair_from_index(n: usize, idx: usize) -> (Vertex, Vertex) {
    // offset(u) = number of pairs with first element < u
    let offset = |u: usize| u * (2 * n - u - 1) / 2;
    let (mut lo, mut hi) = (0usize, n - 1);
    while lo + 1 < hi {
        let mid = (lo + hi) / 2;
        if offset(mid) <= idx {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let u = lo;
    (u, u + 1 + (idx - offset(u)))
}

/// Uniform `m`-edge graph, sampled with Floyd's algorithm over pair indices.
pub fn gnm(n: usize, m: usize, seed: &Seed) -> Result<Graph> {
    let total = pair_count(n);
    if m > total {
        return Err(Error::TooManyEdges { m, max: total });
    }
    let mut rng = seed.rng(0);
    let mut chosen: HashSet<usize> = HashSet::with_capacity(m);
    for j in total - m..total {
        let t = rng.gen_range(0..=j);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    let mut idx: Vec<usize> = chosen.into_iter().collect();
    idx.sort_unstable();
    Graph::from_edges(n, idx.into_iter().map(|i| pair_from_index(n, i)))
}

/// Each pair independently with probability `p`.
pub fn gnp(n: usize, p: f64, seed: &Seed) -> Graph {
    if p <= 0.0 {
        return Graph::empty(n);
    }
    if p >= 1.0 {
        return Graph::complete(n);
    }
    let mut rng = seed.rng(0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are distinct")
}

/// Sizes `(|A|, |B|)` of the complete split graph, `|B| = ⌈alpha n⌉`.
pub fn split_sizes(n: usize, alpha: f64) -> (usize, usize) {
    let b = ceil_fraction(alpha, n).min(n);
    (n - b, b)
}

/// Independent side `A = {0, …, |A|-1}` of [`complete_split`].
pub fn split_independent_side(n: usize, alpha: f64) -> Vec<Vertex> {
    (0..split_sizes(n, alpha).0).collect()
}

/// `A` independent, `B` joined to every vertex; `|B| = ⌈alpha n⌉`.
pub fn complete_split(n: usize, alpha: f64) -> Graph {
    let (a, _) = split_sizes(n, alpha);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if v >= a {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are distinct")
}

/// A generic member of `Γ_alpha(n)`: `G(n, alpha + 0.05)` topped up greedily
/// so that every vertex reaches degree `⌈alpha n⌉`. Deficient vertices are
/// processed in index order and joined to their lowest-degree non-neighbours.
pub fn random_min_degree_host(n: usize, alpha: f64, seed: &Seed) -> Result<Graph> {
    let target = ceil_fraction(alpha, n);
    if n > 0 && target > n - 1 {
        return Err(Error::PreconditionViolated(format!("⌈alpha n⌉ = {target} > n - 1")));
    }
    let base = gnp(n, (alpha + 0.05).min(1.0), seed);
    if base.min_degree() >= target {
        return Ok(base);
    }
    let mut adj = vec![vec![false; n]; n];
    let mut deg = vec![0usize; n];
    for &(u, v) in base.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
        deg[u] += 1;
        deg[v] += 1;
    }
    for v in 0..n {
        while deg[v] < target {
            let w = (0..n)
                .filter(|&w| w != v && !adj[v][w])
                .min_by_key(|&w| (deg[w], w))
                .expect("a non-neighbour exists while deg < n - 1");
            adj[v][w] = true;
            adj[w][v] = true;
            deg[v] += 1;
            deg[w] += 1;
        }
    }
    let edges = (0..n).flat_map(|u| {
        let row = &adj[u];
        (u + 1..n).filter(move |&v| row[v]).map(move |v| (u, v))
    });
    Graph::from_edges(n, edges.collect::<Vec<_>>())
}

pub fn union(g1: &Graph, g2: &Graph) -> Result<Graph> {
    if g1.n() != g2.n() {
        return Err(Error::SizeMismatch(g1.n(), g2.n()));
    }
    Graph::from_edges_dedup(g1.n(), g1.edges().iter().chain(g2.edges()).copied())
}

/// `k` independent `G(n, p_i)` rounds; round `i` draws from the child stream
/// `("sprinkle", i)` of `seed`.
pub fn sprinkle(n: usize, probabilities: &[f64], seed: &Seed) -> Vec<Graph> {
    probabilities
        .iter()
        .enumerate()
        .map(|(i, &p)| gnp(n, p, &seed.child("sprinkle", i as u64)))
        .collect()
}
