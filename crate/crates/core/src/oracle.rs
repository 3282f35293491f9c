//! Exact brute-force ground truth for small instances.
//!
//! Every routine here refuses inputs above its [`OracleGuard`] bound instead
//! of running unbounded.

use crate::error::{Error, Result};
use crate::graph::{BiasReport, Colour, CycleSeq, EdgeColouring, Graph, Matching, PathSeq, Vertex};
use crate::matching;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleGuard {
    pub max_n_hamilton: usize,
    pub max_n_path: usize,
    pub max_colourings_exponent: u32,
}

impl Default for OracleGuard {
    fn default() -> Self {
        Self { max_n_hamilton: 12, max_n_path: 16, max_colourings_exponent: 20 }
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbours(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

/// Depth-first enumeration of Hamilton cycles in canonical form: the cycle
/// starts at vertex 0 and its second vertex is smaller than its last, so every
/// cycle is produced exactly once.
pub struct HamiltonCycles {
    n: usize,
    adj: Vec<u32>,
    path: Vec<usize>,
    visited: u32,
    candidates: Vec<u32>,
}

impl HamiltonCycles {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let adj = adjacency_masks(g);
        let (path, candidates) = if n >= 3 { (vec![0], vec![adj[0]]) } else { (Vec::new(), Vec::new()) };
        Self { n, adj, path, visited: 1, candidates }
    }

    /// Advances to the next cycle without allocating; the slice is valid
    /// until the following call.
    pub fn next_slice(&mut self) -> Option<&[usize]> {
        loop {
            let mask = self.candidates.last_mut()?;
            if *mask == 0 {
                self.candidates.pop();
                if let Some(v) = self.path.pop() {
                    self.visited &= !(1 << v);
                }
                if self.path.is_empty() {
                    self.candidates.clear();
                    return None;
                }
                continue;
            }
            let v = mask.trailing_zeros() as usize;
            *mask &= *mask - 1;
            if self.path.len() + 1 == self.n {
                if self.adj[v] & 1 != 0 && self.path[1] < v {
                    self.path.push(v);
                    // the closing vertex is removed again on the next call
                    self.candidates.push(0);
                    self.visited |= 1 << v;
                    return Some(&self.path);
                }
            } else {
                self.path.push(v);
                self.visited |= 1 << v;
                self.candidates.push(self.adj[v] & !self.visited);
            }
        }
    }
}

impl Iterator for HamiltonCycles {
    type Item = CycleSeq;

    fn next(&mut self) -> Option<CycleSeq> {
        self.next_slice().map(|s| CycleSeq::new(s.to_vec()).expect("enumerated cycle is simple"))
    }
}

/// Result of the exact maximum-bias search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxBias {
    pub report: BiasReport,
    pub cycle: CycleSeq,
}

/// Minimum and maximum number of edges of one colour over all Hamilton cycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountRange {
    pub min: usize,
    pub max: usize,
}

const NEG: i16 = i16::MIN / 2;

impl OracleGuard {
    fn check(&self, n: usize, guard: usize) -> Result<()> {
        if n > guard {
            return Err(Error::GuardExceeded { n, guard });
        }
        Ok(())
    }

    pub fn hamilton_cycles(&self, g: &Graph) -> Result<HamiltonCycles> {
        self.check(g.n(), self.max_n_hamilton)?;
        Ok(HamiltonCycles::new(g))
    }

    pub fn enumerate_hamilton_cycles(&self, g: &Graph) -> Result<Vec<CycleSeq>> {
        Ok(self.hamilton_cycles(g)?.collect())
    }

    /// Held–Karp style DP: best (max when `sign = 1`, min when `sign = -1`)
    /// signed count of colour-`c` edges over Hamilton cycles, with the cycle.
    fn extremal_count(&self, colouring: &EdgeColouring, c: Colour, sign: i16) -> Option<(usize, CycleSeq)> {
        let g = colouring.graph();
        let n = g.n();
        if n < 3 {
            return None;
        }
        let adj = adjacency_masks(g);
        let w = |u: usize, v: usize| sign * i16::from(colouring.colour_unchecked(u, v) == c);
        let full = (1usize << n) - 1;
        let mut dp = vec![NEG; (1 << n) * n];
        dp[n] = 0; // mask {0}, end 0
        for mask in (1..=full).step_by(2) {
            for v in 0..n {
                let cur = dp[mask * n + v];
                if cur == NEG {
                    continue;
                }
                let mut free = adj[v] & !(mask as u32);
                while free != 0 {
                    let x = free.trailing_zeros() as usize;
                    free &= free - 1;
                    let next = (mask | 1 << x) * n + x;
                    let val = cur + w(v, x);
                    if val > dp[next] {
                        dp[next] = val;
                    }
                }
            }
        }
        let (best, end) = (1..n)
            .filter(|&v| adj[v] & 1 != 0 && dp[full * n + v] != NEG)
            .map(|v| (dp[full * n + v] + w(v, 0), v))
            .max_by_key(|&(val, v)| (val, std::cmp::Reverse(v)))?;
        // walk back through the table
        let mut order = vec![end];
        let (mut mask, mut v) = (full, end);
        while v != 0 {
            let prev_mask = mask & !(1 << v);
            let target = dp[mask * n + v];
            let u = (0..n)
                .find(|&u| {
                    prev_mask >> u & 1 == 1
                        && adj[u] >> v & 1 == 1
                        && dp[prev_mask * n + u] != NEG
                        && dp[prev_mask * n + u] + w(u, v) == target
                })
                .expect("DP predecessor exists");
            order.push(u);
            mask = prev_mask;
            v = u;
        }
        order.reverse();
        let cycle = CycleSeq::new(order).expect("DP reconstruction is a cycle");
        Some(((best * sign) as usize, cycle))
    }

    /// Per-colour range of edge counts over all Hamilton cycles.
    pub fn colour_count_ranges(&self, colouring: &EdgeColouring) -> Result<Vec<CountRange>> {
        self.check(colouring.graph().n(), self.max_n_hamilton)?;
        (1..=colouring.r())
            .map(|c| {
                let (max, _) = self.extremal_count(colouring, c, 1).ok_or(Error::NoHamiltonCycle)?;
                let (min, _) = self.extremal_count(colouring, c, -1).ok_or(Error::NoHamiltonCycle)?;
                Ok(CountRange { min, max })
            })
            .collect()
    }

    /// Maximum colour bias over every Hamilton cycle, with an optimal cycle.
    pub fn max_bias_fixed_colouring(&self, colouring: &EdgeColouring) -> Result<MaxBias> {
        let n = colouring.graph().n();
        self.check(n, self.max_n_hamilton)?;
        let mut best: Option<(usize, Colour, CycleSeq)> = None;
        for c in 1..=colouring.r() {
            let (count, cycle) = self.extremal_count(colouring, c, 1).ok_or(Error::NoHamiltonCycle)?;
            if best.as_ref().is_none_or(|b| count > b.0) {
                best = Some((count, c, cycle));
            }
        }
        let (_, _, cycle) = best.expect("r >= 2");
        let report = crate::graph::colour_bias(&cycle, colouring)?;
        Ok(MaxBias { report, cycle })
    }

    /// `h_r(g)`: minimum over r-colourings of the maximum Hamilton-cycle bias.
    /// Colourings are enumerated as restricted growth strings, so each
    /// partition into colour classes is visited once per colour-naming orbit.
    pub fn exact_hr_tiny(&self, g: &Graph, r: Colour) -> Result<HrValue> {
        if r < 2 {
            return Err(Error::TooFewColours(r));
        }
        let e = g.edge_count();
        let log_orbits = e as f64 * f64::from(r).log2() - (1..=u32::from(r)).map(|k| f64::from(k).log2()).sum::<f64>();
        if log_orbits > f64::from(self.max_colourings_exponent) {
            return Err(Error::GuardExceeded { n: e, guard: self.max_colourings_exponent as usize });
        }
        let n = g.n();
        let cycles: Vec<Vec<usize>> = {
            let mut it = self.hamilton_cycles(g)?;
            let mut out = Vec::new();
            while let Some(c) = it.next_slice() {
                let k = c.len();
                out.push((0..k).map(|i| g.edge_id(c[i], c[(i + 1) % k]).expect("cycle edge")).collect());
            }
            out
        };
        if cycles.is_empty() {
            return Err(Error::NoHamiltonCycle);
        }
        let r_us = usize::from(r);
        // smallest achievable numerator: r * ceil(n / r) - n
        let floor_num = (r_us * n.div_ceil(r_us)) as i64 - n as i64;
        let mut colours = vec![1 as Colour; e];
        let mut best: Option<(i64, Vec<Colour>)> = None;
        let mut counts = vec![0usize; r_us];
        loop {
            let mut worst = i64::MIN;
            for cyc in &cycles {
                counts.fill(0);
                for &id in cyc {
                    counts[usize::from(colours[id]) - 1] += 1;
                }
                let num = (r_us * counts.iter().copied().max().unwrap_or(0)) as i64 - n as i64;
                worst = worst.max(num);
                if best.as_ref().is_some_and(|b| worst >= b.0) {
                    break;
                }
            }
            if best.as_ref().is_none_or(|b| worst < b.0) {
                best = Some((worst, colours.clone()));
                if worst <= floor_num {
                    break;
                }
            }
            if !next_restricted_growth(&mut colours, r) {
                break;
            }
        }
        let (numerator, colours) = best.expect("at least one colouring");
        Ok(HrValue {
            numerator,
            denominator: i64::from(r),
            colouring: EdgeColouring::new(g.clone(), r, colours)?,
        })
    }

    /// A maximum-vertex simple path (DP over vertex subsets).
    pub fn longest_path_exact(&self, g: &Graph) -> Result<PathSeq> {
        let n = g.n();
        self.check(n, self.max_n_path)?;
        if n == 0 {
            return Ok(PathSeq::from_vec_unchecked(Vec::new()));
        }
        let adj = adjacency_masks(g);
        let mut ends = vec![0u32; 1 << n];
        for v in 0..n {
            ends[1 << v] = 1 << v;
        }
        let mut best_mask = 1usize;
        for mask in 1usize..1 << n {
            let mut e = ends[mask];
            if e == 0 {
                continue;
            }
            if mask.count_ones() > best_mask.count_ones() {
                best_mask = mask;
            }
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut free = adj[v] & !(mask as u32);
                while free != 0 {
                    let w = free.trailing_zeros() as usize;
                    free &= free - 1;
                    ends[mask | 1 << w] |= 1 << w;
                }
            }
        }
        let mut mask = best_mask;
        let mut v = ends[mask].trailing_zeros() as usize;
        let mut order = vec![v];
        while mask.count_ones() > 1 {
            let prev = mask & !(1 << v);
            let cand = ends[prev] & adj[v];
            let u = cand.trailing_zeros() as usize;
            order.push(u);
            mask = prev;
            v = u;
        }
        Ok(PathSeq::from_vec_unchecked(order))
    }
}

/// Exact value of `h_r` with a minimising colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HrValue {
    pub numerator: i64,
    pub denominator: i64,
    pub colouring: EdgeColouring,
}

impl HrValue {
    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

/// Next restricted growth string with values in `1..=r`: each entry is at
/// most one more than the maximum of the entries before it.
fn next_restricted_growth(s: &mut [Colour], r: Colour) -> bool {
    let k = s.len();
    let mut prefix_max = vec![0 as Colour; k];
    let mut m = 0;
    for i in 0..k {
        prefix_max[i] = m;
        m = m.max(s[i]);
    }
    for i in (1..k).rev() {
        if s[i] < r && s[i] <= prefix_max[i] {
            s[i] += 1;
            for x in s.iter_mut().skip(i + 1) {
                *x = 1;
            }
            return true;
        }
    }
    false
}

pub fn enumerate_hamilton_cycles(g: &Graph) -> Result<Vec<CycleSeq>> {
    OracleGuard::default().enumerate_hamilton_cycles(g)
}

pub fn max_bias_fixed_colouring(colouring: &EdgeColouring) -> Result<MaxBias> {
    OracleGuard::default().max_bias_fixed_colouring(colouring)
}

pub fn exact_hr_tiny(g: &Graph, r: Colour) -> Result<HrValue> {
    OracleGuard::default().exact_hr_tiny(g, r)
}

pub fn longest_path_exact(g: &Graph) -> Result<PathSeq> {
    OracleGuard::default().longest_path_exact(g)
}

pub fn max_matching_exact(g: &Graph) -> Matching {
    matching::max_matching(g)
}

/// Vertices of a graph as a convenience for callers building vertex sets.
pub fn all_vertices(g: &Graph) -> Vec<Vertex> {
    (0..g.n()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, e).unwrap()
    }

    fn factorial(k: usize) -> usize {
        (1..=k).product()
    }

    /// Counts Hamilton cycles by DP over subsets (paths from vertex 0).
    fn dp_cycle_count(g: &Graph) -> usize {
        let n = g.n();
        let adj = adjacency_masks(g);
        let mut ways = vec![0usize; (1 << n) * n];
        ways[n] = 1;
        for mask in (1usize..1 << n).step_by(2) {
            for v in 0..n {
                let w = ways[mask * n + v];
                if w == 0 {
                    continue;
                }
                for x in 0..n {
                    if mask >> x & 1 == 0 && adj[v] >> x & 1 == 1 {
                        ways[(mask | 1 << x) * n + x] += w;
                    }
                }
            }
        }
        let full = (1 << n) - 1;
        let directed: usize = (1..n).filter(|&v| adj[v] & 1 != 0).map(|v| ways[full * n + v]).sum();
        directed / 2
    }

    #[test]
    fn complete_graph_counts() {
        for n in 4..=8 {
            let count = enumerate_hamilton_cycles(&Graph::complete(n)).unwrap().len();
            assert_eq!(count, factorial(n - 1) / 2);
        }
    }

    #[test]
    fn cycle_and_petersen() {
        assert_eq!(enumerate_hamilton_cycles(&Graph::cycle(6)).unwrap().len(), 1);
        let p = petersen();
        assert_eq!(enumerate_hamilton_cycles(&p).unwrap().len(), 0);
        assert_eq!(dp_cycle_count(&p), 0);
    }

    #[test]
    fn enumeration_agrees_with_dp_count() {
        use crate::models::{gnp, Seed};
        for s in 0..20 {
            let g = gnp(9, 0.6, &Seed::new(s, "ham"));
            let cycles = enumerate_hamilton_cycles(&g).unwrap();
            assert_eq!(cycles.len(), dp_cycle_count(&g));
            for c in &cycles {
                assert_eq!(c, &c.canonical());
                assert!(crate::graph::is_hamilton_cycle(&g, c));
            }
        }
    }

    #[test]
    fn guard_refuses_large_inputs() {
        assert!(matches!(
            enumerate_hamilton_cycles(&Graph::complete(13)),
            Err(Error::GuardExceeded { n: 13, guard: 12 })
        ));
        assert!(longest_path_exact(&Graph::complete(17)).is_err());
    }

    #[test]
    fn max_bias_examples() {
        let mono = EdgeColouring::monochromatic(Graph::complete(6), 2, 1).unwrap();
        let mb = max_bias_fixed_colouring(&mono).unwrap();
        assert_eq!((mb.report.bias_numerator, mb.report.bias_denominator), (6, 2));
        let star = EdgeColouring::monochromatic(Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap(), 2, 1).unwrap();
        assert_eq!(max_bias_fixed_colouring(&star), Err(Error::NoHamiltonCycle));
    }

    #[test]
    fn max_bias_matches_enumeration() {
        use crate::models::{gnp, Seed};
        use rand::Rng;
        for s in 0..30 {
            let seed = Seed::new(s, "mb");
            let g = gnp(8, 0.7, &seed);
            let mut rng = seed.rng(1);
            let col = EdgeColouring::from_fn(g.clone(), 3, |_, _| rng.gen_range(1..=3)).unwrap();
            let cycles = enumerate_hamilton_cycles(&g).unwrap();
            let brute = cycles
                .iter()
                .map(|c| crate::graph::colour_bias(c, &col).unwrap())
                .max_by(|a, b| a.cmp_bias(b));
            match brute {
                None => assert_eq!(max_bias_fixed_colouring(&col), Err(Error::NoHamiltonCycle)),
                Some(b) => {
                    let mb = max_bias_fixed_colouring(&col).unwrap();
                    assert_eq!(mb.report.bias_numerator, b.bias_numerator);
                    assert!(crate::graph::is_hamilton_cycle(&g, &mb.cycle));
                    let ranges = OracleGuard::default().colour_count_ranges(&col).unwrap();
                    for c in 1..=3u8 {
                        let counts: Vec<usize> = cycles
                            .iter()
                            .map(|cy| crate::graph::cycle_colour_counts(cy, &col).unwrap()[c as usize - 1])
                            .collect();
                        let range = ranges[c as usize - 1];
                        assert_eq!(range.min, *counts.iter().min().unwrap());
                        assert_eq!(range.max, *counts.iter().max().unwrap());
                    }
                }
            }
        }
    }

    /// Plain enumeration of all r^e colourings, no symmetry reduction.
    fn brute_hr(g: &Graph, r: u8) -> i64 {
        let cycles = enumerate_hamilton_cycles(g).unwrap();
        let e = g.edge_count();
        let total = (r as usize).pow(e as u32);
        let mut best = i64::MAX;
        for code in 0..total {
            let mut x = code;
            let colours: Vec<u8> = (0..e)
                .map(|_| {
                    let c = (x % r as usize) as u8 + 1;
                    x /= r as usize;
                    c
                })
                .collect();
            let col = EdgeColouring::new(g.clone(), r, colours).unwrap();
            let worst = cycles
                .iter()
                .map(|c| crate::graph::colour_bias(c, &col).unwrap().bias_numerator)
                .max()
                .unwrap();
            best = best.min(worst);
        }
        best
    }

    #[test]
    fn hr_tiny_values() {
        let c4 = exact_hr_tiny(&Graph::cycle(4), 2).unwrap();
        assert_eq!(c4.numerator, 0);
        let k4 = exact_hr_tiny(&Graph::complete(4), 2).unwrap();
        assert_eq!(k4.numerator, brute_hr(&Graph::complete(4), 2));
        let k5 = exact_hr_tiny(&Graph::complete(5), 2).unwrap();
        assert_eq!(k5.numerator, brute_hr(&Graph::complete(5), 2));
        let k4r3 = exact_hr_tiny(&Graph::complete(4), 3).unwrap();
        assert_eq!(k4r3.numerator, brute_hr(&Graph::complete(4), 3));
        assert_eq!(exact_hr_tiny(&Graph::path(4), 2).unwrap_err(), Error::NoHamiltonCycle);
        // the witness colouring attains the value
        let mb = max_bias_fixed_colouring(&k5.colouring).unwrap();
        assert_eq!(mb.report.bias_numerator, k5.numerator);
    }

    #[test]
    fn restricted_growth_counts_partitions() {
        // number of RGS of length 5 with at most 2 blocks = 2^4 = 16
        let mut s = vec![1u8; 5];
        let mut count = 1;
        while next_restricted_growth(&mut s, 2) {
            count += 1;
        }
        assert_eq!(count, 16);
    }

    #[test]
    fn longest_path_examples() {
        assert_eq!(longest_path_exact(&Graph::path(5)).unwrap().len(), 5);
        assert_eq!(longest_path_exact(&Graph::complete(5)).unwrap().len(), 5);
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let p = longest_path_exact(&star).unwrap();
        assert_eq!(p.len(), 3);
        p.validate(&star).unwrap();
        assert_eq!(longest_path_exact(&Graph::empty(3)).unwrap().len(), 1);
    }

    #[test]
    fn matching_examples() {
        assert_eq!(max_matching_exact(&Graph::complete(4)).len(), 2);
        assert_eq!(max_matching_exact(&Graph::cycle(5)).len(), 2);
    }
}
