//! Dense hosts with minimum degree `(r+1)n/2r`: either a Hamilton cycle of
//! large colour bias can be built, or some `⌈αn⌉`-set `U` and colour `c*` leave
//! only a small matching of `G[U]` avoiding `c*`.
//!
//! The constructive side follows three routes. Exceptional vertices of a
//! near-monochromatic cycle's colour yield bowties (type I from `X_c`, type II
//! from `Y_c`); otherwise the cycle is glued to a Hamilton cycle of the rest
//! through c-good edges and the two completions are compared. When all
//! routes fall short of the requested bias, a witness `(U, c*)` is extracted
//! and certified with an exact matching.

mod assembly;
mod bowtie;
mod sets;

pub use assembly::{two_cycle_assembly, Assembly};
pub use bowtie::{bowties_to_biased_hamilton, find_bowties, Bowtie, BowtieCycle, BowtieKind, BowtieSearch};
pub use sets::{c_good_edges, c_good_matching, compute_xc, compute_yc, non_c_boundary, outside_c_neighbourhood};

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{
    ceil_fraction, colour_bias, f_c, is_hamilton_cycle, max_matching_avoiding_colour, BiasReport, Colour,
    CycleSeq, EdgeColouring, Graph, Matching, Vertex,
};
use crate::matching::{matching_size_capped, max_matching};
use crate::paths::{hamilton_with_forest_search, monochromatic_cycle, posa_hamilton_with_forest, PathForest};

/// `α = (r+1)/2r`.
pub fn critical_alpha(r: Colour) -> f64 {
    (f64::from(r) + 1.0) / (2.0 * f64::from(r))
}

/// The colour with the most edges, smallest on ties.
pub fn majority_colour(colouring: &EdgeColouring) -> Colour {
    let sizes = colouring.class_sizes();
    (1..=colouring.r())
        .max_by_key(|&c| (sizes[usize::from(c) - 1], std::cmp::Reverse(c)))
        .expect("r >= 2")
}

/// Size parameters of the construction.
///
/// The proof uses `t = 2⁵rb`, `s = t/4`, thresholds `8t` for `X_c` and `4t`
/// for `Y_c`, `s/4` bowties and a witness bound of `16t = 2⁹rb`. Those only
/// make sense for `n >= 2¹⁰r²b`; [`Thresholds::scaled`] keeps the ratios for
/// small graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Thresholds {
    /// Length of the near-monochromatic path.
    pub t: usize,
    pub s: usize,
    /// `v ∈ X_c` when `G(v, c)` has no matching of this size.
    pub x: usize,
    /// `v ∈ Y_c` when `B(v, c)` has a non-c matching of this size.
    pub y: usize,
    /// Bowties needed, and the `|X_c|`/`|Y_c|` trigger.
    pub bowties: usize,
    /// A witness matching must be smaller than this.
    pub witness: usize,
}

impl Thresholds {
    pub fn asymptotic(r: Colour, b: usize) -> Self {
        Self::scaled(32 * usize::from(r) * b)
    }

    /// `s = t/4`, `x = 8t`, `y = 4t`, `s/4` bowties, witness `16t`; the
    /// quarters are rounded up to 1.
    pub fn scaled(t: usize) -> Self {
        let s = (t / 4).max(1);
        Self { t, s, x: 8 * t, y: 4 * t, bowties: (s / 4).max(1), witness: 16 * t }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    BowtieI,
    BowtieII,
    TwoCycle,
    /// Plain Hamilton cycle, only produced when nothing else is available.
    Plain,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::BowtieI => "bowtie-i",
            Route::BowtieII => "bowtie-ii",
            Route::TwoCycle => "two-cycle",
            Route::Plain => "plain",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedCycle {
    pub cycle: CycleSeq,
    pub bias: BiasReport,
    pub route: Route,
}

/// `U` and `c*` with the exact maximum `c*`-free matching of `G[U]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureWitness {
    pub u: Vec<Vertex>,
    pub c_star: Colour,
    pub max_free_matching: Matching,
    /// The vertex whose neighbourhood seeded `U`.
    pub anchor: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifierOutcome {
    BiasedCycle(CertifiedCycle),
    Witness(StructureWitness),
    /// Neither branch could be certified; the best cycle found, if any.
    BestEffortCycle(Option<CertifiedCycle>),
}

impl ClassifierOutcome {
    pub fn kind(&self) -> &'static str {
        match self {
            ClassifierOutcome::BiasedCycle(_) => "biased-cycle",
            ClassifierOutcome::Witness(_) => "witness",
            ClassifierOutcome::BestEffortCycle(_) => "best-effort",
        }
    }

    pub fn cycle(&self) -> Option<&CertifiedCycle> {
        match self {
            ClassifierOutcome::BiasedCycle(c) | ClassifierOutcome::BestEffortCycle(Some(c)) => Some(c),
            _ => None,
        }
    }

    /// Rechecks the certificate from scratch: cycles are Hamiltonian with the
    /// stated bias (at least `b` for a biased cycle); a witness has
    /// `|U| = ⌈αn⌉` and a `c*`-free matching of `G[U]` that is maximum and
    /// below `thresholds.witness`.
    pub fn verify(&self, colouring: &EdgeColouring, b: usize, thresholds: &Thresholds) -> Result<()> {
        let g = colouring.graph();
        let check_cycle = |c: &CertifiedCycle| -> Result<()> {
            if !is_hamilton_cycle(g, &c.cycle) {
                return Err(Error::InvalidCycle("not a Hamilton cycle of the host".into()));
            }
            if colour_bias(&c.cycle, colouring)? != c.bias {
                return Err(Error::StructureViolation("stated bias differs from the recount".into()));
            }
            Ok(())
        };
        match self {
            ClassifierOutcome::BiasedCycle(c) => {
                check_cycle(c)?;
                if !c.bias.at_least(b as i64) {
                    return Err(Error::StructureViolation(format!("bias {} below {b}", c.bias)));
                }
                Ok(())
            }
            ClassifierOutcome::BestEffortCycle(c) => c.as_ref().map_or(Ok(()), check_cycle),
            ClassifierOutcome::Witness(w) => verify_witness(colouring, w, thresholds.witness),
        }
    }
}

fn verify_witness(colouring: &EdgeColouring, w: &StructureWitness, bound: usize) -> Result<()> {
    let g = colouring.graph();
    let n = g.n();
    let want = ceil_fraction(critical_alpha(colouring.r()), n);
    let mut u = w.u.clone();
    u.sort_unstable();
    u.dedup();
    if u.len() != want || u.iter().any(|&v| v >= n) {
        return Err(Error::StructureViolation(format!("|U| = {}, expected {want}", u.len())));
    }
    let mask = crate::graph::vertex_mask(n, &u);
    for &(a, b) in w.max_free_matching.edges() {
        if !mask[a] || !mask[b] || colouring.colour(a, b).is_none_or(|c| c == w.c_star) {
            return Err(Error::StructureViolation(format!("{{{a}, {b}}} is not a c*-free edge of G[U]")));
        }
    }
    let exact = max_matching_avoiding_colour(colouring, w.c_star, &u).len();
    if exact != w.max_free_matching.len() {
        return Err(Error::StructureViolation(format!(
            "matching has {} edges, maximum is {exact}",
            w.max_free_matching.len()
        )));
    }
    if exact >= bound {
        return Err(Error::StructureViolation(format!("free matching {exact} not below {bound}")));
    }
    Ok(())
}

/// Attach edges for the interior of `F`: for each `v_i` an edge of `G[N(v_i)]`
/// off `F` and disjoint from earlier choices, minimising `f_{c*}`.
fn greedy_attach(colouring: &EdgeColouring, c_star: Colour, f: &[Vertex]) -> Result<Vec<(Vertex, Vertex, Vertex)>> {
    let g = colouring.graph();
    let mut used = vec![false; g.n()];
    for &v in f {
        used[v] = true;
    }
    let t = f.len() - 1;
    let mut attach = Vec::with_capacity(t.saturating_sub(1));
    for &v in &f[1..t] {
        let mut best: Option<(i32, Vertex, Vertex)> = None;
        for &x in g.neighbours(v) {
            if used[x] {
                continue;
            }
            for &y in g.neighbours(x) {
                if y > x && !used[y] && g.has_edge(v, y) {
                    let key = (f_c(colouring, v, x, y, c_star)?, x, y);
                    if best.is_none_or(|b| key < b) {
                        best = Some(key);
                    }
                }
            }
        }
        let (_, x, y) = best.ok_or_else(|| Error::StructureViolation(format!("no attach edge for {v}")))?;
        used[x] = true;
        used[y] = true;
        attach.push((v, x, y));
    }
    Ok(attach)
}

/// Route through a near-monochromatic cycle and c-good attach edges.
fn two_cycle_route(colouring: &EdgeColouring, c_star: Colour, t: usize) -> Result<Assembly> {
    let g = colouring.graph();
    let n = g.n();
    let f = monochromatic_cycle(colouring, t)?;
    let fv = f.vertices();
    let attach = greedy_attach(colouring, c_star, fv)?;
    let mut interior = vec![false; n];
    for &v in &fv[1..t] {
        interior[v] = true;
    }
    let rest: Vec<Vertex> = (0..n).filter(|&v| !interior[v]).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in rest.iter().enumerate() {
        index[v] = i;
    }
    let mut forest = vec![(index[fv[0]], index[fv[t]])];
    forest.extend(attach.iter().map(|&(_, x, y)| (index[x], index[y])));
    let local = hamilton_with_forest_search(&g.induced(&rest), &PathForest::from_edges(&forest)?)?;
    let h = CycleSeq::new(local.vertices().iter().map(|&i| rest[i]).collect())?;
    two_cycle_assembly(colouring, c_star, &f, &h, &attach)
}

/// Everything the classifier tried, for reporting.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassifierLog {
    pub c_star: Colour,
    pub x_size: usize,
    pub y_size: usize,
    pub notes: Vec<String>,
}

/// Runs the construction and, failing bias `b`, searches for a witness.
pub fn classify(colouring: &EdgeColouring, b: usize, thresholds: &Thresholds) -> ClassifierOutcome {
    classify_logged(colouring, b, thresholds).0
}

pub fn classify_logged(
    colouring: &EdgeColouring,
    b: usize,
    thresholds: &Thresholds,
) -> (ClassifierOutcome, ClassifierLog) {
    let g = colouring.graph();
    let c_star = majority_colour(colouring);
    let mut log = ClassifierLog { c_star, ..Default::default() };
    let mut candidates: Vec<CertifiedCycle> = Vec::new();

    let xs = compute_xc(colouring, c_star, thresholds.x);
    let ys = compute_yc(colouring, c_star, thresholds.y);
    log.x_size = xs.len();
    log.y_size = ys.len();
    for (set, kind, route) in [(&xs, BowtieKind::I, Route::BowtieI), (&ys, BowtieKind::II, Route::BowtieII)] {
        if set.len() < thresholds.bowties {
            continue;
        }
        let found = find_bowties(colouring, c_star, kind, set, thresholds.bowties);
        if found.bowties.is_empty() {
            log.notes.push(format!("{route}: no bowties"));
            continue;
        }
        if found.shortfall > 0 {
            log.notes.push(format!("{route}: {} bowties short", found.shortfall));
        }
        match bowties_to_biased_hamilton(colouring, &found.bowties, kind, c_star) {
            Ok(bc) => candidates.push(CertifiedCycle { cycle: bc.cycle, bias: bc.bias, route }),
            Err(e) => log.notes.push(format!("{route}: {e}")),
        }
    }
    match two_cycle_route(colouring, c_star, thresholds.t) {
        Ok(a) => {
            if a.f_sum >= thresholds.s as i64 {
                log.notes.push(format!("two-cycle: Σf = {} not below s = {}", a.f_sum, thresholds.s));
            }
            candidates.push(CertifiedCycle { cycle: a.cycle, bias: a.bias, route: Route::TwoCycle });
        }
        Err(e) => log.notes.push(format!("two-cycle: {e}")),
    }

    let best = candidates.into_iter().reduce(|a, c| if c.bias.cmp_bias(&a.bias).is_gt() { c } else { a });
    if let Some(best) = &best {
        if best.bias.at_least(b as i64) {
            return (ClassifierOutcome::BiasedCycle(best.clone()), log);
        }
    }
    if let Some(w) = find_witness(colouring, thresholds.witness) {
        return (ClassifierOutcome::Witness(w), log);
    }
    let best = best.or_else(|| {
        let cycle = hamilton_with_forest_search(g, &PathForest::default()).ok()?;
        let bias = colour_bias(&cycle, colouring).ok()?;
        Some(CertifiedCycle { cycle, bias, route: Route::Plain })
    });
    (ClassifierOutcome::BestEffortCycle(best), log)
}

/// Tries each `(v, c)` whose neighbourhood has a `c`-free matching below
/// `bound`, smallest first, growing or trimming `N(v)` to `⌈αn⌉` vertices.
pub fn find_witness(colouring: &EdgeColouring, bound: usize) -> Option<StructureWitness> {
    let g = colouring.graph();
    let n = g.n();
    let size = ceil_fraction(critical_alpha(colouring.r()), n);
    let mut pairs = Vec::new();
    for v in 0..n {
        for c in 1..=colouring.r() {
            let sub = free_subgraph(colouring, c, g.neighbours(v));
            let nu = matching_size_capped(&sub, bound);
            if nu < bound {
                pairs.push((nu, v, c));
            }
        }
    }
    pairs.sort_unstable();
    pairs.into_iter().find_map(|(_, v, c)| {
        let u = witness_set(colouring, c, v, size);
        let m = max_matching_avoiding_colour(colouring, c, &u);
        (m.len() < bound).then_some(StructureWitness { u, c_star: c, max_free_matching: m, anchor: v })
    })
}

fn free_subgraph(colouring: &EdgeColouring, c: Colour, within: &[Vertex]) -> Graph {
    let mask = crate::graph::vertex_mask(colouring.graph().n(), within);
    colouring.filter_edges(|a, b, k| mask[a] && mask[b] && k != c)
}

/// `N(v)` adjusted to `size` vertices. Trimming drops vertices covered by a
/// maximum free matching first; growing adds, one at a time, the lowest
/// vertex that leaves the free matching number unchanged, or else the one
/// raising it least.
fn witness_set(colouring: &EdgeColouring, c: Colour, v: Vertex, size: usize) -> Vec<Vertex> {
    let g = colouring.graph();
    let n = g.n();
    let mut u: Vec<Vertex> = g.neighbours(v).to_vec();
    if u.len() > size {
        let m = max_matching(&free_subgraph(colouring, c, &u));
        let covered = crate::graph::vertex_mask(n, &m.covered().collect::<Vec<_>>());
        u.sort_by_key(|&w| (covered[w], w));
        u.truncate(size);
    }
    let mut inside = crate::graph::vertex_mask(n, &u);
    while u.len() < size {
        let current = max_matching(&free_subgraph(colouring, c, &u)).len();
        let mut pick = None;
        for w in (0..n).filter(|&w| !inside[w]) {
            u.push(w);
            let grown = matching_size_capped(&free_subgraph(colouring, c, &u), current + 2);
            u.pop();
            if pick.is_none_or(|(best, _)| grown < best) {
                pick = Some((grown, w));
            }
            if grown == current {
                break;
            }
        }
        let (_, w) = pick.expect("fewer than size vertices in U");
        inside[w] = true;
        u.push(w);
    }
    u.sort_unstable();
    u
}

/// Settings of the critical construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriticalParams {
    /// Bias asked of the host before falling back to the witness.
    pub b: usize,
    pub thresholds: Thresholds,
    /// Times the forced matching is halved when no cycle through it is found.
    pub max_retries: usize,
}

impl CriticalParams {
    pub fn scaled(b: usize, t: usize) -> Self {
        Self { b, thresholds: Thresholds::scaled(t), max_retries: 3 }
    }
}

/// Measured quantities of the counting argument.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalCounting {
    pub c_star: Colour,
    pub w: Vec<Vertex>,
    /// Matching of `(G ∪ R)[W]` forced into the cycle.
    pub matching: Matching,
    /// The witness matching size.
    pub witness_size: usize,
    /// Cycle edges inside `W`.
    pub d: usize,
    /// Cycle edges inside `U` not coloured `c*`.
    pub q: usize,
    /// `c*`-edges of the cycle.
    pub count: usize,
    /// `n - (2|W| - d + q)`.
    pub floor: i64,
    /// `2⁻⁵β²m` with `β = 1 - α`.
    pub matching_target: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CriticalOutcome {
    pub cycle: CycleSeq,
    pub bias: BiasReport,
    pub classifier: &'static str,
    /// Present when the cycle came from a witness.
    pub counting: Option<CriticalCounting>,
}

/// Hamilton cycle of `G_α ∪ R` with bias from the random edges.
///
/// The host alone is classified. A biased cycle is returned as is. With a
/// witness `(U, c*)`, a maximum matching `M` of `(G ∪ R)[W]`, `W = V ∖ U`, is
/// threaded into a Hamilton cycle; every vertex of `W` has two cycle edges,
/// so at most `2|W| - d` edges touch `W` and the `c*`-count is at least
/// `n - (2|W| - d + q)`, which is asserted against the direct count.
pub fn critical_biased_hamilton(
    g_alpha: &Graph,
    r: &Graph,
    colouring: &EdgeColouring,
    params: &CriticalParams,
) -> Result<CriticalOutcome> {
    let n = g_alpha.n();
    let union = colouring.graph();
    if r.n() != n || union.n() != n {
        return Err(Error::SizeMismatch(n, if r.n() != n { r.n() } else { union.n() }));
    }
    if !g_alpha.is_subgraph_of(union) || !r.is_subgraph_of(union) {
        return Err(Error::PreconditionViolated("colouring must cover G_alpha ∪ R".into()));
    }
    let host = colouring.restrict(g_alpha)?;
    let outcome = classify(&host, params.b, &params.thresholds);
    let witness = match outcome {
        ClassifierOutcome::Witness(w) => w,
        ClassifierOutcome::BiasedCycle(c) | ClassifierOutcome::BestEffortCycle(Some(c)) => {
            let bias = colour_bias(&c.cycle, colouring)?;
            return Ok(CriticalOutcome { cycle: c.cycle, bias, classifier: outcome_kind(c.route), counting: None });
        }
        ClassifierOutcome::BestEffortCycle(None) => {
            return Err(Error::PipelineFailed { attempts: 1, last: "classifier found no cycle".into() })
        }
    };

    let in_u = crate::graph::vertex_mask(n, &witness.u);
    let w: Vec<Vertex> = (0..n).filter(|&v| !in_u[v]).collect();
    let full = max_matching(&union.restrict_to(&w));
    let mut forced = full.edges().to_vec();
    let mut last = String::new();
    for _ in 0..=params.max_retries {
        let forest = PathForest::from_edges(&forced)?;
        let found = posa_hamilton_with_forest(union, &forest).or_else(|_| hamilton_with_forest_search(union, &forest));
        match found {
            Ok(cycle) => {
                assert!(forced.iter().all(|&(a, b)| cycle.contains_edge(a, b)));
                let counting = count_edges(colouring, &cycle, &in_u, w, &witness, Matching::new(forced)?, r.edge_count());
                let bias = colour_bias(&cycle, colouring)?;
                return Ok(CriticalOutcome { cycle, bias, classifier: "witness", counting: Some(counting) });
            }
            Err(e) => last = e.to_string(),
        }
        forced.truncate(forced.len() / 2);
    }
    Err(Error::PipelineFailed { attempts: params.max_retries + 1, last })
}

fn outcome_kind(route: Route) -> &'static str {
    match route {
        Route::Plain => "best-effort",
        _ => "biased-cycle",
    }
}

fn count_edges(
    colouring: &EdgeColouring,
    cycle: &CycleSeq,
    in_u: &[bool],
    w: Vec<Vertex>,
    witness: &StructureWitness,
    matching: Matching,
    random_edges: usize,
) -> CriticalCounting {
    let n = colouring.graph().n();
    let c_star = witness.c_star;
    let (mut d, mut q, mut count) = (0, 0, 0);
    for (a, b) in cycle.edges() {
        let c = colouring.colour(a, b).expect("cycle edge");
        count += usize::from(c == c_star);
        match (in_u[a], in_u[b]) {
            (false, false) => d += 1,
            (true, true) => q += usize::from(c != c_star),
            _ => {}
        }
    }
    let floor = n as i64 - (2 * w.len() as i64 - d as i64 + q as i64);
    assert!(count as i64 >= floor, "c*-count {count} below the counting floor {floor}");
    let beta = 1.0 - critical_alpha(colouring.r());
    CriticalCounting {
        c_star,
        w,
        matching,
        witness_size: witness.max_free_matching.len(),
        d,
        q,
        count,
        floor,
        matching_target: beta * beta * random_edges as f64 / 32.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversary::{balanced_colouring, critical_colouring};
    use crate::models::{complete_split, gnm, random_min_degree_host, split_independent_side, Seed};
    use crate::oracle::max_bias_fixed_colouring;
    use rand::Rng;

    fn random_colouring(g: &Graph, r: Colour, seed: &Seed) -> EdgeColouring {
        let mut rng = seed.rng(0);
        EdgeColouring::from_fn(g.clone(), r, |_, _| rng.gen_range(1..=r)).unwrap()
    }

    #[test]
    fn thresholds_keep_ratios() {
        let p = Thresholds::asymptotic(2, 1);
        assert_eq!((p.t, p.s, p.x, p.y, p.bowties, p.witness), (64, 16, 512, 256, 4, 1024));
        assert_eq!(Thresholds::scaled(4).s, 1);
    }

    #[test]
    fn monochromatic_host() {
        let col = EdgeColouring::monochromatic(Graph::complete(8), 2, 1).unwrap();
        let th = Thresholds::scaled(2);
        let out = classify(&col, 1, &th);
        assert_eq!(out.kind(), "biased-cycle");
        out.verify(&col, 1, &th).unwrap();
        // no cycle can reach bias 5 when n = 8, so the witness branch answers
        let out = classify(&col, 5, &th);
        let ClassifierOutcome::Witness(w) = &out else { panic!("{out:?}") };
        assert_eq!(w.c_star, 1);
        assert!(w.max_free_matching.is_empty());
        assert_eq!(w.u.len(), 6);
        out.verify(&col, 5, &th).unwrap();
    }

    #[test]
    fn balanced_split_certificate() {
        let g = complete_split(12, 0.75);
        let col = balanced_colouring(&g, 2, &split_independent_side(12, 0.75)).unwrap();
        let th = Thresholds::scaled(2);
        let out = classify(&col, 1, &th);
        out.verify(&col, 1, &th).unwrap();
        // every Hamilton cycle has bias 0, so no biased cycle can exist
        assert_eq!(max_bias_fixed_colouring(&col).unwrap().report.bias_numerator, 0);
        assert_eq!(out.kind(), "witness");
    }

    #[test]
    fn random_outcomes_verify() {
        for s in 0..30 {
            let seed = Seed::new(s, "classify");
            let g = random_min_degree_host(16, 0.75, &seed.child("host", 0)).unwrap();
            let col = random_colouring(&g, 2, &seed);
            let th = Thresholds::scaled(2 + (s as usize % 3));
            let out = classify(&col, 1, &th);
            out.verify(&col, 1, &th).unwrap();
            if let Some(c) = out.cycle() {
                assert!(max_bias_fixed_colouring(&col).map_or(true, |m| m.report.cmp_bias(&c.bias).is_ge()));
            }
        }
    }

    #[test]
    fn critical_without_random_edges() {
        let g = complete_split(12, 0.75);
        let col = critical_colouring(&g, &Graph::empty(12), 2).unwrap();
        let out = critical_biased_hamilton(&g, &Graph::empty(12), &col, &CriticalParams::scaled(1, 2)).unwrap();
        let counting = out.counting.expect("witness branch");
        assert!(counting.matching.is_empty());
        assert_eq!(out.bias.bias_numerator, 0);
        assert!(counting.count as i64 >= counting.floor);
    }

    #[test]
    fn critical_small_with_edges_in_a() {
        for s in 0..10 {
            let g = complete_split(12, 0.75);
            let inside = gnm(3, 2, &Seed::new(s, "a")).unwrap();
            let r = Graph::from_edges(12, inside.edges().iter().copied()).unwrap();
            let col = critical_colouring(&g, &r, 2).unwrap();
            let out = critical_biased_hamilton(&g, &r, &col, &CriticalParams::scaled(1, 2)).unwrap();
            assert!(is_hamilton_cycle(col.graph(), &out.cycle));
            let counting = out.counting.expect("witness branch");
            assert_eq!(counting.matching.len(), 1);
            assert!(out.bias.at_least(1));
            let max = max_bias_fixed_colouring(&col).unwrap().report;
            assert!(max.bias_numerator <= 2 * 2 * 2);
            assert!(max.cmp_bias(&out.bias).is_ge());
        }
    }

    #[test]
    fn two_cycle_gap_from_monochromatic_cycle() {
        for s in 0..10 {
            let g = Graph::complete(14);
            let col = random_colouring(&g, 2, &Seed::new(s, "gap"));
            let c = majority_colour(&col);
            let t = 4;
            let a = two_cycle_route(&col, c, t).unwrap();
            let f = monochromatic_cycle(&col, t).unwrap();
            let fv = f.vertices();
            let ind = |u, v| i64::from(col.colour(u, v) == Some(c));
            assert_eq!(a.count_gap, (t as i64 - 1) + ind(fv[0], fv[1]) - ind(fv[0], fv[t]) - a.f_sum);
            if a.f_sum <= 0 {
                assert!(a.count_gap >= t as i64 - 2);
            }
        }
    }
}
