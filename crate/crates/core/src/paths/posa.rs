//! Rotation–extension through a forced path forest.
//!
//! Each forest path is contracted to a unit that can only be entered and left
//! at its two ends; free vertices are single-vertex units. The search keeps an
//! oriented path of units. Rotations reverse a suffix of units, which only
//! ever drops a junction edge between units, so forest edges stay in place.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{CycleSeq, Graph, Vertex};

use super::PathForest;

const NONE: usize = usize::MAX;
const RESTARTS: u64 = 8;
const EXACT_UNIT_LIMIT: usize = 24;
const EXACT_NODE_LIMIT: u64 = 20_000_000;

struct Units {
    members: Vec<Vec<Vertex>>,
    unit_of: Vec<usize>,
}

impl Units {
    fn new(n: usize, forest: &PathForest) -> Self {
        let mut path_of = vec![NONE; n];
        for (i, p) in forest.paths().iter().enumerate() {
            for &v in p.vertices() {
                path_of[v] = i;
            }
        }
        let mut members = Vec::new();
        let mut unit_of = vec![NONE; n];
        for v in 0..n {
            if unit_of[v] != NONE {
                continue;
            }
            let verts = match path_of[v] {
                NONE => vec![v],
                i => forest.paths()[i].vertices().to_vec(),
            };
            for &w in &verts {
                unit_of[w] = members.len();
            }
            members.push(verts);
        }
        Self { members, unit_of }
    }

    fn len(&self) -> usize {
        self.members.len()
    }

    fn head(&self, u: usize) -> Vertex {
        self.members[u][0]
    }

    fn tail(&self, u: usize) -> Vertex {
        *self.members[u].last().expect("non-empty unit")
    }

    fn entry(&self, (u, flip): (usize, bool)) -> Vertex {
        if flip { self.tail(u) } else { self.head(u) }
    }

    fn exit(&self, (u, flip): (usize, bool)) -> Vertex {
        if flip { self.head(u) } else { self.tail(u) }
    }

    /// Orientation of unit `u` that enters at `v`, if `v` is one of its ends.
    fn entering_at(&self, v: Vertex) -> Option<(usize, bool)> {
        let u = self.unit_of[v];
        if self.head(u) == v {
            Some((u, false))
        } else if self.tail(u) == v {
            Some((u, true))
        } else {
            None
        }
    }

    fn expand(&self, order: &[(usize, bool)]) -> Vec<Vertex> {
        let mut out = Vec::new();
        for &(u, flip) in order {
            if flip {
                out.extend(self.members[u].iter().rev());
            } else {
                out.extend(self.members[u].iter());
            }
        }
        out
    }
}

struct Search<'a> {
    g: &'a Graph,
    units: &'a Units,
    path: Vec<(usize, bool)>,
    pos: Vec<usize>,
    vertices_in_path: usize,
    rng: Option<ChaCha8Rng>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, units: &'a Units, rng: Option<ChaCha8Rng>) -> Self {
        Self { g, units, path: Vec::new(), pos: vec![NONE; units.len()], vertices_in_path: 0, rng }
    }

    fn reset(&mut self, start: usize) {
        self.path.clear();
        self.pos.fill(NONE);
        self.vertices_in_path = 0;
        self.push((start, false));
    }

    fn push(&mut self, o: (usize, bool)) {
        self.pos[o.0] = self.path.len();
        self.vertices_in_path += self.units.members[o.0].len();
        self.path.push(o);
    }

    fn reindex(&mut self, from: usize) {
        for i in from..self.path.len() {
            self.pos[self.path[i].0] = i;
        }
    }

    /// Reverses `path[from..]`, flipping each unit.
    fn reverse_suffix(&mut self, from: usize) {
        self.path[from..].reverse();
        for o in &mut self.path[from..] {
            o.1 = !o.1;
        }
        self.reindex(from);
    }

    fn end(&self) -> Vertex {
        self.units.exit(*self.path.last().expect("non-empty path"))
    }

    fn start(&self) -> Vertex {
        self.units.entry(self.path[0])
    }

    fn pick<T: Copy>(&mut self, items: &[T]) -> Option<T> {
        match &mut self.rng {
            Some(rng) => items.choose(rng).copied(),
            None => items.first().copied(),
        }
    }

    fn outside_entries(&self, x: Vertex) -> Vec<(usize, bool)> {
        self.g
            .neighbours(x)
            .iter()
            .filter(|&&y| self.pos[self.units.unit_of[y]] == NONE)
            .filter_map(|&y| self.units.entering_at(y))
            .collect()
    }

    fn try_extend_end(&mut self) -> bool {
        let cands = self.outside_entries(self.end());
        match self.pick(&cands) {
            Some(o) => {
                self.push(o);
                true
            }
            None => false,
        }
    }

    fn extend_fully(&mut self) {
        loop {
            if self.try_extend_end() {
                continue;
            }
            self.reverse_suffix(0);
            if !self.try_extend_end() {
                return;
            }
        }
    }

    /// Turns the path into a cycle (last exit adjacent to first entry),
    /// possibly after one rotation that creates a crossing pair.
    fn try_close(&mut self) -> bool {
        if self.vertices_in_path < 3 {
            return false;
        }
        let (s, x) = (self.start(), self.end());
        if self.g.has_edge(s, x) {
            return true;
        }
        let k = self.path.len();
        for i in 0..k.saturating_sub(1) {
            let a = self.units.exit(self.path[i]);
            let b = self.units.entry(self.path[i + 1]);
            if self.g.has_edge(s, b) && self.g.has_edge(x, a) {
                self.reverse_suffix(i + 1);
                debug_assert!(self.g.has_edge(self.start(), self.end()));
                return true;
            }
        }
        false
    }

    /// Opens the closed path at a junction next to an outside unit and
    /// appends that unit.
    fn cycle_extend(&mut self) -> bool {
        let k = self.path.len();
        let mut options = Vec::new();
        for u in 0..self.units.len() {
            if self.pos[u] != NONE {
                continue;
            }
            for e in [self.units.head(u), self.units.tail(u)] {
                for &y in self.g.neighbours(e) {
                    let j = self.pos[self.units.unit_of[y]];
                    if j == NONE {
                        continue;
                    }
                    let o = self.units.entering_at(e).expect("unit end");
                    if self.units.exit(self.path[j]) == y {
                        options.push((o, j, true));
                    } else if self.units.entry(self.path[j]) == y {
                        options.push((o, j, false));
                    }
                }
                if options.len() >= 16 {
                    break;
                }
            }
            if !options.is_empty() && self.rng.is_none() {
                break;
            }
        }
        let Some((o, j, at_exit)) = self.pick(&options) else { return false };
        if at_exit {
            self.path.rotate_left((j + 1) % k);
            self.reindex(0);
        } else {
            self.path.rotate_left(j);
            self.reindex(0);
            self.reverse_suffix(0);
        }
        debug_assert!(self.g.has_edge(self.end(), self.units.entry(o)));
        self.push(o);
        true
    }

    /// Rotation pivots: indices `i <= k-2` with `exit(path[i])` adjacent to
    /// the current end, excluding the no-op on a single-vertex last unit.
    fn rotation_pivots(&self) -> Vec<usize> {
        let k = self.path.len();
        let x = self.end();
        self.g
            .neighbours(x)
            .iter()
            .filter_map(|&y| {
                let i = self.pos[self.units.unit_of[y]];
                (i != NONE && i + 1 < k && self.units.exit(self.path[i]) == y).then_some(i)
            })
            .filter(|&i| !(i + 2 == k && self.units.members[self.path[k - 1].0].len() == 1))
            .collect()
    }

    fn choose_pivot(&mut self, seen_ends: &mut std::collections::HashSet<Vertex>, step: usize) -> Option<usize> {
        let pivots = self.rotation_pivots();
        if pivots.is_empty() {
            return None;
        }
        if self.rng.is_some() {
            return self.pick(&pivots);
        }
        let new_end = |s: &Self, i: usize| s.units.entry(s.path[i + 1]);
        if let Some(&i) = pivots.iter().take(24).find(|&&i| !self.outside_entries(new_end(self, i)).is_empty()) {
            return Some(i);
        }
        if let Some(&i) = pivots.iter().find(|&&i| !seen_ends.contains(&new_end(self, i))) {
            seen_ends.insert(new_end(self, i));
            return Some(i);
        }
        Some(pivots[step % pivots.len()])
    }

    fn run(&mut self, start: usize, budget: usize) -> Option<Vec<(usize, bool)>> {
        self.reset(start);
        let mut seen_ends = std::collections::HashSet::new();
        let mut rotations = 0;
        loop {
            self.extend_fully();
            if self.try_close() {
                if self.path.len() == self.units.len() {
                    return Some(self.path.clone());
                }
                if self.cycle_extend() {
                    continue;
                }
                return None;
            }
            if rotations >= budget {
                return None;
            }
            let pivot = match self.choose_pivot(&mut seen_ends, rotations) {
                Some(i) => Some(i),
                None => {
                    self.reverse_suffix(0);
                    self.choose_pivot(&mut seen_ends, rotations)
                }
            };
            let i = pivot?;
            self.reverse_suffix(i + 1);
            rotations += 1;
        }
    }
}

/// Exhaustive search over unit orders, for small unit counts.
fn exact_units(g: &Graph, units: &Units) -> Option<Vec<(usize, bool)>> {
    fn go(
        g: &Graph,
        units: &Units,
        order: &mut Vec<(usize, bool)>,
        used: &mut [bool],
        nodes: &mut u64,
    ) -> bool {
        *nodes += 1;
        if *nodes > EXACT_NODE_LIMIT {
            return false;
        }
        let x = units.exit(*order.last().expect("non-empty"));
        if order.len() == units.len() {
            return g.has_edge(x, units.entry(order[0]));
        }
        for &y in g.neighbours(x) {
            let Some(o) = units.entering_at(y) else { continue };
            if used[o.0] {
                continue;
            }
            used[o.0] = true;
            order.push(o);
            if go(g, units, order, used, nodes) {
                return true;
            }
            order.pop();
            used[o.0] = false;
        }
        false
    }
    if units.len() > EXACT_UNIT_LIMIT {
        return None;
    }
    let mut used = vec![false; units.len()];
    used[0] = true;
    let mut order = vec![(0, false)];
    let mut nodes = 0;
    go(g, units, &mut order, &mut used, &mut nodes).then_some(order)
}

/// Hamilton cycle of `g` through every edge of `forest`, without checking the
/// degree condition. Deterministic rotation–extension first, then seeded
/// randomised restarts, then exhaustive search when there are few units.
pub fn hamilton_with_forest_search(g: &Graph, forest: &PathForest) -> Result<CycleSeq> {
    let n = g.n();
    if n < 3 {
        return Err(Error::PreconditionViolated(format!("n = {n} < 3")));
    }
    forest.validate(g)?;
    let units = Units::new(n, forest);
    let budget = 50 * n;
    let mut found = Search::new(g, &units, None).run(0, budget);
    for restart in 0..RESTARTS {
        if found.is_some() {
            break;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(restart);
        let start = rng.gen_range(0..units.len());
        found = Search::new(g, &units, Some(rng)).run(start, budget);
    }
    if found.is_none() {
        found = exact_units(g, &units);
    }
    let order = found.ok_or(Error::SearchExhausted)?;
    let cycle = CycleSeq::new(units.expand(&order))?;
    cycle.validate(g)?;
    debug_assert!(forest.edges().all(|(u, v)| cycle.contains_edge(u, v)));
    Ok(cycle)
}

/// Hamilton cycle containing the forest `J`, under the degree condition
/// `δ(g) >= ⌈(n + ℓ)/2⌉` with `ℓ = e(J) <= n - 2`, which guarantees one exists.
pub fn posa_hamilton_with_forest(g: &Graph, forest: &PathForest) -> Result<CycleSeq> {
    let n = g.n();
    let ell = forest.edge_count();
    if n < 3 || ell + 2 > n {
        return Err(Error::PreconditionViolated(format!("need ℓ <= n - 2, got ℓ={ell}, n={n}")));
    }
    let need = (n + ell).div_ceil(2);
    if g.min_degree() < need {
        return Err(Error::PreconditionViolated(format!(
            "minimum degree {} below ⌈(n+ℓ)/2⌉ = {need}",
            g.min_degree()
        )));
    }
    hamilton_with_forest_search(g, forest)
}
