//! Two Hamilton cycles that differ in a controlled number of edges of one
//! colour, built by absorbing a near-monochromatic cycle in two ways.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{colour_bias, cycle_colour_counts, f_c, ordered, BiasReport, Colour, CycleSeq, EdgeColouring, Vertex};

/// Replaces each cycle edge `ab` listed in `inserts` by the path `a z b`.
pub(crate) fn splice(cycle: &CycleSeq, inserts: &HashMap<(Vertex, Vertex), Vertex>) -> Result<CycleSeq> {
    let vs = cycle.vertices();
    let k = vs.len();
    let mut out = Vec::with_capacity(k + inserts.len());
    let mut used = 0;
    for i in 0..k {
        out.push(vs[i]);
        if let Some(&z) = inserts.get(&ordered(vs[i], vs[(i + 1) % k])) {
            out.push(z);
            used += 1;
        }
    }
    if used != inserts.len() {
        return Err(Error::StructureViolation("an absorbing edge is not on the cycle".into()));
    }
    CycleSeq::new(out)
}

/// Both completions and the one kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assembly {
    pub cycle: CycleSeq,
    pub bias: BiasReport,
    /// `F ∪ H` without the shared edge.
    pub h1: CycleSeq,
    /// `H` with every `x_i y_i` replaced by `x_i v_i y_i`.
    pub h2: CycleSeq,
    /// `Σ f_{c*}(v_i, x_i, y_i)`.
    pub f_sum: i64,
    /// `c*`-edges of `h1` minus those of `h2`.
    pub count_gap: i64,
}

/// Joins `F = [v0, v1, ..., vt]` and `H` into two Hamilton cycles.
///
/// `H` must contain the edge `v0 vt` and share only `v0, vt` with `F`, and
/// `attach[i - 1] = (v_i, x_i, y_i)` must give distinct edges `x_i y_i` of `H`
/// with `v_i` adjacent to both ends. The gap in `c*`-edges between the two
/// completions is checked against
/// `c*(F) - 2·1[χ(v0 vt) = c*] - Σ f_{c*}(v_i, x_i, y_i)`, which reduces to
/// `(e(F) - 2) + 1[χ(v0 v1) = c*] - 1[χ(v0 vt) = c*] - Σ f` when the path
/// `v1..vt` is all `c*`.
pub fn two_cycle_assembly(
    colouring: &EdgeColouring,
    c_star: Colour,
    f: &CycleSeq,
    h: &CycleSeq,
    attach: &[(Vertex, Vertex, Vertex)],
) -> Result<Assembly> {
    let g = colouring.graph();
    let n = g.n();
    let violation = |msg: String| Err(Error::StructureViolation(msg));
    let fv = f.vertices();
    let t = fv.len() - 1;
    f.validate(g)?;
    h.validate(g)?;
    let (v0, vt) = (fv[0], fv[t]);
    let mut in_f = vec![false; n];
    for &v in fv {
        in_f[v] = true;
    }
    let shared: Vec<Vertex> = h.vertices().iter().copied().filter(|&v| in_f[v]).collect();
    if shared.len() != 2 || !shared.contains(&v0) || !shared.contains(&vt) {
        return violation(format!("F and H must share exactly {{{v0}, {vt}}}"));
    }
    if fv.len() + h.len() != n + 2 {
        return violation(format!("F and H cover {} of {n} vertices", fv.len() + h.len() - 2));
    }
    if !h.contains_edge(v0, vt) {
        return violation(format!("H lacks the edge {{{v0}, {vt}}}"));
    }
    if attach.len() != t - 1 {
        return violation(format!("needs t - 1 = {} attach edges, got {}", t - 1, attach.len()));
    }
    let mut inserts = HashMap::new();
    let mut f_sum = 0i64;
    for (i, &(v, x, y)) in attach.iter().enumerate() {
        if v != fv[i + 1] {
            return violation(format!("attach entry {i} is for {v}, expected {}", fv[i + 1]));
        }
        if !h.contains_edge(x, y) {
            return violation(format!("{{{x}, {y}}} is not an edge of H"));
        }
        if !g.has_edge(v, x) || !g.has_edge(v, y) {
            return violation(format!("{v} is not adjacent to both of {x}, {y}"));
        }
        if inserts.insert(ordered(x, y), v).is_some() {
            return violation(format!("{{{x}, {y}}} used twice"));
        }
        f_sum += i64::from(f_c(colouring, v, x, y, c_star)?);
    }

    // H read as a path from v0 to vt, then back along F's interior
    let hv = h.vertices();
    let k = hv.len();
    let i0 = hv.iter().position(|&v| v == v0).expect("v0 on H");
    let step = if hv[(i0 + 1) % k] == vt { k - 1 } else { 1 };
    let mut h1: Vec<Vertex> = (0..k).map(|j| hv[(i0 + j * step) % k]).collect();
    debug_assert_eq!(h1[k - 1], vt);
    h1.extend(fv[1..t].iter().rev());
    let h1 = CycleSeq::new(h1)?;
    let h2 = splice(h, &inserts)?;

    let idx = usize::from(c_star) - 1;
    let count = |c: &CycleSeq| cycle_colour_counts(c, colouring).map(|v| v[idx] as i64);
    let count_gap = count(&h1)? - count(&h2)?;
    let shared_is_c = i64::from(colouring.colour(v0, vt) == Some(c_star));
    assert_eq!(count_gap, count(f)? - 2 * shared_is_c - f_sum, "two-cycle bookkeeping");

    let (b1, b2) = (colour_bias(&h1, colouring)?, colour_bias(&h2, colouring)?);
    let (cycle, bias) = if b1.cmp_bias(&b2).is_ge() { (h1.clone(), b1) } else { (h2.clone(), b2) };
    Ok(Assembly { cycle, bias, h1, h2, f_sum, count_gap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_hamilton_cycle, Graph};
    use crate::oracle::max_bias_fixed_colouring;

    // F = [0, 1, 2] glued to H = [0, 3, 4, 5, 6, 7, 2] along 02;
    // vertex 1 attaches to the H-edge 45
    fn toy() -> (EdgeColouring, CycleSeq, CycleSeq) {
        let mut e = vec![(0, 1), (1, 2), (0, 2), (1, 4), (1, 5)];
        e.extend([(0, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 7)]);
        let g = Graph::from_edges(8, e).unwrap();
        let col = EdgeColouring::from_fn(g, 2, |u, v| match (u, v) {
            (1, 2) | (4, 5) | (0, 3) => 1,
            _ => 2,
        })
        .unwrap();
        (col, CycleSeq::new(vec![0, 1, 2]).unwrap(), CycleSeq::new(vec![0, 3, 4, 5, 6, 7, 2]).unwrap())
    }

    #[test]
    fn toy_instance() {
        let (col, f, h) = toy();
        let a = two_cycle_assembly(&col, 1, &f, &h, &[(1, 4, 5)]).unwrap();
        assert!(is_hamilton_cycle(col.graph(), &a.h1));
        assert!(is_hamilton_cycle(col.graph(), &a.h2));
        // f_1(1, 4, 5) = 0 + 0 - 1
        assert_eq!(a.f_sum, -1);
        // h1 gains 12 (colour 1) and 01, loses 02: colour-1 count 3 vs h2's 1
        assert_eq!(a.count_gap, 2);
        let best = max_bias_fixed_colouring(&col).unwrap();
        assert!(best.report.cmp_bias(&a.bias).is_ge());
    }

    #[test]
    fn violations() {
        let (col, f, h) = toy();
        assert!(matches!(
            two_cycle_assembly(&col, 1, &f, &h, &[]),
            Err(Error::StructureViolation(m)) if m.contains("needs t - 1 = 1")
        ));
        assert!(matches!(
            two_cycle_assembly(&col, 1, &f, &h, &[(1, 3, 4)]),
            Err(Error::StructureViolation(_))
        ));
        let bad_h = CycleSeq::new(vec![0, 3, 4, 5, 6, 7]).unwrap();
        assert!(two_cycle_assembly(&col, 1, &f, &bad_h, &[(1, 4, 5)]).is_err());
    }
}
