use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`max_stable_sets`].
pub const STABLE_SETS_CAP: usize = 24;
/// Largest order accepted by [`stability_number`].
pub const ALPHA_CAP: usize = 48;

/// The stability number together with every maximum stable set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableSetFamily {
    pub alpha: usize,
    /// Each set sorted; the list sorted lexicographically.
    pub sets: Vec<Vec<usize>>,
}

pub fn max_stable_sets(d: &Digraph) -> Result<StableSetFamily> {
    max_stable_sets_graph(&d.underlying_graph())
}

pub fn max_stable_sets_graph(g: &Graph) -> Result<StableSetFamily> {
    Error::check_cap("max_stable_sets", g.order(), STABLE_SETS_CAP)?;
    let alpha = alpha_mask(g, g.vertex_mask());
    let mut sets = Vec::new();
    enumerate(g, g.vertex_mask(), 0, alpha, &mut sets);
    let mut sets: Vec<Vec<usize>> = sets.into_iter().map(bits::to_vec).collect();
    sets.sort();
    Ok(StableSetFamily { alpha, sets })
}

fn enumerate(g: &Graph, cand: Mask, chosen: Mask, alpha: usize, out: &mut Vec<Mask>) {
    let size = chosen.count_ones() as usize;
    if size + (cand.count_ones() as usize) < alpha {
        return;
    }
    let Some(v) = bits::lowest(cand) else {
        if size == alpha {
            out.push(chosen);
        }
        return;
    };
    enumerate(
        g,
        cand & !g.adj_mask(v) & !bits::bit(v),
        chosen | bits::bit(v),
        alpha,
        out,
    );
    // A maximum stable set avoiding v must contain a neighbour of v.
    let rest = cand & !bits::bit(v);
    if g.adj_mask(v) & (chosen | rest) != 0 {
        enumerate(g, rest, chosen, alpha, out);
    }
}

pub fn stability_number(d: &Digraph) -> Result<usize> {
    stability_number_graph(&d.underlying_graph())
}

pub fn stability_number_graph(g: &Graph) -> Result<usize> {
    Error::check_cap("stability_number", g.order(), ALPHA_CAP)?;
    Ok(alpha_mask(g, g.vertex_mask()))
}

/// Stability number of `g[within]`.
pub(crate) fn alpha_mask(g: &Graph, within: Mask) -> usize {
    let mut best = 0;
    alpha_rec(g, within, 0, &mut best);
    best
}

fn alpha_rec(g: &Graph, cand: Mask, size: usize, best: &mut usize) {
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    if cand == 0 {
        *best = size;
        return;
    }
    let mut pick = None;
    let mut max_deg = (0, 0);
    for v in bits::members(cand) {
        let deg = (g.adj_mask(v) & cand).count_ones();
        if deg <= 1 {
            pick = Some(v);
            break;
        }
        if deg > max_deg.1 {
            max_deg = (v, deg);
        }
    }
    if let Some(v) = pick {
        // Some maximum stable set contains a vertex of degree at most one.
        alpha_rec(g, cand & !g.adj_mask(v) & !bits::bit(v), size + 1, best);
        return;
    }
    let v = max_deg.0;
    alpha_rec(g, cand & !g.adj_mask(v) & !bits::bit(v), size + 1, best);
    alpha_rec(g, cand & !bits::bit(v), size, best);
}

/// Checks that `s` is a maximum stable set of `d`.
pub fn check_maximum_stable(d: &Digraph, s: &[usize]) -> Result<()> {
    d.check_vertices(s)?;
    let m = bits::from_slice(s);
    let g = d.underlying_graph();
    if m.count_ones() as usize != s.len() || !g.is_stable_mask(m) {
        return Err(Error::NotStable(s.to_vec()));
    }
    let alpha = stability_number_graph(&g)?;
    if s.len() != alpha {
        return Err(Error::NotMaximumStable {
            size: s.len(),
            alpha,
        });
    }
    Ok(())
}
