use crate::bits::{self, Mask};
use crate::digraph::{Digraph, Induced};
use crate::error::{Error, Result};
use crate::forbidden::is_induced_cycle;
use crate::graph::Graph;
use crate::oracles::{alpha_mask, max_stable_sets_graph, stability_number};
use crate::path::{PartitionMode, Path, PathPartition};

use super::trace::{compose_labels, Lemma, Tracer};

/// Merges partitions of the parts of a vertex partition of `d` into one
/// partition of `d`, translating each part's labels back to `d`.
///
/// Requires the stability numbers of the parts to add up to that of `d`.
pub fn compose_partitions(
    d: &Digraph,
    parts: &[(Induced, PathPartition)],
) -> Result<PathPartition> {
    let mut seen: Mask = 0;
    for (sub, _) in parts {
        d.check_vertices(&sub.labels)?;
        let m = bits::from_slice(&sub.labels);
        if seen & m != 0 || m.count_ones() as usize != sub.labels.len() {
            return Err(Error::NotAPartition);
        }
        seen |= m;
    }
    if seen != d.vertex_mask() {
        return Err(Error::NotAPartition);
    }
    let mode = parts.first().map_or(PartitionMode::Plain, |(_, p)| p.mode);
    let mut alpha_parts = 0;
    let mut paths = Vec::new();
    let mut stable = Vec::new();
    for (i, (sub, p)) in parts.iter().enumerate() {
        p.validate(&sub.digraph)
            .map_err(|e| Error::PreconditionViolated(format!("part {i}: {e}")))?;
        if p.mode != mode {
            return Err(Error::PreconditionViolated(
                "parts use different modes".into(),
            ));
        }
        alpha_parts += stability_number(&sub.digraph)?;
        paths.extend(
            p.paths
                .iter()
                .map(|q| Path(q.0.iter().map(|&v| sub.host(v)).collect())),
        );
        if let Some(s) = &p.stable_set {
            stable.extend(s.iter().map(|&v| sub.host(v)));
        }
    }
    let whole = stability_number(d)?;
    if alpha_parts != whole {
        return Err(Error::AlphaNotAdditive {
            parts: alpha_parts,
            whole,
        });
    }
    stable.sort_unstable();
    let out = PathPartition {
        paths,
        mode,
        stable_set: (mode != PartitionMode::Plain).then_some(stable),
    };
    out.validate(d)
        .map_err(|e| Error::PreconditionViolated(format!("composed partition is invalid: {e}")))?;
    Ok(out)
}

/// Splits `V(G)` into `(H1, H2)` with `α(H1) + α(H2) = α(G)` and every edge
/// between the parts inside the clique cut `b`.
///
/// `b` must be a clique whose removal disconnects `G`, or `G` must already be
/// disconnected (then `b` may be empty).
pub fn clique_cut_split(g: &Graph, b: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    if b.iter().any(|&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange {
            vertex: *b.iter().max().expect("nonempty"),
            order: g.order(),
        });
    }
    let bm = bits::from_slice(b);
    let all = g.vertex_mask();
    let cut = g.components_within(all & !bm).len() >= 2 || !g.is_connected();
    if !g.is_clique(b) || !cut {
        return Err(Error::NotACliqueCut(b.to_vec()));
    }
    let (h1, h2) = clique_split_mask(g, all, bm)?;
    check_split(g, all, h1, h2)?;
    Ok((bits::to_vec(h1), bits::to_vec(h2)))
}

pub(crate) fn clique_split_mask(g: &Graph, within: Mask, b: Mask) -> Result<(Mask, Mask)> {
    let comps = g.components_within(within);
    if comps.len() >= 2 {
        return Ok((comps[0], within & !comps[0]));
    }
    let v = bits::lowest(b & within).ok_or_else(|| {
        Error::internal("clique cut exhausted while the graph is still connected")
    })?;
    let rest = within & !bits::bit(v);
    let (h1, h2) = clique_split_mask(g, rest, b & !bits::bit(v))?;
    let vb = bits::bit(v);
    let alpha = alpha_mask(g, within);
    let alpha_rest = alpha_mask(g, rest);
    let a1 = alpha_mask(g, h1);
    let a2 = alpha_mask(g, h2);
    if alpha == alpha_rest {
        if alpha_mask(g, h1 | vb) == a1 {
            return Ok((h1 | vb, h2));
        }
        if alpha_mask(g, h2 | vb) == a2 {
            return Ok((h1, h2 | vb));
        }
    } else if alpha_mask(g, h1 | vb) == a1 + 1 {
        return Ok((h1 | vb, h2));
    }
    Err(Error::internal(format!(
        "clique cut split failed when adding vertex {v}"
    )))
}

fn check_split(g: &Graph, within: Mask, h1: Mask, h2: Mask) -> Result<()> {
    if h1 == 0 || h2 == 0 || h1 & h2 != 0 || h1 | h2 != within {
        return Err(Error::internal(
            "split parts do not partition the vertex set",
        ));
    }
    let (a, a1, a2) = (alpha_mask(g, within), alpha_mask(g, h1), alpha_mask(g, h2));
    if a1 + a2 != a {
        return Err(Error::internal(format!(
            "split is not additive: {a1} + {a2} != {a}"
        )));
    }
    Ok(())
}

/// Splits `V(G)` into `(H1, H2)` with `α(H1) + α(H2) = α(G)` using the induced
/// cycle `c` (in cycle order), which must be a proper subgraph with at most two
/// vertices of degree greater than two in `G`.
pub fn cycle_split(g: &Graph, c: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    if c.iter().any(|&v| v >= g.order()) || !is_induced_cycle(g, c) {
        return Err(Error::PreconditionViolated(format!(
            "{c:?} is not an induced cycle"
        )));
    }
    let all = g.vertex_mask();
    let cm = bits::from_slice(c);
    if cm == all {
        return Err(Error::PreconditionViolated(
            "the cycle spans the graph".into(),
        ));
    }
    let high: Vec<usize> = (0..c.len()).filter(|&i| g.degree(c[i]) > 2).collect();
    let (h1, h2) = match high.as_slice() {
        [] => (cm, all & !cm),
        &[i] => {
            let (a, b) = clique_cut_split(g, &[c[i]])?;
            (bits::from_slice(&a), bits::from_slice(&b))
        }
        &[i, j] => two_high_split(g, c, i, j)?,
        _ => {
            return Err(Error::PreconditionViolated(format!(
                "{c:?} has {} vertices of degree greater than two",
                high.len()
            )))
        }
    };
    check_split(g, all, h1, h2)?;
    Ok((bits::to_vec(h1), bits::to_vec(h2)))
}

fn two_high_split(g: &Graph, c: &[usize], i: usize, j: usize) -> Result<(Mask, Mask)> {
    let all = g.vertex_mask();
    let cm = bits::from_slice(c);
    let m = c.len();
    let (start, other) = if c[i] < c[j] { (i, j) } else { (j, i) };
    let x: Vec<usize> = (0..m).map(|t| c[(start + t) % m]).collect();
    let k = (other + m - start) % m;
    let (x0, xk) = (x[0], x[k]);

    let cycle = g.induced_mask(cm);
    let local = bits::to_vec(cm);
    let avoid = bits::bit(local.binary_search(&x0).expect("on cycle"))
        | bits::bit(local.binary_search(&xk).expect("on cycle"));
    let on_cycle = max_stable_sets_graph(&cycle)?;
    if on_cycle
        .sets
        .iter()
        .any(|s| bits::from_slice(s) & avoid == 0)
    {
        return Ok((cm, all & !cm));
    }
    if !m.is_multiple_of(2) || k % 2 != 1 {
        return Err(Error::internal(
            "every maximum stable set of the cycle meets a high-degree vertex, yet the cycle is not even with odd distance",
        ));
    }
    let rest = all & !cm;
    let outside = g.induced_mask(rest);
    let rest_labels = bits::to_vec(rest);
    let family = max_stable_sets_graph(&outside)?;
    let misses = |s: &Vec<usize>, u: usize| s.iter().all(|&w| !g.has_edge(rest_labels[w], u));
    if family.sets.iter().any(|s| misses(s, x0) || misses(s, xk)) {
        return Ok((cm, rest));
    }
    let segment: Vec<usize> = if k >= 2 {
        x[1..k].to_vec()
    } else {
        x[k + 1..].to_vec()
    };
    let p = bits::from_slice(&segment);
    Ok((p, all & !p))
}

/// Paths for digraphs on at most two vertices.
pub(crate) fn base_paths(d: &Digraph) -> Vec<Path> {
    match d.order() {
        0 => Vec::new(),
        1 => vec![Path(vec![0])],
        _ if d.has_arc(0, 1) => vec![Path(vec![0, 1])],
        _ if d.has_arc(1, 0) => vec![Path(vec![1, 0])],
        _ => vec![Path(vec![0]), Path(vec![1])],
    }
}

/// Recursion state shared by the builders: the stable set as a mask and the
/// map from local labels to the labels of the top-level digraph.
pub(crate) type Recurse<'a> =
    dyn FnMut(&Digraph, Mask, &[usize], &mut Tracer) -> Result<Vec<Path>> + 'a;

/// Recurses on `D[part]` and `D - part` and merges the results; `s` restricted
/// to each side must stay maximum there.
#[allow(clippy::too_many_arguments)]
pub(crate) fn split_recurse(
    d: &Digraph,
    s: Mask,
    part: Mask,
    lemma: Lemma,
    cut: &[usize],
    labels: &[usize],
    tr: &mut Tracer,
    rec: &mut Recurse<'_>,
) -> Result<Vec<Path>> {
    let g = d.underlying_graph();
    let all = d.vertex_mask();
    let other = all & !part;
    check_split(&g, all, part, other)?;
    tr.split(
        lemma,
        labels,
        cut,
        &bits::to_vec(part),
        &bits::to_vec(other),
    );
    let mut out = Vec::new();
    for side in [part, other] {
        let s_side = s & side;
        if s_side.count_ones() as usize != alpha_mask(&g, side) {
            return Err(Error::internal("stable set is not maximum on a split part"));
        }
        out.extend(recurse_on(d, s, side, labels, tr, rec)?);
    }
    Ok(out)
}

/// Recurses on `D[keep]` with `s ∩ keep`, returning paths in the labels of `d`.
pub(crate) fn recurse_on(
    d: &Digraph,
    s: Mask,
    keep: Mask,
    labels: &[usize],
    tr: &mut Tracer,
    rec: &mut Recurse<'_>,
) -> Result<Vec<Path>> {
    let sub = d.induced_mask(keep);
    let s_local =
        bits::members(s & keep).fold(0, |m, v| m | bits::bit(sub.local(v).expect("kept vertex")));
    let child = compose_labels(labels, &sub.labels);
    let paths = rec(&sub.digraph, s_local, &child, tr)?;
    Ok(paths
        .into_iter()
        .map(|p| Path(p.0.into_iter().map(|v| sub.labels[v]).collect()))
        .collect())
}
