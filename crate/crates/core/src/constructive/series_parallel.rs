use crate::bits::{self, Mask};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::forbidden::{is_series_parallel, sp_induced_cycle_two_high, ForbiddenClass};
use crate::oracles::check_maximum_stable;
use crate::path::{Mode, Path};

use super::compose::{base_paths, clique_split_mask, cycle_split, split_recurse};
use super::cycle::cycle_paths;
use super::trace::{identity, Built, Lemma, Tracer};

/// Partition for a digraph whose underlying graph is series-parallel, by
/// splitting at components, cut vertices and induced cycles down to cycles
/// and digraphs on at most two vertices.
pub fn partition_series_parallel(d: &Digraph, s: &[usize], mode: Mode) -> Result<Built> {
    if !is_series_parallel(&d.underlying_graph()) {
        return Err(Error::NotSeriesParallel);
    }
    check_maximum_stable(d, s)?;
    ForbiddenClass::for_mode(mode).require(d)?;
    let mut tr = Tracer::new();
    let paths = sp_paths(d, bits::from_slice(s), mode, &identity(d.order()), &mut tr)?;
    tr.finish(d, paths, mode, s)
}

fn sp_paths(
    d: &Digraph,
    s: Mask,
    mode: Mode,
    labels: &[usize],
    tr: &mut Tracer,
) -> Result<Vec<Path>> {
    if d.order() <= 2 {
        let paths = base_paths(d);
        tr.paths(Lemma::Base, labels, &paths);
        return Ok(paths);
    }
    let g = d.underlying_graph();
    let mut rec =
        |d: &Digraph, s: Mask, labels: &[usize], tr: &mut Tracer| sp_paths(d, s, mode, labels, tr);
    let comps = g.components_within(g.vertex_mask());
    if comps.len() >= 2 {
        return split_recurse(d, s, comps[0], Lemma::Component, &[], labels, tr, &mut rec);
    }
    if let Some(&v) = g.articulation_points().first() {
        let (h1, _) = clique_split_mask(&g, g.vertex_mask(), bits::bit(v))?;
        return split_recurse(d, s, h1, Lemma::CliqueCut, &[v], labels, tr, &mut rec);
    }
    let c = sp_induced_cycle_two_high(&g)?;
    if c.len() == d.order() {
        return cycle_paths(d, s, mode, labels, tr);
    }
    let (h1, _) = cycle_split(&g, &c)?;
    split_recurse(
        d,
        s,
        bits::from_slice(&h1),
        Lemma::CycleSplit,
        &c,
        labels,
        tr,
        &mut rec,
    )
}
