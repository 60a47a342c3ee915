use crate::bits::{self, Mask};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::forbidden::ForbiddenClass;
use crate::oracles::{check_maximum_stable, hamilton_search, HamiltonConstraint};
use crate::path::{Mode, Path};

use super::compose::{base_paths, clique_split_mask, recurse_on, split_recurse};
use super::semicomplete::semicomplete_path_through;
use super::trace::{identity, Built, Lemma, TraceStep, Tracer};
use super::universal::insert_universal;

/// A Hamilton cycle of a strong in-semicomplete digraph on at least two
/// vertices, starting at vertex 0.
pub fn hamilton_cycle_strong_in_semicomplete(d: &Digraph) -> Result<Path> {
    if !d.is_in_semicomplete() {
        return Err(Error::NotInSemicomplete);
    }
    if d.order() < 2 {
        return Err(Error::PreconditionViolated(
            "order must be at least 2".into(),
        ));
    }
    if !d.is_strong() {
        return Err(Error::NotStrong);
    }
    hamilton_cycle(d)
}

fn hamilton_cycle(d: &Digraph) -> Result<Path> {
    hamilton_search(d, HamiltonConstraint::Cycle)?
        .ok_or_else(|| Error::internal("strong in-semicomplete digraph without Hamilton cycle"))
}

/// Partition for an in-semicomplete digraph. BE mode requires `d` free of
/// induced blocking odd cycles.
pub fn partition_in_semicomplete(d: &Digraph, s: &[usize], mode: Mode) -> Result<Built> {
    if !d.is_in_semicomplete() {
        return Err(Error::NotInSemicomplete);
    }
    check_maximum_stable(d, s)?;
    if mode == Mode::Be {
        ForbiddenClass::BlockingFree.require(d)?;
    }
    let mut tr = Tracer::new();
    let paths = lis_paths(d, bits::from_slice(s), mode, &identity(d.order()), &mut tr)?;
    tr.finish(d, paths, mode, s)
}

fn lis_paths(
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
    let all = d.vertex_mask();
    let mut rec =
        |d: &Digraph, s: Mask, labels: &[usize], tr: &mut Tracer| lis_paths(d, s, mode, labels, tr);
    let comps = g.components_within(all);
    if comps.len() >= 2 {
        return split_recurse(d, s, comps[0], Lemma::Component, &[], labels, tr, &mut rec);
    }
    if d.is_strong() {
        let paths = hamilton_segments(&hamilton_cycle(d)?.0, s);
        tr.paths(Lemma::HamiltonSegments, labels, &paths);
        return Ok(paths);
    }
    let dec = d.strong_decomposition();
    let sink = *dec
        .sink_components()
        .first()
        .expect("acyclic condensation has a sink");
    let x = bits::from_slice(&dec.components[sink]);
    let y = bits::members(all & !x).fold(0, |m, v| {
        if d.out_mask(v) & x != 0 {
            m | bits::bit(v)
        } else {
            m
        }
    });
    if g.components_within(all & !y).len() >= 2 {
        if !g.is_clique(&bits::to_vec(y)) {
            return Err(Error::internal(
                "in-neighbours of a sink component are not a clique",
            ));
        }
        let (h1, _) = clique_split_mask(&g, all, y)?;
        return split_recurse(
            d,
            s,
            h1,
            Lemma::CliqueCut,
            &bits::to_vec(y),
            labels,
            tr,
            &mut rec,
        );
    }
    let u =
        bits::lowest(y).ok_or_else(|| Error::internal("sink component without in-neighbours"))?;
    if !d.is_universal(u) {
        return Err(Error::internal(format!("vertex {u} should be universal")));
    }
    if s.count_ones() == 1 {
        let x = bits::lowest(s).expect("one stable vertex");
        let path = vec![Path(semicomplete_path_through(d, x, mode)?)];
        let lemma = if mode == Mode::Alpha {
            Lemma::Redei
        } else {
            Lemma::SemicompleteEndpoint
        };
        tr.paths(lemma, labels, &path);
        return Ok(path);
    }
    if bits::contains(s, u) {
        return Err(Error::internal(
            "universal vertex lies in a stable set of size at least 2",
        ));
    }
    tr.push(TraceStep::Universal { vertex: labels[u] });
    let rest = recurse_on(d, s, all & !bits::bit(u), labels, tr, &mut rec)?;
    insert_universal(d, u, s, rest, mode, labels, tr)
}

/// Cuts a Hamilton cycle into one segment per stable vertex, each starting there.
fn hamilton_segments(cycle: &[usize], s: Mask) -> Vec<Path> {
    let n = cycle.len();
    let first = cycle
        .iter()
        .position(|&v| bits::contains(s, v))
        .unwrap_or(0);
    let mut paths: Vec<Path> = Vec::new();
    for i in 0..n {
        let v = cycle[(first + i) % n];
        if bits::contains(s, v) || paths.is_empty() {
            paths.push(Path(vec![v]));
        } else {
            paths.last_mut().expect("nonempty").0.push(v);
        }
    }
    paths
}
