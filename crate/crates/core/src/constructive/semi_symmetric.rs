use crate::bits::{self, Mask};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::forbidden::{lonely_arcs, ForbiddenClass, CYCLE_FINDER_CAP};
use crate::oracles::{
    check_maximum_stable, max_bipartite_matching, max_stable_sets, min_path_partition,
    stability_number,
};
use crate::path::{Mode, Path};

use super::compose::recurse_on;
use super::trace::{compose_labels, identity, Built, Lemma, TraceStep, Tracer};

/// BE partition for a digraph with at most three lonely arcs, where three
/// lonely arcs must be pairwise disjoint.
pub fn partition_semi_symmetric(d: &Digraph, s: &[usize]) -> Result<Built> {
    check_maximum_stable(d, s)?;
    let lonely = lonely_arcs(d);
    if lonely.len() > 3 {
        return Err(Error::TooManyLonelyArcs(lonely.len()));
    }
    if lonely.len() == 3 {
        let mut seen: Mask = 0;
        for &(u, v) in &lonely {
            for w in [u, v] {
                if bits::contains(seen, w) {
                    return Err(Error::SharedEndvertex(w));
                }
                seen |= bits::bit(w);
            }
        }
        if d.order() <= CYCLE_FINDER_CAP {
            ForbiddenClass::BlockingFree.require(d)?;
        }
    }
    let mut tr = Tracer::new();
    let paths = ss_paths(d, bits::from_slice(s), &identity(d.order()), &mut tr, true)?;
    tr.finish(d, paths, Mode::Be, s)
}

fn measure(d: &Digraph) -> usize {
    d.order() + d.arc_count()
}

fn check_decrease(parent: &Digraph, child: &Digraph) -> Result<()> {
    if measure(child) >= measure(parent) {
        return Err(Error::internal("recursion does not decrease |V| + |A|"));
    }
    Ok(())
}

/// `three_arc` is false only inside the lonely-matched exchange, where one of
/// the direct constructions must apply.
fn ss_paths(
    d: &Digraph,
    s: Mask,
    labels: &[usize],
    tr: &mut Tracer,
    three_arc: bool,
) -> Result<Vec<Path>> {
    let lonely = lonely_arcs(d);
    let entering: Vec<(usize, usize)> = lonely
        .iter()
        .copied()
        .filter(|&(_, v)| bits::contains(s, v))
        .collect();
    let leaving: Vec<(usize, usize)> = lonely
        .iter()
        .copied()
        .filter(|&(u, _)| bits::contains(s, u))
        .collect();
    let global =
        |arcs: &[(usize, usize)]| arcs.iter().map(|&(u, v)| (labels[u], labels[v])).collect();
    tr.push(TraceStep::LonelyArcs {
        entering: global(&entering),
        leaving: global(&leaving),
    });
    let paths = if entering.is_empty() {
        let paths = berge(&without_arcs_into(d, s), s)?;
        tr.paths(Lemma::BergeLeaving, labels, &paths);
        paths
    } else if leaving.is_empty() {
        let paths = berge(&without_arcs_out_of(d, s), s)?;
        tr.paths(Lemma::BergeEntering, labels, &paths);
        paths
    } else if entering.len() + leaving.len() == lonely.len() {
        let paths = reversal(d, s, &entering)?;
        tr.paths(Lemma::LonelyReversal, labels, &paths);
        paths
    } else if three_arc {
        return exchange(d, s, leaving[0], entering[0], labels, tr);
    } else {
        return Err(Error::internal(
            "lonely arcs avoid the stable set after the exchange",
        ));
    };
    Ok(paths)
}

fn without_arcs_into(d: &Digraph, s: Mask) -> Digraph {
    let arcs: Vec<(usize, usize)> = d.arcs().filter(|&(_, v)| bits::contains(s, v)).collect();
    d.without_arcs(&arcs)
}

fn without_arcs_out_of(d: &Digraph, s: Mask) -> Digraph {
    let arcs: Vec<(usize, usize)> = d.arcs().filter(|&(u, _)| bits::contains(s, u)).collect();
    d.without_arcs(&arcs)
}

/// A minimum path partition of `d`, which must have exactly `|s|` paths.
fn berge(d: &Digraph, s: Mask) -> Result<Vec<Path>> {
    let paths = min_path_partition(d)?.paths;
    if paths.len() != s.count_ones() as usize {
        return Err(Error::internal(format!(
            "minimum path partition has {} paths for a stable set of size {}",
            paths.len(),
            s.count_ones()
        )));
    }
    Ok(paths)
}

fn reversal(d: &Digraph, s: Mask, entering: &[(usize, usize)]) -> Result<Vec<Path>> {
    let reversed: Vec<(usize, usize)> = entering.iter().map(|&(u, v)| (v, u)).collect();
    let d2 = without_arcs_into(&d.with_arcs(&reversed)?, s);
    let paths = berge(&d2, s)?;
    Ok(paths
        .into_iter()
        .map(|p| {
            let uses = p
                .vertices()
                .windows(2)
                .any(|w| reversed.contains(&(w[0], w[1])));
            if uses {
                p.reversed()
            } else {
                p
            }
        })
        .collect())
}

fn exchange(
    d: &Digraph,
    s: Mask,
    (x1, x2): (usize, usize),
    (y1, y2): (usize, usize),
    labels: &[usize],
    tr: &mut Tracer,
) -> Result<Vec<Path>> {
    let all = d.vertex_mask();
    let mut rec =
        |d: &Digraph, s: Mask, labels: &[usize], tr: &mut Tracer| ss_paths(d, s, labels, tr, true);

    let others = d.nbr_mask(y2) & !bits::bit(y1);
    if others == 0 {
        let keep = all & !bits::bit(y1) & !bits::bit(y2);
        check_decrease(d, &d.induced_mask(keep).digraph)?;
        let mut paths = recurse_on(d, s & !bits::bit(y2), keep, labels, tr, &mut rec)?;
        let pendant = Path(vec![y1, y2]);
        tr.paths(Lemma::PendantLonely, labels, std::slice::from_ref(&pendant));
        paths.push(pendant);
        return Ok(paths);
    }
    let z = bits::lowest(others).expect("nonempty");
    if !d.is_digon(y2, z) {
        return Err(Error::internal(format!("{y2} and {z} should form a digon")));
    }
    let d1 = d.without_arcs(&[(y2, z), (z, y2)]);
    check_decrease(d, &d1)?;
    let alpha = s.count_ones() as usize;
    let kept = stability_number(&d1)? == alpha;
    tr.push(TraceStep::DigonDeleted {
        a: labels[y2],
        b: labels[z],
        alpha_kept: kept,
    });
    if kept {
        return ss_paths(&d1, s, labels, tr, true);
    }
    let family = max_stable_sets(&d1)?;
    let s1 = bits::from_slice(&family.sets[0]);
    let s2 = s1 & !bits::bit(y2);
    let r = s & !s2;
    let zs = s2 & !s;
    let (rv, zv) = (bits::to_vec(r), bits::to_vec(zs));
    let matching = max_bipartite_matching(&rv, &zv, |a, b| d.adjacent(a, b))?;
    if matching.len() != rv.len() || rv.len() != zv.len() {
        return Err(Error::internal(
            "no perfect matching between the exchanged stable vertices",
        ));
    }
    tr.push(TraceStep::Matching {
        r: rv.iter().map(|&v| labels[v]).collect(),
        z: zv.iter().map(|&v| labels[v]).collect(),
        pairs: matching
            .pairs
            .iter()
            .map(|&(a, b)| (labels[a], labels[b]))
            .collect(),
    });
    let keep = all & !r;
    let lonely_pair = matching
        .pairs
        .iter()
        .find(|&&(a, b)| !d.is_digon(a, b))
        .copied();
    let mut paths = match lonely_pair {
        None => {
            check_decrease(d, &d.induced_mask(keep).digraph)?;
            recurse_on(d, s2, keep, labels, tr, &mut rec)?
        }
        Some(pair) => {
            if pair != (x1, x2) {
                return Err(Error::internal(format!(
                    "unexpected lonely matching pair {pair:?}"
                )));
            }
            let sub = d.induced_mask(keep);
            let lx2 = sub.local(x2).expect("x2 survives");
            let into: Vec<(usize, usize)> = sub
                .digraph
                .in_neighbors(lx2)
                .into_iter()
                .map(|u| (u, lx2))
                .collect();
            let d2 = sub.digraph.without_arcs(&into);
            check_decrease(d, &d2)?;
            let s_local =
                bits::members(s2).fold(0, |m, v| m | bits::bit(sub.local(v).expect("kept")));
            let child = compose_labels(labels, &sub.labels);
            ss_paths(&d2, s_local, &child, tr, false)?
                .into_iter()
                .map(|p| Path(p.0.into_iter().map(|v| sub.labels[v]).collect()))
                .collect()
        }
    };
    for &(x, m) in &matching.pairs {
        let i = paths
            .iter()
            .position(|p| p.first() == Some(m) || p.last() == Some(m))
            .ok_or_else(|| Error::internal(format!("no path ends at {m}")))?;
        let p = &paths[i];
        let new = if p.first() == Some(m) && d.has_arc(x, m) {
            let mut q = vec![x];
            q.extend(p.vertices());
            Path(q)
        } else if p.last() == Some(m) && d.has_arc(m, x) {
            let mut q = p.0.clone();
            q.push(x);
            Path(q)
        } else {
            return Err(Error::internal(format!("cannot attach {x} at {m}")));
        };
        tr.replace(Lemma::MatchingExchange, labels, p, &new);
        paths[i] = new;
    }
    Ok(paths)
}
