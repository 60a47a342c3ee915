use crate::bits::{self, Mask};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::forbidden::ForbiddenClass;
use crate::oracles::check_maximum_stable;
use crate::path::{Mode, Path};

use super::perfect::perfect_paths;
use super::trace::{identity, Built, Lemma, Tracer};

/// Partition for a digraph whose underlying graph is a cycle. Requires `d`
/// free of induced anti-directed odd cycles (α mode) or of induced blocking
/// odd cycles (BE mode).
pub fn partition_cycle_digraph(d: &Digraph, s: &[usize], mode: Mode) -> Result<Built> {
    if !d.underlying_graph().is_cycle() {
        return Err(Error::NotACycle);
    }
    check_maximum_stable(d, s)?;
    ForbiddenClass::for_mode(mode).require(d)?;
    let mut tr = Tracer::new();
    let paths = cycle_paths(d, bits::from_slice(s), mode, &identity(d.order()), &mut tr)?;
    tr.finish(d, paths, mode, s)
}

/// Vertices in cycle order starting at 0 towards its smaller neighbour.
fn cycle_order(d: &Digraph) -> Vec<usize> {
    let n = d.order();
    let mut order = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    while order.len() < n {
        let next = bits::members(d.nbr_mask(cur))
            .find(|&u| u != prev)
            .expect("cycle vertex has two neighbours");
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

pub(crate) fn cycle_paths(
    d: &Digraph,
    s: Mask,
    mode: Mode,
    labels: &[usize],
    tr: &mut Tracer,
) -> Result<Vec<Path>> {
    let n = d.order();
    if n.is_multiple_of(2) || n == 3 {
        return perfect_paths(d, s, mode, labels, tr);
    }
    let k = (n - 1) / 2;
    let c = cycle_order(d);
    let gap = (0..n)
        .find(|&i| !bits::contains(s, c[i]) && !bits::contains(s, c[(i + 1) % n]))
        .ok_or_else(|| Error::internal("odd cycle without two consecutive non-stable vertices"))?;
    // x_{2k-1} = c[gap], x_{2k} = c[gap + 1], x_0 follows.
    let x: Vec<usize> = (0..n).map(|j| c[(gap + 2 + j) % n]).collect();
    let e = |i: usize| -> Path {
        let (a, b) = (x[i % n], x[(i + 1) % n]);
        if d.has_arc(a, b) {
            Path(vec![a, b])
        } else {
            Path(vec![b, a])
        }
    };
    let three = |a: usize, b: usize, c: usize| -> Vec<Path> {
        [Path(vec![a, b, c]), Path(vec![c, b, a])]
            .into_iter()
            .filter(|p| p.is_path_in(d))
            .collect()
    };
    let mut candidates: Vec<(Path, bool)> = Vec::new();
    for p in three(x[0], x[2 * k], x[2 * k - 1]) {
        candidates.push((p, true));
    }
    for p in three(x[2 * k - 2], x[2 * k - 1], x[2 * k]) {
        candidates.push((p, false));
    }
    candidates.sort();
    let paths = if let Some((p, at_start)) = candidates.into_iter().next() {
        let mut paths = vec![p];
        if at_start {
            paths.extend((2..=2 * k - 2).step_by(2).map(|i| e(i - 1)));
        } else {
            paths.extend((0..=2 * k - 4).step_by(2).map(e));
        }
        paths
    } else if mode == Mode::Alpha {
        let (i, p) = (0..=2 * k - 2)
            .step_by(2)
            .find_map(|i| {
                let prev = x[(i + n - 1) % n];
                three(prev, x[i], x[i + 1])
                    .into_iter()
                    .min()
                    .map(|p| (i, p))
            })
            .ok_or_else(|| {
                Error::internal("every stable vertex of the odd cycle is a source or a sink")
            })?;
        let mut paths = vec![p];
        paths.extend((0..i).step_by(2).map(|j| e(j + n - 1)));
        paths.extend((i + 2..=2 * k - 2).step_by(2).map(e));
        paths
    } else {
        return Err(Error::internal(
            "odd cycle has a blocking pair of non-stable vertices",
        ));
    };
    tr.paths(Lemma::OddCycle, labels, &paths);
    Ok(paths)
}
