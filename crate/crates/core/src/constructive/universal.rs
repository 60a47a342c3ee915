use crate::bits;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::forbidden::ForbiddenClass;
use crate::oracles::check_maximum_stable;
use crate::path::{Mode, Path, PathPartition};

use super::trace::{Lemma, Tracer};

/// Extends an `S`-path partition of `D - v` to one of `D` by inserting the
/// universal vertex `v` into one path.
///
/// `p` uses the labels of `d` and must not contain `v`. In BE mode `d` must be
/// free of induced blocking odd cycles.
pub fn extend_through_universal(
    d: &Digraph,
    v: usize,
    s: &[usize],
    p: &PathPartition,
    mode: Mode,
) -> Result<PathPartition> {
    d.check_vertices(&[v])?;
    if !d.is_universal(v) {
        return Err(Error::NotUniversal(v));
    }
    if s.contains(&v) {
        return Err(Error::PreconditionViolated(format!(
            "universal vertex {v} is in the stable set"
        )));
    }
    check_maximum_stable(d, s)?;
    if mode == Mode::Be {
        ForbiddenClass::BlockingFree.require(d)?;
    }
    let sub = d.remove_vertices(&[v])?;
    let mut local_paths = Vec::with_capacity(p.paths.len());
    for q in &p.paths {
        let mut lq = Vec::with_capacity(q.len());
        for &u in q.vertices() {
            lq.push(sub.local(u).ok_or_else(|| {
                Error::PreconditionViolated(format!("vertex {u} does not belong to D - {v}"))
            })?);
        }
        local_paths.push(Path(lq));
    }
    let local_s: Vec<usize> = s
        .iter()
        .map(|&u| sub.local(u).expect("v is not in s"))
        .collect();
    PathPartition::certified(local_paths, mode, &local_s)
        .validate(&sub.digraph)
        .map_err(|e| Error::PreconditionViolated(format!("not a partition of D - {v}: {e}")))?;

    let mut tr = Tracer::new();
    let labels: Vec<usize> = (0..d.order()).collect();
    let paths = insert_universal(
        d,
        v,
        bits::from_slice(s),
        p.paths.clone(),
        mode,
        &labels,
        &mut tr,
    )?;
    let out = PathPartition::certified(paths, mode, s);
    out.validate(d)
        .map_err(|e| Error::internal(format!("universal vertex extension is invalid: {e}")))?;
    Ok(out)
}

/// Inserts `v` into one of `paths` (labels of `d`), recording a replace step.
pub(crate) fn insert_universal(
    d: &Digraph,
    v: usize,
    s: bits::Mask,
    mut paths: Vec<Path>,
    mode: Mode,
    labels: &[usize],
    tr: &mut Tracer,
) -> Result<Vec<Path>> {
    let (index, new) = match mode {
        Mode::Alpha => paths
            .iter()
            .enumerate()
            .find_map(|(i, p)| insert_anywhere(d, v, p.vertices()).map(|q| (i, q)))
            .ok_or(Error::InsertionImpossible(v))?,
        Mode::Be => {
            let p = paths.first().ok_or(Error::InsertionImpossible(v))?;
            let q = if p.first().is_some_and(|u| bits::contains(s, u)) {
                insert_after_stable_start(d, v, p.vertices())
            } else {
                let rev = p.reversed();
                let mut q = insert_after_stable_start(&d.inverse(), v, rev.vertices());
                q.reverse();
                q
            };
            (0, q)
        }
    };
    let new = Path(new);
    if !new.is_path_in(d) {
        return Err(Error::internal(format!(
            "inserting {v} produced the non-path {new}"
        )));
    }
    tr.replace(Lemma::UniversalVertex, labels, &paths[index], &new);
    paths[index] = new;
    Ok(paths)
}

fn insert_anywhere(d: &Digraph, v: usize, p: &[usize]) -> Option<Vec<usize>> {
    let pos = (0..=p.len())
        .find(|&i| (i == 0 || d.has_arc(p[i - 1], v)) && (i == p.len() || d.has_arc(v, p[i])))?;
    let mut q = p.to_vec();
    q.insert(pos, v);
    Some(q)
}

/// `p` starts with a stable vertex that must remain an endvertex.
fn insert_after_stable_start(d: &Digraph, v: usize, p: &[usize]) -> Vec<usize> {
    let l = p.len();
    if d.has_arc(p[l - 1], v) {
        let mut q = p.to_vec();
        q.push(v);
        return q;
    }
    for j in (0..l - 1).rev() {
        if d.has_arc(p[j], v) {
            let mut q = p.to_vec();
            q.insert(j + 1, v);
            return q;
        }
    }
    let mut q = vec![v];
    q.extend(p.iter().rev());
    q
}
