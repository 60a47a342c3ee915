use crate::bits::{self, Mask};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::forbidden::find_induced_transitive_triangle;
use crate::instances;
use crate::oracles::{hamilton_search, HamiltonConstraint};
use crate::path::{Mode, Path};

/// A Hamilton path of a semicomplete digraph, built by inserting the vertices
/// `0, 1, ...` one at a time at the first feasible position.
pub fn redei_hamilton_path(d: &Digraph) -> Result<Path> {
    if !d.is_semicomplete() {
        return Err(Error::NotSemicomplete);
    }
    Ok(Path(redei_order(d, 0..d.order())?))
}

pub(crate) fn redei_order(
    d: &Digraph,
    vertices: impl IntoIterator<Item = usize>,
) -> Result<Vec<usize>> {
    let mut p: Vec<usize> = Vec::new();
    for v in vertices {
        let pos = (0..=p.len())
            .find(|&i| (i == 0 || d.has_arc(p[i - 1], v)) && (i == p.len() || d.has_arc(v, p[i])));
        match pos {
            Some(i) => p.insert(i, v),
            None => return Err(Error::InsertionImpossible(v)),
        }
    }
    Ok(p)
}

/// A Hamilton path with endvertices `s` and `t` (in either direction) in a
/// semicomplete digraph without induced transitive triangle.
///
/// Strong digraphs other than the exceptional digraph on four vertices always
/// have one. A non-strong one must have `s` and `t` in its two strong components.
pub fn st_hamilton_path(d: &Digraph, s: usize, t: usize) -> Result<Path> {
    d.check_vertices(&[s, t])?;
    if s == t {
        return Err(Error::PreconditionViolated(format!(
            "endvertices coincide ({s})"
        )));
    }
    if !d.is_semicomplete() {
        return Err(Error::NotSemicomplete);
    }
    if let Some(w) = find_induced_transitive_triangle(d) {
        return Err(Error::TransitiveTrianglePresent(w.vertices));
    }
    let path = if d.is_strong() {
        strong_st_path(d, s, t)?
    } else {
        non_strong_st_path(d, s, t)?
    };
    let p = Path(path);
    let ends = (p.first(), p.last());
    if p.len() != d.order()
        || !p.is_path_in(d)
        || (ends != (Some(s), Some(t)) && ends != (Some(t), Some(s)))
    {
        return Err(Error::internal(format!(
            "{{s,t}}-path construction produced {p}"
        )));
    }
    Ok(p)
}

fn non_strong_st_path(d: &Digraph, s: usize, t: usize) -> Result<Vec<usize>> {
    let dec = d.strong_decomposition();
    if dec.components.len() != 2 {
        return Err(Error::internal(format!(
            "non-strong semicomplete digraph without transitive triangle has {} strong components",
            dec.components.len()
        )));
    }
    let (cs, ct) = (dec.component_of[s], dec.component_of[t]);
    if cs == ct {
        return Err(Error::SidesViolated { s, t });
    }
    // The initial component dominates the terminal one, so any order inside
    // each complete component works.
    let (a, b) = if dec.minimal[cs] { (s, t) } else { (t, s) };
    let first = &dec.components[dec.component_of[a]];
    let second = &dec.components[dec.component_of[b]];
    let mut p = vec![a];
    p.extend(first.iter().copied().filter(|&v| v != a));
    p.extend(second.iter().copied().filter(|&v| v != b));
    p.push(b);
    Ok(p)
}

fn strong_st_path(d: &Digraph, s: usize, t: usize) -> Result<Vec<usize>> {
    let mut p = if d.has_arc(s, t) {
        vec![s, t]
    } else {
        vec![t, s]
    };
    while p.len() < d.order() {
        match extend_st_path(d, &p) {
            Some(q) => p = q,
            None if is_exceptional(d)? => {
                return hamilton_search(d, HamiltonConstraint::Ends(s, t))?
                    .map(|q| q.0)
                    .ok_or(Error::ExceptionDigraph { s, t });
            }
            None => {
                return Err(Error::internal(format!(
                    "no extension move applies to {}",
                    Path(p)
                )))
            }
        }
    }
    Ok(p)
}

pub(crate) fn is_exceptional(d: &Digraph) -> Result<bool> {
    Ok(d.order() == 4 && d.canonical_form()? == instances::exceptional().canonical_form()?)
}

/// One lengthening step: a valid path on strictly more vertices with the same endvertices.
fn extend_st_path(d: &Digraph, p: &[usize]) -> Option<Vec<usize>> {
    let in_p: Mask = bits::from_slice(p);
    let outside = d.vertex_mask() & !in_p;
    let dominated_by_p = |u: usize| p.iter().all(|&v| d.is_lonely(v, u));
    let dominates_p = |u: usize| p.iter().all(|&v| d.is_lonely(u, v));
    let mut after = Vec::new();
    let mut before = Vec::new();
    let mut mixed = Vec::new();
    for u in bits::members(outside) {
        if dominated_by_p(u) {
            after.push(u);
        } else if dominates_p(u) {
            before.push(u);
        } else {
            mixed.push(u);
        }
    }
    let valid = |q: &Vec<usize>| Path(q.clone()).is_path_in(d);
    let l = p.len();
    // 1-based access keeps the moves readable.
    let v = |i: usize| p[i - 1];
    let run = |from: usize, to: usize| -> Vec<usize> {
        if from <= to {
            (from..=to).map(v).collect()
        } else {
            (to..=from).rev().map(v).collect()
        }
    };
    if mixed.is_empty() {
        let (&u, &w) = (after.first()?, before.first()?);
        let mut q = vec![v(1), u, w];
        q.extend(run(2, l));
        return valid(&q).then_some(q);
    }
    for &u in &mixed {
        let k = (1..=l).rev().find(|&i| d.has_arc(u, v(i)))?;
        let mut candidates: Vec<Vec<usize>> = Vec::new();
        for j in (1..k).rev() {
            if d.has_arc(v(j), u) {
                let mut q = run(1, j);
                q.push(u);
                q.extend(run(j + 1, l));
                candidates.push(q);
            }
        }
        if k == 1 {
            let mut q = run(l, 2);
            q.extend([u, v(1)]);
            candidates.push(q);
        } else if k == l {
            let mut q = vec![v(l), u];
            q.extend(run(l - 1, 1));
            candidates.push(q);
        } else {
            if d.has_arc(v(k), v(k - 1)) {
                let mut q = run(l, k + 1);
                q.push(u);
                q.extend(run(k, 1));
                candidates.push(q);
            }
            if d.has_arc(v(k + 1), v(k)) {
                let mut q = run(l, k);
                q.push(u);
                q.extend(run(k - 1, 1));
                candidates.push(q);
            }
            if l > k + 1 {
                let mut q = run(l, k + 2);
                q.extend([u, v(k), v(k + 1)]);
                q.extend(run(k - 1, 1));
                candidates.push(q);
            } else if k > 2 {
                let mut q = vec![v(l), v(k - 1), v(k), u];
                q.extend(run(k - 2, 1));
                candidates.push(q);
            } else if l == 3 {
                for &w in mixed.iter().filter(|&&w| w != u) {
                    candidates.push(vec![v(3), w, v(2), u, v(1)]);
                }
            }
        }
        if let Some(q) = candidates.into_iter().find(valid) {
            return Some(q);
        }
    }
    None
}

/// A Hamilton path of the semicomplete digraph `d` containing `x`; in BE mode
/// `x` is an endvertex, which needs `d` free of induced transitive triangles.
pub(crate) fn semicomplete_path_through(d: &Digraph, x: usize, mode: Mode) -> Result<Vec<usize>> {
    if d.order() == 1 {
        return Ok(vec![x]);
    }
    match mode {
        Mode::Alpha => redei_order(d, 0..d.order()),
        Mode::Be if d.is_strong() => {
            if is_exceptional(d)? {
                let cycle = hamilton_search(d, HamiltonConstraint::Cycle)?
                    .ok_or_else(|| Error::internal("exceptional digraph without Hamilton cycle"))?;
                let c = cycle.0;
                let at = c
                    .iter()
                    .position(|&v| v == x)
                    .expect("cycle spans the digraph");
                Ok(c[at..].iter().chain(&c[..at]).copied().collect())
            } else {
                let t = (0..d.order()).find(|&v| v != x).expect("order at least 2");
                Ok(st_hamilton_path(d, x, t)?.0)
            }
        }
        Mode::Be => {
            let dec = d.strong_decomposition();
            let cx = dec.component_of[x];
            let t = (0..d.order())
                .find(|&v| dec.component_of[v] != cx)
                .expect("non-strong digraph has two components");
            Ok(st_hamilton_path(d, x, t)?.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn redei_on_transitive_triangle() {
        let p = redei_hamilton_path(&instances::transitive_triangle()).unwrap();
        assert_eq!(p.0, vec![0, 2, 1]);
    }

    #[test]
    fn redei_rejects_non_semicomplete() {
        let d = instances::directed_cycle(4);
        assert_eq!(redei_hamilton_path(&d), Err(Error::NotSemicomplete));
    }

    #[test]
    fn exceptional_pairs() {
        let e4 = instances::exceptional();
        let p = st_hamilton_path(&e4, 1, 0).unwrap();
        assert_eq!(p.0, vec![0, 3, 2, 1]);
        assert_eq!(
            st_hamilton_path(&e4, 0, 2),
            Err(Error::ExceptionDigraph { s: 0, t: 2 })
        );
    }

    #[test]
    fn every_pair_in_complete_digraphs() {
        for n in 2..7 {
            let d = instances::complete(n);
            for s in 0..n {
                for t in 0..n {
                    if s != t {
                        let p = st_hamilton_path(&d, s, t).unwrap();
                        assert!(p.is_path_in(&d));
                    }
                }
            }
        }
    }

    #[test]
    fn transitive_triangle_refused() {
        let d = instances::transitive_triangle();
        assert!(matches!(
            st_hamilton_path(&d, 0, 1),
            Err(Error::TransitiveTrianglePresent(_))
        ));
    }
}
