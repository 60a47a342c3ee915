//! Brute-force reference implementations used as independent oracles.
#![allow(dead_code)]

use diperfect_core::{Digraph, Graph, Mode};

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Whether some relabelling maps the arcs of `a` onto those of `b`.
pub fn isomorphic(a: &Digraph, b: &Digraph) -> bool {
    let n = a.order();
    if n != b.order() || a.arc_count() != b.arc_count() {
        return false;
    }
    permutations(n)
        .into_iter()
        .any(|p| a.arcs().all(|(u, v)| b.has_arc(p[u], p[v])))
}

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

pub fn is_stable(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .all(|&u| vs.iter().all(|&v| u == v || !g.has_edge(u, v)))
}

pub fn alpha(d: &Digraph) -> usize {
    let g = d.underlying_graph();
    subsets(d.order())
        .filter(|s| is_stable(&g, s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

pub fn max_stable_sets(d: &Digraph) -> Vec<Vec<usize>> {
    let g = d.underlying_graph();
    let a = alpha(d);
    let mut sets: Vec<_> = subsets(d.order())
        .filter(|s| s.len() == a && is_stable(&g, s))
        .collect();
    sets.sort();
    sets
}

/// Smallest number of vertex-disjoint directed paths covering `d`. Builds the
/// paths one vertex at a time: extend the open path or start a new one.
pub fn path_partition_number(d: &Digraph) -> usize {
    fn rec(d: &Digraph, covered: &mut [bool], last: Option<usize>, paths: usize, best: &mut usize) {
        if covered.iter().all(|&c| c) {
            *best = (*best).min(paths);
            return;
        }
        for v in 0..d.order() {
            if covered[v] {
                continue;
            }
            let extends = last.is_some_and(|u| d.has_arc(u, v));
            let count = if extends { paths } else { paths + 1 };
            if count >= *best {
                continue;
            }
            covered[v] = true;
            rec(d, covered, Some(v), count, best);
            covered[v] = false;
        }
    }
    let n = d.order();
    let mut best = n + 1;
    rec(d, &mut vec![false; n], None, 0, &mut best);
    best.min(n)
}

/// Whether `d` has a path partition in which every path meets `s` exactly
/// once, at an end when `mode` is BE.
pub fn has_s_path_partition(d: &Digraph, s: &[usize], mode: Mode) -> bool {
    fn valid(path: &[usize], s: &[usize], mode: Mode) -> bool {
        let hits: Vec<usize> = (0..path.len()).filter(|&i| s.contains(&path[i])).collect();
        hits.len() == 1 && (mode == Mode::Alpha || hits[0] == 0 || hits[0] == path.len() - 1)
    }
    fn rec(
        d: &Digraph,
        s: &[usize],
        mode: Mode,
        covered: &mut [bool],
        path: &mut Vec<usize>,
    ) -> bool {
        if path.iter().filter(|v| s.contains(v)).count() > 1 {
            return false;
        }
        if !path.is_empty() && valid(path, s, mode) {
            let closed = std::mem::take(path);
            if covered.iter().all(|&c| c) {
                *path = closed;
                return true;
            }
            for v in 0..d.order() {
                if !covered[v] {
                    covered[v] = true;
                    path.push(v);
                    let found = rec(d, s, mode, covered, path);
                    path.pop();
                    covered[v] = false;
                    if found {
                        *path = closed;
                        return true;
                    }
                }
            }
            *path = closed;
        }
        let u = *path.last().expect("paths are never empty");
        for v in 0..d.order() {
            if !covered[v] && d.has_arc(u, v) {
                covered[v] = true;
                path.push(v);
                let found = rec(d, s, mode, covered, path);
                path.pop();
                covered[v] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    let n = d.order();
    let mut covered = vec![false; n];
    if n == 0 {
        return s.is_empty();
    }
    (0..n).any(|v| {
        covered[v] = true;
        let found = rec(d, s, mode, &mut covered, &mut vec![v]);
        covered[v] = false;
        found
    })
}

/// Whether `g` has a `K4` minor: four disjoint connected branch sets that are
/// pairwise joined by an edge. Exhaustive over all assignments.
pub fn has_k4_minor(g: &Graph) -> bool {
    let n = g.order();
    let total = 5usize.pow(n as u32);
    'assign: for code in 0..total {
        let mut label = vec![0usize; n];
        let mut c = code;
        for l in label.iter_mut() {
            *l = c % 5;
            c /= 5;
        }
        let sets: Vec<Vec<usize>> = (0..4)
            .map(|b| (0..n).filter(|&v| label[v] == b).collect())
            .collect();
        if sets.iter().any(|s| s.is_empty()) {
            continue;
        }
        // Symmetry: branch set i contains a smaller minimum than set i + 1.
        if sets.windows(2).any(|w| w[0][0] > w[1][0]) {
            continue;
        }
        for s in &sets {
            if !connected_within(g, s) {
                continue 'assign;
            }
        }
        for a in 0..4 {
            for b in a + 1..4 {
                if !sets[a]
                    .iter()
                    .any(|&u| sets[b].iter().any(|&v| g.has_edge(u, v)))
                {
                    continue 'assign;
                }
            }
        }
        return true;
    }
    false
}

fn connected_within(g: &Graph, s: &[usize]) -> bool {
    let mut seen = vec![s[0]];
    let mut stack = vec![s[0]];
    while let Some(u) = stack.pop() {
        for &v in s {
            if !seen.contains(&v) && g.has_edge(u, v) {
                seen.push(v);
                stack.push(v);
            }
        }
    }
    seen.len() == s.len()
}
