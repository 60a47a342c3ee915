use rand::seq::SliceRandom;
use rand::Rng;

use crate::bits;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::forbidden::{is_series_parallel, lonely_arcs};
use crate::oracles::{is_perfect, PERFECT_CAP};

use super::enumerate::pairs;
use super::validate::TheoremClass;

/// Each pair is adjacent with probability `edge_prob`; an adjacent pair is a
/// digon or a single arc in either direction with equal probability.
pub fn random_digraph<R: Rng + ?Sized>(n: usize, edge_prob: f64, rng: &mut R) -> Result<Digraph> {
    let edges: Vec<(usize, usize)> = pairs(n)
        .into_iter()
        .filter(|_| rng.gen_bool(edge_prob))
        .collect();
    orient(n, &edges, rng)
}

fn orient<R: Rng + ?Sized>(n: usize, edges: &[(usize, usize)], rng: &mut R) -> Result<Digraph> {
    let mut arcs = Vec::with_capacity(2 * edges.len());
    for &(u, v) in edges {
        match rng.gen_range(0..3) {
            0 => arcs.push((u, v)),
            1 => arcs.push((v, u)),
            _ => arcs.extend([(u, v), (v, u)]),
        }
    }
    Digraph::from_arcs(n, arcs)
}

/// A random member of `class` on `n` vertices. The theorem's extra
/// hypotheses (forbidden cycles) are not enforced here.
pub fn sample_member<R: Rng + ?Sized>(
    class: TheoremClass,
    n: usize,
    rng: &mut R,
) -> Result<Digraph> {
    match class {
        TheoremClass::Perfect => {
            Error::check_cap("sample_member", n, PERFECT_CAP)?;
            loop {
                let p = rng.gen_range(0.2..0.8);
                let d = random_digraph(n, p, rng)?;
                if is_perfect(&d.underlying_graph())?.perfect {
                    return Ok(d);
                }
            }
        }
        TheoremClass::SeriesParallel => {
            let edges = random_series_parallel(n, rng);
            let d = orient(n, &edges, rng)?;
            debug_assert!(is_series_parallel(&d.underlying_graph()));
            Ok(d)
        }
        TheoremClass::InSemicomplete => random_in_semicomplete(n, rng),
        TheoremClass::Semicomplete => random_digraph(n, 1.0, rng),
        TheoremClass::Cycle => {
            if n < 3 {
                return Err(Error::PreconditionViolated(
                    "cycles need at least 3 vertices".into(),
                ));
            }
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            let edges: Vec<(usize, usize)> =
                (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
            orient(n, &edges, rng)
        }
        TheoremClass::Symmetric => random_semi_symmetric(n, 0, rng),
        TheoremClass::SemiSymmetric2 => {
            let k = rng.gen_range(0..=2);
            random_semi_symmetric(n, k, rng)
        }
        TheoremClass::SemiSymmetric3 => random_semi_symmetric(n, 3, rng),
        TheoremClass::SemiSymmetric => {
            let k = rng.gen_range(0..=3);
            random_semi_symmetric(n, k, rng)
        }
    }
}

/// Edges of a random graph with no K4 subdivision: grow a 2-tree by pendant
/// vertices and ear vertices on existing edges, then drop random edges.
fn random_series_parallel<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 1..n {
        if !edges.is_empty() && rng.gen_bool(0.6) {
            let (a, b) = edges[rng.gen_range(0..edges.len())];
            edges.push((a, v));
            edges.push((b, v));
        } else {
            edges.push((rng.gen_range(0..v), v));
        }
    }
    let drop = rng.gen_range(0.0..0.3);
    edges.retain(|_| !rng.gen_bool(drop));
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// Starts sparse and adds arcs between non-adjacent in-neighbours until every
/// in-neighbourhood is semicomplete.
fn random_in_semicomplete<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Digraph> {
    let p = rng.gen_range(0.15..0.5);
    let mut d = random_digraph(n, p, rng)?;
    loop {
        let gap = (0..n).find_map(|v| {
            let ins = bits::to_vec(d.in_mask(v));
            ins.iter()
                .enumerate()
                .flat_map(|(i, &a)| ins[i + 1..].iter().map(move |&b| (a, b)))
                .find(|&(a, b)| !d.adjacent(a, b))
        });
        let Some((a, b)) = gap else { return Ok(d) };
        let add: Vec<(usize, usize)> = match rng.gen_range(0..3) {
            0 => vec![(a, b)],
            1 => vec![(b, a)],
            _ => vec![(a, b), (b, a)],
        };
        d = d.with_arcs(&add)?;
    }
}

/// A random digraph with exactly `k` lonely arcs; three lonely arcs are
/// pairwise disjoint.
fn random_semi_symmetric<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<Digraph> {
    for _ in 0..10_000 {
        let p = rng.gen_range(0.2..0.8);
        let mut edges: Vec<(usize, usize)> =
            pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
        if edges.len() < k {
            continue;
        }
        edges.shuffle(rng);
        let mut arcs = Vec::new();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if i < k {
                arcs.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
            } else {
                arcs.extend([(u, v), (v, u)]);
            }
        }
        let d = Digraph::from_arcs(n, arcs)?;
        if k == 3 {
            let mut ends: Vec<usize> = lonely_arcs(&d).iter().flat_map(|&(u, v)| [u, v]).collect();
            ends.sort_unstable();
            ends.dedup();
            if ends.len() != 6 {
                continue;
            }
        }
        return Ok(d);
    }
    Err(Error::PreconditionViolated(format!(
        "no digraph on {n} vertices with {k} disjoint lonely arcs"
    )))
}
