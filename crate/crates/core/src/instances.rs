//! Named digraphs used throughout the tests, examples and benchmarks.
//!
//! Cycle-shaped instances label their vertices `x1, x2, …` as `0, 1, …`.

use crate::digraph::Digraph;

fn build(n: usize, arcs: &[(usize, usize)]) -> Digraph {
    Digraph::from_arcs(n, arcs.iter().copied()).expect("instance is well formed")
}

/// Arcs `x1 -> x2`, `x1 -> x3`, `x3 -> x2`.
pub fn transitive_triangle() -> Digraph {
    build(3, &[(0, 1), (0, 2), (2, 1)])
}

/// Blocking 7-cycle with blocking pair `(x1, x2)` and digons `x4x5`, `x6x7`.
pub fn blocking_seven() -> Digraph {
    build(
        7,
        &[
            (0, 1),
            (0, 6),
            (2, 1),
            (3, 2),
            (3, 4),
            (4, 3),
            (4, 5),
            (5, 6),
            (6, 5),
        ],
    )
}

/// Anti-directed 9-cycle in which `x6 -> x7 -> x8` is a directed path.
pub fn anti_directed_nine() -> Digraph {
    build(
        9,
        &[
            (0, 1),
            (2, 1),
            (2, 3),
            (4, 3),
            (5, 4),
            (5, 6),
            (6, 7),
            (8, 7),
            (0, 8),
        ],
    )
}

/// Anti-directed 9-cycle in which only `x1 -> x9` breaks the alternation.
pub fn anti_directed_nine_alternating() -> Digraph {
    build(
        9,
        &[
            (0, 1),
            (2, 1),
            (2, 3),
            (4, 3),
            (4, 5),
            (6, 5),
            (6, 7),
            (8, 7),
            (0, 8),
        ],
    )
}

/// The strong semicomplete digraph `a, b, c, d = 0, 1, 2, 3` with arcs
/// `b -> a -> d -> c -> b` and digons `ac`, `bd`.
///
/// It has no induced transitive triangle, yet no Hamilton path joins `a` and `c`.
pub fn exceptional() -> Digraph {
    build(
        4,
        &[
            (1, 0),
            (0, 3),
            (3, 2),
            (2, 1),
            (0, 2),
            (2, 0),
            (1, 3),
            (3, 1),
        ],
    )
}

/// `0 -> 1 -> … -> n-1 -> 0`.
pub fn directed_cycle(n: usize) -> Digraph {
    let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &arcs)
}

/// The cycle `0 1 … n-1` with every edge a digon.
pub fn symmetric_cycle(n: usize) -> Digraph {
    let arcs: Vec<_> = (0..n)
        .flat_map(|i| [(i, (i + 1) % n), ((i + 1) % n, i)])
        .collect();
    build(n, &arcs)
}

/// Every pair of distinct vertices forms a digon.
pub fn complete(n: usize) -> Digraph {
    let arcs: Vec<_> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    build(n, &arcs)
}

/// Vertices `a, b, c, d, v = 0..5`; `v` is universal, `{a, b}` is a maximum
/// stable set, and `D - v` has the BE-property while `D` does not.
pub fn universal_vertex_counterexample() -> Digraph {
    build(5, &[(0, 2), (1, 3), (4, 1), (4, 3), (4, 0), (4, 2)])
}

/// A blocking odd cycle on `2k + 1` vertices (`k >= 1`) built from a choice
/// for every edge other than `x1x2`.
///
/// `x1 -> x2` is the blocking pair edge with `x1` a source and `x2` a sink of
/// the cycle. `choices[i]` orients the edge `x_{i+2} x_{i+3}` (indices mod
/// `2k + 1`, so the last choice is `x_{2k+1} x1`): `0` forward, `1` backward,
/// `2` digon. Edges at `x1` and `x2` are forced so that they stay a source
/// and a sink; their choice entries are ignored.
pub fn blocking_cycle(k: usize, choices: &[u8]) -> Digraph {
    let n = 2 * k + 1;
    assert!(k >= 1 && choices.len() == n - 1, "need {} choices", n - 1);
    let mut arcs = vec![(0, 1)];
    for (i, &c) in choices.iter().enumerate() {
        let u = i + 1;
        let v = (i + 2) % n;
        if u == 1 {
            arcs.push((v, 1));
        } else if v == 0 {
            arcs.push((0, u));
        } else {
            match c {
                0 => arcs.push((u, v)),
                1 => arcs.push((v, u)),
                _ => arcs.extend([(u, v), (v, u)]),
            }
        }
    }
    build(n, &arcs)
}
