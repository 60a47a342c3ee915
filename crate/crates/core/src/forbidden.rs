//! Recognizers for digraph classes and forbidden induced structures.

use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles;

/// Largest order accepted by the odd-cycle finders.
pub const CYCLE_FINDER_CAP: usize = 14;

/// The two classes defined by excluding a family of induced odd cycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ForbiddenClass {
    /// No induced anti-directed odd cycle.
    AntiDirectedFree,
    /// No induced blocking odd cycle.
    BlockingFree,
}

impl ForbiddenClass {
    pub fn for_mode(mode: crate::Mode) -> Self {
        match mode {
            crate::Mode::Alpha => ForbiddenClass::AntiDirectedFree,
            crate::Mode::Be => ForbiddenClass::BlockingFree,
        }
    }

    /// Whether `d` belongs to the class.
    pub fn contains(self, d: &Digraph) -> Result<bool> {
        Ok(self.obstruction(d)?.is_none())
    }

    /// An induced structure excluding `d` from the class, if any.
    pub fn obstruction(self, d: &Digraph) -> Result<Option<Witness>> {
        match self {
            ForbiddenClass::AntiDirectedFree => find_induced_anti_directed_odd_cycle(d),
            ForbiddenClass::BlockingFree => find_induced_blocking_odd_cycle(d),
        }
    }

    /// Fails with [`Error::NotInClass`] when `d` is outside the class.
    pub fn require(self, d: &Digraph) -> Result<()> {
        if self.contains(d)? {
            Ok(())
        } else {
            Err(Error::NotInClass(self))
        }
    }
}

impl fmt::Display for ForbiddenClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ForbiddenClass::AntiDirectedFree => "B (no induced anti-directed odd cycle)",
            ForbiddenClass::BlockingFree => "D (no induced blocking odd cycle)",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    TransitiveTriangle,
    BlockingOddCycle,
    AntiDirectedOddCycle,
    CliqueCut,
    OddHole,
    LonelyArcList,
}

/// A certificate for a structure found in a digraph.
///
/// * `TransitiveTriangle`: `vertices = [u, v, w]` with arcs `u→v`, `v→w`, `u→w`.
/// * `BlockingOddCycle`: `vertices = x1 … x_{2k+1}` in cycle order; `extra = [x1, x2]`.
/// * `AntiDirectedOddCycle`: `vertices = x1 … x_{2k+1}` in cycle order.
/// * `CliqueCut`: `vertices` is the clique.
/// * `OddHole`: `vertices` in cycle order; `extra = [1]` when the cycle lives in the complement.
/// * `LonelyArcList`: `vertices = [u1, v1, u2, v2, …]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
    pub extra: Vec<usize>,
}

impl Witness {
    fn new(kind: WitnessKind, vertices: Vec<usize>, extra: Vec<usize>) -> Self {
        Witness {
            kind,
            vertices,
            extra,
        }
    }

    /// Re-checks the witness against `d`.
    pub fn validate(&self, d: &Digraph) -> bool {
        if d.check_vertices(&self.vertices).is_err() {
            return false;
        }
        let vs = &self.vertices;
        match self.kind {
            WitnessKind::TransitiveTriangle => {
                vs.len() == 3 && is_transitive_triangle(d, vs[0], vs[1], vs[2])
            }
            WitnessKind::BlockingOddCycle => {
                vs.len() % 2 == 1
                    && is_induced_cycle(&d.underlying_graph(), vs)
                    && self.extra == [vs[0], vs[1]]
                    && is_extreme_in_cycle(d, vs, 0)
                    && is_extreme_in_cycle(d, vs, 1)
            }
            WitnessKind::AntiDirectedOddCycle => {
                vs.len() % 2 == 1
                    && vs.len() >= 5
                    && is_induced_cycle(&d.underlying_graph(), vs)
                    && anti_directed_positions(vs.len()).all(|i| is_extreme_in_cycle(d, vs, i))
            }
            WitnessKind::CliqueCut => {
                let g = d.underlying_graph();
                g.is_clique(vs) && {
                    let rest = g.vertex_mask() & !bits::from_slice(vs);
                    g.components_within(rest).len() >= 2
                }
            }
            WitnessKind::OddHole => {
                let g = d.underlying_graph();
                let h = if self.extra == [1] { g.complement() } else { g };
                vs.len() % 2 == 1 && vs.len() >= 5 && is_induced_cycle(&h, vs)
            }
            WitnessKind::LonelyArcList => {
                let flat: Vec<usize> = lonely_arcs(d)
                    .into_iter()
                    .flat_map(|(u, v)| [u, v])
                    .collect();
                *vs == flat
            }
        }
    }
}

fn is_transitive_triangle(d: &Digraph, u: usize, v: usize, w: usize) -> bool {
    let arcs = [(u, v), (v, w), (u, w)];
    let absent = [(v, u), (w, v), (w, u)];
    u != v
        && v != w
        && u != w
        && arcs.iter().all(|&(a, b)| d.has_arc(a, b))
        && absent.iter().all(|&(a, b)| !d.has_arc(a, b))
}

/// `vs` is a chordless cycle of `g` in the given order.
pub(crate) fn is_induced_cycle(g: &Graph, vs: &[usize]) -> bool {
    let m = vs.len();
    if m < 3 || bits::from_slice(vs).count_ones() as usize != m {
        return false;
    }
    let set = bits::from_slice(vs);
    (0..m).all(|i| {
        let expected = bits::bit(vs[(i + 1) % m]) | bits::bit(vs[(i + m - 1) % m]);
        g.adj_mask(vs[i]) & set == expected
    })
}

/// `c[i]` is a source or a sink of the cycle digraph on `c`.
fn is_extreme_in_cycle(d: &Digraph, c: &[usize], i: usize) -> bool {
    let m = c.len();
    let v = c[i];
    let nb = [c[(i + 1) % m], c[(i + m - 1) % m]];
    nb.iter().all(|&u| !d.has_arc(u, v)) || nb.iter().all(|&u| !d.has_arc(v, u))
}

/// Zero-based positions of `x1, x2, x3, x4, x6, x8, …, x_{2k}` on a cycle of length `m = 2k + 1`.
fn anti_directed_positions(m: usize) -> impl Iterator<Item = usize> {
    [0, 1, 2, 3].into_iter().chain((5..m - 1).step_by(2))
}

pub fn find_induced_transitive_triangle(d: &Digraph) -> Option<Witness> {
    let n = d.order();
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                if is_transitive_triangle(d, u, v, w) {
                    return Some(Witness::new(
                        WitnessKind::TransitiveTriangle,
                        vec![u, v, w],
                        vec![],
                    ));
                }
            }
        }
    }
    None
}

/// An induced odd cycle with two consecutive vertices that are each a source
/// or a sink of the cycle; `None` certifies membership in the blocking-free class.
pub fn find_induced_blocking_odd_cycle(d: &Digraph) -> Result<Option<Witness>> {
    Error::check_cap(
        "find_induced_blocking_odd_cycle",
        d.order(),
        CYCLE_FINDER_CAP,
    )?;
    let g = d.underlying_graph();
    let mut found = None;
    let _ = g.for_each_induced_cycle(3, |c| {
        let m = c.len();
        if m % 2 == 0 {
            return ControlFlow::Continue(());
        }
        for i in 0..m {
            if is_extreme_in_cycle(d, c, i) && is_extreme_in_cycle(d, c, (i + 1) % m) {
                let labeled: Vec<usize> = (0..m).map(|j| c[(i + j) % m]).collect();
                let pair = vec![labeled[0], labeled[1]];
                found = Some(Witness::new(WitnessKind::BlockingOddCycle, labeled, pair));
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    Ok(found)
}

/// An induced anti-directed odd cycle; `None` certifies membership in the
/// anti-directed-free class.
pub fn find_induced_anti_directed_odd_cycle(d: &Digraph) -> Result<Option<Witness>> {
    Error::check_cap(
        "find_induced_anti_directed_odd_cycle",
        d.order(),
        CYCLE_FINDER_CAP,
    )?;
    let g = d.underlying_graph();
    let mut found = None;
    let _ = g.for_each_induced_cycle(5, |c| {
        let m = c.len();
        if m % 2 == 0 {
            return ControlFlow::Continue(());
        }
        let extreme: Vec<bool> = (0..m).map(|i| is_extreme_in_cycle(d, c, i)).collect();
        for reflect in [false, true] {
            for r in 0..m {
                let pos = |j: usize| {
                    if reflect {
                        (r + m - j) % m
                    } else {
                        (r + j) % m
                    }
                };
                if anti_directed_positions(m).all(|j| extreme[pos(j)]) {
                    let labeled = (0..m).map(|j| c[pos(j)]).collect();
                    found = Some(Witness::new(
                        WitnessKind::AntiDirectedOddCycle,
                        labeled,
                        vec![],
                    ));
                    return ControlFlow::Break(());
                }
            }
        }
        ControlFlow::Continue(())
    });
    Ok(found)
}

/// Arcs `uv` whose reverse `vu` is absent, sorted.
pub fn lonely_arcs(d: &Digraph) -> Vec<(usize, usize)> {
    d.arcs().filter(|&(u, v)| !d.has_arc(v, u)).collect()
}

/// True iff `g` has no subdivision of K4.
///
/// Repeatedly deletes vertices of degree at most one and suppresses vertices
/// of degree two (dropping the parallel edge that may arise); the graph is
/// series-parallel iff this empties it.
pub fn is_series_parallel(g: &Graph) -> bool {
    let mut adj: Vec<Mask> = (0..g.order()).map(|v| g.adj_mask(v)).collect();
    let mut alive = g.vertex_mask();
    loop {
        let mut progressed = false;
        for v in bits::members(alive) {
            let nb = adj[v];
            match nb.count_ones() {
                0 | 1 => {}
                2 => {
                    let a = nb.trailing_zeros() as usize;
                    let b = 63 - nb.leading_zeros() as usize;
                    adj[a] |= bits::bit(b);
                    adj[b] |= bits::bit(a);
                }
                _ => continue,
            }
            for u in bits::members(nb) {
                adj[u] &= !bits::bit(v);
            }
            adj[v] = 0;
            alive &= !bits::bit(v);
            progressed = true;
        }
        if alive == 0 {
            return true;
        }
        if !progressed {
            return false;
        }
    }
}

/// An induced cycle of a 2-connected series-parallel graph with at most two
/// vertices of degree greater than two; the shortest such cycle, ties broken
/// lexicographically.
pub fn sp_induced_cycle_two_high(g: &Graph) -> Result<Vec<usize>> {
    if g.order() < 3 || !g.is_biconnected() || !is_series_parallel(g) {
        return Err(Error::PreconditionViolated(
            "expected a 2-connected series-parallel graph on at least 3 vertices".into(),
        ));
    }
    let mut cycles = g.induced_cycles(3);
    cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    cycles
        .into_iter()
        .find(|c| c.iter().filter(|&&v| g.degree(v) > 2).count() <= 2)
        .ok_or_else(|| Error::internal("no induced cycle with at most two high-degree vertices"))
}

/// Recognition flags and parameters of one digraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub order: usize,
    pub arcs: usize,
    pub tournament: bool,
    pub semicomplete: bool,
    pub complete: bool,
    pub symmetric: bool,
    pub in_semicomplete: bool,
    pub strong: bool,
    pub lonely_arcs: usize,
    pub alpha: usize,
    pub series_parallel: bool,
    pub perfect: bool,
    pub anti_directed_free: bool,
    pub blocking_free: bool,
    pub transitive_triangle: Option<Witness>,
    pub anti_directed_odd_cycle: Option<Witness>,
    pub blocking_odd_cycle: Option<Witness>,
    pub odd_hole: Option<Witness>,
}

pub fn classify(d: &Digraph) -> Result<ClassReport> {
    let g = d.underlying_graph();
    let perfect = oracles::is_perfect(&g)?;
    let anti = find_induced_anti_directed_odd_cycle(d)?;
    let blocking = find_induced_blocking_odd_cycle(d)?;
    Ok(ClassReport {
        order: d.order(),
        arcs: d.arc_count(),
        tournament: d.is_tournament(),
        semicomplete: d.is_semicomplete(),
        complete: d.is_complete(),
        symmetric: d.is_symmetric(),
        in_semicomplete: d.is_in_semicomplete(),
        strong: d.is_strong(),
        lonely_arcs: lonely_arcs(d).len(),
        alpha: oracles::stability_number_graph(&g)?,
        series_parallel: is_series_parallel(&g),
        perfect: perfect.perfect,
        anti_directed_free: anti.is_none(),
        blocking_free: blocking.is_none(),
        transitive_triangle: find_induced_transitive_triangle(d),
        anti_directed_odd_cycle: anti,
        blocking_odd_cycle: blocking,
        odd_hole: perfect.witness.map(|w| {
            Witness::new(
                WitnessKind::OddHole,
                w,
                if perfect.antihole { vec![1] } else { vec![] },
            )
        }),
    })
}
