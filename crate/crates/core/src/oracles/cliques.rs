use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`min_clique_partition`].
pub const CLIQUE_CAP: usize = 16;
/// Largest order accepted by [`is_perfect`].
pub const PERFECT_CAP: usize = 14;

/// A partition of the vertex set into the fewest cliques.
///
/// Each clique is sorted and the cliques are ordered by smallest vertex.
pub fn min_clique_partition(g: &Graph) -> Result<Vec<Vec<usize>>> {
    Error::check_cap("min_clique_partition", g.order(), CLIQUE_CAP)?;
    let size = 1usize << g.order();
    let mut memo = CoverMemo {
        g,
        best: vec![u8::MAX; size],
        choice: vec![0; size],
    };
    memo.best[0] = 0;
    let mut rest = g.vertex_mask();
    memo.solve(rest);
    let mut out = Vec::new();
    while rest != 0 {
        let c = memo.choice[rest as usize];
        out.push(bits::to_vec(c));
        rest &= !c;
    }
    Ok(out)
}

struct CoverMemo<'a> {
    g: &'a Graph,
    best: Vec<u8>,
    choice: Vec<Mask>,
}

impl CoverMemo<'_> {
    fn solve(&mut self, mask: Mask) -> u8 {
        if self.best[mask as usize] != u8::MAX {
            return self.best[mask as usize];
        }
        let v = mask.trailing_zeros() as usize;
        let mut cliques = Vec::new();
        // Some optimal cover uses a clique through `v` that is maximal inside `mask`.
        maximal_cliques(
            self.g,
            bits::bit(v),
            self.g.adj_mask(v) & mask,
            0,
            &mut cliques,
        );
        let mut best = u8::MAX;
        let mut choice = 0;
        for c in cliques {
            let cost = 1 + self.solve(mask & !c);
            if cost < best {
                best = cost;
                choice = c;
            }
        }
        self.best[mask as usize] = best;
        self.choice[mask as usize] = choice;
        best
    }
}

/// Bron–Kerbosch without pivoting; emits cliques in increasing-vertex order.
fn maximal_cliques(g: &Graph, r: Mask, p: Mask, x: Mask, out: &mut Vec<Mask>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let mut p = p;
    let mut x = x;
    for v in bits::members(p) {
        let nv = g.adj_mask(v);
        maximal_cliques(g, r | bits::bit(v), p & nv, x & nv, out);
        p &= !bits::bit(v);
        x |= bits::bit(v);
    }
}

/// Outcome of a perfection test, with an odd hole or antihole when imperfect.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectCheck {
    pub perfect: bool,
    /// Vertices of an induced odd cycle of length at least 5, in cycle order.
    pub witness: Option<Vec<usize>>,
    /// The witness is a cycle of the complement.
    pub antihole: bool,
}

/// Decides perfection by searching for odd holes in the graph and its complement.
pub fn is_perfect(g: &Graph) -> Result<PerfectCheck> {
    Error::check_cap("is_perfect", g.order(), PERFECT_CAP)?;
    for (antihole, h) in [(false, g.clone()), (true, g.complement())] {
        if let Some(hole) = odd_hole(&h) {
            return Ok(PerfectCheck {
                perfect: false,
                witness: Some(hole),
                antihole,
            });
        }
    }
    Ok(PerfectCheck {
        perfect: true,
        witness: None,
        antihole: false,
    })
}

pub(crate) fn odd_hole(g: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    let _ = g.for_each_induced_cycle(5, |c| {
        if c.len() % 2 == 1 {
            found = Some(c.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}
