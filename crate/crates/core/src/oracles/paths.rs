use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::path::{Mode, Path, PathPartition};

/// Largest order accepted by the path oracles.
pub const PATH_CAP: usize = 12;

/// Hamilton-path table over every vertex subset of a digraph.
///
/// `ends(mask, v)` is the set of vertices `w` such that `D[mask]` has a
/// Hamilton path from `v` to `w`.
pub(crate) struct HamTable<'a> {
    d: &'a Digraph,
    n: usize,
    pe: Vec<u16>,
    starts: Vec<u16>,
    finishes: Vec<u16>,
}

impl<'a> HamTable<'a> {
    pub(crate) fn new(d: &'a Digraph) -> Result<Self> {
        let n = d.order();
        Error::check_cap("hamilton table", n, PATH_CAP)?;
        let size = 1usize << n;
        let mut pe = vec![0u16; size * n];
        let mut starts = vec![0u16; size];
        let mut finishes = vec![0u16; size];
        for mask in 1..size {
            let m = mask as Mask;
            let mut st = 0u16;
            let mut fin = 0u16;
            for v in bits::members(m) {
                let rest = m & !bits::bit(v);
                let acc = if rest == 0 {
                    1u16 << v
                } else {
                    bits::members(d.out_mask(v) & rest)
                        .fold(0u16, |acc, w| acc | pe[rest as usize * n + w])
                };
                pe[mask * n + v] = acc;
                if acc != 0 {
                    st |= 1 << v;
                    fin |= acc;
                }
            }
            starts[mask] = st;
            finishes[mask] = fin;
        }
        Ok(HamTable {
            d,
            n,
            pe,
            starts,
            finishes,
        })
    }

    pub(crate) fn ends(&self, mask: Mask, v: usize) -> Mask {
        if mask == 0 {
            return 0;
        }
        self.pe[mask as usize * self.n + v] as Mask
    }

    /// Vertices that start some Hamilton path of `D[mask]`.
    pub(crate) fn starts(&self, mask: Mask) -> Mask {
        self.starts[mask as usize] as Mask
    }

    /// Vertices that end some Hamilton path of `D[mask]`.
    pub(crate) fn finishes(&self, mask: Mask) -> Mask {
        self.finishes[mask as usize] as Mask
    }

    pub(crate) fn has_path(&self, mask: Mask) -> bool {
        mask == 0 || self.starts[mask as usize] != 0
    }

    /// Lexicographically smallest Hamilton path of `D[mask]` whose first
    /// vertex lies in `first` and whose last vertex lies in `last`.
    pub(crate) fn lex_path(&self, mask: Mask, first: Mask, last: Mask) -> Option<Vec<usize>> {
        let start = bits::members(mask & first).find(|&v| self.ends(mask, v) & last != 0)?;
        let mut path = vec![start];
        let mut rest = mask & !bits::bit(start);
        let mut cur = start;
        while rest != 0 {
            let next = bits::members(self.d.out_mask(cur) & rest)
                .find(|&w| self.ends(rest, w) & last != 0)
                .expect("table guarantees a continuation");
            path.push(next);
            rest &= !bits::bit(next);
            cur = next;
        }
        Some(path)
    }
}

/// Endpoint requirement for [`hamilton_search`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HamiltonConstraint {
    None,
    Start(usize),
    End(usize),
    /// The two ends are the given vertices, in either order.
    Ends(usize, usize),
    /// A Hamilton cycle, reported as a path starting at vertex 0 whose last
    /// vertex has an arc back to 0.
    Cycle,
}

/// The lexicographically smallest Hamilton path satisfying `constraint`.
pub fn hamilton_search(d: &Digraph, constraint: HamiltonConstraint) -> Result<Option<Path>> {
    let table = HamTable::new(d)?;
    let all = d.vertex_mask();
    let check = |v: usize| d.check_vertices(&[v]);
    let found = match constraint {
        HamiltonConstraint::None => {
            if d.order() == 0 {
                Some(Vec::new())
            } else {
                table.lex_path(all, all, all)
            }
        }
        HamiltonConstraint::Start(v) => {
            check(v)?;
            table.lex_path(all, bits::bit(v), all)
        }
        HamiltonConstraint::End(v) => {
            check(v)?;
            table.lex_path(all, all, bits::bit(v))
        }
        HamiltonConstraint::Ends(s, t) => {
            check(s)?;
            check(t)?;
            if s == t {
                (d.order() == 1).then(|| vec![s])
            } else {
                let a = table.lex_path(all, bits::bit(s), bits::bit(t));
                let b = table.lex_path(all, bits::bit(t), bits::bit(s));
                match (a, b) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                }
            }
        }
        HamiltonConstraint::Cycle => {
            if d.order() < 2 {
                None
            } else {
                table.lex_path(all, bits::bit(0), d.in_mask(0))
            }
        }
    };
    Ok(found.map(Path))
}

/// π(D), the minimum number of paths in a path partition.
pub fn path_partition_number(d: &Digraph) -> Result<usize> {
    let table = HamTable::new(d)?;
    Ok(cover_table(&table, d.order())[d.vertex_mask() as usize] as usize)
}

/// `pp[mask]` is the minimum number of paths partitioning `mask`.
fn cover_table(table: &HamTable<'_>, n: usize) -> Vec<u8> {
    let size = 1usize << n;
    let mut pp = vec![0u8; size];
    for mask in 1..size {
        let m = mask as Mask;
        let lo = bits::bit(m.trailing_zeros() as usize);
        let rest = m & !lo;
        let mut best = u8::MAX;
        // Submasks of `rest` joined with the lowest vertex.
        let mut sub = rest;
        loop {
            let t = sub | lo;
            if table.has_path(t) {
                best = best.min(1 + pp[(m & !t) as usize]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        pp[mask] = best;
    }
    pp
}

/// A minimum path partition; among those, the one whose sorted path list is
/// lexicographically smallest.
pub fn min_path_partition(d: &Digraph) -> Result<PathPartition> {
    let table = HamTable::new(d)?;
    let pp = cover_table(&table, d.order());
    let mut rest = d.vertex_mask();
    let mut paths = Vec::new();
    while rest != 0 {
        let target = pp[rest as usize] - 1;
        let path = first_path(&table, &pp, rest, target);
        for &v in &path {
            rest &= !bits::bit(v);
        }
        paths.push(Path(path));
    }
    Ok(PathPartition::plain(paths))
}

/// Smallest path `P` inside `rest` with `pp[rest - V(P)] == target`.
fn first_path(table: &HamTable<'_>, pp: &[u8], rest: Mask, target: u8) -> Vec<usize> {
    // Some path from `last` through a subset of `rest - used` leaves a
    // remainder covered by `target` paths.
    let extendable = |used: Mask, last: usize| {
        let free = rest & !used;
        let mut sub = free;
        loop {
            if pp[(free & !sub) as usize] == target && table.ends(sub | bits::bit(last), last) != 0
            {
                return true;
            }
            if sub == 0 {
                return false;
            }
            sub = (sub - 1) & free;
        }
    };
    let start = bits::members(rest)
        .find(|&s| extendable(bits::bit(s), s))
        .expect("an optimal partition exists");
    let mut path = vec![start];
    let mut used = bits::bit(start);
    while pp[(rest & !used) as usize] != target {
        let last = *path.last().expect("non-empty");
        let next = bits::members(table.d.out_mask(last) & rest & !used)
            .find(|&w| extendable(used | bits::bit(w), w))
            .expect("extendable prefix has an extendable continuation");
        path.push(next);
        used |= bits::bit(next);
    }
    path
}

/// An S-path partition (or S_BE-path partition) of `d`, if one exists.
///
/// The search assigns to each vertex of `S`, in increasing order, the set of
/// non-`S` vertices on its path, and memoizes failed states; it is complete.
pub fn exists_s_path_partition(
    d: &Digraph,
    s: &[usize],
    mode: Mode,
) -> Result<Option<PathPartition>> {
    d.check_vertices(s)?;
    let s_mask = bits::from_slice(s);
    if s_mask.count_ones() as usize != s.len() || !d.underlying_graph().is_stable_mask(s_mask) {
        return Err(Error::NotStable(s.to_vec()));
    }
    let table = HamTable::new(d)?;
    let search = SSearch::new(&table, s_mask, mode);
    Ok(search
        .run()
        .map(|paths| PathPartition::certified(paths, mode, s)))
}

pub(crate) struct SSearch<'t, 'd> {
    table: &'t HamTable<'d>,
    order: Vec<usize>,
    mode: Mode,
    others: Mask,
    failed: Vec<Vec<bool>>,
}

impl<'t, 'd> SSearch<'t, 'd> {
    pub(crate) fn new(table: &'t HamTable<'d>, s_mask: Mask, mode: Mode) -> Self {
        let order = bits::to_vec(s_mask);
        let size = 1usize << table.n;
        SSearch {
            table,
            failed: vec![Vec::new(); order.len()],
            order,
            mode,
            others: table.d.vertex_mask() & !s_mask,
        }
        .with_memo(size)
    }

    fn with_memo(mut self, size: usize) -> Self {
        for f in &mut self.failed {
            *f = vec![false; size];
        }
        self
    }

    fn feasible(&self, x: usize, w: Mask) -> bool {
        let t = w | bits::bit(x);
        match self.mode {
            Mode::Alpha => self.table.has_path(t),
            Mode::Be => bits::contains(self.table.starts(t) | self.table.finishes(t), x),
        }
    }

    fn solve(&mut self, i: usize, rem: Mask) -> bool {
        let x = self.order[i];
        if i + 1 == self.order.len() {
            return self.feasible(x, rem);
        }
        if self.failed[i][rem as usize] {
            return false;
        }
        let mut sub: Mask = 0;
        loop {
            if self.feasible(x, sub) && self.solve(i + 1, rem & !sub) {
                return true;
            }
            if sub == rem {
                break;
            }
            sub = sub.wrapping_sub(rem) & rem;
        }
        self.failed[i][rem as usize] = true;
        false
    }

    pub(crate) fn run(mut self) -> Option<Vec<Path>> {
        if self.order.is_empty() {
            return (self.others == 0).then(Vec::new);
        }
        if !self.solve(0, self.others) {
            return None;
        }
        let mut paths = Vec::with_capacity(self.order.len());
        let mut rem = self.others;
        for i in 0..self.order.len() {
            let x = self.order[i];
            let w = if i + 1 == self.order.len() {
                rem
            } else {
                let mut sub: Mask = 0;
                loop {
                    if self.feasible(x, sub) && self.solve(i + 1, rem & !sub) {
                        break sub;
                    }
                    sub = sub.wrapping_sub(rem) & rem;
                }
            };
            rem &= !w;
            paths.push(Path(self.path_through(x, w)));
        }
        Some(paths)
    }

    fn path_through(&self, x: usize, w: Mask) -> Vec<usize> {
        let t = w | bits::bit(x);
        let all = t;
        let x_bit = bits::bit(x);
        match self.mode {
            Mode::Alpha => self.table.lex_path(t, all, all),
            Mode::Be => self
                .table
                .lex_path(t, x_bit, all)
                .or_else(|| self.table.lex_path(t, all, x_bit)),
        }
        .expect("feasibility was checked")
    }
}
