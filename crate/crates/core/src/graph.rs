use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::digraph::MAX_ORDER;
use crate::error::{Error, Result};

/// A finite simple undirected graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(into = "EdgeList", try_from = "EdgeList")]
pub struct Graph {
    n: usize,
    adj: Vec<Mask>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<Graph> for EdgeList {
    fn from(g: Graph) -> Self {
        EdgeList {
            n: g.n,
            edges: g.edges(),
        }
    }
}

impl TryFrom<EdgeList> for Graph {
    type Error = Error;

    fn try_from(list: EdgeList) -> Result<Self> {
        Graph::from_edges(list.n, list.edges)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        Error::check_cap("graph", n, MAX_ORDER)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::LoopArc(u));
            }
            g.adj[u] |= bits::bit(v);
            g.adj[v] |= bits::bit(u);
        }
        Ok(g)
    }

    pub(crate) fn from_masks(adj: Vec<Mask>) -> Self {
        Graph { n: adj.len(), adj }
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = bits::full(n) & !bits::bit(v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::PreconditionViolated(format!(
                "a cycle needs 3 vertices, got {n}"
            )));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bits::contains(self.adj[u], v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits::members(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        bits::to_vec(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub(crate) fn adj_mask(&self, v: usize) -> Mask {
        self.adj[v]
    }

    pub(crate) fn vertex_mask(&self) -> Mask {
        bits::full(self.n)
    }

    /// Subgraph induced by `vertices`, relabeled `0..k` in ascending order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        Ok(self.induced_mask(bits::from_slice(vertices)))
    }

    pub(crate) fn induced_mask(&self, keep: Mask) -> Graph {
        let labels = bits::to_vec(keep);
        let mut local = [0usize; MAX_ORDER];
        for (i, &v) in labels.iter().enumerate() {
            local[v] = i;
        }
        let adj = labels
            .iter()
            .map(|&u| bits::members(self.adj[u] & keep).fold(0, |m, v| m | bits::bit(local[v])))
            .collect();
        Graph::from_masks(adj)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph::from_masks(
            (0..self.n)
                .map(|v| all & !self.adj[v] & !bits::bit(v))
                .collect(),
        )
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        let m = bits::from_slice(vertices);
        vertices
            .iter()
            .all(|&v| v < self.n && m & !bits::bit(v) & !self.adj[v] == 0)
    }

    pub fn is_stable(&self, vertices: &[usize]) -> bool {
        let m = bits::from_slice(vertices);
        vertices.iter().all(|&v| v < self.n && self.adj[v] & m == 0)
    }

    pub(crate) fn is_stable_mask(&self, m: Mask) -> bool {
        bits::members(m).all(|v| self.adj[v] & m == 0)
    }

    /// Vertices connected to `v` inside `within`.
    pub(crate) fn component_mask(&self, v: usize, within: Mask) -> Mask {
        let mut seen = bits::bit(v) & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits::members(frontier) {
                next |= self.adj[u];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub(crate) fn components_within(&self, within: Mask) -> Vec<Mask> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = bits::lowest(rest) {
            let c = self.component_mask(v, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// Connected components ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(self.vertex_mask())
            .into_iter()
            .map(bits::to_vec)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_mask(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Vertices whose removal increases the number of components, ascending.
    pub fn articulation_points(&self) -> Vec<usize> {
        let all = self.vertex_mask();
        let base = self.components_within(all).len();
        (0..self.n)
            .filter(|&v| self.components_within(all & !bits::bit(v)).len() > base)
            .collect()
    }

    /// Connected, at least 3 vertices and no articulation point.
    pub fn is_biconnected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.articulation_points().is_empty()
    }

    /// Every vertex has degree 2 and the graph is connected.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.is_connected() && (0..self.n).all(|v| self.degree(v) == 2)
    }

    /// Visits every chordless cycle of length at least `min_len` once.
    ///
    /// Each cycle is reported as `c[0] c[1] … c[m-1]` with `c[0]` its smallest
    /// vertex and `c[1] < c[m-1]`. Cycles are produced in depth-first order
    /// over lexicographically increasing prefixes.
    pub(crate) fn for_each_induced_cycle<F>(&self, min_len: usize, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let mut path = Vec::with_capacity(self.n);
        for s in 0..self.n {
            path.clear();
            path.push(s);
            let allowed = self.vertex_mask() & !bits::full(s + 1);
            for p1 in bits::members(self.adj[s] & allowed) {
                path.push(p1);
                self.extend_cycle(&mut path, allowed & !bits::bit(p1), 0, min_len, &mut visit)?;
                path.pop();
            }
        }
        ControlFlow::Continue(())
    }

    /// `blocked` is the union of the neighbourhoods of `path[1..len-1]`.
    fn extend_cycle<F>(
        &self,
        path: &mut Vec<usize>,
        allowed: Mask,
        blocked: Mask,
        min_len: usize,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let s = path[0];
        let last = *path.last().expect("path is non-empty");
        for w in bits::members(self.adj[last] & allowed & !blocked) {
            if bits::contains(self.adj[w], s) {
                if path[1] < w && path.len() + 1 >= min_len {
                    path.push(w);
                    let flow = visit(path);
                    path.pop();
                    flow?;
                }
            } else {
                path.push(w);
                self.extend_cycle(
                    path,
                    allowed & !bits::bit(w),
                    blocked | self.adj[last],
                    min_len,
                    visit,
                )?;
                path.pop();
            }
        }
        ControlFlow::Continue(())
    }

    /// All chordless cycles of length at least `min_len`, in enumeration order.
    pub fn induced_cycles(&self, min_len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let _ = self.for_each_induced_cycle(min_len, |c| {
            out.push(c.to_vec());
            ControlFlow::Continue(())
        });
        out
    }
}
