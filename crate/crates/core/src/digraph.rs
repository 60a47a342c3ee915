use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order a [`Digraph`] can have; vertex sets are stored as `u64` masks.
pub const MAX_ORDER: usize = 64;

/// Largest order accepted by [`Digraph::canonical_form`].
pub const CANONICAL_FORM_CAP: usize = 10;

/// A finite simple digraph on the vertices `0..n`.
///
/// Loops and parallel arcs are excluded; digons (a pair of opposite arcs) are
/// allowed. The value is immutable once built.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "ArcList", try_from = "ArcList")]
pub struct Digraph {
    n: usize,
    out: Vec<Mask>,
    inn: Vec<Mask>,
}

/// Wire shape of a digraph: its order and its sorted arc list.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArcList {
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
}

impl From<Digraph> for ArcList {
    fn from(d: Digraph) -> Self {
        ArcList {
            n: d.n,
            arcs: d.arcs().collect(),
        }
    }
}

impl TryFrom<ArcList> for Digraph {
    type Error = Error;

    fn try_from(list: ArcList) -> Result<Self> {
        Digraph::from_arcs(list.n, list.arcs)
    }
}

/// An induced subdigraph together with the map from its labels back to the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub digraph: Digraph,
    /// `labels[i]` is the host vertex relabeled to `i`. Sorted ascending.
    pub labels: Vec<usize>,
}

impl Induced {
    /// Translates a vertex of the subdigraph back to the host.
    pub fn host(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Translates a host vertex into the subdigraph, if it was kept.
    pub fn local(&self, v: usize) -> Option<usize> {
        self.labels.binary_search(&v).ok()
    }
}

/// Strong components of a digraph and their acyclic condensation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongDecomposition {
    /// Components ordered by their smallest vertex; each is sorted.
    pub components: Vec<Vec<usize>>,
    /// Arc `i -> j` iff some arc leaves component `i` for component `j`.
    pub condensation: Digraph,
    /// `minimal[i]` iff no arc enters component `i`.
    pub minimal: Vec<bool>,
    /// `component_of[v]` is the index of the component containing `v`.
    pub component_of: Vec<usize>,
}

impl StrongDecomposition {
    /// Components with no leaving arc (sinks of the condensation).
    pub fn sink_components(&self) -> Vec<usize> {
        (0..self.components.len())
            .filter(|&i| self.condensation.out_mask(i) == 0)
            .collect()
    }
}

impl Digraph {
    /// The digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Result<Self> {
        Error::check_cap("digraph", n, MAX_ORDER)?;
        Ok(Digraph {
            n,
            out: vec![0; n],
            inn: vec![0; n],
        })
    }

    /// Builds a digraph from its arcs. Repeated arcs collapse to one.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::empty(n)?;
        for (u, v) in arcs {
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
            d.out[u] |= bits::bit(v);
            d.inn[v] |= bits::bit(u);
        }
        Ok(d)
    }

    pub(crate) fn from_out_masks(out: Vec<Mask>) -> Self {
        let n = out.len();
        let mut inn = vec![0; n];
        for (u, &m) in out.iter().enumerate() {
            for v in bits::members(m) {
                inn[v] |= bits::bit(u);
            }
        }
        Digraph { n, out, inn }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bits::contains(self.out[u], v)
    }

    /// `u` and `v` are joined by at least one arc.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn is_digon(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    /// Arc `uv` is present and `vu` is not.
    pub fn is_lonely(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && !self.has_arc(v, u)
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits::members(self.out[u]).map(move |v| (u, v)))
    }

    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        bits::to_vec(self.out[v])
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        bits::to_vec(self.inn[v])
    }

    pub(crate) fn out_mask(&self, v: usize) -> Mask {
        self.out[v]
    }

    pub(crate) fn in_mask(&self, v: usize) -> Mask {
        self.inn[v]
    }

    pub(crate) fn nbr_mask(&self, v: usize) -> Mask {
        self.out[v] | self.inn[v]
    }

    pub(crate) fn vertex_mask(&self) -> Mask {
        bits::full(self.n)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.inn[v] == 0
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out[v] == 0
    }

    /// The digraph with every arc reversed.
    pub fn inverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    pub(crate) fn check_vertices(&self, vs: &[usize]) -> Result<()> {
        match vs.iter().find(|&&v| v >= self.n) {
            Some(&v) => Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            }),
            None => Ok(()),
        }
    }

    /// The subdigraph induced by `vertices`, relabeled `0..k` in ascending host order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Induced> {
        self.check_vertices(vertices)?;
        Ok(self.induced_mask(bits::from_slice(vertices)))
    }

    pub(crate) fn induced_mask(&self, keep: Mask) -> Induced {
        let labels = bits::to_vec(keep);
        let mut local = [usize::MAX; MAX_ORDER];
        for (i, &v) in labels.iter().enumerate() {
            local[v] = i;
        }
        let out = labels
            .iter()
            .map(|&u| bits::members(self.out[u] & keep).fold(0, |m, v| m | bits::bit(local[v])))
            .collect();
        Induced {
            digraph: Digraph::from_out_masks(out),
            labels,
        }
    }

    /// `D - X`.
    pub fn remove_vertices(&self, vertices: &[usize]) -> Result<Induced> {
        self.check_vertices(vertices)?;
        Ok(self.induced_mask(self.vertex_mask() & !bits::from_slice(vertices)))
    }

    /// `D - F` for a set of arcs `F`; arcs absent from `D` are ignored.
    pub fn without_arcs(&self, arcs: &[(usize, usize)]) -> Digraph {
        let mut out = self.out.clone();
        for &(u, v) in arcs {
            if u < self.n && v < self.n {
                out[u] &= !bits::bit(v);
            }
        }
        Digraph::from_out_masks(out)
    }

    pub fn with_arcs(&self, arcs: &[(usize, usize)]) -> Result<Digraph> {
        Digraph::from_arcs(self.n, self.arcs().chain(arcs.iter().copied()))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Digraph> {
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || bits::contains(seen, p) {
                return Err(Error::PreconditionViolated(format!(
                    "{perm:?} is not a permutation of 0..{}",
                    self.n
                )));
            }
            seen |= bits::bit(p);
        }
        if perm.len() != self.n {
            return Err(Error::PreconditionViolated(format!(
                "{perm:?} is not a permutation of 0..{}",
                self.n
            )));
        }
        Digraph::from_arcs(self.n, self.arcs().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn underlying_graph(&self) -> Graph {
        Graph::from_masks((0..self.n).map(|v| self.nbr_mask(v)).collect())
    }

    /// Vertices reachable from `v` by a directed path (including `v`).
    pub(crate) fn reach_mask(&self, v: usize, within: Mask) -> Mask {
        let mut seen = bits::bit(v) & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits::members(frontier) {
                next |= self.out[u];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn strong_decomposition(&self) -> StrongDecomposition {
        let all = self.vertex_mask();
        let reach: Vec<Mask> = (0..self.n).map(|v| self.reach_mask(v, all)).collect();
        let mut component_of = vec![usize::MAX; self.n];
        let mut components = Vec::new();
        for v in 0..self.n {
            if component_of[v] != usize::MAX {
                continue;
            }
            let comp: Vec<usize> = bits::members(reach[v])
                .filter(|&u| bits::contains(reach[u], v))
                .collect();
            for &u in &comp {
                component_of[u] = components.len();
            }
            components.push(comp);
        }
        let arcs: Vec<(usize, usize)> = self
            .arcs()
            .map(|(u, v)| (component_of[u], component_of[v]))
            .filter(|(a, b)| a != b)
            .collect();
        let condensation =
            Digraph::from_arcs(components.len(), arcs).expect("condensation is simple");
        let minimal = (0..components.len())
            .map(|i| condensation.in_mask(i) == 0)
            .collect();
        StrongDecomposition {
            components,
            condensation,
            minimal,
            component_of,
        }
    }

    pub fn is_strong(&self) -> bool {
        self.n == 0
            || self.reach_mask(0, self.vertex_mask()) == self.vertex_mask() && {
                let inv = self.inverse();
                inv.reach_mask(0, inv.vertex_mask()) == inv.vertex_mask()
            }
    }

    /// Every pair of distinct vertices is adjacent.
    pub fn is_semicomplete(&self) -> bool {
        (0..self.n).all(|v| self.nbr_mask(v) | bits::bit(v) == self.vertex_mask())
    }

    /// Semicomplete with no digon.
    pub fn is_tournament(&self) -> bool {
        self.is_semicomplete() && (0..self.n).all(|v| self.out[v] & self.inn[v] == 0)
    }

    /// Every pair of distinct vertices forms a digon.
    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.out[v] & self.inn[v] | bits::bit(v) == self.vertex_mask())
    }

    /// Every adjacent pair forms a digon.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|v| self.out[v] == self.inn[v])
    }

    /// The in-neighbourhood of every vertex induces a semicomplete digraph.
    pub fn is_in_semicomplete(&self) -> bool {
        (0..self.n).all(|v| {
            let ins = self.inn[v];
            bits::members(ins).all(|u| ins & !bits::bit(u) & !self.nbr_mask(u) == 0)
        })
    }

    /// Adjacent to every other vertex.
    pub fn is_universal(&self, v: usize) -> bool {
        v < self.n && self.nbr_mask(v) | bits::bit(v) == self.vertex_mask()
    }

    /// Minimal adjacency-matrix encoding over all vertex relabelings.
    ///
    /// Byte 0 is the order; the remaining bytes pack, most significant bit
    /// first, the entries `a[j][k], a[k][j]` for `k = 1..n`, `j = 0..k`. Two
    /// digraphs get equal encodings iff they are isomorphic.
    pub fn canonical_form(&self) -> Result<Vec<u8>> {
        Error::check_cap("canonical_form", self.n, CANONICAL_FORM_CAP)?;
        let n = self.n;
        let twins = self.twin_masks();
        let mut search = CanonSearch {
            d: self,
            twins: &twins,
            perm: Vec::with_capacity(n),
            bits: Vec::with_capacity(n * n),
            best: None,
        };
        search.run(0);
        let best = search.best.unwrap_or_default();
        let mut out = vec![n as u8];
        for chunk in best.chunks(8) {
            let byte = chunk
                .iter()
                .enumerate()
                .fold(0u8, |acc, (i, &b)| acc | (b << (7 - i)));
            out.push(byte);
        }
        Ok(out)
    }

    /// `twins[u]` holds every `w` such that swapping `u` and `w` is an automorphism.
    fn twin_masks(&self) -> Vec<Mask> {
        let mut twins = vec![0; self.n];
        for u in 0..self.n {
            for w in u + 1..self.n {
                let pair = bits::bit(u) | bits::bit(w);
                let same = self.out[u] & !pair == self.out[w] & !pair
                    && self.inn[u] & !pair == self.inn[w] & !pair
                    && self.has_arc(u, w) == self.has_arc(w, u);
                if same {
                    twins[u] |= bits::bit(w);
                    twins[w] |= bits::bit(u);
                }
            }
        }
        twins
    }
}

struct CanonSearch<'a> {
    d: &'a Digraph,
    twins: &'a [Mask],
    perm: Vec<usize>,
    bits: Vec<u8>,
    best: Option<Vec<u8>>,
}

impl CanonSearch<'_> {
    fn run(&mut self, used: Mask) {
        let k = self.perm.len();
        if k == self.d.n {
            if self.best.as_ref().is_none_or(|b| self.bits < *b) {
                self.best = Some(self.bits.clone());
            }
            return;
        }
        let mut tried: Mask = 0;
        for w in bits::members(self.d.vertex_mask() & !used) {
            if self.twins[w] & tried != 0 {
                continue;
            }
            tried |= bits::bit(w);
            let start = self.bits.len();
            for j in 0..k {
                let p = self.perm[j];
                self.bits.push(self.d.has_arc(p, w) as u8);
                self.bits.push(self.d.has_arc(w, p) as u8);
            }
            let prune = self
                .best
                .as_ref()
                .is_some_and(|b| self.bits[..] > b[..self.bits.len()]);
            if !prune {
                self.perm.push(w);
                self.run(used | bits::bit(w));
                self.perm.pop();
            }
            self.bits.truncate(start);
        }
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph({}; ", self.n)?;
        f.debug_list().entries(self.arcs()).finish()?;
        write!(f, ")")
    }
}
