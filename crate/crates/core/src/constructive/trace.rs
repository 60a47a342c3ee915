use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::path::{Mode, Path, PathPartition};

/// Named proof steps a builder can apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    /// At most two vertices, handled directly.
    Base,
    /// Hamilton path of a semicomplete digraph by insertion.
    Redei,
    /// Hamilton path of a transitive-triangle-free semicomplete digraph with a prescribed end.
    SemicompleteEndpoint,
    /// One path per clique of a minimum clique partition.
    PerfectCliques,
    /// Split off a connected component.
    Component,
    /// Split along a clique cut.
    CliqueCut,
    /// Split along an induced cycle with at most two high-degree vertices.
    CycleSplit,
    /// Odd cycle: one 3-vertex path plus arcs.
    OddCycle,
    /// Insert a universal vertex into a path.
    UniversalVertex,
    /// Cut a Hamilton cycle at the stable vertices.
    HamiltonSegments,
    /// Minimum path partition after deleting the arcs entering the stable set.
    BergeLeaving,
    /// Minimum path partition after deleting the arcs leaving the stable set.
    BergeEntering,
    /// Reverse lonely arcs entering the stable set, then reverse affected paths.
    LonelyReversal,
    /// Stable vertex whose only neighbour is the tail of a lonely arc.
    PendantLonely,
    /// Remove a digon at the head of the entering lonely arc.
    DigonDeletion,
    /// Exchange stable vertices along a perfect matching and reattach them.
    MatchingExchange,
    /// Exhaustive search.
    Oracle,
}

/// One recorded step; all vertices are in the labels of the input digraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum TraceStep {
    /// New paths join the partition.
    Paths { lemma: Lemma, paths: Vec<Path> },
    /// A path of the partition is replaced by a longer or reversed one.
    Replace { lemma: Lemma, old: Path, new: Path },
    /// The vertex set is split into two parts handled separately.
    Split {
        lemma: Lemma,
        cut: Vec<usize>,
        parts: [Vec<usize>; 2],
    },
    /// A universal vertex is removed before recursing.
    Universal { vertex: usize },
    /// The digon `{a, b}` is deleted; `alpha_kept` tells whether the stability number survived.
    DigonDeleted {
        a: usize,
        b: usize,
        alpha_kept: bool,
    },
    /// Perfect matching between the dropped and the new stable vertices.
    Matching {
        r: Vec<usize>,
        z: Vec<usize>,
        pairs: Vec<(usize, usize)>,
    },
    /// Lonely arcs entering and leaving the stable set.
    LonelyArcs {
        entering: Vec<(usize, usize)>,
        leaving: Vec<(usize, usize)>,
    },
    /// A builder was chosen by the dispatcher.
    Dispatch { builder: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildTrace {
    pub steps: Vec<TraceStep>,
}

impl BuildTrace {
    /// Applies the `Paths` and `Replace` steps in order and returns the resulting paths.
    pub fn replay(&self) -> Result<Vec<Path>> {
        let mut paths: Vec<Path> = Vec::new();
        for step in &self.steps {
            match step {
                TraceStep::Paths { paths: new, .. } => paths.extend(new.iter().cloned()),
                TraceStep::Replace { old, new, .. } => {
                    let slot = paths.iter_mut().find(|p| *p == old).ok_or_else(|| {
                        Error::internal(format!("trace replaces unknown path {old}"))
                    })?;
                    *slot = new.clone();
                }
                _ => {}
            }
        }
        Ok(paths)
    }
}

/// A certified partition together with the steps that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Built {
    pub partition: PathPartition,
    pub trace: BuildTrace,
}

/// Trace recorder threaded through the recursions; translates local labels
/// to the labels of the top-level digraph.
pub(crate) struct Tracer {
    pub(crate) steps: Vec<TraceStep>,
}

impl Tracer {
    pub(crate) fn new() -> Self {
        Tracer { steps: Vec::new() }
    }

    pub(crate) fn push(&mut self, step: TraceStep) {
        self.steps.push(step);
    }

    pub(crate) fn paths(&mut self, lemma: Lemma, labels: &[usize], paths: &[Path]) {
        self.push(TraceStep::Paths {
            lemma,
            paths: paths.iter().map(|p| relabel(p, labels)).collect(),
        });
    }

    pub(crate) fn replace(&mut self, lemma: Lemma, labels: &[usize], old: &Path, new: &Path) {
        self.push(TraceStep::Replace {
            lemma,
            old: relabel(old, labels),
            new: relabel(new, labels),
        });
    }

    pub(crate) fn split(
        &mut self,
        lemma: Lemma,
        labels: &[usize],
        cut: &[usize],
        a: &[usize],
        b: &[usize],
    ) {
        let map = |vs: &[usize]| vs.iter().map(|&v| labels[v]).collect::<Vec<_>>();
        self.push(TraceStep::Split {
            lemma,
            cut: map(cut),
            parts: [map(a), map(b)],
        });
    }

    /// Finishes a top-level build: checks the partition and the trace.
    pub(crate) fn finish(
        self,
        d: &Digraph,
        paths: Vec<Path>,
        mode: Mode,
        s: &[usize],
    ) -> Result<Built> {
        let partition = PathPartition::certified(paths, mode, s);
        partition
            .validate(d)
            .map_err(|e| Error::internal(format!("builder produced an invalid partition: {e}")))?;
        let trace = BuildTrace { steps: self.steps };
        let mut replayed = trace.replay()?;
        let mut expected = partition.paths.clone();
        replayed.sort();
        expected.sort();
        if replayed != expected {
            return Err(Error::internal("trace replay disagrees with the partition"));
        }
        Ok(Built { partition, trace })
    }
}

pub(crate) fn relabel(p: &Path, labels: &[usize]) -> Path {
    Path(p.vertices().iter().map(|&v| labels[v]).collect())
}

pub(crate) fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Composes two relabelings: local vertex `v` of a child maps to `parent[child[v]]`.
pub(crate) fn compose_labels(parent: &[usize], child: &[usize]) -> Vec<usize> {
    child.iter().map(|&v| parent[v]).collect()
}
