use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits;
use crate::digraph::Digraph;
use crate::error::Error;

/// Which stable-set requirement a certified partition satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Every path meets the stable set exactly once.
    Alpha,
    /// Additionally, that vertex is the first or last vertex of its path.
    Be,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Alpha => "alpha",
            Mode::Be => "be",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "alpha" => Ok(Mode::Alpha),
            "be" => Ok(Mode::Be),
            other => Err(Error::PreconditionViolated(format!(
                "unknown mode {other:?}"
            ))),
        }
    }
}

/// The requirement recorded on a [`PathPartition`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PartitionMode {
    Plain,
    Alpha,
    Be,
}

impl From<Mode> for PartitionMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Alpha => PartitionMode::Alpha,
            Mode::Be => PartitionMode::Be,
        }
    }
}

/// A directed path given by its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn new(vertices: Vec<usize>) -> Self {
        Path(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().copied().collect())
    }

    /// Distinct vertices of `d` joined by arcs in sequence order.
    pub fn is_path_in(&self, d: &Digraph) -> bool {
        let mut seen = 0u64;
        for &v in &self.0 {
            if v >= d.order() || bits::contains(seen, v) {
                return false;
            }
            seen |= bits::bit(v);
        }
        self.0.windows(2).all(|w| d.has_arc(w[0], w[1]))
    }

    /// Like [`Path::is_path_in`], also requiring the arc from the last vertex back to the first.
    pub fn is_cycle_in(&self, d: &Digraph) -> bool {
        self.len() >= 2 && self.is_path_in(d) && d.has_arc(self.0[self.len() - 1], self.0[0])
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Vertex-disjoint directed paths covering every vertex of a digraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathPartition {
    pub paths: Vec<Path>,
    pub mode: PartitionMode,
    /// The stable set the partition is certified against (sorted).
    pub stable_set: Option<Vec<usize>>,
}

/// Reason a [`PathPartition`] fails to certify what it claims.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidPartition {
    #[error("path {0} is empty")]
    EmptyPath(usize),
    #[error("vertex {0} is not a vertex of the digraph")]
    UnknownVertex(usize),
    #[error("vertex {0} occurs more than once")]
    RepeatedVertex(usize),
    #[error("vertex {0} is not covered")]
    MissingVertex(usize),
    #[error("path {path} uses the missing arc ({from}, {to})")]
    MissingArc { path: usize, from: usize, to: usize },
    #[error("partition claims a stable-set mode but carries no stable set")]
    NoStableSet,
    #[error("claimed stable set {0:?} is not stable")]
    NotStable(Vec<usize>),
    #[error("path {path} meets the stable set {count} times")]
    StableCount { path: usize, count: usize },
    #[error("stable vertex {vertex} is not an endpoint of path {path}")]
    NotEndpoint { path: usize, vertex: usize },
}

impl PathPartition {
    pub fn plain(paths: Vec<Path>) -> Self {
        PathPartition {
            paths,
            mode: PartitionMode::Plain,
            stable_set: None,
        }
    }

    pub fn certified(paths: Vec<Path>, mode: Mode, stable_set: &[usize]) -> Self {
        let mut s = stable_set.to_vec();
        s.sort_unstable();
        PathPartition {
            paths,
            mode: mode.into(),
            stable_set: Some(s),
        }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Orders the paths lexicographically.
    pub fn normalized(mut self) -> Self {
        self.paths.sort();
        self
    }

    /// Re-checks every claim of the partition directly against `d`.
    pub fn validate(&self, d: &Digraph) -> Result<(), InvalidPartition> {
        let mut seen = vec![false; d.order()];
        for (i, p) in self.paths.iter().enumerate() {
            if p.is_empty() {
                return Err(InvalidPartition::EmptyPath(i));
            }
            for &v in p.vertices() {
                if v >= d.order() {
                    return Err(InvalidPartition::UnknownVertex(v));
                }
                if seen[v] {
                    return Err(InvalidPartition::RepeatedVertex(v));
                }
                seen[v] = true;
            }
            for w in p.vertices().windows(2) {
                if !d.has_arc(w[0], w[1]) {
                    return Err(InvalidPartition::MissingArc {
                        path: i,
                        from: w[0],
                        to: w[1],
                    });
                }
            }
        }
        if let Some(v) = seen.iter().position(|&b| !b) {
            return Err(InvalidPartition::MissingVertex(v));
        }
        if self.mode == PartitionMode::Plain {
            return Ok(());
        }
        let s = self
            .stable_set
            .as_ref()
            .ok_or(InvalidPartition::NoStableSet)?;
        let mut in_s = vec![false; d.order()];
        for &x in s {
            if x >= d.order() {
                return Err(InvalidPartition::UnknownVertex(x));
            }
            in_s[x] = true;
        }
        for (a, &x) in s.iter().enumerate() {
            if s[a + 1..].iter().any(|&y| y == x || d.adjacent(x, y)) {
                return Err(InvalidPartition::NotStable(s.clone()));
            }
        }
        for (i, p) in self.paths.iter().enumerate() {
            let hits: Vec<usize> = p.vertices().iter().copied().filter(|&v| in_s[v]).collect();
            if hits.len() != 1 {
                return Err(InvalidPartition::StableCount {
                    path: i,
                    count: hits.len(),
                });
            }
            let x = hits[0];
            if self.mode == PartitionMode::Be && p.first() != Some(x) && p.last() != Some(x) {
                return Err(InvalidPartition::NotEndpoint { path: i, vertex: x });
            }
        }
        Ok(())
    }
}

impl fmt::Display for PathPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.paths.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn validator_accepts_and_rejects() {
        let tt = instances::transitive_triangle();
        let good = PathPartition::certified(vec![Path(vec![0, 2, 1])], Mode::Alpha, &[2]);
        assert_eq!(good.validate(&tt), Ok(()));

        let be = PathPartition::certified(vec![Path(vec![0, 2, 1])], Mode::Be, &[2]);
        assert_eq!(
            be.validate(&tt),
            Err(InvalidPartition::NotEndpoint { path: 0, vertex: 2 })
        );

        let gap = PathPartition::plain(vec![Path(vec![0, 1])]);
        assert_eq!(gap.validate(&tt), Err(InvalidPartition::MissingVertex(2)));

        let wrong = PathPartition::plain(vec![Path(vec![1, 0, 2])]);
        assert!(matches!(
            wrong.validate(&tt),
            Err(InvalidPartition::MissingArc { .. })
        ));

        let twice =
            PathPartition::certified(vec![Path(vec![0]), Path(vec![2, 1])], Mode::Alpha, &[2]);
        assert_eq!(
            twice.validate(&tt),
            Err(InvalidPartition::StableCount { path: 0, count: 0 })
        );
    }

    #[test]
    fn empty_partition_of_empty_digraph() {
        let d = Digraph::empty(0).unwrap();
        assert_eq!(
            PathPartition::certified(vec![], Mode::Be, &[]).validate(&d),
            Ok(())
        );
    }

    #[test]
    fn mode_round_trip() {
        for m in [Mode::Alpha, Mode::Be] {
            assert_eq!(m.to_string().parse::<Mode>().unwrap(), m);
        }
        assert!("gamma".parse::<Mode>().is_err());
    }
}
