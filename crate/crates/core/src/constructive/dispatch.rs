use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::forbidden::{
    find_induced_transitive_triangle, is_series_parallel, lonely_arcs, ForbiddenClass,
};
use crate::oracles::{exists_s_path_partition, is_perfect, PERFECT_CAP};
use crate::path::{Mode, PathPartition};

use super::trace::{BuildTrace, Built, Lemma, TraceStep};
use super::{
    partition_cycle_digraph, partition_in_semicomplete, partition_perfect,
    partition_semi_symmetric, partition_series_parallel,
};

/// Which construction to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Builder {
    /// The first applicable class builder, else the oracle.
    Auto,
    Oracle,
    Perfect,
    Semicomplete,
    SeriesParallel,
    Cycle,
    InSemicomplete,
    SemiSymmetric,
}

impl Builder {
    pub const ALL: [Builder; 8] = [
        Builder::Auto,
        Builder::Oracle,
        Builder::Perfect,
        Builder::Semicomplete,
        Builder::SeriesParallel,
        Builder::Cycle,
        Builder::InSemicomplete,
        Builder::SemiSymmetric,
    ];

    /// Order in which `Auto` tries the class builders.
    const PREFERENCE: [Builder; 6] = [
        Builder::Cycle,
        Builder::Semicomplete,
        Builder::InSemicomplete,
        Builder::SemiSymmetric,
        Builder::SeriesParallel,
        Builder::Perfect,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builder::Auto => "auto",
            Builder::Oracle => "oracle",
            Builder::Perfect => "perfect",
            Builder::Semicomplete => "semicomplete",
            Builder::SeriesParallel => "series_parallel",
            Builder::Cycle => "cycle",
            Builder::InSemicomplete => "in_semicomplete",
            Builder::SemiSymmetric => "semi_symmetric",
        }
    }

    /// Whether the builder's preconditions on `d` hold in `mode`.
    pub fn applies(self, d: &Digraph, mode: Mode) -> Result<bool> {
        let in_class = || ForbiddenClass::for_mode(mode).contains(d);
        Ok(match self {
            Builder::Auto | Builder::Oracle => true,
            Builder::Cycle => d.underlying_graph().is_cycle() && in_class()?,
            Builder::Semicomplete => {
                d.is_semicomplete()
                    && (mode == Mode::Alpha || find_induced_transitive_triangle(d).is_none())
            }
            Builder::InSemicomplete => {
                d.is_in_semicomplete() && (mode == Mode::Alpha || in_class()?)
            }
            Builder::SemiSymmetric => {
                let lonely = lonely_arcs(d);
                match lonely.len() {
                    0..=2 => true,
                    3 => {
                        let mut ends: Vec<usize> =
                            lonely.iter().flat_map(|&(u, v)| [u, v]).collect();
                        ends.sort_unstable();
                        ends.dedup();
                        ends.len() == 6
                    }
                    _ => false,
                }
            }
            Builder::SeriesParallel => is_series_parallel(&d.underlying_graph()) && in_class()?,
            Builder::Perfect => {
                d.order() <= PERFECT_CAP
                    && is_perfect(&d.underlying_graph())?.perfect
                    && (mode == Mode::Alpha || in_class()?)
            }
        })
    }
}

impl fmt::Display for Builder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Builder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Builder::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::PreconditionViolated(format!("unknown builder {s:?}")))
    }
}

/// Runs `builder` on `(d, s)`. Only the oracle can answer `None`, meaning no
/// partition of the requested kind exists.
pub fn run_builder(
    builder: Builder,
    d: &Digraph,
    s: &[usize],
    mode: Mode,
) -> Result<Option<Built>> {
    let chosen = match builder {
        Builder::Auto => {
            let mut pick = Builder::Oracle;
            for b in Builder::PREFERENCE {
                if b.applies(d, mode)? {
                    pick = b;
                    break;
                }
            }
            pick
        }
        b => b,
    };
    let mut built = match chosen {
        Builder::Oracle => {
            let Some(partition) = exists_s_path_partition(d, s, mode)? else {
                return Ok(None);
            };
            let steps = vec![TraceStep::Paths {
                lemma: Lemma::Oracle,
                paths: partition.paths.clone(),
            }];
            Built {
                partition,
                trace: BuildTrace { steps },
            }
        }
        Builder::Perfect => partition_perfect(d, s, mode)?,
        Builder::Semicomplete => {
            if !d.is_semicomplete() {
                return Err(Error::NotSemicomplete);
            }
            partition_perfect(d, s, mode)?
        }
        Builder::SeriesParallel => partition_series_parallel(d, s, mode)?,
        Builder::Cycle => partition_cycle_digraph(d, s, mode)?,
        Builder::InSemicomplete => partition_in_semicomplete(d, s, mode)?,
        Builder::SemiSymmetric => {
            let mut b = partition_semi_symmetric(d, s)?;
            b.partition = PathPartition::certified(b.partition.paths, mode, s);
            b
        }
        Builder::Auto => unreachable!("auto resolves to a concrete builder"),
    };
    built.trace.steps.insert(
        0,
        TraceStep::Dispatch {
            builder: chosen.name().to_string(),
        },
    );
    Ok(Some(built))
}
