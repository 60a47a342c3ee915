use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructive::{hamilton_cycle_strong_in_semicomplete, run_builder, Builder};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::forbidden::{
    find_induced_transitive_triangle, is_series_parallel, lonely_arcs, ForbiddenClass,
};
use crate::oracles::{exists_s_path_partition, is_perfect, max_stable_sets, min_clique_partition};
use crate::path::Mode;

use super::enumerate::{enumerate_digraphs, labeled_count};
use super::generate::sample_member;

/// Classes with a constructive theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremClass {
    Perfect,
    SeriesParallel,
    InSemicomplete,
    /// At most two lonely arcs, or three pairwise disjoint ones.
    SemiSymmetric,
    Semicomplete,
    Cycle,
    Symmetric,
    #[serde(rename = "semi_symmetric_2")]
    SemiSymmetric2,
    /// Exactly three pairwise disjoint lonely arcs.
    #[serde(rename = "semi_symmetric_3")]
    SemiSymmetric3,
}

impl TheoremClass {
    pub const ALL: [TheoremClass; 9] = [
        TheoremClass::Perfect,
        TheoremClass::SeriesParallel,
        TheoremClass::InSemicomplete,
        TheoremClass::SemiSymmetric,
        TheoremClass::Semicomplete,
        TheoremClass::Cycle,
        TheoremClass::Symmetric,
        TheoremClass::SemiSymmetric2,
        TheoremClass::SemiSymmetric3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremClass::Perfect => "perfect",
            TheoremClass::SeriesParallel => "series_parallel",
            TheoremClass::InSemicomplete => "in_semicomplete",
            TheoremClass::SemiSymmetric => "semi_symmetric",
            TheoremClass::Semicomplete => "semicomplete",
            TheoremClass::Cycle => "cycle",
            TheoremClass::Symmetric => "symmetric",
            TheoremClass::SemiSymmetric2 => "semi_symmetric_2",
            TheoremClass::SemiSymmetric3 => "semi_symmetric_3",
        }
    }

    pub fn builder(self) -> Builder {
        match self {
            TheoremClass::Perfect => Builder::Perfect,
            TheoremClass::SeriesParallel => Builder::SeriesParallel,
            TheoremClass::InSemicomplete => Builder::InSemicomplete,
            TheoremClass::Semicomplete => Builder::Semicomplete,
            TheoremClass::Cycle => Builder::Cycle,
            TheoremClass::SemiSymmetric
            | TheoremClass::Symmetric
            | TheoremClass::SemiSymmetric2
            | TheoremClass::SemiSymmetric3 => Builder::SemiSymmetric,
        }
    }

    /// Membership in the class itself.
    pub fn contains(self, d: &Digraph) -> Result<bool> {
        let lonely = || lonely_arcs(d);
        let disjoint = |arcs: &[(usize, usize)]| {
            let mut ends: Vec<usize> = arcs.iter().flat_map(|&(u, v)| [u, v]).collect();
            ends.sort_unstable();
            ends.dedup();
            ends.len() == 2 * arcs.len()
        };
        Ok(match self {
            TheoremClass::Perfect => is_perfect(&d.underlying_graph())?.perfect,
            TheoremClass::SeriesParallel => is_series_parallel(&d.underlying_graph()),
            TheoremClass::InSemicomplete => d.is_in_semicomplete(),
            TheoremClass::Semicomplete => d.is_semicomplete(),
            TheoremClass::Cycle => d.underlying_graph().is_cycle(),
            TheoremClass::Symmetric => d.is_symmetric(),
            TheoremClass::SemiSymmetric2 => lonely().len() <= 2,
            TheoremClass::SemiSymmetric3 => {
                let l = lonely();
                l.len() == 3 && disjoint(&l)
            }
            TheoremClass::SemiSymmetric => {
                let l = lonely();
                l.len() <= 2 || (l.len() == 3 && disjoint(&l))
            }
        })
    }

    /// The theorem's remaining hypothesis on a class member.
    pub fn hypothesis(self, d: &Digraph, mode: Mode) -> Result<bool> {
        match (self, mode) {
            (TheoremClass::Semicomplete, Mode::Be) => {
                Ok(find_induced_transitive_triangle(d).is_none())
            }
            (TheoremClass::Semicomplete, Mode::Alpha)
            | (TheoremClass::Perfect, Mode::Alpha)
            | (TheoremClass::InSemicomplete, Mode::Alpha) => Ok(true),
            (TheoremClass::Perfect, Mode::Be)
            | (TheoremClass::InSemicomplete, Mode::Be)
            | (TheoremClass::SeriesParallel, _)
            | (TheoremClass::Cycle, _) => ForbiddenClass::for_mode(mode).contains(d),
            (TheoremClass::SemiSymmetric, _)
            | (TheoremClass::Symmetric, _)
            | (TheoremClass::SemiSymmetric2, _)
            | (TheoremClass::SemiSymmetric3, _) => Ok(true),
        }
    }
}

impl fmt::Display for TheoremClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationFailure {
    pub digraph: Digraph,
    pub stable_set: Vec<usize>,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub class: TheoremClass,
    pub n: usize,
    pub mode: Mode,
    pub exhaustive: bool,
    pub seed: Option<u64>,
    /// Class members satisfying the hypotheses that were tested.
    pub members: usize,
    /// Class members rejected for failing the hypotheses.
    pub skipped: usize,
    pub stable_sets: usize,
    /// Members whose minimum clique cover size was checked against α.
    pub clique_cover_checks: usize,
    /// Strong members for which a Hamilton cycle was produced.
    pub hamilton_cycles: usize,
    pub failures: Vec<ValidationFailure>,
}

#[derive(Default)]
struct MemberOutcome {
    stable_sets: usize,
    clique_cover_checks: usize,
    hamilton_cycles: usize,
    failures: Vec<ValidationFailure>,
}

/// Runs the class builder on every maximum stable set of class members
/// satisfying the theorem's hypotheses, validating each partition and
/// cross-checking the exact oracle.
///
/// `samples = None` enumerates all members up to isomorphism (orders up to 5);
/// otherwise that many members are drawn with the given seed.
pub fn validate_theorem(
    class: TheoremClass,
    n: usize,
    mode: Mode,
    samples: Option<usize>,
    seed: u64,
) -> Result<ValidationReport> {
    let (members, skipped) = match samples {
        None => {
            Error::check_cap("validate_theorem (exhaustive)", n, 5)?;
            let mut members = Vec::new();
            let mut skipped = 0;
            for d in enumerate_digraphs(n, true, None)? {
                if !class.contains(&d)? {
                    continue;
                }
                if class.hypothesis(&d, mode)? {
                    members.push(d);
                } else {
                    skipped += 1;
                }
            }
            (members, skipped)
        }
        Some(k) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut members = Vec::with_capacity(k);
            let mut skipped = 0usize;
            let limit = 1000 * k.max(1) + labeled_count(n.min(4)) as usize;
            while members.len() < k {
                if skipped > limit {
                    return Err(Error::PreconditionViolated(format!(
                        "too few members of {class} on {n} vertices satisfy the hypotheses"
                    )));
                }
                let d = sample_member(class, n, &mut rng)?;
                if class.hypothesis(&d, mode)? {
                    members.push(d);
                } else {
                    skipped += 1;
                }
            }
            (members, skipped)
        }
    };
    let outcomes: Vec<MemberOutcome> = members
        .par_iter()
        .map(|d| check_member(class, d, mode))
        .collect::<Result<_>>()?;
    let mut report = ValidationReport {
        class,
        n,
        mode,
        exhaustive: samples.is_none(),
        seed: samples.map(|_| seed),
        members: members.len(),
        skipped,
        stable_sets: 0,
        clique_cover_checks: 0,
        hamilton_cycles: 0,
        failures: Vec::new(),
    };
    for o in outcomes {
        report.stable_sets += o.stable_sets;
        report.clique_cover_checks += o.clique_cover_checks;
        report.hamilton_cycles += o.hamilton_cycles;
        report.failures.extend(o.failures);
    }
    Ok(report)
}

fn check_member(class: TheoremClass, d: &Digraph, mode: Mode) -> Result<MemberOutcome> {
    let mut out = MemberOutcome::default();
    let family = max_stable_sets(d)?;
    let fail = |s: &[usize], error: String| ValidationFailure {
        digraph: d.clone(),
        stable_set: s.to_vec(),
        error,
    };
    if class == TheoremClass::Perfect {
        let cover = min_clique_partition(&d.underlying_graph())?;
        out.clique_cover_checks += 1;
        if cover.len() != family.alpha {
            out.failures.push(fail(
                &[],
                format!(
                    "clique cover has {} cliques but α = {}",
                    cover.len(),
                    family.alpha
                ),
            ));
        }
    }
    if class == TheoremClass::InSemicomplete && d.order() >= 2 && d.is_strong() {
        match hamilton_cycle_strong_in_semicomplete(d) {
            Ok(c) if c.is_cycle_in(d) && c.len() == d.order() => out.hamilton_cycles += 1,
            Ok(c) => out
                .failures
                .push(fail(&[], format!("{c} is not a Hamilton cycle"))),
            Err(e) => out.failures.push(fail(&[], e.to_string())),
        }
    }
    for s in &family.sets {
        out.stable_sets += 1;
        match run_builder(class.builder(), d, s, mode) {
            Ok(Some(built)) => {
                if let Err(e) = built.partition.validate(d) {
                    out.failures
                        .push(fail(s, format!("invalid certificate: {e}")));
                } else if exists_s_path_partition(d, s, mode)?.is_none() {
                    out.failures
                        .push(fail(s, "oracle finds no partition".into()));
                }
            }
            Ok(None) => out
                .failures
                .push(fail(s, "builder returned nothing".into())),
            Err(e) => out.failures.push(fail(s, e.to_string())),
        }
    }
    Ok(out)
}
