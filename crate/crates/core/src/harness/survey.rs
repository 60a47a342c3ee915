use dashmap::DashMap;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::forbidden::{ForbiddenClass, Witness};
use crate::path::Mode;

use super::enumerate::{decode, labeled_count, pairs};
use super::generate::random_digraph;
use super::property::{check_diperfect_with, DiperfectCache, PropertyReport, DIPERFECT_CAP};

/// Largest order a survey enumerates exhaustively.
pub const EXHAUSTIVE_MAX: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyConfig {
    pub n_max: usize,
    pub mode: Mode,
    /// Upper bound on the number of digraphs generated.
    pub budget: u64,
    pub up_to_iso: bool,
    /// Orders up to this one are enumerated exhaustively; larger ones are sampled.
    /// At most [`EXHAUSTIVE_MAX`].
    pub exhaustive_max: usize,
    /// Digraphs sampled per order above the exhaustive range.
    pub samples: usize,
    pub seed: u64,
}

impl SurveyConfig {
    pub fn exhaustive(n_max: usize, mode: Mode) -> Self {
        SurveyConfig {
            n_max,
            mode,
            budget: u64::MAX,
            up_to_iso: true,
            exhaustive_max: EXHAUSTIVE_MAX,
            samples: 0,
            seed: 0,
        }
    }
}

/// Which half of the biconditional failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Contains a forbidden induced cycle yet the property is hereditary.
    Necessity,
    /// Free of forbidden induced cycles yet some induced subdigraph fails.
    Sufficiency,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub direction: Direction,
    pub obstruction: Option<Witness>,
    pub report: PropertyReport,
}

/// Cross-tabulation of class membership against diperfection for one order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCounts {
    pub n: usize,
    pub exhaustive: bool,
    pub digraphs: usize,
    pub in_class_diperfect: usize,
    pub in_class_not_diperfect: usize,
    pub out_of_class_diperfect: usize,
    pub out_of_class_not_diperfect: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub n_max: usize,
    pub mode: Mode,
    pub class: ForbiddenClass,
    pub up_to_iso: bool,
    pub seed: u64,
    pub orders: Vec<OrderCounts>,
    pub counterexamples: Vec<Counterexample>,
    /// Labeled digraphs generated before deduplication.
    pub generated: u64,
}

fn required(config: &SurveyConfig) -> u64 {
    (1..=config.n_max)
        .map(|n| {
            if n <= config.exhaustive_max {
                labeled_count(n)
            } else {
                config.samples as u64
            }
        })
        .fold(0u64, u64::saturating_add)
}

/// Tests the conjecture for `config.mode` on every digraph of order at most
/// `n_max`: a digraph should be diperfect exactly when it avoids the
/// forbidden induced odd cycles.
pub fn survey_conjecture(config: &SurveyConfig) -> Result<SurveyReport> {
    Error::check_cap("survey_conjecture", config.n_max, DIPERFECT_CAP)?;
    Error::check_cap(
        "survey_conjecture (exhaustive)",
        config.exhaustive_max,
        EXHAUSTIVE_MAX,
    )?;
    let needed = required(config);
    if needed > config.budget {
        return Err(Error::BudgetExceeded {
            budget: config.budget as usize,
            required: needed as usize,
        });
    }
    let class = ForbiddenClass::for_mode(config.mode);
    let cache = DiperfectCache::new();
    let mut orders = Vec::new();
    let mut counterexamples = Vec::new();
    for n in 1..=config.n_max {
        let exhaustive = n <= config.exhaustive_max;
        let digraphs = if exhaustive {
            exhaustive_digraphs(n, config.up_to_iso)?
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ (n as u64).rotate_left(32));
            (0..config.samples)
                .map(|_| random_digraph(n, 0.5, &mut rng))
                .collect::<Result<Vec<_>>>()?
        };
        let results: Vec<(Option<Witness>, PropertyReport)> = digraphs
            .par_iter()
            .map(|d| {
                Ok((
                    class.obstruction(d)?,
                    check_diperfect_with(d, config.mode, Some(&cache))?,
                ))
            })
            .collect::<Result<_>>()?;
        let mut counts = OrderCounts {
            n,
            exhaustive,
            digraphs: results.len(),
            ..OrderCounts::default()
        };
        for (obstruction, report) in results {
            let in_class = obstruction.is_none();
            let slot = match (in_class, report.holds) {
                (true, true) => &mut counts.in_class_diperfect,
                (true, false) => &mut counts.in_class_not_diperfect,
                (false, true) => &mut counts.out_of_class_diperfect,
                (false, false) => &mut counts.out_of_class_not_diperfect,
            };
            *slot += 1;
            if in_class != report.holds {
                counterexamples.push(Counterexample {
                    direction: if in_class {
                        Direction::Sufficiency
                    } else {
                        Direction::Necessity
                    },
                    obstruction,
                    report,
                });
            }
        }
        orders.push(counts);
    }
    Ok(SurveyReport {
        n_max: config.n_max,
        mode: config.mode,
        class,
        up_to_iso: config.up_to_iso,
        seed: config.seed,
        orders,
        counterexamples,
        generated: needed,
    })
}

/// All labeled digraphs on `n` vertices, or the smallest-code representative
/// of each isomorphism class, in code order.
fn exhaustive_digraphs(n: usize, up_to_iso: bool) -> Result<Vec<Digraph>> {
    let ps = pairs(n);
    let total = labeled_count(n);
    if !up_to_iso {
        return Ok((0..total).map(|c| decode(n, &ps, c)).collect());
    }
    let reps: DashMap<Vec<u8>, u64> = DashMap::new();
    (0..total)
        .into_par_iter()
        .try_for_each(|code| -> Result<()> {
            let key = decode(n, &ps, code).canonical_form()?;
            reps.entry(key)
                .and_modify(|c| *c = (*c).min(code))
                .or_insert(code);
            Ok(())
        })?;
    let mut codes: Vec<u64> = reps.into_iter().map(|(_, c)| c).collect();
    codes.sort_unstable();
    Ok(codes.into_iter().map(|c| decode(n, &ps, c)).collect())
}
