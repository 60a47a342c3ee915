use std::collections::BTreeMap;

use dashmap::DashMap;
use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::oracles::{exists_s_path_partition, max_stable_sets};
use crate::path::{Mode, PathPartition};

/// Largest order accepted by [`check_property`].
pub const PROPERTY_CAP: usize = 10;
/// Largest order accepted by [`check_diperfect`].
pub const DIPERFECT_CAP: usize = 9;

/// Outcome of an α-property or BE-property check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub digraph: Digraph,
    pub property: Mode,
    pub holds: bool,
    /// A maximum stable set without a partition, in the labels of `digraph`.
    pub failing_stable_set: Option<Vec<usize>>,
    /// For hereditary checks: the smallest induced subdigraph that fails.
    pub failing_subdigraph: Option<Vec<usize>>,
    /// Keyed by the stable set written as `"0,2,4"`.
    pub certificates: BTreeMap<String, PathPartition>,
}

pub(crate) fn set_key(s: &[usize]) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Decides the property by running the exact oracle on every maximum stable set.
pub fn check_property(d: &Digraph, mode: Mode) -> Result<PropertyReport> {
    Error::check_cap("check_property", d.order(), PROPERTY_CAP)?;
    let mut report = PropertyReport {
        digraph: d.clone(),
        property: mode,
        holds: true,
        failing_stable_set: None,
        failing_subdigraph: None,
        certificates: BTreeMap::new(),
    };
    for s in max_stable_sets(d)?.sets {
        match exists_s_path_partition(d, &s, mode)? {
            Some(p) => {
                report.certificates.insert(set_key(&s), p);
            }
            None => {
                report.holds = false;
                report.failing_stable_set = Some(s);
                break;
            }
        }
    }
    Ok(report)
}

fn property_holds(d: &Digraph, mode: Mode) -> Result<bool> {
    for s in max_stable_sets(d)?.sets {
        if exists_s_path_partition(d, &s, mode)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Property verdicts keyed by canonical form, safe to share between threads.
#[derive(Debug, Default)]
pub struct DiperfectCache {
    map: DashMap<(Mode, Vec<u8>), bool>,
}

impl DiperfectCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    fn holds(&self, d: &Digraph, mode: Mode) -> Result<bool> {
        let key = (mode, d.canonical_form()?);
        if let Some(v) = self.map.get(&key) {
            return Ok(*v);
        }
        let v = property_holds(d, mode)?;
        self.map.insert(key, v);
        Ok(v)
    }
}

/// Checks the property on every induced subdigraph, with a private cache.
pub fn check_diperfect(d: &Digraph, mode: Mode) -> Result<PropertyReport> {
    check_diperfect_with(d, mode, Some(&DiperfectCache::new()))
}

/// Checks the property on every induced subdigraph, smallest first; `cache`
/// of `None` disables memoization.
pub fn check_diperfect_with(
    d: &Digraph,
    mode: Mode,
    cache: Option<&DiperfectCache>,
) -> Result<PropertyReport> {
    let n = d.order();
    Error::check_cap("check_diperfect", n, DIPERFECT_CAP)?;
    let all = d.vertex_mask();
    let mut subsets: Vec<Mask> = bits::submasks(all)
        .filter(|&m| m != 0 && m != all)
        .collect();
    subsets.sort_by_key(|&m| (m.count_ones(), bits::to_vec(m)));
    for m in subsets {
        let sub = d.induced_mask(m);
        let holds = match cache {
            Some(c) => c.holds(&sub.digraph, mode)?,
            None => property_holds(&sub.digraph, mode)?,
        };
        if !holds {
            let inner = check_property(&sub.digraph, mode)?;
            let failing = inner
                .failing_stable_set
                .map(|s| s.into_iter().map(|v| sub.labels[v]).collect());
            return Ok(PropertyReport {
                digraph: d.clone(),
                property: mode,
                holds: false,
                failing_stable_set: failing,
                failing_subdigraph: Some(sub.labels),
                certificates: BTreeMap::new(),
            });
        }
    }
    let mut report = check_property(d, mode)?;
    if !report.holds {
        report.failing_subdigraph = Some((0..n).collect());
    }
    Ok(report)
}
