//! Seeded checks of the metric axioms, the three Λ-tree axioms, unique
//! geodesity and the fork lemma on the built-in spaces.
//!
//! A passing report only says that no counterexample turned up among the
//! seeded samples. A failing report carries a [`Witness`] whose relation
//! [`reverify`] reproduces exactly from its literals.
//!
//! Every sample `i` of a check draws from its own generator
//! `derive_rng(seed, stream, i)`, so reports do not depend on evaluation order.

mod axiom3;
mod chain;
mod checks;
mod reverify;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::group::{derive_rng, ElementSampler, GroupId, SampleRng};
use crate::space::{Point, SegmentMap, Space};

pub use axiom3::{axiom3_construction, check_axiom3, Construction};
pub use chain::{condition_a_probe, no_max_witness, WitnessChain};
pub use checks::{check_axiom1, check_axiom2, check_fork, check_metric, check_metric_with, check_unique, fork_at};
pub use reverify::reverify;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckName {
    Metric,
    Axiom1,
    Axiom2,
    Axiom3,
    Unique,
    Fork,
    ConditionA,
}

impl CheckName {
    pub const ALL: [CheckName; 7] = [
        CheckName::Metric,
        CheckName::Axiom1,
        CheckName::Axiom2,
        CheckName::Axiom3,
        CheckName::Unique,
        CheckName::Fork,
        CheckName::ConditionA,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Metric => "metric",
            CheckName::Axiom1 => "axiom1",
            CheckName::Axiom2 => "axiom2",
            CheckName::Axiom3 => "axiom3",
            CheckName::Unique => "unique",
            CheckName::Fork => "fork",
            CheckName::ConditionA => "condition-a",
        }
    }

    /// Whether the check runs on a space (all but `condition-a`).
    pub fn needs_space(self) -> bool {
        self != CheckName::ConditionA
    }

    fn stream(self) -> u64 {
        self as u64 + 1
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckConfig {
    pub seed: u64,
    pub samples: usize,
    /// Numerator bound for sampled elements; the group default when absent.
    pub numerator_bound: Option<u64>,
    pub chain_depth: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { seed: 0, samples: 1000, numerator_bound: None, chain_depth: 20 }
    }
}

impl CheckConfig {
    pub fn new(seed: u64, samples: usize) -> Self {
        CheckConfig { seed, samples, ..CheckConfig::default() }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.samples == 0 {
            return Err("samples must be at least 1".into());
        }
        if self.chain_depth == 0 {
            return Err("chain depth must be at least 1".into());
        }
        Ok(())
    }

    pub fn sampler(&self, group: GroupId) -> ElementSampler {
        match self.numerator_bound {
            Some(numerator_bound) => ElementSampler { numerator_bound },
            None => ElementSampler::for_group(group),
        }
    }

    fn rng(&self, check: CheckName, index: usize) -> SampleRng {
        derive_rng(self.seed, check.stream(), index as u64)
    }
}

/// Passes are sampled evidence; failures are exact certificates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Evidence {
    Sampled,
    Certificate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Positivity,
    Symmetry,
    Triangle,
    Isometry,
    Concat,
    NoMaxIntersection,
    ScatteredIntersection,
    ConstructionIdentity,
    SecondGeodesic,
    DoubleFork,
    NoHalfMax,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let value = serde_json::to_value(self).expect("unit variant");
        f.write_str(value.as_str().expect("serialized as a string"))
    }
}

/// A counterexample, written with point and group literals so that it can be
/// parsed back and re-evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub relation: Relation,
    /// The violated relation with its exact values, on one line.
    pub statement: String,
    pub points: BTreeMap<String, String>,
    pub segments: BTreeMap<String, [String; 2]>,
    pub values: BTreeMap<String, String>,
    pub chain: Vec<String>,
}

impl Witness {
    fn new(relation: Relation, statement: impl Into<String>) -> Self {
        Witness {
            relation,
            statement: statement.into(),
            points: BTreeMap::new(),
            segments: BTreeMap::new(),
            values: BTreeMap::new(),
            chain: Vec::new(),
        }
    }

    fn point(mut self, space: &Space, name: &str, p: &Point) -> Self {
        self.points.insert(name.into(), space.format_point(p));
        self
    }

    fn segment(mut self, name: &str, s: &SegmentMap) -> Self {
        let space = s.space();
        self.segments
            .insert(name.into(), [space.format_point(s.start()), space.format_point(s.end())]);
        self
    }

    fn value(mut self, name: &str, v: impl fmt::Display) -> Self {
        self.values.insert(name.into(), v.to_string());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: CheckName,
    pub group: GroupId,
    pub space: Option<String>,
    pub pass: bool,
    pub samples: usize,
    pub seed: u64,
    pub evidence: Evidence,
    pub note: Option<String>,
    pub stats: BTreeMap<String, u64>,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn stat(&self, key: &str) -> u64 {
        self.stats.get(key).copied().unwrap_or(0)
    }
}

/// Accumulates counters while a check runs.
struct Tally {
    name: CheckName,
    group: GroupId,
    space: Option<String>,
    seed: u64,
    samples: usize,
    stats: BTreeMap<String, u64>,
}

impl Tally {
    fn new(name: CheckName, space: &Space, cfg: &CheckConfig) -> Self {
        Tally {
            name,
            group: space.group(),
            space: Some(space.describe()),
            seed: cfg.seed,
            samples: 0,
            stats: BTreeMap::new(),
        }
    }

    fn bump(&mut self, key: &str) {
        *self.stats.entry(key.to_string()).or_default() += 1;
    }

    fn finish(self, witness: Option<Witness>) -> CheckReport {
        let pass = witness.is_none();
        CheckReport {
            name: self.name,
            group: self.group,
            space: self.space,
            pass,
            samples: self.samples,
            seed: self.seed,
            evidence: if pass { Evidence::Sampled } else { Evidence::Certificate },
            note: None,
            stats: self.stats,
            witness,
        }
    }
}

/// Runs one named check. `space` may be `None` only for `condition-a`.
pub fn run_check(name: CheckName, group: GroupId, space: Option<&Space>, cfg: &CheckConfig) -> Result<CheckReport, String> {
    let need = || space.ok_or_else(|| format!("check `{name}` needs a space"));
    Ok(match name {
        CheckName::Metric => check_metric(need()?, cfg),
        CheckName::Axiom1 => check_axiom1(need()?, cfg),
        CheckName::Axiom2 => check_axiom2(need()?, cfg),
        CheckName::Axiom3 => check_axiom3(need()?, cfg),
        CheckName::Unique => check_unique(need()?, cfg),
        CheckName::Fork => check_fork(need()?, cfg),
        CheckName::ConditionA => condition_a_probe(group, cfg),
    })
}
