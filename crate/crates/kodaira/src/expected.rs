use serde::{Deserialize, Serialize};

/// Generators of a characteristic subgroup and its isomorphism type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubgroupSpec {
    pub gens: Vec<String>,
    pub structure: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuotientTarget {
    /// Word generating the normal subgroup, e.g. `x5 x6`.
    pub kernel: String,
    pub target: String,
}

/// Count this entry by lifting from `G / <kernel>`, which must be the
/// catalog group `base`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LiftDirective {
    pub kernel: String,
    pub base: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedMetrics {
    pub label: String,
    /// Presentation file name; derived from the label when absent.
    pub file: Option<String>,
    #[serde(default)]
    pub auxiliary: bool,
    pub aut_order: u64,
    /// `class c` or `non-nilpotent`.
    pub nilpotency: String,
    pub monolithic: bool,
    pub extraspecial: bool,
    pub cct: bool,
    pub center: SubgroupSpec,
    pub derived: SubgroupSpec,
    pub monolith: Vec<String>,
    pub prestructure_orbits: u64,
    pub structure_orbits: u64,
    pub structure_total: u64,
    pub k_centralizer_always_center: Option<bool>,
    #[serde(default)]
    pub quotients: Vec<QuotientTarget>,
    #[serde(default)]
    pub notes: Vec<String>,
    pub lift: Option<LiftDirective>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExpectedFile {
    version: u32,
    group: Vec<ExpectedMetrics>,
}

pub const EXPECTED_TOML: &str = include_str!("../data/expected.toml");

pub fn parse_expected(text: &str) -> anyhow::Result<Vec<ExpectedMetrics>> {
    let f: ExpectedFile = toml::from_str(text)?;
    anyhow::ensure!(
        f.version == 1,
        "unsupported expected-metrics version {}",
        f.version
    );
    Ok(f.group)
}
