use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Mismatch,
    Error,
    /// An internal consistency check failed.
    Invariant,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
            Status::Error => 2,
            Status::Invariant => 3,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ProfileReport {
    pub is_abelian: bool,
    pub is_cct: bool,
    /// Non-central `x, y, z` with `[x,y] = [y,z] = 1 != [x,z]`.
    pub cct_witness: Option<[String; 3]>,
    pub is_monolithic: bool,
    pub monolith_order: usize,
    pub is_extraspecial: bool,
    pub nilpotency: String,
    pub center_order: usize,
    pub center_structure: String,
    pub derived_order: usize,
    pub derived_structure: String,
    pub aut_order: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub z_always_central: bool,
    pub k_centralizer_always_center: bool,
    pub entries_noncentral: bool,
    pub orbit_identity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub kind: String,
    /// `exact` or `lift`.
    pub method: String,
    pub total: u64,
    pub orbits: u64,
    pub stabilizer_histogram: BTreeMap<u64, u64>,
    pub n_values: Vec<usize>,
    pub flags: Option<Flags>,
    pub representatives_verified: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub representatives: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftSummary {
    pub kind: String,
    pub base: String,
    pub kernel_order: usize,
    pub lift_multiplicity: u64,
    pub generating_lifts: u64,
    pub passing_lifts: u64,
    pub trivial_lift_stabilizer: u64,
    pub trivial_lift_generated_order: usize,
    pub base_tuples_examined: usize,
    pub exhaustive: bool,
    pub profiles_uniform: bool,
    pub aut_lifts: bool,
    pub aut_index: usize,
    pub orbits: u64,
    pub total: u64,
    pub stabilizer_histogram: BTreeMap<u64, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientCheck {
    pub kernel: String,
    pub target: String,
    pub isomorphic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BurnsideSummary {
    pub kind: String,
    pub distinct_fixed_sets: usize,
    pub fixed_point_sum: String,
    pub orbits: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diff {
    pub metric: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

/// Everything computed for one group. `timing` is the only field that can
/// differ between runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub label: String,
    pub order: usize,
    pub auxiliary: bool,
    pub mode: String,
    pub profile: Option<ProfileReport>,
    pub screen: Option<String>,
    pub quotients: Vec<QuotientCheck>,
    pub search: Vec<SearchSummary>,
    pub lift: Vec<LiftSummary>,
    pub burnside: Vec<BurnsideSummary>,
    pub expected_diff: Vec<Diff>,
    pub invariant_failures: Vec<String>,
    pub errors: Vec<String>,
    pub notes: Vec<String>,
    pub timing: Timing,
}

impl EntryReport {
    pub fn status(&self) -> Status {
        if !self.invariant_failures.is_empty() {
            Status::Invariant
        } else if !self.errors.is_empty() {
            Status::Error
        } else if !self.expected_diff.is_empty() {
            Status::Mismatch
        } else {
            Status::Ok
        }
    }

    /// The JSON document without timing, for byte comparisons.
    pub fn to_json_untimed(&self) -> Result<String> {
        let mut v = serde_json::to_value(self)?;
        if let Some(m) = v.as_object_mut() {
            m.remove("timing");
        }
        Ok(serde_json::to_string_pretty(&v)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn search(&self, kind: &str) -> Option<&SearchSummary> {
        self.search.iter().find(|s| s.kind == kind)
    }
}

/// Overall status of a run: the worst entry status.
pub fn run_status(reports: &[EntryReport]) -> Status {
    reports
        .iter()
        .map(EntryReport::status)
        .max()
        .unwrap_or(Status::Ok)
}

#[derive(Serialize)]
struct CsvRow<'a> {
    label: &'a str,
    order: usize,
    monolithic: Option<bool>,
    aut_order: Option<u64>,
    prestructure_orbits: Option<u64>,
    structure_orbits: Option<u64>,
    structure_total: Option<u64>,
    n_values: String,
    mode: &'a str,
    status: Status,
}

/// One row per entry, mirroring the table columns.
pub fn write_csv<W: Write>(out: W, reports: &[EntryReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in reports {
        let pre = r.search("prestructures");
        let st = r.search("structures");
        w.serialize(CsvRow {
            label: &r.label,
            order: r.order,
            monolithic: r.profile.as_ref().map(|p| p.is_monolithic),
            aut_order: r.profile.as_ref().and_then(|p| p.aut_order),
            prestructure_orbits: pre.map(|s| s.orbits),
            structure_orbits: st.map(|s| s.orbits),
            structure_total: st.map(|s| s.total),
            n_values: pre
                .map(|s| {
                    s.n_values
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .unwrap_or_default(),
            mode: &r.mode,
            status: r.status(),
        })?;
    }
    w.flush()?;
    Ok(())
}

/// `<dir>/<slug>.json` per entry plus `<dir>/summary.csv`. With
/// `timing = false` the JSON omits the timing field.
pub fn write_artifacts(dir: &Path, reports: &[EntryReport], timing: bool) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for r in reports {
        let path = dir.join(format!("{}.json", slug(&r.label)));
        let body = if timing {
            r.to_json()?
        } else {
            r.to_json_untimed()?
        };
        std::fs::write(&path, body + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let path = dir.join("summary.csv");
    let f = std::fs::File::create(&path).with_context(|| format!("writing {}", path.display()))?;
    write_csv(f, reports)
}

/// `G(32,49)` becomes `g32_49`.
pub fn slug(label: &str) -> String {
    match crate::catalog::parse_label(label) {
        Some((o, i)) => format!("g{o}_{i}"),
        None => label
            .chars()
            .filter(|c| c.is_ascii_alphanumeric() || *c == '_')
            .collect::<String>()
            .to_lowercase(),
    }
}
