use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use kodaira_core::pcgroup::{build_group_with_cap, parse_word_over};
use kodaira_core::{parse_presentation, ElementSet, FiniteGroup, PcPresentation};

use crate::expected::{parse_expected, ExpectedMetrics, EXPECTED_TOML};

static SOURCES: &[(&str, &str)] = &[
    ("g32_49.pc", include_str!("../data/presentations/g32_49.pc")),
    ("g32_50.pc", include_str!("../data/presentations/g32_50.pc")),
    (
        "g64_134.pc",
        include_str!("../data/presentations/g64_134.pc"),
    ),
    (
        "g64_135.pc",
        include_str!("../data/presentations/g64_135.pc"),
    ),
    (
        "g64_136.pc",
        include_str!("../data/presentations/g64_136.pc"),
    ),
    (
        "g64_137.pc",
        include_str!("../data/presentations/g64_137.pc"),
    ),
    (
        "g64_138.pc",
        include_str!("../data/presentations/g64_138.pc"),
    ),
    (
        "g64_139.pc",
        include_str!("../data/presentations/g64_139.pc"),
    ),
    (
        "g64_199.pc",
        include_str!("../data/presentations/g64_199.pc"),
    ),
    (
        "g64_200.pc",
        include_str!("../data/presentations/g64_200.pc"),
    ),
    (
        "g64_201.pc",
        include_str!("../data/presentations/g64_201.pc"),
    ),
    (
        "g64_249.pc",
        include_str!("../data/presentations/g64_249.pc"),
    ),
    (
        "g64_257.pc",
        include_str!("../data/presentations/g64_257.pc"),
    ),
    (
        "g64_258.pc",
        include_str!("../data/presentations/g64_258.pc"),
    ),
    (
        "g64_259.pc",
        include_str!("../data/presentations/g64_259.pc"),
    ),
    (
        "g64_264.pc",
        include_str!("../data/presentations/g64_264.pc"),
    ),
    (
        "g64_265.pc",
        include_str!("../data/presentations/g64_265.pc"),
    ),
    (
        "g64_266.pc",
        include_str!("../data/presentations/g64_266.pc"),
    ),
    (
        "g96_201.pc",
        include_str!("../data/presentations/g96_201.pc"),
    ),
    (
        "g96_202.pc",
        include_str!("../data/presentations/g96_202.pc"),
    ),
    (
        "g96_204.pc",
        include_str!("../data/presentations/g96_204.pc"),
    ),
    (
        "g96_211.pc",
        include_str!("../data/presentations/g96_211.pc"),
    ),
    (
        "g96_214.pc",
        include_str!("../data/presentations/g96_214.pc"),
    ),
    (
        "g96_216.pc",
        include_str!("../data/presentations/g96_216.pc"),
    ),
    (
        "g96_217.pc",
        include_str!("../data/presentations/g96_217.pc"),
    ),
    (
        "g96_224.pc",
        include_str!("../data/presentations/g96_224.pc"),
    ),
    (
        "g96_225.pc",
        include_str!("../data/presentations/g96_225.pc"),
    ),
    ("d8.pc", include_str!("../data/presentations/d8.pc")),
    ("q8.pc", include_str!("../data/presentations/q8.pc")),
    ("s3.pc", include_str!("../data/presentations/s3.pc")),
    ("s4.pc", include_str!("../data/presentations/s4.pc")),
    ("z6.pc", include_str!("../data/presentations/z6.pc")),
];

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub label: String,
    /// `(order, index)` for entries carrying a small-group label.
    pub id: Option<(usize, usize)>,
    pub auxiliary: bool,
    pub presentation: PcPresentation,
    pub expected: ExpectedMetrics,
}

impl CatalogEntry {
    pub fn order(&self) -> usize {
        self.presentation.order().unwrap_or(0)
    }

    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        build_group_with_cap(&self.presentation, cap)
            .with_context(|| format!("building {}", self.label))
    }
}

/// The built-in groups, ordered by `(order, index)` with auxiliary groups
/// last.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn builtin() -> Result<Self> {
        let files: BTreeMap<&str, &str> = SOURCES.iter().copied().collect();
        let mut entries = Vec::new();
        for exp in parse_expected(EXPECTED_TOML)? {
            let name = match (&exp.file, parse_label(&exp.label)) {
                (Some(f), _) => f.clone(),
                (None, Some((o, i))) => format!("g{o}_{i}.pc"),
                (None, None) => bail!("entry {} needs a file name", exp.label),
            };
            let text = files
                .get(name.as_str())
                .ok_or_else(|| anyhow!("no presentation file {name}"))?;
            let presentation = parse_presentation(text).with_context(|| name.clone())?;
            if presentation.name != exp.label {
                bail!(
                    "{name} declares {:?}, expected {:?}",
                    presentation.name,
                    exp.label
                );
            }
            entries.push(CatalogEntry {
                label: exp.label.clone(),
                id: parse_label(&exp.label),
                auxiliary: exp.auxiliary,
                presentation,
                expected: exp,
            });
        }
        Self::with_entries(entries)
    }

    /// A catalog of arbitrary entries, sorted like the built-in one.
    pub fn with_entries(mut entries: Vec<CatalogEntry>) -> Result<Self> {
        entries.sort_by_key(|e| (e.auxiliary, e.id, e.order(), e.label.clone()));
        let mut seen = std::collections::BTreeSet::new();
        for e in &entries {
            if !seen.insert(e.label.clone()) {
                bail!("duplicate catalog label {}", e.label);
            }
        }
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    /// Look up `G(32,49)`, `32,49`, `g32_49` or an auxiliary name such as
    /// `Q8` (case-insensitive).
    pub fn find(&self, selector: &str) -> Option<&CatalogEntry> {
        if let Some(id) = parse_label(selector) {
            return self.entries.iter().find(|e| e.id == Some(id));
        }
        self.entries
            .iter()
            .find(|e| e.label.eq_ignore_ascii_case(selector.trim()))
    }
}

/// Parse `G(32,49)`, `(32, 49)`, `32,49` or `g32_49`.
pub fn parse_label(s: &str) -> Option<(usize, usize)> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let t = t
        .strip_prefix('G')
        .or_else(|| t.strip_prefix('g'))
        .unwrap_or(&t);
    let t = t
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(t);
    let (a, b) = t.split_once(',').or_else(|| t.split_once('_'))?;
    Some((a.parse().ok()?, b.parse().ok()?))
}

/// The subgroup generated by the given words in the group's pc generators.
pub fn subgroup_from_words(g: &FiniteGroup, words: &[String]) -> Result<ElementSet> {
    let k = g.rel_orders().len();
    let gens = g.pc_generators();
    let mut elems = Vec::new();
    for w in words {
        let word = parse_word_over(w, k).with_context(|| format!("word {w:?}"))?;
        elems.push(g.eval_word(&word, &gens)?);
    }
    Ok(kodaira_core::grouptheory::subgroup_closure(g, &elems))
}
