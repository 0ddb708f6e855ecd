use std::collections::BTreeMap;
use std::sync::Mutex;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use kodaira_core::braid::{verify_tuple, Requirement, StructureTuple};
use kodaira_core::grouptheory::{
    automorphism_group_with_cap, center, derived_subgroup, is_isomorphic, monolith, quotient,
    AutGroup,
};
use kodaira_core::predicates::{profile, Cct, GroupProfile, Nilpotency};
use kodaira_core::search::*;
use kodaira_core::{ElementSet, FiniteGroup};

use crate::catalog::{subgroup_from_words, Catalog, CatalogEntry};
use crate::describe::structure_name;
use crate::exec::Pool;
use crate::report::*;
use crate::tuple::format_tuple;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// Worker threads; 0 uses the available parallelism.
    pub workers: usize,
    pub order_cap: usize,
    /// Representatives per search pushed through the relation verifier.
    pub verify_representatives: usize,
    /// Representatives written into the report.
    pub emit_representatives: usize,
    /// Base tuples examined per lift; `None` examines all of them.
    pub lift_sample: Option<usize>,
    /// Run the Burnside cross-check on groups up to this order.
    pub burnside_max_order: usize,
    /// Also run the exact engine on entries counted by lifting.
    pub exact_cross_check: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            workers: 0,
            order_cap: kodaira_core::DEFAULT_ORDER_CAP,
            verify_representatives: 256,
            emit_representatives: 0,
            lift_sample: Some(64),
            burnside_max_order: 32,
            exact_cross_check: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Filter {
    All,
    Order(usize),
    Label(String),
}

impl Filter {
    pub fn select<'c>(&self, catalog: &'c Catalog) -> Vec<&'c CatalogEntry> {
        match self {
            Filter::All => catalog.entries().iter().collect(),
            Filter::Order(n) => catalog
                .entries()
                .iter()
                .filter(|e| e.order() == *n)
                .collect(),
            Filter::Label(l) => catalog.find(l).into_iter().collect(),
        }
    }
}

pub fn kind_name(kind: SearchKind) -> &'static str {
    match kind {
        SearchKind::Prestructures => "prestructures",
        SearchKind::Structures => "structures",
    }
}

pub fn nilpotency_name(n: &Nilpotency) -> String {
    match n {
        Nilpotency::Class(c) => format!("class {c}"),
        Nilpotency::NonNilpotent => "non-nilpotent".into(),
    }
}

/// Shared state for a catalog run.
pub struct Runner<'c> {
    pub catalog: &'c Catalog,
    pub opts: RunOptions,
    pub pool: Pool,
    known: Vec<FiniteGroup>,
    base_reports: Mutex<BTreeMap<(String, SearchKind), SearchReport>>,
}

impl<'c> Runner<'c> {
    pub fn new(catalog: &'c Catalog, opts: RunOptions) -> Result<Self> {
        let pool = Pool::new(opts.workers)?;
        let known = catalog
            .entries()
            .iter()
            .map(|e| e.build(opts.order_cap))
            .collect::<Result<_>>()?;
        Ok(Runner {
            catalog,
            opts,
            pool,
            known,
            base_reports: Mutex::new(BTreeMap::new()),
        })
    }

    /// Built catalog groups, used to name subgroups and quotients.
    pub fn known(&self) -> &[FiniteGroup] {
        &self.known
    }

    pub fn known_group(&self, label: &str) -> Result<&FiniteGroup> {
        let e = self
            .catalog
            .find(label)
            .ok_or_else(|| anyhow!("{label} is not in the catalog"))?;
        Ok(self
            .known
            .iter()
            .find(|g| g.label() == e.label)
            .expect("catalog groups are all built"))
    }

    /// Exact report with every representative, cached per base group.
    fn base_report(&self, label: &str, kind: SearchKind) -> Result<(FiniteGroup, SearchReport)> {
        let g = self.known_group(label)?.clone();
        let key = (g.label().to_string(), kind);
        if let Some(r) = self.base_reports.lock().unwrap().get(&key) {
            return Ok((g, r.clone()));
        }
        let ctx = SearchContext::new(&g)?;
        let r = enumerate(
            &ctx,
            &SearchOptions::new(kind).with_representatives(usize::MAX),
            &self.pool,
        );
        self.base_reports.lock().unwrap().insert(key, r.clone());
        Ok((g, r))
    }

    pub fn lift(
        &self,
        ctx: &SearchContext<'_>,
        kernel_word: &str,
        base: &str,
        kind: SearchKind,
    ) -> Result<LiftReport> {
        let kernel = subgroup_from_words(ctx.group(), &[kernel_word.to_string()])?;
        let (base_g, base_r) = self.base_report(base, kind)?;
        let r = count_via_lifting(
            ctx,
            &kernel,
            &base_g,
            &base_r,
            &LiftOptions {
                kind,
                sample: self.opts.lift_sample,
            },
        )?;
        Ok(r)
    }
}

pub fn profile_report(g: &FiniteGroup, p: &GroupProfile, known: &[FiniteGroup]) -> ProfileReport {
    ProfileReport {
        is_abelian: p.is_abelian,
        is_cct: p.is_cct(),
        cct_witness: match p.cct {
            Cct::NotCct { witness: (x, y, z) } => {
                Some([g.element_name(x), g.element_name(y), g.element_name(z)])
            }
            _ => None,
        },
        is_monolithic: p.is_monolithic,
        monolith_order: p.monolith_order,
        is_extraspecial: p.is_extraspecial,
        nilpotency: nilpotency_name(&p.nilpotency),
        center_order: p.center_order,
        center_structure: structure_name(g, &center(g), known),
        derived_order: p.derived_order,
        derived_structure: structure_name(g, &derived_subgroup(g), known),
        aut_order: p.aut_order.map(|a| a as u64),
    }
}

pub fn screen_text(v: &ScreenVerdict, g: &FiniteGroup, known: &[FiniteGroup]) -> String {
    match v {
        ScreenVerdict::Abelian => "abelian: no prestructures".into(),
        ScreenVerdict::Cct => "CCT: no prestructures".into(),
        ScreenVerdict::NoQuotient => {
            "not monolithic and no quotient admits prestructures: none".into()
        }
        ScreenVerdict::SearchRequired {
            monolithic,
            z_in_monolith,
            quotients,
        } => {
            let mut s = String::from("search required");
            if *monolithic {
                s.push_str("; monolithic");
            }
            if *z_in_monolith {
                s.push_str("; z lies in the monolith");
            }
            for q in quotients {
                let name = quotient(g, &q.kernel)
                    .ok()
                    .and_then(|m| {
                        known
                            .iter()
                            .find(|k| k.order() == q.order && is_isomorphic(&m.target, k).is_some())
                    })
                    .map(|k| k.label().to_string())
                    .unwrap_or_else(|| format!("order {}", q.order));
                let es = if q.extraspecial {
                    " (extra-special)"
                } else {
                    ""
                };
                s.push_str(&format!("; quotient {name}{es}"));
            }
            s
        }
    }
}

/// Exact search plus the checks every report must pass.
#[allow(clippy::too_many_arguments)]
pub fn exact_search(
    g: &FiniteGroup,
    ctx: &SearchContext<'_>,
    kind: SearchKind,
    n_filter: Option<usize>,
    verify: usize,
    emit: usize,
    exec: &impl Executor,
    failures: &mut Vec<String>,
) -> (SearchReport, SearchSummary) {
    let mut so = SearchOptions::new(kind).with_representatives(verify.max(emit));
    so.n_filter = n_filter;
    let r = enumerate(ctx, &so, exec);
    let name = kind_name(kind);
    let mut verified = 0;
    for rep in r.representatives.iter().take(verify) {
        let t = StructureTuple::new(g, 2, rep.entries.to_vec())
            .expect("search tuples have nine valid entries");
        let reqs: &[Requirement] = match kind {
            SearchKind::Prestructures => &[Requirement::Prestructure],
            SearchKind::Structures => &[Requirement::Structure, Requirement::Prestructure],
        };
        for &req in reqs {
            match verify_tuple(g, &t, req) {
                Ok(v) if v.passed => {}
                Ok(v) => failures.push(format!(
                    "{name}: representative {} fails {:?} ({})",
                    format_tuple(g, &rep.entries),
                    req,
                    v.first_failure()
                        .map(|c| c.label.clone())
                        .unwrap_or_else(|| "order or generation".into())
                )),
                Err(e) => failures.push(format!("{name}: verifier error {e}")),
            }
        }
        verified += 1;
    }
    let orbit_identity = r.orbit_identity_holds();
    if !orbit_identity {
        failures.push(format!(
            "{name}: orbit-stabilizer sum differs from the total"
        ));
    }
    if !r.entries_noncentral {
        failures.push(format!(
            "{name}: a counted tuple has a central entry besides z"
        ));
    }
    let summary = SearchSummary {
        kind: name.into(),
        method: "exact".into(),
        total: r.total_count,
        orbits: r.orbit_count,
        stabilizer_histogram: r.stabilizer_histogram.clone(),
        n_values: r.n_values_seen.iter().copied().collect(),
        flags: Some(Flags {
            z_always_central: r.z_always_central,
            k_centralizer_always_center: r.k_centralizer_always_center,
            entries_noncentral: r.entries_noncentral,
            orbit_identity,
        }),
        representatives_verified: verified,
        representatives: r
            .representatives
            .iter()
            .take(emit)
            .map(|x| format_tuple(g, &x.entries))
            .collect(),
    };
    (r, summary)
}

pub fn lift_summary(r: &LiftReport) -> LiftSummary {
    LiftSummary {
        kind: kind_name(r.kind).into(),
        base: r.base_label.clone(),
        kernel_order: r.kernel_order,
        lift_multiplicity: r.lift_multiplicity,
        generating_lifts: r.generating_lift_count(),
        passing_lifts: r.profile.passing,
        trivial_lift_stabilizer: r.trivial_lift_stabilizer_order(),
        trivial_lift_generated_order: r.profile.trivial_lift_generated_order,
        base_tuples_examined: r.base_tuples_examined,
        exhaustive: r.exhaustive,
        profiles_uniform: r.profiles_uniform,
        aut_lifts: r.aut_lifts,
        aut_index: r.aut_index,
        orbits: r.orbit_count,
        total: r.total_count,
        stabilizer_histogram: r.stabilizer_histogram.clone(),
    }
}

struct Diffs(Vec<Diff>);

impl Diffs {
    fn check<T: PartialEq + std::fmt::Debug>(&mut self, metric: &str, expected: T, actual: T) {
        if expected != actual {
            self.0.push(Diff {
                metric: metric.into(),
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }
}

pub fn run_entry(runner: &Runner<'_>, entry: &CatalogEntry) -> EntryReport {
    let start = Instant::now();
    let exp = &entry.expected;
    let mut rep = EntryReport {
        label: entry.label.clone(),
        order: entry.order(),
        auxiliary: entry.auxiliary,
        mode: if exp.lift.is_some() { "lift" } else { "exact" }.into(),
        profile: None,
        screen: None,
        quotients: Vec::new(),
        search: Vec::new(),
        lift: Vec::new(),
        burnside: Vec::new(),
        expected_diff: Vec::new(),
        invariant_failures: Vec::new(),
        errors: Vec::new(),
        notes: exp.notes.clone(),
        timing: Timing::default(),
    };
    if let Err(e) = fill_entry(runner, entry, &mut rep) {
        rep.errors.push(format!("{e:#}"));
    }
    rep.timing.elapsed_ms = start.elapsed().as_millis() as u64;
    rep
}

fn fill_entry(runner: &Runner<'_>, entry: &CatalogEntry, rep: &mut EntryReport) -> Result<()> {
    let exp = &entry.expected;
    let opts = &runner.opts;
    let g = runner.known_group(&entry.label)?;
    let known = runner.known();
    let mut diffs = Diffs(Vec::new());

    let aut: AutGroup = automorphism_group_with_cap(g, EXACT_ORDER_CAP)?;
    let mut p = profile(g, None);
    p.aut_order = Some(aut.order());
    let pr = profile_report(g, &p, known);
    diffs.check("aut_order", exp.aut_order, aut.order() as u64);
    diffs.check(
        "nilpotency",
        exp.nilpotency.as_str(),
        pr.nilpotency.as_str(),
    );
    diffs.check("monolithic", exp.monolithic, pr.is_monolithic);
    diffs.check("extraspecial", exp.extraspecial, pr.is_extraspecial);
    diffs.check("cct", exp.cct, pr.is_cct);
    diffs.check(
        "center",
        subgroup_from_words(g, &exp.center.gens)?,
        center(g),
    );
    diffs.check(
        "center_structure",
        exp.center.structure.as_str(),
        pr.center_structure.as_str(),
    );
    diffs.check(
        "derived",
        subgroup_from_words(g, &exp.derived.gens)?,
        derived_subgroup(g),
    );
    diffs.check(
        "derived_structure",
        exp.derived.structure.as_str(),
        pr.derived_structure.as_str(),
    );
    diffs.check(
        "monolith",
        subgroup_from_words(g, &exp.monolith)?,
        monolith(g),
    );
    rep.profile = Some(pr);

    for q in &exp.quotients {
        let kernel = subgroup_from_words(g, std::slice::from_ref(&q.kernel))?;
        let target = runner.known_group(&q.target)?;
        let iso = quotient(g, &kernel)
            .map(|m| is_isomorphic(&m.target, target).is_some())
            .unwrap_or(false);
        diffs.check(&format!("quotient G/<{}>", q.kernel), true, iso);
        rep.quotients.push(QuotientCheck {
            kernel: q.kernel.clone(),
            target: q.target.clone(),
            isomorphic: iso,
        });
    }

    let verdict = screen_group(g)?;
    rep.screen = Some(screen_text(&verdict, g, known));

    let ctx = SearchContext::with_aut(g, &aut)?;
    let mut exact: BTreeMap<SearchKind, SearchReport> = BTreeMap::new();
    if exp.lift.is_none() || opts.exact_cross_check {
        for kind in [SearchKind::Prestructures, SearchKind::Structures] {
            let (r, s) = exact_search(
                g,
                &ctx,
                kind,
                None,
                opts.verify_representatives,
                opts.emit_representatives,
                &runner.pool,
                &mut rep.invariant_failures,
            );
            if exp.lift.is_none() {
                rep.search.push(s);
            } else {
                rep.notes.push(format!(
                    "exact cross-check ({}): {} orbits, total {}",
                    kind_name(kind),
                    r.orbit_count,
                    r.total_count
                ));
            }
            exact.insert(kind, r);
        }
    }
    if let Some(pre) = exact.get(&SearchKind::Prestructures) {
        if verdict.rules_out_prestructures() && pre.total_count > 0 {
            rep.invariant_failures
                .push("screen ruled out prestructures but the search found some".into());
        }
        if let ScreenVerdict::SearchRequired {
            z_in_monolith: true,
            ..
        } = verdict
        {
            let m = monolith(g);
            let ok = pre.representatives.iter().all(|t| m.contains(t.entries[8]));
            if !ok {
                rep.invariant_failures
                    .push("a prestructure has z outside the monolith".into());
            }
        }
    }

    if let Some(lift) = &exp.lift {
        for kind in [SearchKind::Prestructures, SearchKind::Structures] {
            let lr = runner.lift(&ctx, &lift.kernel, &lift.base, kind)?;
            if !lr.notes.is_empty() {
                rep.invariant_failures.extend(
                    lr.notes
                        .iter()
                        .map(|n| format!("lift ({}): {n}", kind_name(kind))),
                );
            }
            if let Some(x) = exact.get(&kind) {
                if (x.orbit_count, x.total_count, &x.stabilizer_histogram)
                    != (lr.orbit_count, lr.total_count, &lr.stabilizer_histogram)
                {
                    rep.invariant_failures.push(format!(
                        "lift ({}) gives {} orbits / {} total, exact search {} / {}",
                        kind_name(kind),
                        lr.orbit_count,
                        lr.total_count,
                        x.orbit_count,
                        x.total_count
                    ));
                }
            }
            if kind == SearchKind::Prestructures {
                let factorized = count_prestructures_within(&ctx, ctx.tables().full_mask(), None);
                if factorized != lr.total_count {
                    rep.invariant_failures.push(format!(
                        "lifted prestructure total {} differs from factorized count {factorized}",
                        lr.total_count
                    ));
                }
            }
            let x = exact.get(&kind);
            rep.search.push(SearchSummary {
                kind: kind_name(kind).into(),
                method: "lift".into(),
                total: lr.total_count,
                orbits: lr.orbit_count,
                stabilizer_histogram: lr.stabilizer_histogram.clone(),
                n_values: x
                    .map(|x| x.n_values_seen.iter().copied().collect())
                    .unwrap_or_default(),
                flags: x.map(|x| Flags {
                    z_always_central: x.z_always_central,
                    k_centralizer_always_center: x.k_centralizer_always_center,
                    entries_noncentral: x.entries_noncentral,
                    orbit_identity: x.orbit_identity_holds(),
                }),
                representatives_verified: 0,
                representatives: Vec::new(),
            });
            rep.lift.push(lift_summary(&lr));
        }
    }

    if g.order() <= opts.burnside_max_order {
        for kind in [SearchKind::Prestructures, SearchKind::Structures] {
            let b = burnside(&ctx, kind, None);
            if let Some(x) = exact.get(&kind) {
                if b.orbit_count != Some(x.orbit_count) || b.total != x.total_count {
                    rep.invariant_failures
                        .push(format!("Burnside count disagrees for {}", kind_name(kind)));
                }
            }
            rep.burnside.push(BurnsideSummary {
                kind: kind_name(kind).into(),
                distinct_fixed_sets: b.distinct_fixed_sets,
                fixed_point_sum: b.fixed_point_sum.to_string(),
                orbits: b.orbit_count,
            });
        }
    }

    let pre = rep.search("prestructures").cloned();
    let st = rep.search("structures").cloned();
    if let (Some(pre), Some(st)) = (pre, st) {
        diffs.check("prestructure_orbits", exp.prestructure_orbits, pre.orbits);
        diffs.check("structure_orbits", exp.structure_orbits, st.orbits);
        diffs.check("structure_total", exp.structure_total, st.total);
        if exp.prestructure_orbits > 0 {
            diffs.check("n_values", vec![2], pre.n_values.clone());
            diffs.check(
                "z_always_central",
                Some(true),
                pre.flags.as_ref().map(|f| f.z_always_central),
            );
        }
        if let Some(k) = exp.k_centralizer_always_center {
            diffs.check(
                "k_centralizer_always_center",
                Some(k),
                pre.flags.as_ref().map(|f| f.k_centralizer_always_center),
            );
        }
    }
    rep.expected_diff = diffs.0;
    Ok(())
}

/// Run every selected entry. Entries run one after another; each search
/// uses the runner's worker pool.
pub fn run_catalog(
    catalog: &Catalog,
    filter: &Filter,
    opts: RunOptions,
) -> Result<Vec<EntryReport>> {
    let entries = filter.select(catalog);
    if entries.is_empty() {
        bail!("no catalog entry matches {filter:?}");
    }
    let runner = Runner::new(catalog, opts).context("preparing the catalog")?;
    Ok(entries.into_iter().map(|e| run_entry(&runner, e)).collect())
}

/// The element set as sorted names, for messages.
pub fn describe_set(g: &FiniteGroup, s: &ElementSet) -> String {
    s.iter()
        .map(|x| g.element_name(x))
        .collect::<Vec<_>>()
        .join(", ")
}
