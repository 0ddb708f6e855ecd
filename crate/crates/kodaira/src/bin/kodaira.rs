use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kodaira::catalog::{Catalog, CatalogEntry};
use kodaira::config::order_cap;
use kodaira::ingest::parse_table;
use kodaira::report::{run_status, write_artifacts, Status};
use kodaira::run::{
    exact_search, kind_name, lift_summary, profile_report, screen_text, Filter, RunOptions, Runner,
};
use kodaira::tuple::parse_tuple;
use kodaira_core::braid::{verify_tuple, Requirement, StructureTuple};
use kodaira_core::grouptheory::automorphism_group_with_cap;
use kodaira_core::pcgroup::build_group_with_cap;
use kodaira_core::predicates::profile;
use kodaira_core::search::{screen_group, SearchContext, SearchKind, EXACT_ORDER_CAP};
use kodaira_core::{parse_presentation, FiniteGroup};

#[derive(Parser)]
#[command(
    name = "kodaira",
    version,
    about = "Finite groups, surface braid relations and structure counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the group profile.
    Analyze {
        #[command(flatten)]
        group: GroupArgs,
        /// Skip the automorphism group.
        #[arg(long)]
        no_aut: bool,
        /// Also write the profile as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Count prestructures or structures.
    Search {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = Kind::Structures)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        /// Only count tuples whose z has this order.
        #[arg(long = "n")]
        n_filter: Option<usize>,
        #[command(flatten)]
        workers: Workers,
        /// Print up to this many orbit representatives.
        #[arg(long, value_name = "N", num_args = 0..=1, default_missing_value = "20")]
        emit_representatives: Option<usize>,
        /// Write the report as JSON.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Base tuples examined when lifting.
        #[arg(long, default_value_t = 64, conflicts_with = "exhaustive_lift")]
        lift_sample: usize,
        /// Examine every base tuple when lifting.
        #[arg(long)]
        exhaustive_lift: bool,
    },
    /// Check a tuple against the relations of the pure braid group.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        /// Genus.
        #[arg(long, default_value_t = 2)]
        b: usize,
        /// Entries separated by `;`, as exponent vectors or element indices.
        #[arg(long)]
        tuple: String,
        /// Only the prestructure relations (genus 2).
        #[arg(long)]
        prestructure: bool,
    },
    /// Reproduce the built-in catalog.
    Catalog {
        #[arg(long, conflicts_with = "label")]
        order: Option<usize>,
        #[arg(long)]
        label: Option<String>,
        /// Directory for the JSON reports and summary.csv.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        workers: Workers,
        /// Leave the timing field out of the JSON reports.
        #[arg(long)]
        no_timing: bool,
        /// Representatives per search checked with the relation verifier.
        #[arg(long, default_value_t = 256)]
        verify_representatives: usize,
        /// Examine every base tuple when lifting.
        #[arg(long)]
        exhaustive_lift: bool,
        /// Skip the exact cross-check of lifted counts.
        #[arg(long)]
        no_exact_cross_check: bool,
        /// Largest order for the Burnside cross-check.
        #[arg(long, default_value_t = 32)]
        burnside_max_order: usize,
        /// List the entries and exit.
        #[arg(long)]
        list: bool,
    },
    /// Print a presentation file.
    EmitPresentation {
        #[command(flatten)]
        group: GroupArgs,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupArgs {
    /// Catalog label such as `G(32,49)`, `32,49` or `Q8`.
    label: Option<String>,
    /// Presentation file.
    #[arg(long)]
    pc: Option<PathBuf>,
    /// Multiplication table file.
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Args)]
struct Workers {
    /// Worker threads (default: available parallelism).
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Prestructures,
    Structures,
}

impl From<Kind> for SearchKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Prestructures => SearchKind::Prestructures,
            Kind::Structures => SearchKind::Structures,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Lift,
}

/// Failure classes, mapped to exit codes.
enum Failure {
    Usage(anyhow::Error),
    Internal(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.into())
    }
}

struct Loaded<'c> {
    group: FiniteGroup,
    names: Option<Vec<String>>,
    entry: Option<&'c CatalogEntry>,
}

fn load<'c>(args: &GroupArgs, catalog: &'c Catalog) -> Result<Loaded<'c>> {
    let cap = order_cap()?;
    if let Some(l) = &args.label {
        let entry = catalog
            .find(l)
            .ok_or_else(|| anyhow!("no catalog entry {l:?}"))?;
        return Ok(Loaded {
            group: entry.build(cap)?,
            names: None,
            entry: Some(entry),
        });
    }
    if let Some(p) = &args.pc {
        let text = read(p)?;
        let pres = parse_presentation(&text).with_context(|| p.display().to_string())?;
        let group = build_group_with_cap(&pres, cap).with_context(|| p.display().to_string())?;
        let entry = catalog.find(&pres.name).filter(|e| e.presentation == pres);
        return Ok(Loaded {
            group,
            names: None,
            entry,
        });
    }
    let p = args.table.as_ref().expect("clap requires one group source");
    let label = p
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "table".into());
    let t = parse_table(&read(p)?, &label, cap).with_context(|| p.display().to_string())?;
    Ok(Loaded {
        group: t.group,
        names: t.names,
        entry: None,
    })
}

fn read(p: &Path) -> Result<String> {
    std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analyze(
    group: &GroupArgs,
    no_aut: bool,
    json: Option<&Path>,
    catalog: &Catalog,
) -> Result<Status, Failure> {
    let l = load(group, catalog)?;
    let g = &l.group;
    let known: Vec<FiniteGroup> = catalog
        .entries()
        .iter()
        .filter_map(|e| e.build(kodaira_core::DEFAULT_ORDER_CAP).ok())
        .collect();
    let mut p = profile(g, None);
    if !no_aut {
        p.aut_order =
            Some(automorphism_group_with_cap(g, EXACT_ORDER_CAP.max(order_cap()?))?.order());
    }
    let pr = profile_report(g, &p, &known);
    println!("group: {}", g.label());
    println!("order: {}", g.order());
    println!("abelian: {}", yes(pr.is_abelian));
    println!(
        "center: order {} ({})",
        pr.center_order, pr.center_structure
    );
    println!(
        "derived subgroup: order {} ({})",
        pr.derived_order, pr.derived_structure
    );
    if pr.is_abelian {
        println!("CCT: n/a");
    } else {
        println!("CCT: {}", yes(pr.is_cct));
    }
    if let Some([x, y, z]) = &pr.cct_witness {
        println!("  witness: x = {x}, y = {y}, z = {z}");
    }
    if pr.is_monolithic {
        println!("monolithic: yes (monolith of order {})", pr.monolith_order);
    } else {
        println!("monolithic: no");
    }
    println!("extra-special: {}", yes(pr.is_extraspecial));
    println!("nilpotency: {}", pr.nilpotency);
    if let Some(a) = pr.aut_order {
        println!("|Aut|: {a}");
    }
    println!("screen: {}", screen_text(&screen_group(g)?, g, &known));
    if let Some(path) = json {
        let v = serde_json::json!({ "label": g.label(), "order": g.order(), "profile": pr });
        std::fs::write(path, serde_json::to_string_pretty(&v)? + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(Status::Ok)
}

#[allow(clippy::too_many_arguments)]
fn search(
    group: &GroupArgs,
    kind: SearchKind,
    mode: Mode,
    n_filter: Option<usize>,
    workers: usize,
    emit: Option<usize>,
    output: Option<&Path>,
    lift_sample: Option<usize>,
    catalog: &Catalog,
) -> Result<Status, Failure> {
    let l = load(group, catalog)?;
    let g = &l.group;
    if g.order() > EXACT_ORDER_CAP {
        return Err(Failure::Usage(anyhow!(
            "order {} is above the search cap {EXACT_ORDER_CAP}",
            g.order()
        )));
    }
    let aut = automorphism_group_with_cap(g, EXACT_ORDER_CAP)?;
    let ctx = SearchContext::with_aut(g, &aut)?;
    let opts = RunOptions {
        workers,
        lift_sample,
        ..RunOptions::default()
    };
    let runner = Runner::new(catalog, opts)?;
    let mut failures = Vec::new();
    let emit_n = emit.unwrap_or(0);
    let (summary, lift) = match mode {
        Mode::Exact => {
            let (_, s) = exact_search(
                g,
                &ctx,
                kind,
                n_filter,
                256,
                emit_n,
                &runner.pool,
                &mut failures,
            );
            (s, None)
        }
        Mode::Lift => {
            let directive = l
                .entry
                .and_then(|e| e.expected.lift.clone())
                .ok_or_else(|| anyhow!("lift mode needs a catalog entry with quotient data"))?;
            if n_filter.is_some() {
                return Err(Failure::Usage(anyhow!(
                    "--n cannot be combined with lift mode"
                )));
            }
            let lr = runner.lift(&ctx, &directive.kernel, &directive.base, kind)?;
            failures.extend(lr.notes.iter().cloned());
            let ls = lift_summary(&lr);
            let s = kodaira::report::SearchSummary {
                kind: kind_name(kind).into(),
                method: "lift".into(),
                total: lr.total_count,
                orbits: lr.orbit_count,
                stabilizer_histogram: lr.stabilizer_histogram.clone(),
                n_values: Vec::new(),
                flags: None,
                representatives_verified: 0,
                representatives: Vec::new(),
            };
            (s, Some(ls))
        }
    };
    println!(
        "group: {} (order {}, |Aut| {})",
        g.label(),
        g.order(),
        aut.order()
    );
    println!("kind: {}, method: {}", summary.kind, summary.method);
    println!("orbits: {}, total: {}", summary.orbits, summary.total);
    let hist: Vec<String> = summary
        .stabilizer_histogram
        .iter()
        .map(|(s, c)| format!("{s}:{c}"))
        .collect();
    println!("stabilizers (order:orbits): {}", hist.join(" "));
    if let Some(f) = &summary.flags {
        let ns: Vec<String> = summary.n_values.iter().map(usize::to_string).collect();
        println!("n values: {{{}}}", ns.join(", "));
        println!("z always central: {}", yes(f.z_always_central));
        println!("C(K) = Z(G) always: {}", yes(f.k_centralizer_always_center));
        println!(
            "representatives verified: {}",
            summary.representatives_verified
        );
    }
    if let Some(ls) = &lift {
        println!(
            "lifting from {}: {} lifts per base tuple, {} passing, {} generating, trivial lift stabilizer {}, {} base tuples examined{}",
            ls.base,
            ls.lift_multiplicity,
            ls.passing_lifts,
            ls.generating_lifts,
            ls.trivial_lift_stabilizer,
            ls.base_tuples_examined,
            if ls.exhaustive { " (all)" } else { "" }
        );
        if !ls.aut_lifts {
            println!(
                "induced automorphisms have index {} in Aut({})",
                ls.aut_index, ls.base
            );
        }
    }
    for t in &summary.representatives {
        println!("rep {t}");
    }
    if let Some(path) = output {
        let v = serde_json::json!({ "label": g.label(), "order": g.order(), "aut_order": aut.order(), "search": summary, "lift": lift });
        std::fs::write(path, serde_json::to_string_pretty(&v)? + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if !failures.is_empty() {
        for f in &failures {
            eprintln!("invariant violated: {f}");
        }
        return Ok(Status::Invariant);
    }
    Ok(Status::Ok)
}

fn verify(
    group: &GroupArgs,
    b: usize,
    tuple: &str,
    prestructure: bool,
    catalog: &Catalog,
) -> Result<Status, Failure> {
    let l = load(group, catalog)?;
    let g = &l.group;
    let entries = parse_tuple(g, l.names.as_deref(), tuple)?;
    let t = StructureTuple::new(g, b, entries)?;
    let req = if prestructure {
        Requirement::Prestructure
    } else {
        Requirement::Structure
    };
    let v = verify_tuple(g, &t, req)?;
    for c in &v.checks {
        let mark = if c.holds { "ok" } else { "FAIL" };
        println!(
            "{:<4} {:<4} {}   [{} vs {}]",
            mark,
            c.label,
            c.relation,
            g.element_name(c.lhs),
            g.element_name(c.rhs)
        );
    }
    println!(
        "o(z) = {}{}",
        v.n,
        if v.order_ok {
            ""
        } else {
            "  FAIL (need at least 2)"
        }
    );
    if let Some(o) = v.generated_order {
        println!(
            "generated subgroup: order {o} of {}{}",
            g.order(),
            if o == g.order() { "" } else { "  FAIL" }
        );
    }
    if v.passed {
        println!("pass: type ({}, {})", v.b, v.n);
        Ok(Status::Ok)
    } else {
        println!("fail");
        Ok(Status::Mismatch)
    }
}

fn emit(group: &GroupArgs, catalog: &Catalog) -> Result<Status, Failure> {
    let l = load(group, catalog)?;
    let pres = l
        .group
        .source()
        .ok_or_else(|| anyhow!("tables carry no presentation"))?;
    print!("{pres}");
    Ok(Status::Ok)
}

fn run(cli: Cli) -> Result<Status, Failure> {
    let catalog = Catalog::builtin().map_err(Failure::Internal)?;
    match cli.command {
        Command::Analyze {
            group,
            no_aut,
            json,
        } => analyze(&group, no_aut, json.as_deref(), &catalog),
        Command::Search {
            group,
            kind,
            mode,
            n_filter,
            workers,
            emit_representatives,
            output,
            lift_sample,
            exhaustive_lift,
        } => search(
            &group,
            kind.into(),
            mode,
            n_filter,
            workers.workers,
            emit_representatives,
            output.as_deref(),
            (!exhaustive_lift).then_some(lift_sample),
            &catalog,
        ),
        Command::Verify {
            group,
            b,
            tuple,
            prestructure,
        } => verify(&group, b, &tuple, prestructure, &catalog),
        Command::Catalog {
            order,
            label,
            out,
            workers,
            no_timing,
            verify_representatives,
            exhaustive_lift,
            no_exact_cross_check,
            burnside_max_order,
            list,
        } => {
            let filter = match (order, label) {
                (Some(n), _) => Filter::Order(n),
                (_, Some(l)) => Filter::Label(l),
                _ => Filter::All,
            };
            if list {
                for e in filter.select(&catalog) {
                    println!(
                        "{:<10} order {:>3}{}",
                        e.label,
                        e.order(),
                        if e.auxiliary { "  auxiliary" } else { "" }
                    );
                }
                return Ok(Status::Ok);
            }
            let opts = RunOptions {
                workers: workers.workers,
                order_cap: order_cap()?,
                verify_representatives,
                lift_sample: if exhaustive_lift { None } else { Some(64) },
                burnside_max_order,
                exact_cross_check: !no_exact_cross_check,
                ..RunOptions::default()
            };
            let reports = kodaira::run_catalog(&catalog, &filter, opts)?;
            println!(
                "{:<10} {:>5} {:>4} {:>6} {:>12} {:>10} {:>13} {:>5}  status",
                "group", "order", "mono", "|Aut|", "prestruct.", "structures", "total", "mode"
            );
            for r in &reports {
                let pre = r.search("prestructures");
                let st = r.search("structures");
                let dash = || "-".to_string();
                println!(
                    "{:<10} {:>5} {:>4} {:>6} {:>12} {:>10} {:>13} {:>5}  {:?}",
                    r.label,
                    r.order,
                    r.profile
                        .as_ref()
                        .map(|p| yes(p.is_monolithic))
                        .unwrap_or("-"),
                    r.profile
                        .as_ref()
                        .and_then(|p| p.aut_order)
                        .map(|a| a.to_string())
                        .unwrap_or_else(dash),
                    pre.map(|s| s.orbits.to_string()).unwrap_or_else(dash),
                    st.map(|s| s.orbits.to_string()).unwrap_or_else(dash),
                    st.map(|s| s.total.to_string()).unwrap_or_else(dash),
                    r.mode,
                    r.status()
                );
                for d in &r.expected_diff {
                    println!(
                        "    mismatch {}: expected {}, got {}",
                        d.metric, d.expected, d.actual
                    );
                }
                for f in &r.invariant_failures {
                    println!("    invariant: {f}");
                }
                for e in &r.errors {
                    println!("    error: {e}");
                }
            }
            if let Some(dir) = out {
                write_artifacts(&dir, &reports, !no_timing)?;
            }
            Ok(run_status(&reports))
        }
        Command::EmitPresentation { group } => emit(&group, &catalog),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(s) => ExitCode::from(s.exit_code() as u8),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("internal error: {e:#}");
            ExitCode::from(3)
        }
    }
}
