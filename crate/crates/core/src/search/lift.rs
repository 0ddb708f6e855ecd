use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::engine::SearchContext;
use super::relations::{self, Genus2Relation, R11, T21, Z};
use super::tables::{bit, SearchTables};
use super::{SearchKind, SearchReport};
use crate::grouptheory::{automorphism_group, is_isomorphic, quotient};
use crate::{ElementSet, Error, FiniteGroup, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftOptions {
    pub kind: SearchKind,
    /// Examine this many base orbit representatives, spread evenly over
    /// the report's list; `None` examines all of them.
    pub sample: Option<usize>,
}

/// What happens to the lifts of one base tuple.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LiftProfile {
    /// `|N|^8`.
    pub lifts: u64,
    /// Lifts of the requested kind.
    pub passing: u64,
    /// Passing lifts that generate the group.
    pub generating: u64,
    /// Stabilizer order to number of passing lifts.
    pub stabilizers: BTreeMap<u64, u64>,
    /// The lift built from the canonical preimages alone.
    pub trivial_lift_passes: bool,
    pub trivial_lift_stabilizer: u64,
    pub trivial_lift_generated_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftReport {
    pub group_label: String,
    pub base_label: String,
    pub kind: SearchKind,
    pub kernel_order: usize,
    pub lift_multiplicity: u64,
    pub aut_order: u64,
    pub base_aut_order: u64,
    /// Every automorphism of the quotient comes from one of the group.
    pub aut_lifts: bool,
    /// Index of the induced group in `Aut(G/N)`.
    pub aut_index: usize,
    pub base_tuples_examined: usize,
    pub exhaustive: bool,
    /// All examined base tuples have the same lift profile.
    pub profiles_uniform: bool,
    /// Profile of the first examined base tuple.
    pub profile: LiftProfile,
    pub total_count: u64,
    pub orbit_count: u64,
    pub stabilizer_histogram: BTreeMap<u64, u64>,
    pub notes: Vec<String>,
}

impl LiftReport {
    pub fn generating_lift_count(&self) -> u64 {
        self.profile.generating
    }

    pub fn trivial_lift_stabilizer_order(&self) -> u64 {
        self.profile.trivial_lift_stabilizer
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Count tuples of `G` through a quotient `G/N` by a characteristic
/// subgroup `N`, given orbit representatives on the quotient. Each base
/// tuple lifts by choosing preimages of its eight non-`z` entries (`z` is
/// then forced by `[r11, t21] = z^-1`). Lift counts are invariant under the
/// image `A` of `Aut(G)` in `Aut(G/N)`, so a base orbit is covered by
/// applying one representative of each coset of `A` to its representative.
/// When `N` is central every automorphism of the quotient lifts and there
/// is one coset. Stabilizers of lifts that generate `G` are trivial; all
/// others are found by scanning `Aut(G)`.
pub fn count_via_lifting(
    ctx: &SearchContext<'_>,
    kernel: &ElementSet,
    base: &FiniteGroup,
    base_report: &SearchReport,
    opts: &LiftOptions,
) -> Result<LiftReport> {
    let g = ctx.group();
    let s = ctx.tables();
    let aut = ctx.aut_table();
    if base_report.kind != opts.kind {
        return Err(Error::Precondition(
            "base report is for a different kind of tuple".into(),
        ));
    }
    if base_report.n_filter.is_some() {
        return Err(Error::Precondition(
            "base report must not filter on the order of z".into(),
        ));
    }
    let q = quotient(g, kernel)?;
    let qn = q.target.order();
    if gcd(qn, kernel.len()) != 1 {
        return Err(Error::Precondition(
            "kernel order is not coprime to its index".into(),
        ));
    }
    let iso = is_isomorphic(base, &q.target).ok_or_else(|| {
        Error::Precondition(format!(
            "{} is not isomorphic to the quotient",
            base.label()
        ))
    })?;

    // Canonical preimage of each coset: the least x with x^|G/N| = 1. It is
    // unique when N is central.
    let mut section = alloc::vec![usize::MAX; qn];
    for x in g.elements() {
        let c = q.proj[x];
        if section[c] == usize::MAX && g.pow(x, qn as i64) == 0 {
            section[c] = x;
        }
    }
    if section.contains(&usize::MAX) {
        return Err(Error::Precondition(
            "some coset has no element of order dividing the index".into(),
        ));
    }

    // Image of Aut(G) in Aut(G/N).
    let mut induced: BTreeSet<Vec<u16>> = BTreeSet::new();
    let mut induced_of = Vec::with_capacity(aut.len());
    for a in 0..aut.len() as u32 {
        if kernel
            .iter()
            .any(|x| !kernel.contains(aut.image(a, x as u8) as usize))
        {
            return Err(Error::Precondition("kernel is not characteristic".into()));
        }
        let bar: Vec<u16> = q
            .reps
            .iter()
            .map(|&r| q.proj[aut.image(a, r as u8) as usize] as u16)
            .collect();
        induced.insert(bar.clone());
        induced_of.push(bar);
    }
    let aut_lifts = induced.len() as u64 == base_report.aut_order;
    // Right coset representatives of the induced group in Aut(G/N).
    let identity: Vec<u16> = (0..qn as u16).collect();
    let cosets: Vec<Vec<u16>> = if aut_lifts {
        alloc::vec![identity]
    } else {
        let full = automorphism_group(&q.target)?;
        if full.order() as u64 != base_report.aut_order {
            return Err(Error::Precondition(
                "base report and quotient disagree on |Aut|".into(),
            ));
        }
        let mut covered: BTreeSet<Vec<u16>> = BTreeSet::new();
        let mut reps = Vec::new();
        for phi in full.elements() {
            if covered.contains(phi.perm()) {
                continue;
            }
            for a in &induced {
                covered.insert(phi.perm().iter().map(|&x| a[x as usize]).collect());
            }
            reps.push(phi.perm().to_vec());
        }
        reps
    };
    let induced_order = induced.len() as u128;

    let reps = &base_report.representatives;
    if reps.is_empty() && base_report.orbit_count > 0 {
        return Err(Error::Precondition(
            "base report lacks representatives".into(),
        ));
    }
    let (picked, exhaustive): (Vec<usize>, bool) = match opts.sample {
        None => {
            if reps.len() as u64 != base_report.orbit_count {
                return Err(Error::Precondition(
                    "base report does not list every orbit".into(),
                ));
            }
            ((0..reps.len()).collect(), true)
        }
        Some(k) => {
            let k = k.clamp(1, reps.len().max(1));
            let mut v: Vec<usize> = (0..k).map(|i| i * reps.len() / k).collect();
            v.dedup();
            let all = v.len() as u64 == base_report.orbit_count;
            (v, all)
        }
    };

    let n_elems: Vec<u8> = kernel.iter().map(|x| x as u8).collect();
    let lifts = (n_elems.len() as u64).pow(8);
    let aut_order = aut.len() as u64;
    let mut profiles = Vec::with_capacity(picked.len());
    let mut exact_total: u128 = 0;
    let mut exact_hist: BTreeMap<u64, u128> = BTreeMap::new();
    for &ri in &picked {
        let rep = &reps[ri];
        let n = base.order_of(rep.entries[Z]);
        let mut passing = 0u128;
        let mut weighted: BTreeMap<u64, u128> = BTreeMap::new();
        for c in &cosets {
            let bar: Vec<usize> = rep.entries.iter().map(|&x| c[iso[x]] as usize).collect();
            let canon: Vec<u8> = bar.iter().map(|&c| section[c] as u8).collect();
            // Automorphisms whose image fixes the base tuple; only these can
            // fix a lift.
            let over: Vec<u32> = (0..aut.len() as u32)
                .filter(|&a| bar.iter().all(|&c| induced_of[a as usize][c] as usize == c))
                .collect();
            let prof = profile_lifts(s, aut, &canon, &n_elems, &over, opts.kind, n);
            passing += prof.passing as u128;
            for (&st, &c) in &prof.stabilizers {
                *weighted.entry(st).or_default() += c as u128 * st as u128;
            }
            profiles.push(prof);
        }
        // A base orbit of size |Aut(G/N)|/|S| splits into A-orbits; summing
        // over cosets counts each tuple |S| times per |A|.
        let st = rep.stabilizer_order as u128;
        let scale = |x: u128| -> Result<u128> {
            let num = x * induced_order;
            if num % st != 0 {
                return Err(Error::Precondition(
                    "lift count over a base orbit is not integral".into(),
                ));
            }
            Ok(num / st)
        };
        exact_total += scale(passing)?;
        for (k, v) in weighted {
            *exact_hist.entry(k).or_default() += scale(v)?;
        }
    }
    let uniform =
        profiles.windows(2).all(|w| w[0] == w[1]) && base_report.stabilizer_histogram.len() <= 1;
    let profile = profiles.first().cloned().unwrap_or_default();

    let mut notes = Vec::new();
    let (total, hist) = if exhaustive {
        (exact_total, exact_hist)
    } else {
        if !uniform {
            notes.push(
                "lift profiles differ between sampled base tuples; counts are not extrapolated"
                    .into(),
            );
        }
        let bt = base_report.total_count as u128;
        let hist = profile
            .stabilizers
            .iter()
            .map(|(&st, &c)| (st, bt * c as u128 * st as u128))
            .collect();
        (bt * profile.passing as u128, hist)
    };
    // Orbits with stabilizer `st` number (tuples with that stabilizer) * st / |Aut(G)|.
    let mut stabilizer_histogram = BTreeMap::new();
    let mut orbit_count = 0u128;
    for (st, weighted) in hist {
        if weighted % aut_order as u128 != 0 {
            return Err(Error::Precondition(format!(
                "orbit count for stabilizer order {st} is not integral"
            )));
        }
        let o = weighted / aut_order as u128;
        orbit_count += o;
        stabilizer_histogram.insert(st, o as u64);
    }
    let valid = exhaustive || uniform;
    Ok(LiftReport {
        group_label: g.label().into(),
        base_label: base.label().into(),
        kind: opts.kind,
        kernel_order: kernel.len(),
        lift_multiplicity: lifts,
        aut_order,
        base_aut_order: base_report.aut_order,
        aut_lifts,
        aut_index: cosets.len(),
        base_tuples_examined: picked.len(),
        exhaustive,
        profiles_uniform: uniform,
        profile,
        total_count: if valid { total as u64 } else { 0 },
        orbit_count: if valid { orbit_count as u64 } else { 0 },
        stabilizer_histogram: if valid {
            stabilizer_histogram
        } else {
            BTreeMap::new()
        },
        notes,
    })
}

fn profile_lifts(
    s: &SearchTables,
    aut: &super::orbits::AutTable,
    canon: &[u8],
    kernel: &[u8],
    over: &[u32],
    kind: SearchKind,
    n: usize,
) -> LiftProfile {
    let m = kernel.len();
    let mut prof = LiftProfile {
        lifts: (m as u64).pow(8),
        ..Default::default()
    };
    let mut digits = [0usize; 8];
    loop {
        let mut t = [0u8; 9];
        for i in 0..8 {
            t[i] = s.mul(canon[i], kernel[digits[i]]);
        }
        t[Z] = s.inv(s.comm(t[R11], t[T21]));
        debug_assert_eq!(s.order_of(t[Z]) % n, 0);
        let pre = relations::is_prestructure(s, &t);
        let trivial = digits.iter().all(|&d| d == 0);
        if pre || trivial {
            let closure = s.closure(&t);
            let generates = closure == s.all;
            let passes = match kind {
                SearchKind::Prestructures => pre,
                SearchKind::Structures => {
                    pre && generates
                        && relations::holds(s, Genus2Relation::S1, &t)
                        && relations::holds(s, Genus2Relation::S2, &t)
                }
            };
            if passes || trivial {
                let stab = if generates {
                    1
                } else {
                    stabilizer(aut, over, &t)
                };
                if passes {
                    prof.passing += 1;
                    prof.generating += generates as u64;
                    *prof.stabilizers.entry(stab).or_default() += 1;
                }
                if trivial {
                    prof.trivial_lift_passes = passes;
                    prof.trivial_lift_stabilizer = stab;
                    prof.trivial_lift_generated_order = closure.count_ones() as usize;
                }
            }
        }
        // Next coefficient vector.
        let mut i = 0;
        while i < 8 {
            digits[i] += 1;
            if digits[i] < m {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == 8 {
            return prof;
        }
    }
}

fn stabilizer(aut: &super::orbits::AutTable, over: &[u32], t: &[u8; 9]) -> u64 {
    over.iter()
        .filter(|&&a| t.iter().all(|&x| aut.fix(a) & bit(x) != 0))
        .count() as u64
}
