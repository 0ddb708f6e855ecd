use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::orbits::AutTable;
use super::relations::{
    self, apply_level, Genus2Relation, R11, R12, R21, R22, T11, T12, T21, T22, Z,
};
use super::tables::{bit, bits, Mask, SearchTables};
use super::{Executor, Representative, SearchKind, SearchOptions, SearchReport, Serial};
use crate::grouptheory::{automorphism_group, AutGroup};
use crate::{FiniteGroup, Result};

/// Search levels fix tuple slots in this order.
const LEVEL_SLOT: [usize; 9] = [Z, R21, T21, R22, T22, R11, T11, R12, T12];

/// A group prepared for searching: byte tables and its automorphisms.
pub struct SearchContext<'g> {
    pub(crate) group: &'g FiniteGroup,
    pub(crate) tables: SearchTables,
    pub(crate) aut: AutTable,
}

impl<'g> SearchContext<'g> {
    pub fn new(group: &'g FiniteGroup) -> Result<Self> {
        let tables = SearchTables::new(group)?;
        let aut = automorphism_group(group)?;
        Ok(SearchContext {
            group,
            tables,
            aut: AutTable::new(&aut, group.order()),
        })
    }

    pub fn with_aut(group: &'g FiniteGroup, aut: &AutGroup) -> Result<Self> {
        let tables = SearchTables::new(group)?;
        Ok(SearchContext {
            group,
            tables,
            aut: AutTable::new(aut, group.order()),
        })
    }

    /// Tables only, for counts that ignore symmetry.
    pub(crate) fn bare(group: &'g FiniteGroup) -> Result<Self> {
        let tables = SearchTables::new(group)?;
        Ok(SearchContext {
            group,
            tables,
            aut: AutTable::empty(group.order()),
        })
    }

    pub(crate) fn aut_table(&self) -> &AutTable {
        &self.aut
    }

    pub fn group(&self) -> &FiniteGroup {
        self.group
    }

    pub fn tables(&self) -> &SearchTables {
        &self.tables
    }

    pub fn aut_order(&self) -> u64 {
        self.aut.len() as u64
    }

    /// Candidates for `z`: nontrivial elements of `[G, G]`, of order
    /// `n_filter` when given.
    pub(crate) fn z_candidates(&self, n_filter: Option<usize>) -> Mask {
        bits(self.tables.derived & !1)
            .filter(|&z| n_filter.map_or(true, |n| self.tables.order_of(z) == n))
            .fold(0, |m, z| m | bit(z))
    }

    /// Elements that can sit at search level `level` (1..=4, second row)
    /// given the earlier levels in `t`, without emptying a first-row mask.
    pub(crate) fn second_row_candidates(
        &self,
        kind: SearchKind,
        level: usize,
        t: &[u8; 9],
        masks: &[Mask; 4],
    ) -> Mask {
        let s = &self.tables;
        let slot = LEVEL_SLOT[level];
        let mut out = 0;
        for x in 0..s.n as u8 {
            let mut tt = *t;
            tt[slot] = x;
            let mut m = *masks;
            apply_level(s, level, &tt, &mut m);
            if m.contains(&0) {
                continue;
            }
            if level == 4
                && kind == SearchKind::Structures
                && !relations::holds(s, Genus2Relation::S2, &tt)
            {
                continue;
            }
            out |= bit(x);
        }
        out
    }

    pub(crate) fn after(&self, level: usize, t: &[u8; 9], masks: &[Mask; 4]) -> [Mask; 4] {
        let mut m = *masks;
        apply_level(&self.tables, level, t, &mut m);
        m
    }
}

struct Unit {
    t: [u8; 9],
    stab: Vec<u32>,
    masks: [Mask; 4],
}

#[derive(Default)]
struct Partial {
    total: u64,
    orbits: u64,
    hist: BTreeMap<u64, u64>,
    n_seen: BTreeSet<usize>,
    z_noncentral: bool,
    k_fail: bool,
    central_entry: bool,
    reps: Vec<Representative>,
}

impl Partial {
    fn merge(&mut self, o: Partial, limit: usize) {
        self.total += o.total;
        self.orbits += o.orbits;
        for (s, c) in o.hist {
            *self.hist.entry(s).or_default() += c;
        }
        self.n_seen.extend(o.n_seen);
        self.z_noncentral |= o.z_noncentral;
        self.k_fail |= o.k_fail;
        self.central_entry |= o.central_entry;
        let room = limit.saturating_sub(self.reps.len());
        self.reps.extend(o.reps.into_iter().take(room));
    }
}

struct Engine<'a, 'g> {
    ctx: &'a SearchContext<'g>,
    opts: &'a SearchOptions,
    aut_order: u64,
}

impl Engine<'_, '_> {
    fn s(&self) -> &SearchTables {
        &self.ctx.tables
    }

    fn units(&self) -> Vec<Unit> {
        let ctx = self.ctx;
        let kind = self.opts.kind;
        let everything: Vec<u32> = (0..ctx.aut.len() as u32).collect();
        let mut units = Vec::new();
        let m0 = [self.s().all; 4];
        for (z, hz) in ctx
            .aut
            .split(&everything, ctx.z_candidates(self.opts.n_filter))
        {
            let mut t = [0u8; 9];
            t[Z] = z;
            for (r21, h1) in ctx
                .aut
                .split(&hz, ctx.second_row_candidates(kind, 1, &t, &m0))
            {
                t[R21] = r21;
                let m1 = ctx.after(1, &t, &m0);
                for (t21, h2) in ctx
                    .aut
                    .split(&h1, ctx.second_row_candidates(kind, 2, &t, &m1))
                {
                    t[T21] = t21;
                    let m2 = ctx.after(2, &t, &m1);
                    units.push(Unit {
                        t,
                        stab: h2,
                        masks: m2,
                    });
                }
            }
        }
        units
    }

    fn run_unit(&self, u: &Unit) -> Partial {
        let ctx = self.ctx;
        let kind = self.opts.kind;
        let mut acc = Partial::default();
        let mut t = u.t;
        for (r22, h3) in ctx
            .aut
            .split(&u.stab, ctx.second_row_candidates(kind, 3, &t, &u.masks))
        {
            t[R22] = r22;
            let m3 = ctx.after(3, &t, &u.masks);
            for (t22, h4) in ctx
                .aut
                .split(&h3, ctx.second_row_candidates(kind, 4, &t, &m3))
            {
                t[T22] = t22;
                let m4 = ctx.after(4, &t, &m3);
                self.first_row(t, &m4, &h4, 0, &mut acc);
            }
        }
        if acc.orbits > 0 {
            let z = u.t[Z];
            acc.n_seen.insert(self.s().order_of(z));
            acc.z_noncentral = self.s().center & bit(z) == 0;
        }
        acc
    }

    /// Fix first-row slots `pos..4` orbit by orbit until the stabilizer is
    /// trivial, then count the rest directly.
    fn first_row(&self, t: [u8; 9], masks: &[Mask; 4], h: &[u32], pos: usize, acc: &mut Partial) {
        if h.len() == 1 {
            self.complete(&t, masks, pos, acc);
            return;
        }
        if pos == 4 {
            let keep = match self.opts.kind {
                SearchKind::Prestructures => true,
                SearchKind::Structures => self.is_structure(&t),
            };
            if keep {
                self.record(&t, h.len() as u64, acc);
            }
            return;
        }
        for (x, hx) in self.ctx.aut.split(h, masks[pos]) {
            let mut tt = t;
            tt[pos] = x;
            self.first_row(tt, masks, &hx, pos + 1, acc);
        }
    }

    fn is_structure(&self, t: &[u8; 9]) -> bool {
        let s = self.s();
        relations::holds(s, Genus2Relation::S1, t) && s.closure(t) == s.all
    }

    fn record(&self, t: &[u8; 9], stab: u64, acc: &mut Partial) {
        let s = self.s();
        acc.orbits += 1;
        acc.total += self.aut_order / stab;
        *acc.hist.entry(stab).or_default() += 1;
        let k = s.cent(t[R11]) & s.cent(t[T11]) & s.cent(t[R12]) & s.cent(t[T12]);
        acc.k_fail |= k != s.center;
        acc.central_entry |= t[..Z].iter().any(|&x| s.center & bit(x) != 0);
        if acc.reps.len() < self.opts.max_representatives {
            acc.reps.push(Representative {
                entries: t.map(usize::from),
                stabilizer_order: stab,
            });
        }
    }

    /// Trivial stabilizer: every tuple below is its own orbit.
    fn complete(&self, t: &[u8; 9], masks: &[Mask; 4], pos: usize, acc: &mut Partial) {
        let mut em = *masks;
        for (i, m) in em.iter_mut().enumerate().take(pos) {
            *m = bit(t[i]);
        }
        match self.opts.kind {
            SearchKind::Prestructures => self.complete_prestructures(t, &em, acc),
            SearchKind::Structures => self.complete_structures(t, &em, acc),
        }
    }

    fn complete_prestructures(&self, t: &[u8; 9], em: &[Mask; 4], acc: &mut Partial) {
        let s = self.s();
        let count: u64 = em.iter().map(|m| m.count_ones() as u64).product();
        if count == 0 {
            return;
        }
        acc.orbits += count;
        acc.total += count * self.aut_order;
        *acc.hist.entry(1).or_default() += count;
        acc.central_entry |= em.iter().any(|&m| m & s.center != 0)
            || [R21, T21, R22, T22]
                .iter()
                .any(|&i| s.center & bit(t[i]) != 0);
        acc.k_fail |= !self.k_always_center(em);
        if acc.reps.len() < self.opts.max_representatives {
            let mut tt = *t;
            'outer: for a in bits(em[0]) {
                tt[R11] = a;
                for b in bits(em[1]) {
                    tt[T11] = b;
                    for c in bits(em[2]) {
                        tt[R12] = c;
                        for d in bits(em[3]) {
                            tt[T12] = d;
                            if acc.reps.len() >= self.opts.max_representatives {
                                break 'outer;
                            }
                            acc.reps.push(Representative {
                                entries: tt.map(usize::from),
                                stabilizer_order: 1,
                            });
                        }
                    }
                }
            }
        }
    }

    /// Whether every choice from the masks has `C(K) = Z(G)`, checked over
    /// the distinct centralizers appearing in each mask.
    fn k_always_center(&self, em: &[Mask; 4]) -> bool {
        let s = self.s();
        let mut acc: BTreeSet<Mask> = BTreeSet::from([s.all]);
        for &m in em {
            let cents: BTreeSet<Mask> = bits(m).map(|x| s.cent(x)).collect();
            acc = acc
                .iter()
                .flat_map(|&a| cents.iter().map(move |&c| a & c))
                .collect();
        }
        acc.iter().all(|&c| c == s.center)
    }

    fn complete_structures(&self, t: &[u8; 9], em: &[Mask; 4], acc: &mut Partial) {
        for_each_structure(self.s(), t, em, |tt| self.record(tt, 1, acc));
    }
}

/// Visit every completion of the fixed second row and `z` in `t` with
/// first-row entries drawn from `em` that satisfies `S1` and generates the
/// group. `S1` reads `[r11^-1, t11^-1] = v(r12, t12, z)`, so the two pairs
/// are matched through a bucket on `v`.
pub(crate) fn for_each_structure(
    s: &SearchTables,
    t: &[u8; 9],
    em: &[Mask; 4],
    mut visit: impl FnMut(&[u8; 9]),
) {
    let z = t[Z];
    let mut buckets: BTreeMap<u8, Vec<(u8, u8)>> = BTreeMap::new();
    for c in bits(em[2]) {
        for d in bits(em[3]) {
            buckets
                .entry(relations::s1_right(s, c, d, z))
                .or_default()
                .push((c, d));
        }
    }
    if buckets.is_empty() {
        return;
    }
    let mut gens = [t[Z], t[R21], t[T21], t[R22], t[T22], 0, 0, 0, 0];
    let mut tt = *t;
    for a in bits(em[0]) {
        for b in bits(em[1]) {
            let Some(matches) = buckets.get(&relations::s1_left(s, a, b)) else {
                continue;
            };
            gens[5] = a;
            gens[6] = b;
            let k1 = s.closure(&gens[..7]);
            tt[R11] = a;
            tt[T11] = b;
            for &(c, d) in matches {
                let generates = k1 == s.all || {
                    gens[7] = c;
                    gens[8] = d;
                    s.closure(&gens) == s.all
                };
                if generates {
                    tt[R12] = c;
                    tt[T12] = d;
                    visit(&tt);
                }
            }
        }
    }
}

/// Run the orbit search, splitting the work at the `(z, r21, t21)` level
/// and merging the pieces in a fixed order.
pub fn enumerate(
    ctx: &SearchContext<'_>,
    opts: &SearchOptions,
    exec: &impl Executor,
) -> SearchReport {
    let engine = Engine {
        ctx,
        opts,
        aut_order: ctx.aut_order(),
    };
    let units = engine.units();
    let parts = exec.map(units.len(), |i| engine.run_unit(&units[i]));
    let mut acc = Partial::default();
    for p in parts {
        acc.merge(p, opts.max_representatives);
    }
    SearchReport {
        label: ctx.group.label().into(),
        kind: opts.kind,
        order: ctx.group.order(),
        aut_order: ctx.aut_order(),
        n_filter: opts.n_filter,
        total_count: acc.total,
        orbit_count: acc.orbits,
        stabilizer_histogram: acc.hist,
        n_values_seen: acc.n_seen,
        z_always_central: !acc.z_noncentral,
        k_centralizer_always_center: !acc.k_fail,
        entries_noncentral: !acc.central_entry,
        representatives: acc.reps,
        work_units: units.len(),
    }
}

pub fn enumerate_prestructures(ctx: &SearchContext<'_>, n_filter: Option<usize>) -> SearchReport {
    let opts = SearchOptions {
        n_filter,
        ..SearchOptions::new(SearchKind::Prestructures)
    };
    enumerate(ctx, &opts, &Serial)
}

pub fn enumerate_structures(ctx: &SearchContext<'_>, n_filter: Option<usize>) -> SearchReport {
    let opts = SearchOptions {
        n_filter,
        ..SearchOptions::new(SearchKind::Structures)
    };
    enumerate(ctx, &opts, &Serial)
}
