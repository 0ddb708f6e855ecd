use alloc::collections::BTreeMap;

use super::engine::{for_each_structure, SearchContext};
use super::relations::{R21, R22, T21, T22, Z};
use super::tables::{bits, Mask};
use super::SearchKind;

/// Visit every `(z, r21, t21, r22, t22)` with entries in `within` that
/// leaves all four first-row masks nonempty, with those masks restricted to
/// `within`.
fn for_each_prefix(
    ctx: &SearchContext<'_>,
    kind: SearchKind,
    within: Mask,
    n_filter: Option<usize>,
    mut f: impl FnMut(&[u8; 9], &[Mask; 4]),
) {
    let m0 = [within; 4];
    let mut t = [0u8; 9];
    for z in bits(ctx.z_candidates(n_filter) & within) {
        t[Z] = z;
        for a in bits(ctx.second_row_candidates(kind, 1, &t, &m0) & within) {
            t[R21] = a;
            let m1 = ctx.after(1, &t, &m0);
            for b in bits(ctx.second_row_candidates(kind, 2, &t, &m1) & within) {
                t[T21] = b;
                let m2 = ctx.after(2, &t, &m1);
                for c in bits(ctx.second_row_candidates(kind, 3, &t, &m2) & within) {
                    t[R22] = c;
                    let m3 = ctx.after(3, &t, &m2);
                    for d in bits(ctx.second_row_candidates(kind, 4, &t, &m3) & within) {
                        t[T22] = d;
                        f(&t, &ctx.after(4, &t, &m3));
                    }
                }
            }
        }
    }
}

/// Number of prestructures with every entry in `within`, by multiplying
/// the four first-row candidate counts over all admissible second rows.
pub fn count_prestructures_within(
    ctx: &SearchContext<'_>,
    within: Mask,
    n_filter: Option<usize>,
) -> u64 {
    let mut total = 0u64;
    for_each_prefix(ctx, SearchKind::Prestructures, within, n_filter, |_, m| {
        total += m.iter().map(|x| x.count_ones() as u64).product::<u64>();
    });
    total
}

/// Number of structures with every entry in `within`, without any use of
/// symmetry.
pub fn count_structures_within(
    ctx: &SearchContext<'_>,
    within: Mask,
    n_filter: Option<usize>,
) -> u64 {
    let mut total = 0u64;
    let s = ctx.tables();
    for_each_prefix(ctx, SearchKind::Structures, within, n_filter, |t, m| {
        for_each_structure(s, t, m, |_| total += 1);
    });
    total
}

/// Orbit count by Burnside's lemma: the average number of tuples fixed by
/// an automorphism. Automorphisms with equal fixed-point sets fix the same
/// tuples, so each distinct fixed set is counted once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurnsideCheck {
    pub kind: SearchKind,
    pub aut_order: u64,
    pub fixed_point_sum: u128,
    /// Tuples fixed by the identity, i.e. the total.
    pub total: u64,
    pub distinct_fixed_sets: usize,
    /// `fixed_point_sum / |Aut|`, when the division is exact.
    pub orbit_count: Option<u64>,
}

pub fn burnside(
    ctx: &SearchContext<'_>,
    kind: SearchKind,
    n_filter: Option<usize>,
) -> BurnsideCheck {
    let mut by_fix: BTreeMap<Mask, u64> = BTreeMap::new();
    for a in 0..ctx.aut.len() as u32 {
        *by_fix.entry(ctx.aut.fix(a)).or_default() += 1;
    }
    let all = ctx.tables().all;
    let mut sum: u128 = 0;
    let mut total = 0;
    for (&fix, &mult) in &by_fix {
        let c = match kind {
            SearchKind::Prestructures => count_prestructures_within(ctx, fix, n_filter),
            SearchKind::Structures => count_structures_within(ctx, fix, n_filter),
        };
        if fix == all {
            total = c;
        }
        sum += c as u128 * mult as u128;
    }
    let aut_order = ctx.aut_order();
    BurnsideCheck {
        kind,
        aut_order,
        fixed_point_sum: sum,
        total,
        distinct_fixed_sets: by_fix.len(),
        orbit_count: (sum % aut_order as u128 == 0).then(|| (sum / aut_order as u128) as u64),
    }
}
