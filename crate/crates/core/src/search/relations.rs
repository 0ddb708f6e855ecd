//! The genus-2 relations as the search engine uses them: each action
//! relation pins one first-row entry to a commutator fibre once the second
//! row and `z` are known.

use super::tables::{Mask, SearchTables};

/// Tuple slots, in the order `(r11, t11, r12, t12, r21, t21, r22, t22, z)`.
pub const R11: usize = 0;
pub const T11: usize = 1;
pub const R12: usize = 2;
pub const T12: usize = 3;
pub const R21: usize = 4;
pub const T21: usize = 5;
pub const R22: usize = 6;
pub const T22: usize = 7;
pub const Z: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Genus2Relation {
    S1,
    S2,
    R(u8),
    T(u8),
}

impl Genus2Relation {
    pub const ALL: [Genus2Relation; 22] = {
        use Genus2Relation::*;
        [
            S1,
            S2,
            R(1),
            R(2),
            R(3),
            R(4),
            R(5),
            R(6),
            R(7),
            R(8),
            R(9),
            R(10),
            T(1),
            T(2),
            T(3),
            T(4),
            T(5),
            T(6),
            T(7),
            T(8),
            T(9),
            T(10),
        ]
    };

    pub fn label(self) -> alloc::string::String {
        match self {
            Genus2Relation::S1 => "S1".into(),
            Genus2Relation::S2 => "S2".into(),
            Genus2Relation::R(i) => alloc::format!("R{i}"),
            Genus2Relation::T(i) => alloc::format!("T{i}"),
        }
    }
}

/// Whether `rel` holds for the tuple `t` (slots as above).
pub fn holds(s: &SearchTables, rel: Genus2Relation, t: &[u8; 9]) -> bool {
    let [r11, t11, r12, t12, r21, t21, r22, t22, z] = *t;
    let i = |x| s.inv(x);
    let c = |x, y| s.comm(x, y);
    match rel {
        Genus2Relation::S1 => {
            s.prod(&[
                c(i(r12), i(t12)),
                i(t12),
                c(i(r11), i(t11)),
                i(t11),
                t11,
                t12,
            ]) == z
        }
        Genus2Relation::S2 => {
            s.prod(&[c(i(r21), t21), t21, c(i(r22), t22), t22, i(t22), i(t21)]) == i(z)
        }
        Genus2Relation::R(_) | Genus2Relation::T(_) => {
            let (x, y, w) = action_fibre(s, rel, t);
            c(x, y) == w
        }
    }
}

/// For an action relation `[x, y] = w`, the triple `(x, y, w)`; `x` is
/// always a first-row entry and `y`, `w` depend on the second row and `z`
/// only.
fn action_fibre(s: &SearchTables, rel: Genus2Relation, t: &[u8; 9]) -> (u8, u8, u8) {
    let [r11, t11, r12, t12, ..] = *t;
    let (y, w) = match rel {
        Genus2Relation::R(k) => fibre_r(s, k, t),
        Genus2Relation::T(k) => fibre_t(s, k, t),
        _ => unreachable!(),
    };
    let x = match rel {
        Genus2Relation::R(1..=5) => r11,
        Genus2Relation::R(_) => r12,
        Genus2Relation::T(1..=5) => t11,
        Genus2Relation::T(_) => t12,
        _ => unreachable!(),
    };
    (x, y, w)
}

fn fibre_r(s: &SearchTables, k: u8, t: &[u8; 9]) -> (u8, u8) {
    let [_, _, _, _, r21, t21, r22, t22, z] = *t;
    let i = |x| s.inv(x);
    match k {
        1 => (r22, 0),
        2 => (r21, 0),
        3 => (t22, 0),
        4 => (t21, i(z)),
        5 => (z, s.comm(i(r21), z)),
        6 => (r22, 0),
        7 => (r21, s.prod(&[i(z), r21, i(r22), z, r22, i(r21)])),
        8 => (t22, i(z)),
        9 => (t21, s.comm(i(z), t21)),
        10 => (z, s.comm(i(r22), z)),
        _ => unreachable!(),
    }
}

fn fibre_t(s: &SearchTables, k: u8, t: &[u8; 9]) -> (u8, u8) {
    let [_, _, _, _, r21, t21, r22, t22, z] = *t;
    let i = |x| s.inv(x);
    match k {
        1 => (r22, 0),
        2 => (r21, s.prod(&[i(t21), z, t21])),
        3 => (t22, 0),
        4 => (t21, s.comm(i(t21), z)),
        5 => (z, s.comm(i(t21), z)),
        6 => (r22, s.prod(&[i(t22), z, t22])),
        7 => (r21, s.comm(i(t22), z)),
        8 => (t22, s.comm(i(t22), z)),
        9 => (
            t21,
            s.prod(&[i(t22), z, t22, i(z), t21, z, i(t22), i(z), t22, i(t21)]),
        ),
        10 => (z, s.comm(i(t22), z)),
        _ => unreachable!(),
    }
}

// Search level (z = 0, r21, t21, r22, t22 = 4) after which each fibre is
// known, for R1..R10 and T1..T10.
const READY_R: [usize; 10] = [3, 1, 4, 2, 1, 3, 3, 4, 2, 3];
const READY_T: [usize; 10] = [3, 2, 4, 2, 2, 4, 4, 4, 4, 4];

/// Intersect the first-row candidate masks `[r11, t11, r12, t12]` with the
/// fibres that become known once search level `level` is fixed in `t`.
pub(crate) fn apply_level(s: &SearchTables, level: usize, t: &[u8; 9], masks: &mut [Mask; 4]) {
    for k in 1..=10u8 {
        let slot = if k <= 5 { 0 } else { 2 };
        if READY_R[k as usize - 1] == level {
            let (y, w) = fibre_r(s, k, t);
            masks[slot] &= s.cs(y, w);
        }
        if READY_T[k as usize - 1] == level {
            let (y, w) = fibre_t(s, k, t);
            masks[slot + 1] &= s.cs(y, w);
        }
    }
}

/// All 20 action relations.
pub fn is_prestructure(s: &SearchTables, t: &[u8; 9]) -> bool {
    s.order_of(t[Z]) >= 2 && Genus2Relation::ALL[2..].iter().all(|&r| holds(s, r, t))
}

/// `S1` rewritten as `[r11^-1, t11^-1] = v(r12, t12)`; the right side only
/// involves the second pair and `z`.
#[inline]
pub(crate) fn s1_left(s: &SearchTables, r11: u8, t11: u8) -> u8 {
    s.comm(s.inv(r11), s.inv(t11))
}

#[inline]
pub(crate) fn s1_right(s: &SearchTables, r12: u8, t12: u8, z: u8) -> u8 {
    let c = s.comm(s.inv(r12), s.inv(t12));
    s.prod(&[t12, s.inv(c), z, s.inv(t12)])
}
