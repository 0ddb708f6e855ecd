//! Screening predicates: CCT, monolithic, extra-special, nilpotency class.

use alloc::vec::Vec;

use crate::grouptheory::{
    abelian_invariants, automorphism_group_with_cap, center, centralizer_of, derived_subgroup,
    lower_central_series, monolith, quotient,
};
use crate::{ElementSet, FiniteGroup};

/// Outcome of the commutativity-transitivity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cct {
    /// Abelian groups are outside the definition.
    NotApplicable,
    Cct,
    /// Non-central `x, y, z` with `[x, y] = [y, z] = 1` and `[x, z] != 1`.
    NotCct {
        witness: (usize, usize, usize),
    },
}

impl Cct {
    pub fn holds(&self) -> bool {
        matches!(self, Cct::Cct)
    }
}

/// A group is CCT iff it is non-abelian and every centralizer of a
/// non-central element is abelian.
pub fn is_cct(g: &FiniteGroup) -> Cct {
    if g.is_abelian() {
        return Cct::NotApplicable;
    }
    let z = center(g);
    for y in g.elements().filter(|&y| !z.contains(y)) {
        let c = centralizer_of(g, y).difference(&z);
        for x in c.iter() {
            for w in c.iter().filter(|&w| w > x) {
                if g.mul(x, w) != g.mul(w, x) {
                    return Cct::NotCct { witness: (x, y, w) };
                }
            }
        }
    }
    Cct::Cct
}

pub fn is_monolithic(g: &FiniteGroup) -> bool {
    monolith(g).len() > 1
}

fn prime_power(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|p| n % p == 0)?;
    let mut m = n;
    let mut e = 0;
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

/// `G` is a `p`-group with `|Z(G)| = p` and `G/Z(G)` elementary abelian and
/// nontrivial.
pub fn is_extraspecial(g: &FiniteGroup) -> bool {
    let Some((p, _)) = prime_power(g.order()) else {
        return false;
    };
    let z = center(g);
    if z.len() != p || z.len() == g.order() {
        return false;
    }
    let Ok(q) = quotient(g, &z) else { return false };
    q.target.is_abelian() && q.target.elements().all(|x| q.target.pow(x, p as i64) == 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    Class(u32),
    NonNilpotent,
}

/// Length of the lower central series down to `{1}`; the trivial group has
/// class 0.
pub fn nilpotency_class(g: &FiniteGroup) -> Nilpotency {
    let series = lower_central_series(g);
    if series.last().is_some_and(|s| s.len() == 1) {
        Nilpotency::Class(series.len() as u32 - 1)
    } else {
        Nilpotency::NonNilpotent
    }
}

/// Everything the screening stage wants to know about a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupProfile {
    pub order: usize,
    pub is_abelian: bool,
    pub cct: Cct,
    pub is_monolithic: bool,
    pub monolith_order: usize,
    pub is_extraspecial: bool,
    pub nilpotency: Nilpotency,
    pub center_order: usize,
    pub derived_order: usize,
    /// Invariant factors of the centre.
    pub center_invariants: Vec<usize>,
    /// Invariant factors of the derived subgroup when it is abelian.
    pub derived_invariants: Option<Vec<usize>>,
    pub aut_order: Option<usize>,
}

impl GroupProfile {
    pub fn is_cct(&self) -> bool {
        self.cct.holds()
    }
}

/// Profile of `g`; `aut_cap` bounds the order for which `|Aut(G)|` is
/// computed (`None` skips it).
pub fn profile(g: &FiniteGroup, aut_cap: Option<usize>) -> GroupProfile {
    let z = center(g);
    let d = derived_subgroup(g);
    let mon = monolith(g);
    let derived_abelian = is_abelian_set(g, &d);
    GroupProfile {
        order: g.order(),
        is_abelian: z.len() == g.order(),
        cct: is_cct(g),
        is_monolithic: mon.len() > 1,
        monolith_order: mon.len(),
        is_extraspecial: is_extraspecial(g),
        nilpotency: nilpotency_class(g),
        center_order: z.len(),
        derived_order: d.len(),
        center_invariants: abelian_invariants(g, &z),
        derived_invariants: derived_abelian.then(|| abelian_invariants(g, &d)),
        aut_order: aut_cap
            .filter(|&cap| g.order() <= cap)
            .and_then(|cap| automorphism_group_with_cap(g, cap).ok())
            .map(|a| a.order()),
    }
}

/// Whether the members of `s` commute pairwise.
pub fn is_abelian_set(g: &FiniteGroup, s: &ElementSet) -> bool {
    s.iter()
        .all(|a| s.iter().all(|b| g.mul(a, b) == g.mul(b, a)))
}
