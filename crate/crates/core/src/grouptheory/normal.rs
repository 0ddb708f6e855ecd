use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::subgroups::{conjugacy_classes, normal_closure, product_set};
use crate::{ElementSet, FiniteGroup};

/// All normal subgroups, sorted by size and then by membership.
///
/// Every normal subgroup is generated by the conjugacy classes it contains,
/// so starting from `{1}` and repeatedly joining with normal closures of
/// single classes reaches all of them.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<ElementSet> {
    let atoms: BTreeSet<ElementSet> = conjugacy_classes(g)
        .iter()
        .map(|c| normal_closure(g, c))
        .collect();
    let trivial = ElementSet::singleton(0);
    let mut found: BTreeSet<ElementSet> = BTreeSet::new();
    found.insert(trivial);
    let mut queue = alloc::vec![trivial];
    while let Some(n) = queue.pop() {
        for a in &atoms {
            if a.is_subset(&n) {
                continue;
            }
            let j = product_set(g, &n, a);
            if found.insert(j) {
                queue.push(j);
            }
        }
    }
    let mut out: Vec<ElementSet> = found.into_iter().collect();
    out.sort_by_key(|s| (s.len(), *s));
    out
}

pub fn minimal_normal_subgroups(g: &FiniteGroup) -> Vec<ElementSet> {
    let all = normal_subgroups(g);
    let nontrivial: Vec<&ElementSet> = all.iter().filter(|s| s.len() > 1).collect();
    nontrivial
        .iter()
        .filter(|m| {
            !nontrivial
                .iter()
                .any(|n| n.len() < m.len() && n.is_subset(m))
        })
        .map(|m| **m)
        .collect()
}

/// Intersection of all nontrivial normal subgroups (`{1}` for the trivial
/// group and for non-monolithic groups).
pub fn monolith(g: &FiniteGroup) -> ElementSet {
    let mins = minimal_normal_subgroups(g);
    match mins.as_slice() {
        [m] => *m,
        _ => ElementSet::singleton(0),
    }
}
