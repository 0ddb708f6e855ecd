use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::{ElementSet, Error, FiniteGroup, Result};

pub fn center(g: &FiniteGroup) -> ElementSet {
    g.elements()
        .filter(|&a| g.elements().all(|b| g.mul(a, b) == g.mul(b, a)))
        .collect()
}

pub fn centralizer_of(g: &FiniteGroup, x: usize) -> ElementSet {
    g.elements()
        .filter(|&a| g.mul(a, x) == g.mul(x, a))
        .collect()
}

/// Elements commuting with every member of `s`.
pub fn centralizer(g: &FiniteGroup, s: &ElementSet) -> Result<ElementSet> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(g.elements()
        .filter(|&a| s.iter().all(|x| g.mul(a, x) == g.mul(x, a)))
        .collect())
}

/// Subgroup generated by `gens`, as an element list in discovery order.
pub(crate) fn closure_list(g: &FiniteGroup, gens: &[usize]) -> (ElementSet, Vec<usize>) {
    let mut set = ElementSet::singleton(0);
    let mut list = alloc::vec![0];
    let mut i = 0;
    while i < list.len() {
        let a = list[i];
        for &x in gens {
            let b = g.mul(a, x);
            if set.insert(b) {
                list.push(b);
            }
        }
        i += 1;
    }
    (set, list)
}

pub fn subgroup_closure(g: &FiniteGroup, gens: &[usize]) -> ElementSet {
    closure_list(g, gens).0
}

/// `{a b : a in A, b in B}`.
pub fn product_set(g: &FiniteGroup, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty();
    for x in a.iter() {
        for y in b.iter() {
            out.insert(g.mul(x, y));
        }
    }
    out
}

/// `[A, B]`, the subgroup generated by commutators `[a, b]`.
pub fn commutator_subgroup(g: &FiniteGroup, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut gens = ElementSet::empty();
    for x in a.iter() {
        for y in b.iter() {
            gens.insert(g.commutator(x, y));
        }
    }
    let gens: Vec<usize> = gens.iter().collect();
    subgroup_closure(g, &gens)
}

pub fn derived_subgroup(g: &FiniteGroup) -> ElementSet {
    let all = ElementSet::full(g.order());
    commutator_subgroup(g, &all, &all)
}

/// `G = γ1 ≥ γ2 ≥ ...` until the series stops descending.
pub fn lower_central_series(g: &FiniteGroup) -> Vec<ElementSet> {
    let all = ElementSet::full(g.order());
    let mut series = alloc::vec![all];
    loop {
        let next = commutator_subgroup(g, &all, series.last().unwrap());
        if &next == series.last().unwrap() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_subgroup(g: &FiniteGroup, s: &ElementSet) -> bool {
    s.contains(0)
        && s.iter()
            .all(|a| s.contains(g.inv(a)) && s.iter().all(|b| s.contains(g.mul(a, b))))
}

pub fn is_normal(g: &FiniteGroup, s: &ElementSet) -> bool {
    is_subgroup(g, s)
        && s.iter()
            .all(|x| g.elements().all(|a| s.contains(g.conjugate(a, x))))
}

pub fn normal_closure(g: &FiniteGroup, s: &ElementSet) -> ElementSet {
    let mut gens = ElementSet::empty();
    for x in s.iter() {
        gens.extend(g.elements().map(|a| g.conjugate(a, x)));
    }
    let gens: Vec<usize> = gens.iter().collect();
    subgroup_closure(g, &gens)
}

pub fn class_of(g: &FiniteGroup, x: usize) -> ElementSet {
    g.elements().map(|a| g.conjugate(a, x)).collect()
}

/// Conjugacy classes, ordered by least element.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<ElementSet> {
    let mut seen = ElementSet::empty();
    let mut classes = Vec::new();
    for x in g.elements() {
        if seen.contains(x) {
            continue;
        }
        let c = class_of(g, x);
        seen = seen.union(&c);
        classes.push(c);
    }
    classes
}

/// The subgroup `h` of `g` as a group in its own right, together with the
/// embedding (new index to old index). Elements keep their relative order.
pub fn subgroup_as_group(
    g: &FiniteGroup,
    h: &ElementSet,
    label: impl Into<String>,
) -> Result<(FiniteGroup, Vec<usize>)> {
    if !is_subgroup(g, h) {
        return Err(Error::NotSubgroup);
    }
    let embed: Vec<usize> = h.iter().collect();
    let mut index = alloc::vec![usize::MAX; g.order()];
    for (i, &x) in embed.iter().enumerate() {
        index[x] = i;
    }
    let rows: Vec<Vec<usize>> = embed
        .iter()
        .map(|&a| embed.iter().map(|&b| index[g.mul(a, b)]).collect())
        .collect();
    let label: String = label.into();
    let sub = FiniteGroup::from_table(label, &rows)
        .map_err(|e| Error::Precondition(format!("subgroup table: {e}")))?;
    Ok((sub, embed))
}
