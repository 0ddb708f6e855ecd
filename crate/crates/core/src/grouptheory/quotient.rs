use alloc::format;
use alloc::vec::Vec;

use super::subgroups::{is_normal, is_subgroup};
use crate::{ElementSet, Error, FiniteGroup, Result};

/// `G -> G/N`. Cosets are numbered by their least element, so the identity
/// coset is 0.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub target: FiniteGroup,
    pub proj: Vec<usize>,
    pub kernel: ElementSet,
    /// Least element of each coset.
    pub reps: Vec<usize>,
}

pub fn quotient(g: &FiniteGroup, n: &ElementSet) -> Result<QuotientMap> {
    if !is_subgroup(g, n) {
        return Err(Error::NotSubgroup);
    }
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let mut proj = alloc::vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for a in g.elements() {
        if proj[a] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(a);
        for x in n.iter() {
            proj[g.mul(a, x)] = c;
        }
    }
    let rows: Vec<Vec<usize>> = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| proj[g.mul(a, b)]).collect())
        .collect();
    let target = FiniteGroup::from_table(format!("{}/N", g.label()), &rows)?;
    Ok(QuotientMap {
        target,
        proj,
        kernel: *n,
        reps,
    })
}
