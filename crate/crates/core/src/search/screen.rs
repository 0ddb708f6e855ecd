use alloc::vec::Vec;

use super::burnside::count_prestructures_within;
use super::engine::SearchContext;
use crate::grouptheory::{minimal_normal_subgroups, quotient};
use crate::predicates::{is_cct, is_extraspecial, Cct};
use crate::{ElementSet, FiniteGroup, Result};

/// A quotient by a minimal normal subgroup that admits prestructures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientLead {
    pub kernel: ElementSet,
    pub order: usize,
    pub extraspecial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScreenVerdict {
    /// Abelian groups have no prestructures.
    Abelian,
    /// CCT groups have no prestructures.
    Cct,
    /// Not monolithic, and no quotient by a minimal normal subgroup admits
    /// prestructures.
    NoQuotient,
    /// The screens are inconclusive. When `z_in_monolith` is set, every
    /// prestructure has its `z` in the monolith.
    SearchRequired {
        monolithic: bool,
        z_in_monolith: bool,
        quotients: Vec<QuotientLead>,
    },
}

impl ScreenVerdict {
    pub fn rules_out_prestructures(&self) -> bool {
        !matches!(self, ScreenVerdict::SearchRequired { .. })
    }
}

/// Decide what can be said before searching. A prestructure whose `z`
/// avoids a normal subgroup `M` maps to a prestructure of `G/M`, so a group
/// with two minimal normal subgroups (which meet trivially) needs one of
/// those quotients to admit prestructures, and in a monolithic group whose
/// monolith quotient admits none, `z` lies in the monolith.
pub fn screen_group(g: &FiniteGroup) -> Result<ScreenVerdict> {
    match is_cct(g) {
        Cct::NotApplicable => return Ok(ScreenVerdict::Abelian),
        Cct::Cct => return Ok(ScreenVerdict::Cct),
        Cct::NotCct { .. } => {}
    }
    let mins = minimal_normal_subgroups(g);
    let mut quotients = Vec::new();
    for m in &mins {
        let q = quotient(g, m)?;
        if has_prestructure(&q.target)? {
            quotients.push(QuotientLead {
                kernel: *m,
                order: q.target.order(),
                extraspecial: is_extraspecial(&q.target),
            });
        }
    }
    let monolithic = mins.len() == 1;
    if !monolithic && quotients.is_empty() {
        return Ok(ScreenVerdict::NoQuotient);
    }
    Ok(ScreenVerdict::SearchRequired {
        monolithic,
        z_in_monolith: monolithic && quotients.is_empty(),
        quotients,
    })
}

/// Whether `g` admits at least one prestructure.
pub fn has_prestructure(g: &FiniteGroup) -> Result<bool> {
    if screen_group(g)?.rules_out_prestructures() {
        return Ok(false);
    }
    let ctx = SearchContext::bare(g)?;
    Ok(count_prestructures_within(&ctx, ctx.tables().all, None) > 0)
}
