use kodaira_core::grouptheory::{abelian_invariants, is_isomorphic, subgroup_as_group};
use kodaira_core::predicates::is_abelian_set;
use kodaira_core::{ElementSet, FiniteGroup};

/// Invariant factors written as `Z2 x Z4`, repeated factors folded to
/// `Z2^3`; the trivial group is `1`.
pub fn abelian_name(invariants: &[usize]) -> String {
    if invariants.is_empty() {
        return "1".into();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < invariants.len() {
        let q = invariants[i];
        let mut j = i;
        while j < invariants.len() && invariants[j] == q {
            j += 1;
        }
        parts.push(if j - i > 1 {
            format!("Z{q}^{}", j - i)
        } else {
            format!("Z{q}")
        });
        i = j;
    }
    parts.join(" x ")
}

/// Name the isomorphism type of the subgroup `h`: invariant factors when
/// it is abelian, otherwise the label of the first isomorphic group in
/// `known`, otherwise `nonabelian(N)`.
pub fn structure_name(g: &FiniteGroup, h: &ElementSet, known: &[FiniteGroup]) -> String {
    if is_abelian_set(g, h) {
        return abelian_name(&abelian_invariants(g, h));
    }
    if let Ok((sub, _)) = subgroup_as_group(g, h, "H") {
        for k in known.iter().filter(|k| k.order() == sub.order()) {
            if is_isomorphic(&sub, k).is_some() {
                return k.label().to_string();
            }
        }
    }
    format!("nonabelian({})", h.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(abelian_name(&[]), "1");
        assert_eq!(abelian_name(&[2, 4]), "Z2 x Z4");
        assert_eq!(abelian_name(&[2, 2, 2]), "Z2^3");
        assert_eq!(abelian_name(&[6]), "Z6");
    }
}
