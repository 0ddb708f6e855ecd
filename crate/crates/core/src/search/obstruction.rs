use crate::grouptheory::{center, centralizer, subgroup_closure};
use crate::{Error, FiniteGroup, Result};

/// `K = <r11, t11, r12, t12>` of a genus-2 tuple and whether
/// `C_G(K) = Z(G)`, which rules out extending the tuple to higher genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub k_order: usize,
    pub centralizer_order: usize,
    pub centralizer_is_center: bool,
}

/// `tuple` is in the order `(r11, t11, r12, t12, r21, t21, r22, t22, z)`.
pub fn extension_obstruction(g: &FiniteGroup, tuple: &[usize]) -> Result<Obstruction> {
    if tuple.len() != 9 {
        return Err(Error::TupleLength {
            expected: 9,
            found: tuple.len(),
        });
    }
    for &x in tuple {
        g.check_index(x)?;
    }
    let k = subgroup_closure(g, &tuple[..4]);
    let c = centralizer(g, &k)?;
    Ok(Obstruction {
        k_order: k.len(),
        centralizer_order: c.len(),
        centralizer_is_center: c == center(g),
    })
}
