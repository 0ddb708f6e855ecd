use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::tables::{bit, bits, Mask};
use crate::grouptheory::AutGroup;
use crate::{Error, FiniteGroup, Result};

/// Automorphisms as byte permutations with their fixed-point masks.
pub struct AutTable {
    n: usize,
    perms: Vec<u8>,
    fix: Vec<Mask>,
}

impl AutTable {
    pub fn new(aut: &AutGroup, n: usize) -> Self {
        let mut perms = Vec::with_capacity(aut.order() * n);
        let mut fix = Vec::with_capacity(aut.order());
        for a in aut.elements() {
            let mut f: Mask = 0;
            for (x, &y) in a.perm().iter().enumerate() {
                perms.push(y as u8);
                if x == y as usize {
                    f |= 1u128 << x;
                }
            }
            fix.push(f);
        }
        AutTable { n, perms, fix }
    }

    pub(crate) fn empty(n: usize) -> Self {
        AutTable {
            n,
            perms: Vec::new(),
            fix: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.fix.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fix.is_empty()
    }

    #[inline]
    pub(crate) fn image(&self, a: u32, x: u8) -> u8 {
        self.perms[a as usize * self.n + x as usize]
    }

    pub(crate) fn fix(&self, a: u32) -> Mask {
        self.fix[a as usize]
    }

    /// Orbits of the subgroup `h` (a sorted list of automorphism indices)
    /// on the `h`-invariant set `cand`, as (least member, stabilizer in `h`).
    pub(crate) fn split(&self, h: &[u32], cand: Mask) -> Vec<(u8, Vec<u32>)> {
        if h.len() == 1 {
            return bits(cand).map(|x| (x, h.to_vec())).collect();
        }
        let mut seen: Mask = 0;
        let mut out = Vec::new();
        for x in bits(cand) {
            if seen & bit(x) != 0 {
                continue;
            }
            let mut stab = Vec::new();
            for &a in h {
                seen |= bit(self.image(a, x));
                if self.fix(a) & bit(x) != 0 {
                    stab.push(a);
                }
            }
            debug_assert_eq!(seen & !cand, 0, "candidate set not invariant");
            out.push((x, stab));
        }
        out
    }
}

/// One orbit of tuples under the automorphism group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitInfo {
    /// Lexicographically least member.
    pub representative: Vec<usize>,
    pub stabilizer_order: u64,
    pub orbit_size: u64,
    /// How many of the input tuples fell into this orbit.
    pub members_seen: usize,
}

/// Partition `tuples` into orbits under the entrywise action of `aut`.
/// Orbits are returned ordered by representative.
pub fn reduce_mod_aut(
    g: &FiniteGroup,
    aut: &AutGroup,
    tuples: &[Vec<usize>],
) -> Result<Vec<OrbitInfo>> {
    if aut.order() == 0 || aut.get(0).perm().len() != g.order() || !aut.get(0).is_identity() {
        return Err(Error::Precondition(
            "automorphism list does not belong to this group".into(),
        ));
    }
    let mut orbits: BTreeMap<Vec<usize>, OrbitInfo> = BTreeMap::new();
    for t in tuples {
        for &x in t {
            g.check_index(x)?;
        }
        let mut best = t.clone();
        let mut stab = 0u64;
        for a in aut.elements() {
            let img: Vec<usize> = t.iter().map(|&x| a.apply(x)).collect();
            if &img == t {
                stab += 1;
            }
            if img < best {
                best = img;
            }
        }
        let size = aut.order() as u64 / stab;
        orbits
            .entry(best.clone())
            .or_insert(OrbitInfo {
                representative: best,
                stabilizer_order: stab,
                orbit_size: size,
                members_seen: 0,
            })
            .members_seen += 1;
    }
    Ok(orbits.into_values().collect())
}
