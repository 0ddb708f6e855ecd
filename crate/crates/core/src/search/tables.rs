use alloc::vec::Vec;

use crate::grouptheory::{center, derived_subgroup};
use crate::{Error, FiniteGroup, Result};

/// Largest order the exact search handles (one `u128` per element set).
pub const EXACT_ORDER_CAP: usize = 128;

pub(crate) type Mask = u128;

#[inline]
pub(crate) fn bit(x: u8) -> Mask {
    1u128 << x
}

/// Members of a mask in increasing order.
#[inline]
pub(crate) fn bits(mut m: Mask) -> impl Iterator<Item = u8> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let x = m.trailing_zeros() as u8;
            m &= m - 1;
            Some(x)
        }
    })
}

/// Byte-sized copies of the group tables plus the commutator fibres
/// `cs[y][w] = {x : [x, y] = w}` as bit masks.
pub struct SearchTables {
    pub(crate) n: usize,
    mul: Vec<u8>,
    inv: Vec<u8>,
    comm: Vec<u8>,
    cs: Vec<Mask>,
    pub(crate) center: Mask,
    pub(crate) derived: Mask,
    pub(crate) all: Mask,
    order: Vec<u16>,
}

impl SearchTables {
    /// Mask of the whole group.
    pub fn full_mask(&self) -> Mask {
        self.all
    }

    pub fn new(g: &FiniteGroup) -> Result<Self> {
        let n = g.order();
        if n > EXACT_ORDER_CAP {
            return Err(Error::OrderCap {
                order: n,
                cap: EXACT_ORDER_CAP,
            });
        }
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push(g.mul(a, b) as u8);
            }
        }
        let inv: Vec<u8> = (0..n).map(|a| g.inv(a) as u8).collect();
        let mut comm = alloc::vec![0u8; n * n];
        let mut cs = alloc::vec![0 as Mask; n * n];
        for x in 0..n {
            for y in 0..n {
                let w = g.commutator(x, y);
                comm[x * n + y] = w as u8;
                cs[y * n + w] |= 1u128 << x;
            }
        }
        let all = if n == 128 {
            Mask::MAX
        } else {
            (1u128 << n) - 1
        };
        Ok(SearchTables {
            n,
            mul,
            inv,
            comm,
            cs,
            center: center(g).to_u128(),
            derived: derived_subgroup(g).to_u128(),
            all,
            order: (0..n).map(|a| g.order_of(a) as u16).collect(),
        })
    }

    #[inline]
    pub(crate) fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.n + b as usize]
    }

    #[inline]
    pub(crate) fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    #[inline]
    pub(crate) fn comm(&self, a: u8, b: u8) -> u8 {
        self.comm[a as usize * self.n + b as usize]
    }

    /// `{x : [x, y] = w}`.
    #[inline]
    pub(crate) fn cs(&self, y: u8, w: u8) -> Mask {
        self.cs[y as usize * self.n + w as usize]
    }

    /// `C(y)`.
    #[inline]
    pub(crate) fn cent(&self, y: u8) -> Mask {
        self.cs(y, 0)
    }

    pub(crate) fn order_of(&self, a: u8) -> usize {
        self.order[a as usize] as usize
    }

    pub(crate) fn prod(&self, xs: &[u8]) -> u8 {
        xs.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    /// Subgroup generated by `gens`.
    pub(crate) fn closure(&self, gens: &[u8]) -> Mask {
        let mut seen: Mask = 1;
        let mut list = [0u8; EXACT_ORDER_CAP];
        let mut len = 1;
        let mut i = 0;
        while i < len {
            let a = list[i];
            i += 1;
            for &x in gens {
                let b = self.mul(a, x);
                if seen & bit(b) == 0 {
                    seen |= bit(b);
                    list[len] = b;
                    len += 1;
                }
            }
        }
        seen
    }
}
