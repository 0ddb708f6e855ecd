use alloc::vec::Vec;

use super::subgroups::{center, closure_list, conjugacy_classes, derived_subgroup};
use crate::{ElementSet, Error, FiniteGroup, Result};

/// Largest order [`automorphism_group`] accepts by default.
pub const DEFAULT_AUT_CAP: usize = 128;

const UNSET: u16 = u16::MAX;

/// An automorphism as a permutation of element indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Automorphism(pub Vec<u16>);

impl Automorphism {
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn perm(&self) -> &[u16] {
        &self.0
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Automorphism {
        let mut out = alloc::vec![0u16; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u16;
        }
        Automorphism(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }
}

/// The full automorphism group, sorted lexicographically by permutation
/// (so the identity comes first).
#[derive(Clone, Debug)]
pub struct AutGroup {
    elements: Vec<Automorphism>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &Automorphism {
        &self.elements[i]
    }

    pub fn index_of(&self, a: &Automorphism) -> Option<usize> {
        self.elements.binary_search(a).ok()
    }

    /// A generating sublist, chosen greedily in list order.
    pub fn generators(&self) -> Vec<usize> {
        let n = self.elements.len();
        let mut inside = alloc::vec![false; n];
        inside[0] = true;
        let mut members = alloc::vec![0usize];
        let mut gens: Vec<usize> = Vec::new();
        for i in 0..n {
            if inside[i] {
                continue;
            }
            gens.push(i);
            let mut q = 0;
            let mut queue = members.clone();
            while q < queue.len() {
                let a = queue[q];
                q += 1;
                for &s in &gens {
                    let c = self
                        .index_of(&self.elements[a].compose(&self.elements[s]))
                        .expect("closed list");
                    if !inside[c] {
                        inside[c] = true;
                        members.push(c);
                        queue.push(c);
                    }
                }
            }
        }
        gens
    }

    /// Composition closure over all pairs.
    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|a| {
            self.elements
                .iter()
                .all(|b| self.index_of(&a.compose(b)).is_some())
        })
    }
}

/// Invariants preserved by every isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Sig {
    order: u16,
    central: bool,
    derived: bool,
    class_size: u16,
    square_roots: u16,
}

fn signatures(g: &FiniteGroup) -> Vec<Sig> {
    let z = center(g);
    let d = derived_subgroup(g);
    let mut class_size = alloc::vec![0u16; g.order()];
    for c in conjugacy_classes(g) {
        for x in c.iter() {
            class_size[x] = c.len() as u16;
        }
    }
    let mut roots = alloc::vec![0u16; g.order()];
    for y in g.elements() {
        roots[g.mul(y, y)] += 1;
    }
    g.elements()
        .map(|x| Sig {
            order: g.order_of(x) as u16,
            central: z.contains(x),
            derived: d.contains(x),
            class_size: class_size[x],
            square_roots: roots[x],
        })
        .collect()
}

/// Greedy generating sequence: each step adds the element that enlarges the
/// generated subgroup most, preferring elements whose signature is rare.
fn frame(g: &FiniteGroup, sig: &[Sig]) -> Vec<usize> {
    let mut bucket = alloc::collections::BTreeMap::<Sig, usize>::new();
    for s in sig {
        *bucket.entry(*s).or_default() += 1;
    }
    let mut gens = Vec::new();
    let mut h = ElementSet::singleton(0);
    while h.len() < g.order() {
        let mut best: Option<(usize, usize, usize, ElementSet)> = None;
        for x in g.elements().filter(|&x| !h.contains(x)) {
            gens.push(x);
            let (set, _) = closure_list(g, &gens);
            gens.pop();
            let key = (usize::MAX - set.len(), bucket[&sig[x]], x);
            if best.as_ref().map_or(true, |b| key < (b.0, b.1, b.2)) {
                best = Some((key.0, key.1, key.2, set));
            }
        }
        let (_, _, x, set) = best.unwrap();
        gens.push(x);
        h = set;
    }
    gens
}

struct HomSearch<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    first_only: bool,
    found: Vec<Vec<u16>>,
}

impl HomSearch<'_> {
    /// Extend `x -> image` over the subgroup generated by the first
    /// `level + 1` frame elements, checking every edge `a -> a g_t` and
    /// injectivity.
    fn close(&self, images: &[usize]) -> Option<Vec<u16>> {
        let mut phi = alloc::vec![UNSET; self.g.order()];
        let mut used = ElementSet::singleton(0);
        phi[0] = 0;
        let mut list = alloc::vec![0usize];
        let mut i = 0;
        while i < list.len() {
            let a = list[i];
            i += 1;
            let pa = phi[a] as usize;
            for (&x, &y) in self.gens.iter().zip(images) {
                let b = self.g.mul(a, x);
                let v = self.h.mul(pa, y) as u16;
                if phi[b] == UNSET {
                    if !used.insert(v as usize) {
                        return None;
                    }
                    phi[b] = v;
                    list.push(b);
                } else if phi[b] != v {
                    return None;
                }
            }
        }
        Some(phi)
    }

    fn run(&mut self, images: &mut Vec<usize>) -> bool {
        let level = images.len();
        if level == self.gens.len() {
            let phi = self.close(images).expect("checked at previous level");
            self.found.push(phi);
            return self.first_only;
        }
        for ci in 0..self.candidates[level].len() {
            let y = self.candidates[level][ci];
            images.push(y);
            if self.close(images).is_some() && self.run(images) {
                return true;
            }
            images.pop();
        }
        false
    }
}

fn search(g: &FiniteGroup, h: &FiniteGroup, first_only: bool) -> Vec<Vec<u16>> {
    if g.order() != h.order() {
        return Vec::new();
    }
    let gs = signatures(g);
    let hs = signatures(h);
    let mut a = gs.clone();
    let mut b = hs.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Vec::new();
    }
    let gens = frame(g, &gs);
    let candidates = gens
        .iter()
        .map(|&x| h.elements().filter(|&y| hs[y] == gs[x]).collect())
        .collect();
    let mut s = HomSearch {
        g,
        h,
        gens,
        candidates,
        first_only,
        found: Vec::new(),
    };
    s.run(&mut Vec::new());
    s.found
}

/// An isomorphism `g -> h` as an element map, if one exists.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    search(g, h, true)
        .into_iter()
        .next()
        .map(|phi| phi.into_iter().map(usize::from).collect())
}

pub fn automorphism_group(g: &FiniteGroup) -> Result<AutGroup> {
    automorphism_group_with_cap(g, DEFAULT_AUT_CAP)
}

pub fn automorphism_group_with_cap(g: &FiniteGroup, cap: usize) -> Result<AutGroup> {
    if g.order() > cap {
        return Err(Error::OrderCap {
            order: g.order(),
            cap,
        });
    }
    let mut elements: Vec<Automorphism> =
        search(g, g, false).into_iter().map(Automorphism).collect();
    elements.sort_unstable();
    Ok(AutGroup { elements })
}

/// Exhaustive check that `map` is a homomorphism `g -> h`.
pub fn is_homomorphism(g: &FiniteGroup, h: &FiniteGroup, map: &[usize]) -> bool {
    map.len() == g.order()
        && map.iter().all(|&y| y < h.order())
        && g.elements().all(|a| {
            g.elements()
                .all(|b| map[g.mul(a, b)] == h.mul(map[a], map[b]))
        })
}
