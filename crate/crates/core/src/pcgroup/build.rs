use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{FiniteGroup, PcPresentation, Word};
use crate::{Error, Result, DEFAULT_ORDER_CAP};

/// Materialize the group defined by `pres`, refusing orders above
/// [`DEFAULT_ORDER_CAP`].
pub fn build_group(pres: &PcPresentation) -> Result<FiniteGroup> {
    build_group_with_cap(pres, DEFAULT_ORDER_CAP)
}

/// Build the group as a tower of cyclic extensions, innermost generator
/// first: once `G_{i+1} = <x_{i+1}, ..., x_k>` is tabulated, `G_i` consists
/// of the products `x_i^a g` and multiplies by
/// `(x_i^a g)(x_i^b h) = x_i^{a+b} s^{-b}(g) h`, where `s` is conjugation by
/// `x_i` read off the commutator relations and `x_i^{p_i}` is replaced by its
/// power word. The finished table is then checked against the group axioms
/// and against every relation of the presentation.
pub fn build_group_with_cap(pres: &PcPresentation, cap: usize) -> Result<FiniteGroup> {
    let k = pres.k();
    if k == 0 {
        return Err(Error::Precondition("presentation has no generators".into()));
    }
    let cap = cap.min(crate::ElementSet::CAPACITY);
    let order = pres.order().filter(|&n| n <= cap).ok_or(Error::OrderCap {
        order: pres.order().unwrap_or(usize::MAX),
        cap,
    })?;

    let p: Vec<usize> = pres.rel_orders.iter().map(|&q| q as usize).collect();
    // Table of the current subgroup G_{i+1}; indices agree with the final
    // group's indices on the elements it contains.
    let mut m = 1usize;
    let mut table: Vec<u16> = alloc::vec![0];

    for i in (0..k).rev() {
        let pi = p[i];
        let sub = Sub {
            m,
            table: &table,
            inv: inverses(m, &table),
        };
        let gen_index = |j: usize| p[j + 1..].iter().product::<usize>();

        let w = sub.eval(&pres.power_word(i), i, gen_index, || {
            format!("pow {} = {}", i + 1, pres.power_word(i))
        })?;

        // s(x_j) = [x_i, x_j] x_j for j > i, extended through normal forms.
        let mut images = Vec::with_capacity(k - i - 1);
        for j in i + 1..k {
            let c = pres.comm_word(i, j);
            let cv = sub.eval(&c, i, gen_index, || {
                format!("comm {} {} = {}", i + 1, j + 1, c)
            })?;
            images.push(sub.mul(cv, gen_index(j)));
        }
        let mut sigma = alloc::vec![0usize; m];
        for (g, slot) in sigma.iter_mut().enumerate() {
            let mut r = g;
            let mut digits = alloc::vec![0usize; k - i - 1];
            for (d, &q) in digits.iter_mut().zip(&p[i + 1..]).rev() {
                *d = r % q;
                r /= q;
            }
            let mut acc = 0;
            for (&img, &e) in images.iter().zip(&digits) {
                for _ in 0..e {
                    acc = sub.mul(acc, img);
                }
            }
            *slot = acc;
        }
        let mut sigma_inv = alloc::vec![usize::MAX; m];
        for (g, &s) in sigma.iter().enumerate() {
            if sigma_inv[s] != usize::MAX {
                return Err(Error::Inconsistent {
                    relation: format!(
                        "conjugation by x{} is not injective on <x{}..x{}>",
                        i + 1,
                        i + 2,
                        k
                    ),
                });
            }
            sigma_inv[s] = g;
        }
        // s^{-b} for b in 0..p_i.
        let mut sig_pow: Vec<Vec<usize>> = Vec::with_capacity(pi);
        sig_pow.push((0..m).collect());
        for b in 1..pi {
            let prev = &sig_pow[b - 1];
            sig_pow.push(prev.iter().map(|&g| sigma_inv[g]).collect());
        }

        let n = pi * m;
        let mut next = alloc::vec![0u16; n * n];
        for a in 0..pi {
            for g in 0..m {
                let row = (a * m + g) * n;
                for b in 0..pi {
                    let conj = sig_pow[b][g];
                    let (e, prefix) = if a + b < pi {
                        (a + b, 0)
                    } else {
                        (a + b - pi, w)
                    };
                    let base = sub.mul(prefix, conj);
                    for h in 0..m {
                        next[row + b * m + h] = (e * m + sub.mul(base, h)) as u16;
                    }
                }
            }
        }
        m = n;
        table = next;
    }
    debug_assert_eq!(m, order);

    let group = FiniteGroup::from_flat(
        pres.name.clone(),
        order,
        table,
        pres.rel_orders.clone(),
        Some(pres.clone()),
    )
    .map_err(|e| match e {
        Error::Axiom { message } => Error::Inconsistent { relation: message },
        other => other,
    })?;
    check_relations(&group, pres)?;
    Ok(group)
}

struct Sub<'a> {
    m: usize,
    table: &'a [u16],
    inv: Vec<usize>,
}

impl Sub<'_> {
    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.m + b] as usize
    }

    fn eval(
        &self,
        w: &Word,
        i: usize,
        gen_index: impl Fn(usize) -> usize,
        describe: impl Fn() -> String,
    ) -> Result<usize> {
        let mut acc = 0;
        for &(g, e) in w.letters() {
            if g <= i {
                return Err(Error::Inconsistent {
                    relation: format!(
                        "{} (right-hand side must only use generators after x{})",
                        describe(),
                        i + 1
                    ),
                });
            }
            let mut x = gen_index(g);
            if e < 0 {
                x = self.inv[x];
            }
            for _ in 0..e.unsigned_abs() {
                acc = self.mul(acc, x);
            }
        }
        Ok(acc)
    }
}

fn inverses(m: usize, table: &[u16]) -> Vec<usize> {
    (0..m)
        .map(|a| (0..m).find(|&b| table[a * m + b] == 0).unwrap_or(0))
        .collect()
}

fn check_relations(g: &FiniteGroup, pres: &PcPresentation) -> Result<()> {
    let gens = g.pc_generators();
    for i in 0..pres.k() {
        let w = pres.power_word(i);
        if g.pow(gens[i], pres.rel_orders[i] as i64) != g.eval_word(&w, &gens)? {
            return Err(Error::Inconsistent {
                relation: format!("x{}^{} = {}", i + 1, pres.rel_orders[i], w),
            });
        }
        for j in i + 1..pres.k() {
            let w = pres.comm_word(i, j);
            if g.commutator(gens[i], gens[j]) != g.eval_word(&w, &gens)? {
                return Err(Error::Inconsistent {
                    relation: format!("[x{}, x{}] = {}", i + 1, j + 1, w),
                });
            }
        }
    }
    Ok(())
}
