use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{PcPresentation, Word};
use crate::{ElementSet, Error, Result};

/// A finite group stored as a full multiplication table. Element 0 is the
/// identity. Groups built from a presentation also carry normal forms:
/// element indices enumerate exponent vectors lexicographically with `x1`
/// most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    rel_orders: Vec<u32>,
    source: Option<PcPresentation>,
}

impl FiniteGroup {
    /// Validate and wrap a Cayley table given as rows (`rows[a][b] = a*b`).
    /// The identity must be element 0.
    pub fn from_table(label: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Axiom {
                message: "empty table".into(),
            });
        }
        if n > ElementSet::CAPACITY {
            return Err(Error::OrderCap {
                order: n,
                cap: ElementSet::CAPACITY,
            });
        }
        let mut mul = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Axiom {
                    message: format!("row {a} has {} entries, expected {n}", row.len()),
                });
            }
            for &c in row {
                if c >= n {
                    return Err(Error::IndexOutOfRange { index: c, order: n });
                }
                mul.push(c as u16);
            }
        }
        Self::from_flat(label.into(), n, mul, Vec::new(), None)
    }

    pub(crate) fn from_flat(
        label: String,
        order: usize,
        mul: Vec<u16>,
        rel_orders: Vec<u32>,
        source: Option<PcPresentation>,
    ) -> Result<Self> {
        debug_assert_eq!(mul.len(), order * order);
        let inv = check_axioms(order, &mul)?;
        Ok(FiniteGroup {
            label,
            order,
            mul,
            inv,
            rel_orders,
            source,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn source(&self) -> Option<&PcPresentation> {
        self.source.as_ref()
    }

    /// Relative orders of the pc basis; empty for groups without one.
    pub fn rel_orders(&self) -> &[u32] {
        &self.rel_orders
    }

    pub fn has_basis(&self) -> bool {
        !self.rel_orders.is_empty()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(a) } else { a };
        let m = self.order_of(a) as u64;
        let mut e = e.unsigned_abs() % m;
        let (mut acc, mut sq) = (0, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    pub fn order_of(&self, a: usize) -> usize {
        let mut x = a;
        let mut m = 1;
        while x != 0 {
            x = self.mul(x, a);
            m += 1;
        }
        m
    }

    /// `[a, b] = a b a^-1 b^-1`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    /// `a b a^-1`.
    #[inline]
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn check_index(&self, a: usize) -> Result<usize> {
        if a < self.order {
            Ok(a)
        } else {
            Err(Error::IndexOutOfRange {
                index: a,
                order: self.order,
            })
        }
    }

    /// Substitute `assignment[g]` for generator `g` and multiply out.
    pub fn eval_word(&self, w: &Word, assignment: &[usize]) -> Result<usize> {
        let mut acc = 0;
        for &(g, e) in w.letters() {
            let x = *assignment.get(g).ok_or_else(|| {
                Error::Precondition(format!(
                    "word mentions x{} but only {} values given",
                    g + 1,
                    assignment.len()
                ))
            })?;
            self.check_index(x)?;
            acc = self.mul(acc, self.pow(x, e as i64));
        }
        Ok(acc)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    /// Exponent vector of `a` in the pc basis.
    pub fn normal_form(&self, a: usize) -> Option<Vec<u32>> {
        if !self.has_basis() || a >= self.order {
            return None;
        }
        let mut v = alloc::vec![0; self.rel_orders.len()];
        let mut r = a;
        for (slot, &p) in v.iter_mut().zip(&self.rel_orders).rev() {
            *slot = (r % p as usize) as u32;
            r /= p as usize;
        }
        Some(v)
    }

    pub fn element_from_exponents(&self, exps: &[u32]) -> Result<usize> {
        if !self.has_basis() {
            return Err(Error::Precondition("group has no pc basis".into()));
        }
        if exps.len() != self.rel_orders.len() {
            return Err(Error::Precondition(format!(
                "exponent vector has {} entries, expected {}",
                exps.len(),
                self.rel_orders.len()
            )));
        }
        let mut idx = 0usize;
        for (&e, &p) in exps.iter().zip(&self.rel_orders) {
            if e >= p {
                return Err(Error::Precondition(format!(
                    "exponent {e} not below relative order {p}"
                )));
            }
            idx = idx * p as usize + e as usize;
        }
        Ok(idx)
    }

    /// The element `x_{i+1}` of the pc basis.
    pub fn pc_generator(&self, i: usize) -> Option<usize> {
        if i >= self.rel_orders.len() {
            return None;
        }
        Some(
            self.rel_orders[i + 1..]
                .iter()
                .map(|&p| p as usize)
                .product(),
        )
    }

    pub fn pc_generators(&self) -> Vec<usize> {
        (0..self.rel_orders.len())
            .filter_map(|i| self.pc_generator(i))
            .collect()
    }

    /// Human-readable name: a normal-form word when a basis exists, the
    /// index otherwise.
    pub fn element_name(&self, a: usize) -> String {
        match self.normal_form(a) {
            Some(v) => {
                let w = Word(
                    v.iter()
                        .enumerate()
                        .filter(|(_, &e)| e != 0)
                        .map(|(g, &e)| (g, e as i32))
                        .collect(),
                );
                format!("{w}")
            }
            None => format!("#{a}"),
        }
    }

    /// Multiplication table rows.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }
}

/// Exhaustive axiom check; returns the inverse table.
fn check_axioms(n: usize, mul: &[u16]) -> Result<Vec<u16>> {
    let m = |a: usize, b: usize| mul[a * n + b] as usize;
    for a in 0..n {
        if m(0, a) != a || m(a, 0) != a {
            return Err(Error::Axiom {
                message: format!("element 0 is not a two-sided identity (fails at {a})"),
            });
        }
    }
    let mut inv = alloc::vec![u16::MAX; n];
    let mut seen = alloc::vec![false; n];
    for a in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        for b in 0..n {
            let c = m(a, b);
            if seen[c] {
                return Err(Error::Axiom {
                    message: format!("row {a} repeats {c}"),
                });
            }
            seen[c] = true;
            if c == 0 {
                inv[a] = b as u16;
            }
        }
    }
    for a in 0..n {
        if m(inv[a] as usize, a) != 0 {
            return Err(Error::Axiom {
                message: format!("left and right inverses of {a} differ"),
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = m(a, b);
            for c in 0..n {
                if m(ab, c) != m(a, m(b, c)) {
                    return Err(Error::Axiom {
                        message: format!("associativity fails for ({a}, {b}, {c})"),
                    });
                }
            }
        }
    }
    Ok(inv)
}
