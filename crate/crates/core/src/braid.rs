//! Relations of the pure braid group on two strands of a closed genus-`b`
//! surface, and a literal evaluator that checks candidate tuples against
//! them.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::grouptheory::{center, subgroup_closure};
use crate::{Error, FiniteGroup, Result};

/// Abstract generators `ρ1j, τ1j, ρ2j, τ2j` (`j = 1..=b`) and `A12`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BraidGen {
    Rho1(usize),
    Tau1(usize),
    Rho2(usize),
    Tau2(usize),
    A12,
}

impl BraidGen {
    /// Slot in the tuple `(r11, t11, ..., r1b, t1b, r21, t21, ..., r2b, t2b, z)`.
    pub fn slot(self, b: usize) -> usize {
        match self {
            BraidGen::Rho1(j) => 2 * (j - 1),
            BraidGen::Tau1(j) => 2 * (j - 1) + 1,
            BraidGen::Rho2(j) => 2 * b + 2 * (j - 1),
            BraidGen::Tau2(j) => 2 * b + 2 * (j - 1) + 1,
            BraidGen::A12 => 4 * b,
        }
    }
}

impl fmt::Display for BraidGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidGen::Rho1(j) => write!(f, "r1{j}"),
            BraidGen::Tau1(j) => write!(f, "t1{j}"),
            BraidGen::Rho2(j) => write!(f, "r2{j}"),
            BraidGen::Tau2(j) => write!(f, "t2{j}"),
            BraidGen::A12 => f.write_str("z"),
        }
    }
}

/// A relator side, kept in the shape it is written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    One,
    Gen(BraidGen),
    Inv(BraidGen),
    Comm(Box<Expr>, Box<Expr>),
    Prod(Vec<Expr>),
}

impl Expr {
    fn comm(a: Expr, b: Expr) -> Expr {
        Expr::Comm(Box::new(a), Box::new(b))
    }

    /// Evaluate with `tuple[g.slot(b)]` substituted for each generator.
    pub fn eval(&self, g: &FiniteGroup, b: usize, tuple: &[usize]) -> usize {
        match self {
            Expr::One => g.identity(),
            Expr::Gen(x) => tuple[x.slot(b)],
            Expr::Inv(x) => g.inv(tuple[x.slot(b)]),
            Expr::Comm(x, y) => g.commutator(x.eval(g, b, tuple), y.eval(g, b, tuple)),
            Expr::Prod(xs) => xs
                .iter()
                .fold(g.identity(), |acc, x| g.mul(acc, x.eval(g, b, tuple))),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::One => f.write_str("1"),
            Expr::Gen(x) => write!(f, "{x}"),
            Expr::Inv(x) => write!(f, "{x}^-1"),
            Expr::Comm(x, y) => write!(f, "[{x}, {y}]"),
            Expr::Prod(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    match x {
                        Expr::Prod(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {} = {}", self.label, self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSchema {
    pub b: usize,
    pub relations: Vec<Relation>,
}

impl RelationSchema {
    pub fn get(&self, label: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.label == label)
    }

    /// Surface relations only.
    pub fn surface(&self) -> impl Iterator<Item = &Relation> {
        self.relations.iter().filter(|r| r.label.starts_with('S'))
    }

    /// Everything except the surface relations.
    pub fn action(&self) -> impl Iterator<Item = &Relation> {
        self.relations.iter().filter(|r| !r.label.starts_with('S'))
    }
}

/// The `2 + 2b(2b + 1)` relations for genus `b`. Labels are `S1`, `S2`,
/// then `R1, R2, ...` for the action of the `ρ1j` and `T1, T2, ...` for the
/// `τ1j`, numbered block by block (`j` ascending; inside a block the `ρ2k`
/// relations with `k` descending, then the `τ2k`, then `A12`). For `b = 2`
/// this is the familiar `S1, S2, R1-R10, T1-T10` numbering.
pub fn relation_schema(b: usize) -> Result<RelationSchema> {
    use BraidGen::*;
    use Expr::{Gen, Inv, One, Prod};
    if b < 2 {
        return Err(Error::Genus { b });
    }
    let a = || Gen(A12);
    let ai = || Inv(A12);
    let mut relations = Vec::with_capacity(2 + 2 * b * (2 * b + 1));

    let mut s1 = Vec::new();
    for j in (1..=b).rev() {
        s1.push(Expr::comm(Inv(Rho1(j)), Inv(Tau1(j))));
        s1.push(Inv(Tau1(j)));
    }
    s1.push(Prod((1..=b).map(|j| Gen(Tau1(j))).collect()));
    relations.push(Relation {
        label: "S1".into(),
        lhs: Prod(s1),
        rhs: a(),
    });

    let mut s2 = Vec::new();
    for j in 1..=b {
        s2.push(Expr::comm(Inv(Rho2(j)), Gen(Tau2(j))));
        s2.push(Gen(Tau2(j)));
    }
    s2.push(Prod((1..=b).rev().map(|j| Inv(Tau2(j))).collect()));
    relations.push(Relation {
        label: "S2".into(),
        lhs: Prod(s2),
        rhs: ai(),
    });

    let mut r = Vec::new();
    let mut t = Vec::new();
    for j in 1..=b {
        for k in (1..=b).rev() {
            let rhs = match j.cmp(&k) {
                core::cmp::Ordering::Less | core::cmp::Ordering::Equal => One,
                core::cmp::Ordering::Greater => Prod(alloc::vec![
                    ai(),
                    Gen(Rho2(k)),
                    Inv(Rho2(j)),
                    a(),
                    Gen(Rho2(j)),
                    Inv(Rho2(k))
                ]),
            };
            r.push((Expr::comm(Gen(Rho1(j)), Gen(Rho2(k))), rhs));
        }
        for k in (1..=b).rev() {
            let rhs = match j.cmp(&k) {
                core::cmp::Ordering::Less => One,
                core::cmp::Ordering::Equal => ai(),
                core::cmp::Ordering::Greater => Expr::comm(ai(), Gen(Tau2(k))),
            };
            r.push((Expr::comm(Gen(Rho1(j)), Gen(Tau2(k))), rhs));
        }
        r.push((Expr::comm(Gen(Rho1(j)), a()), Expr::comm(Inv(Rho2(j)), a())));

        for k in (1..=b).rev() {
            let rhs = match j.cmp(&k) {
                core::cmp::Ordering::Less => One,
                core::cmp::Ordering::Equal => Prod(alloc::vec![Inv(Tau2(j)), a(), Gen(Tau2(j))]),
                core::cmp::Ordering::Greater => Expr::comm(Inv(Tau2(j)), a()),
            };
            t.push((Expr::comm(Gen(Tau1(j)), Gen(Rho2(k))), rhs));
        }
        for k in (1..=b).rev() {
            let rhs = match j.cmp(&k) {
                core::cmp::Ordering::Less => One,
                core::cmp::Ordering::Equal => Expr::comm(Inv(Tau2(j)), a()),
                core::cmp::Ordering::Greater => Prod(alloc::vec![
                    Inv(Tau2(j)),
                    a(),
                    Gen(Tau2(j)),
                    ai(),
                    Gen(Tau2(k)),
                    a(),
                    Inv(Tau2(j)),
                    ai(),
                    Gen(Tau2(j)),
                    Inv(Tau2(k)),
                ]),
            };
            t.push((Expr::comm(Gen(Tau1(j)), Gen(Tau2(k))), rhs));
        }
        t.push((Expr::comm(Gen(Tau1(j)), a()), Expr::comm(Inv(Tau2(j)), a())));
    }
    for (i, (lhs, rhs)) in r.into_iter().enumerate() {
        relations.push(Relation {
            label: format!("R{}", i + 1),
            lhs,
            rhs,
        });
    }
    for (i, (lhs, rhs)) in t.into_iter().enumerate() {
        relations.push(Relation {
            label: format!("T{}", i + 1),
            lhs,
            rhs,
        });
    }
    Ok(RelationSchema { b, relations })
}

/// A `(4b + 1)`-tuple of elements, ordered
/// `(r11, t11, ..., r1b, t1b, r21, t21, ..., r2b, t2b, z)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StructureTuple {
    pub b: usize,
    pub entries: Vec<usize>,
}

impl StructureTuple {
    pub fn new(g: &FiniteGroup, b: usize, entries: Vec<usize>) -> Result<Self> {
        if b < 2 {
            return Err(Error::Genus { b });
        }
        if entries.len() != 4 * b + 1 {
            return Err(Error::TupleLength {
                expected: 4 * b + 1,
                found: entries.len(),
            });
        }
        for &x in &entries {
            g.check_index(x)?;
        }
        Ok(StructureTuple { b, entries })
    }

    pub fn z(&self) -> usize {
        self.entries[4 * self.b]
    }

    /// The order of `z` in `g`.
    pub fn n(&self, g: &FiniteGroup) -> usize {
        g.order_of(self.z())
    }

    /// Entrywise image under an element map.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> StructureTuple {
        StructureTuple {
            b: self.b,
            entries: self.entries.iter().map(|&x| f(x)).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Requirement {
    /// Action relations and `o(z) >= 2` (genus 2 only).
    Prestructure,
    /// All relations, `o(z) = n >= 2`, and generation of the group.
    Structure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub label: String,
    pub relation: String,
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub b: usize,
    pub requirement: Requirement,
    pub checks: Vec<RelationCheck>,
    /// Order of `z`.
    pub n: usize,
    pub order_ok: bool,
    /// Order of the subgroup generated by the entries (structures only).
    pub generated_order: Option<usize>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn first_failure(&self) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| !c.holds)
    }
}

/// Evaluate every relation literally.
pub fn verify_tuple(
    g: &FiniteGroup,
    tuple: &StructureTuple,
    requirement: Requirement,
) -> Result<VerifyReport> {
    let b = tuple.b;
    if tuple.entries.len() != 4 * b + 1 {
        return Err(Error::TupleLength {
            expected: 4 * b + 1,
            found: tuple.entries.len(),
        });
    }
    if requirement == Requirement::Prestructure && b != 2 {
        return Err(Error::Precondition(
            "prestructures are defined for genus 2 only".into(),
        ));
    }
    for &x in &tuple.entries {
        g.check_index(x)?;
    }
    let schema = relation_schema(b)?;
    let rels: Vec<&Relation> = match requirement {
        Requirement::Prestructure => schema.action().collect(),
        Requirement::Structure => schema.relations.iter().collect(),
    };
    let checks: Vec<RelationCheck> = rels
        .into_iter()
        .map(|r| {
            let lhs = r.lhs.eval(g, b, &tuple.entries);
            let rhs = r.rhs.eval(g, b, &tuple.entries);
            RelationCheck {
                label: r.label.clone(),
                relation: format!("{} = {}", r.lhs, r.rhs),
                lhs,
                rhs,
                holds: lhs == rhs,
            }
        })
        .collect();
    let n = tuple.n(g);
    let order_ok = n >= 2;
    let generated_order =
        (requirement == Requirement::Structure).then(|| subgroup_closure(g, &tuple.entries).len());
    let passed = order_ok
        && checks.iter().all(|c| c.holds)
        && generated_order.map_or(true, |o| o == g.order());
    Ok(VerifyReport {
        b,
        requirement,
        checks,
        n,
        order_ok,
        generated_order,
        passed,
    })
}

/// Whether every entry other than `z` lies outside the centre. The action
/// relations force this, so `false` on a passing tuple means something is
/// inconsistent.
pub fn noncentrality_check(g: &FiniteGroup, tuple: &StructureTuple) -> bool {
    let z = center(g);
    tuple.entries[..4 * tuple.b].iter().all(|&x| !z.contains(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_counts() {
        assert_eq!(relation_schema(2).unwrap().relations.len(), 22);
        assert_eq!(relation_schema(3).unwrap().relations.len(), 44);
        assert_eq!(relation_schema(1), Err(Error::Genus { b: 1 }));
    }

    #[test]
    fn genus_two_labels() {
        let s = relation_schema(2).unwrap();
        let labels: Vec<&str> = s.relations.iter().map(|r| r.label.as_str()).collect();
        let mut want = alloc::vec![String::from("S1"), String::from("S2")];
        want.extend((1..=10).map(|i| format!("R{i}")));
        want.extend((1..=10).map(|i| format!("T{i}")));
        assert_eq!(labels, want.iter().map(String::as_str).collect::<Vec<_>>());
        let show = |l: &str| format!("{}", s.get(l).unwrap());
        assert_eq!(show("R4"), "(R4) [r11, t21] = z^-1");
        assert_eq!(show("R7"), "(R7) [r12, r21] = z^-1 r21 r22^-1 z r22 r21^-1");
        assert_eq!(
            show("T9"),
            "(T9) [t12, t21] = t22^-1 z t22 z^-1 t21 z t22^-1 z^-1 t22 t21^-1"
        );
        assert_eq!(
            show("S1"),
            "(S1) [r12^-1, t12^-1] t12^-1 [r11^-1, t11^-1] t11^-1 (t11 t12) = z"
        );
        assert_eq!(
            show("S2"),
            "(S2) [r21^-1, t21] t21 [r22^-1, t22] t22 (t22^-1 t21^-1) = z^-1"
        );
    }
}
