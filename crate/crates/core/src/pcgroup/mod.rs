//! Power-commutator presentations and the groups they define.

mod build;
mod group;
mod parse;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use build::{build_group, build_group_with_cap};
pub use group::FiniteGroup;
pub use parse::{parse_presentation, parse_word_over};

/// A word in the generators `x1..xk`. Generators are stored 0-based; the
/// textual form is 1-based. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<(usize, i32)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        Word(alloc::vec![(g, 1)])
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[(usize, i32)] {
        &self.0
    }

    /// Largest generator index mentioned, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|&(g, _)| g).max()
    }

    pub fn min_generator(&self) -> Option<usize> {
        self.0.iter().map(|&(g, _)| g).min()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, &(g, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if e == 1 {
                write!(f, "x{}", g + 1)?;
            } else {
                write!(f, "x{}^{}", g + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Generators `x1..xk` with relative orders, power relations
/// `x_i^{p_i} = w` and commutator relations `[x_i, x_j] = w` for `i < j`,
/// where `[x, y] = x y x^-1 y^-1`. Indices are 0-based in memory.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PcPresentation {
    pub name: String,
    pub rel_orders: Vec<u32>,
    pub power_words: BTreeMap<usize, Word>,
    pub comm_words: BTreeMap<(usize, usize), Word>,
}

impl PcPresentation {
    pub fn k(&self) -> usize {
        self.rel_orders.len()
    }

    /// Product of the relative orders, or `None` on overflow.
    pub fn order(&self) -> Option<usize> {
        self.rel_orders
            .iter()
            .try_fold(1usize, |acc, &p| acc.checked_mul(p as usize))
    }

    pub fn power_word(&self, i: usize) -> Word {
        self.power_words.get(&i).cloned().unwrap_or_default()
    }

    pub fn comm_word(&self, i: usize, j: usize) -> Word {
        self.comm_words.get(&(i, j)).cloned().unwrap_or_default()
    }
}

/// The presentation file format; parsing the output reproduces `self`
/// up to dropped identity relations.
impl fmt::Display for PcPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.name.is_empty() {
            writeln!(f, "group \"{}\"", self.name)?;
        }
        writeln!(f, "gens {}", self.k())?;
        for (i, p) in self.rel_orders.iter().enumerate() {
            writeln!(f, "order {} {}", i + 1, p)?;
        }
        for (i, w) in &self.power_words {
            if !w.is_identity() {
                writeln!(f, "pow {} = {}", i + 1, w)?;
            }
        }
        for ((i, j), w) in &self.comm_words {
            if !w.is_identity() {
                writeln!(f, "comm {} {} = {}", i + 1, j + 1, w)?;
            }
        }
        writeln!(f, "end")
    }
}
