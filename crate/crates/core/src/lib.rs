//! Finite group engine for counting surface braid group quotients.
//!
//! The crate materializes small finite groups from power-commutator
//! presentations, answers the structural questions needed to screen them
//! (centre, derived subgroup, normal subgroups, monolith, automorphisms), and
//! enumerates the 9-tuples of group elements that satisfy the genus-2 pure
//! braid relations, both in total and up to automorphism.
//!
//! Everything here is `no_std` with `alloc`: file IO, parallel scheduling,
//! reports and the command line live in the companion `kodaira` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod braid;
mod error;
pub mod grouptheory;
pub mod pcgroup;
pub mod predicates;
pub mod search;
mod set;

pub use error::{Error, Result};
pub use pcgroup::{build_group, parse_presentation, FiniteGroup, PcPresentation, Word};
pub use set::ElementSet;

/// Largest group order [`build_group`] will materialize unless told otherwise.
pub const DEFAULT_ORDER_CAP: usize = 512;
