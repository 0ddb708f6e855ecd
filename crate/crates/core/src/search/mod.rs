//! Enumeration of prestructures and structures: 9-tuples
//! `(r11, t11, r12, t12, r21, t21, r22, t22, z)` satisfying the genus-2
//! braid relations, counted in total and up to automorphism.

mod burnside;
mod engine;
mod lift;
mod obstruction;
mod orbits;
pub mod relations;
mod screen;
mod tables;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

pub use burnside::{burnside, count_prestructures_within, count_structures_within, BurnsideCheck};
pub use engine::{enumerate, enumerate_prestructures, enumerate_structures, SearchContext};
pub use lift::{count_via_lifting, LiftOptions, LiftProfile, LiftReport};
pub use obstruction::{extension_obstruction, Obstruction};
pub use orbits::{reduce_mod_aut, AutTable, OrbitInfo};
pub use screen::{has_prestructure, screen_group, ScreenVerdict};
pub use tables::{SearchTables, EXACT_ORDER_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SearchKind {
    Prestructures,
    Structures,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub kind: SearchKind,
    /// Only count tuples whose `z` has this order.
    pub n_filter: Option<usize>,
    /// Keep at most this many orbit representatives (0 keeps none).
    pub max_representatives: usize,
}

impl SearchOptions {
    pub fn new(kind: SearchKind) -> Self {
        SearchOptions {
            kind,
            n_filter: None,
            max_representatives: 0,
        }
    }

    pub fn with_representatives(mut self, max: usize) -> Self {
        self.max_representatives = max;
        self
    }
}

/// An orbit representative: the least tuple of its orbit when tuples are
/// compared in search order `(z, r21, t21, r22, t22, r11, t11, r12, t12)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representative {
    /// Entries in tuple order `(r11, t11, r12, t12, r21, t21, r22, t22, z)`.
    pub entries: [usize; 9],
    pub stabilizer_order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub label: String,
    pub kind: SearchKind,
    pub order: usize,
    pub aut_order: u64,
    pub n_filter: Option<usize>,
    pub total_count: u64,
    pub orbit_count: u64,
    /// Stabilizer order to number of orbits.
    pub stabilizer_histogram: BTreeMap<u64, u64>,
    pub n_values_seen: BTreeSet<usize>,
    pub z_always_central: bool,
    /// `C(<r11, t11, r12, t12>) = Z(G)` for every counted tuple.
    pub k_centralizer_always_center: bool,
    /// No counted tuple has a central entry other than `z`.
    pub entries_noncentral: bool,
    pub representatives: Vec<Representative>,
    /// Number of independent work units the search was split into.
    pub work_units: usize,
}

impl SearchReport {
    /// `total = Σ |Aut| / |stab|` over the histogram.
    pub fn orbit_identity_holds(&self) -> bool {
        let weighted: u128 = self
            .stabilizer_histogram
            .iter()
            .map(|(&s, &c)| (self.aut_order / s) as u128 * c as u128)
            .sum();
        let orbits: u64 = self.stabilizer_histogram.values().sum();
        weighted == self.total_count as u128
            && orbits == self.orbit_count
            && self
                .stabilizer_histogram
                .keys()
                .all(|&s| self.aut_order % s == 0)
    }
}

/// Runs independent jobs; results come back in job order.
pub trait Executor {
    fn map<T, F>(&self, count: usize, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send;
}

/// Runs jobs one after another on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Serial;

impl Executor for Serial {
    fn map<T, F>(&self, count: usize, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        (0..count).map(job).collect()
    }
}
