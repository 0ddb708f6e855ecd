//! Subgroups, normal structure, quotients, isomorphisms and automorphisms of
//! materialized groups.

mod abelian;
mod iso;
mod normal;
mod quotient;
mod subgroups;

pub use abelian::abelian_invariants;
pub use iso::{
    automorphism_group, automorphism_group_with_cap, is_homomorphism, is_isomorphic, AutGroup,
    Automorphism, DEFAULT_AUT_CAP,
};
pub use normal::{minimal_normal_subgroups, monolith, normal_subgroups};
pub use quotient::{quotient, QuotientMap};
pub use subgroups::{
    center, centralizer, centralizer_of, class_of, commutator_subgroup, conjugacy_classes,
    derived_subgroup, is_normal, is_subgroup, lower_central_series, normal_closure, product_set,
    subgroup_as_group, subgroup_closure,
};
