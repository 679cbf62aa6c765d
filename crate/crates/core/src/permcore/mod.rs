//! Permutation-group arithmetic: elements, stabilizer chains, conjugacy
//! classes and the structural subroutines the rest of the crate builds on.

mod chain;
mod classes;
mod group;
mod perm;
mod structure;

pub use chain::StabChain;
pub use classes::ConjugacyData;
pub use group::{PermGroup, DEFAULT_MAX_ORDER};
pub use perm::Permutation;
pub use structure::{
    derived_series, derived_subgroup, is_normal, is_solvable, is_subnormal, normal_closure,
    normalizer, subgroup_from_elements,
};

pub(crate) use group::gcd;

/// `compose` with the crate-wide "apply left first" convention.
pub fn compose(a: &Permutation, b: &Permutation) -> crate::Result<Permutation> {
    a.compose(b)
}

pub fn build_group(degree: usize, gens: Vec<Permutation>) -> crate::Result<PermGroup> {
    PermGroup::new(degree, gens)
}

pub fn conjugacy_classes(g: &PermGroup) -> ConjugacyData {
    ConjugacyData::new(g)
}
