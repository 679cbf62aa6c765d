//! Builders for named groups, products, wreath products and quotients, plus
//! group-file ingestion.

mod file;
mod named;
mod products;
mod spec;

pub use file::{group_text, load_group, parse_group_text, save_group};
pub use named::{alternating, cyclic, dihedral, gl2_3, sl2_3, symmetric, weyl_b};
pub use products::{direct_product, quotient, quotient_by_set, wreath, DirectProduct, Quotient};
pub use spec::GroupSpec;

use crate::error::Result;
use crate::permcore::PermGroup;

/// Constructs the group described by a spec, refusing orders above `cap`.
pub fn build(spec: &GroupSpec, cap: usize) -> Result<PermGroup> {
    Ok(match spec {
        GroupSpec::Symmetric(n) => symmetric(*n, cap)?,
        GroupSpec::Alternating(n) => alternating(*n, cap)?,
        GroupSpec::Cyclic(n) => cyclic(*n, cap)?,
        GroupSpec::Dihedral(n) => dihedral(*n, cap)?,
        GroupSpec::Sl2_3 => sl2_3(),
        GroupSpec::Gl2_3 => gl2_3(),
        GroupSpec::WeylB(n) => weyl_b(*n, cap)?,
        GroupSpec::Wreath(a, b) => wreath(&build(a, cap)?, &build(b, cap)?, cap)?,
        GroupSpec::Product(a, b) => direct_product(&build(a, cap)?, &build(b, cap)?, cap)?.group,
        GroupSpec::File(path) => load_group(path, cap)?,
    })
}

/// Parses and builds in one step.
pub fn build_str(text: &str, cap: usize) -> Result<PermGroup> {
    build(&GroupSpec::parse(text)?, cap)
}
