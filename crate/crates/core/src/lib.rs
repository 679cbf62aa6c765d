//! Character-theory engine for finite permutation groups.
//!
//! The crate decides the monomiality hierarchy (monomial, quasi-monomial,
//! almost monomial, normally/subnormally almost monomial and relative almost
//! monomial) for groups of moderate order. Everything is element-enumeration
//! based: groups are capped at [`DEFAULT_MAX_ORDER`] elements, character
//! tables are computed exactly over a prime field, and every positive verdict
//! comes with witness certificates that can be re-checked independently.

pub mod amcheck;
pub mod bitset;
pub mod chartab;
pub mod classfun;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod field;
pub mod permcore;
pub mod subgroups;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use field::PrimeField;
pub use permcore::{ConjugacyData, PermGroup, Permutation, DEFAULT_MAX_ORDER};
pub use amcheck::{Analysis, Limits, Property, PropertyReport};
