//! Exact computation in finite permutation groups.
//!
//! The crate provides permutation arithmetic with order/membership
//! certificates ([`group::PermGroup`]), characteristic-subgroup and
//! p-local structure analysis, conjugacy classes with Sylow/fusion
//! predicates, exact class-counting invariants, and a catalog of group
//! constructors including a presentation parser with coset enumeration.

pub mod error;
pub mod limits;
pub mod perm;
pub mod ratio;

pub mod group;

pub use error::{Error, Result};
pub use limits::Limits;
