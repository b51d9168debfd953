//! Finite-group toolkit for Engel elements: exact group arithmetic,
//! subgroup structure, Engel sets and checks of the classical results
//! about them.

pub mod analysis;
pub mod constructions;
pub mod engel;
pub mod error;
pub mod group;
pub mod ops;
pub mod structure;
pub mod subgroup;
pub mod verify;

pub use error::{Error, Result};
pub use group::{Element, FiniteGroup, GeneratorRole};
pub use ops::{engel_commutator, GroupOps};
pub use subgroup::{closure, quotient, Subgroup};
