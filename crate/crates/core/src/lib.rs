//! Finite-model workbench for relative notions of size on finite semigroups.
//!
//! Collections of subsets are handled extensionally as bitmaps over the
//! powerset, which keeps every definitional check a direct scan.

mod bitmap;
pub mod collection;
pub mod derived;
pub mod enumerate;
pub mod error;
pub mod harness;
pub mod io;
pub mod kernel;
pub mod limits;
pub mod relative;
pub mod semigroup;
pub mod standard;
pub mod subset;

pub use collection::{classify, grill_of_stack, maximal_filters_in, meet_wedge, mesh, minimal_members, stack_closure, ClassFlags, Collection};
pub use error::{Error, Result};
pub use semigroup::{CayleyRecord, FiniteSemigroup};
pub use standard::{standard_semigroup, SemigroupKind};
pub use subset::Subset;
