//! Finite-scale computational group theory for verbal subgroups and
//! finite quotients.
//!
//! Groups are dense multiplication tables over `0..order` with element `0`
//! as the identity. Everything else (word maps, S-ranks, Frattini covers,
//! first-order evaluation, quotient towers) is built on top of
//! [`FiniteGroup`] and [`SubgroupSet`].
//!
//! Inner loops that enumerate assignments, normal subgroups or tower levels
//! run on rayon when the `parallel` feature is enabled (the default) and
//! fall back to plain iterators otherwise. Results are identical either way.

pub mod caps;
pub mod error;
pub mod folog;
pub mod group;
mod par;
pub mod srank;
pub mod towers;
pub mod words;

pub use caps::Caps;
pub use error::{Error, Result};
pub use words::{VerbalResult, Word};
pub use group::{
    CompositionSeries, Elem, ElemSet, FiniteGroup, GroupHom, GroupSpec, SeriesChoice, SubgroupSet,
};


/// Schema tag carried by every JSON report.
pub const SCHEMA: &str = "verbalis/1";
