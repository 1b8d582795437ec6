//! Executable finite fragments of complete Segal space theory.
//!
//! Finite categories ([`fincat`]), truncated simplicial sets ([`simpset`]),
//! truncated bisimplicial sets ([`sspace`]), discrete fibrations
//! ([`fibrations`]) and colimits/adjunctions ([`colim_adj`]). Every decision
//! procedure is exhaustive and bounded by [`Limits`].

pub mod colim_adj;
pub mod dot;
pub mod error;
pub mod fibrations;
pub mod fincat;
pub mod fixtures;
pub mod generators;
pub mod io;
pub mod limits;
pub mod simpset;
pub mod sspace;
mod names;

pub use error::{Error, Result};
pub use limits::Limits;
