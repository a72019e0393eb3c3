//! Coarse spaces on groups whose entourages come from conjugation.
//!
//! Points of a group `G` are related when one is a conjugate of the other by
//! an element of a finite set `F`. Every property of the resulting space is
//! checked under an explicit [`Budget`](coarse::Budget) and answered with a
//! three-valued [`Verdict`](coarse::Verdict) carrying re-checkable witnesses.

pub mod bergman;
pub mod cli;
pub mod coarse;
pub mod conj;
pub mod error;
pub mod group;
pub mod subgroups;
pub mod suite;
pub mod zoo;

pub use error::{Error, Result};
