//! Exact computational group theory around `SL_d(Z)`, homotopy spheres and
//! mapping class groups of exotic tori.

pub mod abgroups;
pub mod cli;
pub mod endoclass;
pub mod error;
pub mod matrices;
pub mod mcg;
pub mod scalars;
pub mod spheres;
pub mod steinberg;

pub use error::{Error, Result};
