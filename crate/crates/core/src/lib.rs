#![allow(clippy::needless_range_loop)]

//! Exact verification of the finite computations behind Mathieu group
//! actions on Enriques surfaces.

pub mod cli;
pub mod config;
pub mod cyclo;
pub mod exact;
pub mod lattice;
pub mod mrep;
pub mod perm;
