//! Homological mirror symmetry for invertible curve singularities, computed
//! exactly: matrix factorisations and their Hom spaces on one side,
//! vanishing-cycle combinatorics on the other.

pub mod error;
pub mod galg;
pub mod mirror_core;
pub mod matfac;
pub mod homcat;
pub mod quiverlab;
pub mod amodel;
pub mod cli;

pub use error::{MirrorError, Result};
