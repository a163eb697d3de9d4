//! Exact-arithmetic toolkit for shifted iYangians of quasi-split ADE type.
//!
//! The crate builds the iGKLO difference-operator representations, verifies
//! the defining quantum and Poisson relations at a fixed truncation order, and
//! computes the combinatorial side: type AI islice partition data, epsilon
//! collapses, and quiver iota-fication numerology.

pub mod error;
pub mod exactalg;
pub mod rootdata;
pub mod diffops;
pub mod iyangian;
pub mod igklo;
pub mod classical;
pub mod islices;
pub mod iquiver;
pub mod cli;

pub use error::{Error, Result};
