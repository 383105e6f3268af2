//! Exact computation of bottom complexes of rational pointed cones.

pub mod bottomcx;
pub mod caps;
pub mod cli;
pub mod cone;
mod dd;
pub mod disc;
pub mod error;
pub mod fano;
pub mod exactlin;
pub mod gluing;
pub mod grring;
pub mod json;
pub mod monoid;
pub mod svg;

pub use error::{Error, Result};
