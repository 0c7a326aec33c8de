//! Exact computations for weighted flag varieties of types A, C and G2:
//! Hilbert series and numerators, canonical weights, Plücker-style
//! equations, and quasi-linear Calabi–Yau sections.

pub mod catalog;
pub mod equations;
pub mod error;
pub mod hilbert;
pub mod lie;
pub mod model;
pub mod poly;
pub mod search;
pub mod weights;

pub use error::{Error, Result};
