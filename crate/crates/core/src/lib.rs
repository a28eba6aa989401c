//! Spin characters of the double covers of the symmetric and alternating
//! groups: shifted tableaux, projective outer products and the classification
//! of multiplicity-free and irreducible cases.

pub mod classification;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod scalar;
pub mod shifted_tableaux;
pub mod spin_characters;
pub mod verify;

pub use error::{Error, Result};
