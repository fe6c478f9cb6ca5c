//! Partitions, boundary words, Littlewood decompositions, the v-coding of
//! symmetric cores, and verification of hook-length and character
//! identities as exact truncated series.

pub mod algebra;
pub mod error;
pub mod identities;
pub mod littlewood;
pub mod partitions;
pub mod vcoding;
pub mod words;

pub use error::{Error, Result};
pub use littlewood::{CoreVector, Decomposition};
pub use partitions::Partition;
pub use words::{BoundaryWord, Word};
