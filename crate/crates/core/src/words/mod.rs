//! Binary words, the blocks `S(j, ·)` and admissible sequences.

pub mod admissible;
pub mod blocks;
pub mod word;

pub use admissible::{classify, derived, is_admissible, successor, AdmissibleSeq, DEFAULT_MAX_DEPTH};
pub use blocks::{block_lengths, build_block, materialize, BlockForm, HSpec, Tail};
pub use word::{binary, BinaryEpw, BinaryWord, EventuallyPeriodicWord};
