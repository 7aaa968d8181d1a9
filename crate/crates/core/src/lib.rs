//! Combinatorics of arc-diagram strata for short exact sequences of
//! nilpotent linear operators: LR- and Klein tableaux, arc diagrams, the
//! move order and its posets, bubble sorts, dimension formulas, and a
//! brute-force oracle over prime fields.

pub mod arcs;
pub mod bubblesort;
pub mod dims;
pub mod error;
pub mod fforacle;
pub mod moves;
pub mod partitions;
pub mod posets;
pub mod tableaux;

pub use arcs::{ArcDiagram, Source, SourceTargetSeq, Strand};
pub use error::{Error, Result};
pub use partitions::Partition;
pub use tableaux::{KleinTableau, LrTableau, PartitionTriple};
