//! Permutations avoiding partially ordered patterns.
//!
//! The crate enumerates avoidance classes two ways, by brute force over
//! `S_n` and by structural generators, and carries the explicit bijections
//! between these classes and other combinatorial families (compositions,
//! juggling sequences, shrub forests, bounded-displacement permutations).
//! Every structural result can be checked against an exhaustive oracle.

pub mod error;
pub mod perm;
pub mod pop;
pub mod counting;
pub mod avoidance;
pub mod structures;
pub mod bijections;
pub mod fib_simples;
pub mod fixtures;
pub mod cli;

pub use error::{Error, Result};
pub use perm::{perm, Permutation};
pub use pop::Pop;
pub use avoidance::Family;
pub use bijections::{Bijection, BijectionReport};
