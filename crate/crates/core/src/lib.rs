//! Enumeration of ad-nilpotent and abelian ideals of Borel subalgebras of
//! simple Lie algebras, their staircase-diagram and lattice-path encodings,
//! and exact closed-form counts to check them against.
//!
//! Counting routines are generic over an exact integer type
//! ([`num::ExactInt`]); the aliases below fix the usual choice.

pub mod closed_forms;
pub mod error;
pub mod ideal;
pub mod num;
pub mod parallel;
pub mod paths;
pub mod root_system;
pub mod rootset;
pub mod shi;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use ideal::{Antichain, Ideal};
pub use root_system::{Letter, Root, RootSystem, TypeRank};
pub use rootset::RootSet;
pub use stats::{Method, StatsTable};

/// Arbitrary-precision count; the default scalar for every table.
pub type Count = num_bigint::BigUint;
/// Statistics table over arbitrary-precision counts.
pub type Table = StatsTable<Count>;
/// Statistics table over machine words, for hot loops and small ranks.
pub type Table64 = StatsTable<u64>;
