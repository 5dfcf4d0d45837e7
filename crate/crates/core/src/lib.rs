//! Translation of deterministic Rabin automata (and, through them, Streett
//! and generalized Rabin automata) into deterministic parity automata using
//! index appearance records.
//!
//! The plain construction is [`iar::iar`]; [`star::iar_star`] works per
//! strongly connected component and only builds the bottom part of each
//! local appearance record. [`oracle`] decides language equivalence and is
//! what the test suites check every translation against.

pub mod automaton;
pub mod bench;
pub mod degen;
pub mod error;
pub mod hoa;
pub mod iar;
pub mod oracle;
pub mod star;
pub mod translate;

#[cfg(test)]
mod fixtures;

pub use automaton::{Acceptance, Alphabet, Automaton, Dts, LassoWord, Letter, StateId};
pub use error::{Error, Result};
