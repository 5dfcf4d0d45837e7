use std::fmt;

use crate::automaton::StateId;

/// Kind tag of an acceptance condition, used in error messages.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AcceptanceKind {
    Rabin,
    GeneralizedRabin,
    Streett,
    Parity,
}

impl fmt::Display for AcceptanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AcceptanceKind::Rabin => "Rabin",
            AcceptanceKind::GeneralizedRabin => "generalized Rabin",
            AcceptanceKind::Streett => "Streett",
            AcceptanceKind::Parity => "parity",
        })
    }
}

/// A syntax or semantic error in an HOA document, with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoaError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for HoaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("expected {expected} acceptance, found {found}")]
    WrongAcceptance {
        expected: &'static str,
        found: AcceptanceKind,
    },
    #[error("permutation has length {found}, automaton has {expected} pairs")]
    PermutationLength { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("pair index {index} out of range (k = {pairs})")]
    PairOutOfRange { index: usize, pairs: usize },
    #[error("state {0} is not in the given state set")]
    StateNotInSet(StateId),
    #[error("alphabets differ: {0}")]
    AlphabetMismatch(String),
    #[error("automaton is not strongly connected")]
    NotStronglyConnected,
    #[error("automaton is incomplete; complete it first")]
    Incomplete,
    #[error("state budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("nondeterministic: state {state} has two successors on letter {letter}")]
    Nondeterministic { state: StateId, letter: usize },
    #[error("invalid automaton: {0}")]
    Invalid(String),
    #[error("oracle instance too large: {0}")]
    OracleTooLarge(String),
    #[error("HOA error at {0}")]
    Hoa(HoaError),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn wrong_acceptance(expected: &'static str, found: AcceptanceKind) -> Self {
        Error::WrongAcceptance { expected, found }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
