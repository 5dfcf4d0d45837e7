//! Deterministic omega-automata with transition-based acceptance, and the
//! graph algorithms the translations are built on.

mod acceptance;
mod dts;
mod emptiness;
mod lasso;
mod ops;
mod scc;

pub use acceptance::{
    Acceptance, Automaton, GenRabinPair, LassoWord, Priorities, RabinPair, TransitionSet,
};
pub use dts::{Alphabet, Dts, Letter, StateId, Transition, MAX_APS};
pub use emptiness::{accepting_lasso, gen_rabin_empty};
pub use lasso::{accepts_lasso, lasso_run, LassoRun};
pub use ops::{
    check_same_alphabet, complement_parity, complete, product, rabin_as_generalized, restrict,
    to_state_based, to_transition_based, uniform_state_priorities, Product, Restriction,
};
pub use scc::{bottom_sccs, is_transient, scc_decompose, tarjan, SccDecomposition};
