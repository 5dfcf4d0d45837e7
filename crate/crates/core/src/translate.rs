//! One entry point from any supported input condition to a parity automaton.

use crate::automaton::{complete, to_state_based, Acceptance, Automaton};
use crate::degen::degeneralize;
use crate::error::{Error, Result};
use crate::iar::{iar, streett_to_dpa, IarOptions, Permutation};
use crate::star::iar_star;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    Iar,
    #[default]
    IarStar,
}

#[derive(Debug, Clone, Default)]
pub struct TranslateOptions {
    pub mode: Mode,
    /// Initial record for [`Mode::Iar`] on Rabin input.
    pub initial_perm: Option<Permutation>,
    pub iar: IarOptions,
    /// Add a rejecting sink before translating.
    pub complete: bool,
    /// Split states so that every state emits a single priority.
    pub state_based: bool,
}

/// Rabin input goes through the selected construction, generalized Rabin
/// input is degeneralized first, Streett input is translated through its
/// complement, and parity input is passed on unchanged.
pub fn translate(input: &Automaton, opts: &TranslateOptions) -> Result<Automaton> {
    let completed;
    let aut = if opts.complete {
        completed = complete(input);
        &completed
    } else {
        input
    };
    if opts.initial_perm.is_some() && (opts.mode != Mode::Iar || !matches!(aut.acceptance, Acceptance::Rabin(_))) {
        return Err(Error::Invalid(
            "an initial permutation applies to iar mode on Rabin input only".into(),
        ));
    }
    let out = match &aut.acceptance {
        Acceptance::Rabin(_) => rabin(aut, opts)?,
        Acceptance::GeneralizedRabin(_) => rabin(&degeneralize(aut)?.automaton, opts)?,
        Acceptance::Streett(_) => streett_to_dpa(aut, opts.mode == Mode::IarStar, &opts.iar)?,
        Acceptance::Parity(_) => aut.clone(),
    };
    if opts.state_based {
        to_state_based(&out)
    } else {
        Ok(out)
    }
}

fn rabin(aut: &Automaton, opts: &TranslateOptions) -> Result<Automaton> {
    match opts.mode {
        Mode::Iar => {
            let k = aut.rabin_pairs()?.len();
            let pi = opts.initial_perm.clone().unwrap_or_else(|| Permutation::identity(k));
            Ok(iar(aut, &pi, &opts.iar)?.automaton)
        }
        Mode::IarStar => Ok(iar_star(aut, &opts.iar)?.automaton),
    }
}
