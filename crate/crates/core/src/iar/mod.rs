//! Transition-based index appearance record: deterministic Rabin automata to
//! deterministic parity automata.
//!
//! A state of the output pairs an input state with a permutation of the Rabin
//! pair indices. Taking a transition moves the indices of all prohibited sets
//! it visits to the front. The priority of a transition is read off the
//! rightmost pair the transition touches in the source permutation: odd when
//! it hits that pair's prohibited set, even when it hits only the required set.

mod permutation;

use std::collections::HashMap;

pub use permutation::Permutation;
pub(crate) use permutation::write_indices;

use crate::automaton::{complement_parity, Acceptance, Automaton, Dts, Letter, Priorities, RabinPair, StateId};
use crate::error::{Error, Result};

/// State of the output automaton.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IarState {
    pub base: StateId,
    pub record: Permutation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IarOptions {
    /// When a transition visits several prohibited sets, try every ordering
    /// of the front block and reuse an already constructed successor if one
    /// exists.
    pub prefer_existing: bool,
    /// Largest front block for which orderings are enumerated.
    pub prefer_bound: usize,
    /// Abort once more states than this have been created.
    pub state_budget: usize,
}

impl Default for IarOptions {
    fn default() -> Self {
        IarOptions {
            prefer_existing: false,
            prefer_bound: 6,
            state_budget: 10_000_000,
        }
    }
}

/// A parity automaton together with the appearance-record state behind each
/// of its states.
#[derive(Debug, Clone)]
pub struct IarAutomaton {
    pub automaton: Automaton,
    pub states: Vec<IarState>,
}

/// Largest 1-based position in `pi` of a pair whose prohibited or required
/// set contains the transition; 0 if it touches none.
pub fn max_ind(transition: (StateId, Letter), pi: &Permutation, pairs: &[RabinPair]) -> usize {
    let (q, a) = transition;
    (0..pi.len())
        .rev()
        .find(|&pos| {
            let pair = &pairs[pi.at(pos)];
            pair.fin.contains(q, a) || pair.inf.contains(q, a)
        })
        .map_or(0, |pos| pos + 1)
}

/// Priority of a transition leaving a state with record `pi`.
pub fn priority(transition: (StateId, Letter), pi: &Permutation, pairs: &[RabinPair]) -> u32 {
    match max_ind(transition, pi, pairs) {
        0 => 1,
        m => {
            let pair = &pairs[pi.at(m - 1)];
            let base = 2 * m as u32;
            if pair.fin.contains(transition.0, transition.1) {
                base + 1
            } else {
                base
            }
        }
    }
}

/// Indices of the prohibited sets containing the transition.
fn visited_fins(transition: (StateId, Letter), pairs: &[RabinPair]) -> Vec<usize> {
    pairs
        .iter()
        .enumerate()
        .filter(|(_, p)| p.fin.contains(transition.0, transition.1))
        .map(|(i, _)| i)
        .collect()
}

pub(crate) fn state_label(dts: &Dts, base: StateId, record: &[usize]) -> String {
    let mut label = dts.display_name(base);
    if !record.is_empty() {
        label.push(',');
        write_indices(&mut label, record).expect("writing to a String");
    }
    label
}

/// Index appearance record of a Rabin automaton, started from `(q0, initial)`.
/// Only the reachable part is built.
///
/// The move-to-front update is the stable one: visited indices go to the
/// front ordered by their previous positions (or per `prefer_existing`), all
/// other indices keep their relative order. Priorities are evaluated on the
/// source permutation.
pub fn iar(aut: &Automaton, initial: &Permutation, opts: &IarOptions) -> Result<IarAutomaton> {
    let pairs = aut.rabin_pairs()?;
    if initial.len() != pairs.len() {
        return Err(Error::PermutationLength {
            expected: pairs.len(),
            found: initial.len(),
        });
    }
    let dts = &aut.dts;
    let start = IarState {
        base: dts.initial(),
        record: initial.clone(),
    };
    let mut index: HashMap<IarState, StateId> = HashMap::from([(start.clone(), 0)]);
    let mut states = vec![start];
    let mut edges: Vec<(StateId, Letter, StateId, u32)> = Vec::new();

    let mut i = 0;
    while i < states.len() {
        let IarState { base, record } = states[i].clone();
        for t in dts.outgoing(base) {
            let key = t.key();
            let visited = visited_fins(key, pairs);
            let mut next = record.move_to_front(&visited)?;
            if opts.prefer_existing && visited.len() > 1 && visited.len() <= opts.prefer_bound {
                if let Some(existing) = record
                    .move_to_front_all(&visited)?
                    .into_iter()
                    .find(|p| {
                        index.contains_key(&IarState {
                            base: t.target,
                            record: p.clone(),
                        })
                    })
                {
                    next = existing;
                }
            }
            let succ = IarState {
                base: t.target,
                record: next,
            };
            let target = match index.get(&succ) {
                Some(&s) => s,
                None => {
                    if states.len() >= opts.state_budget {
                        return Err(Error::BudgetExceeded(opts.state_budget));
                    }
                    states.push(succ.clone());
                    index.insert(succ, states.len() - 1);
                    states.len() - 1
                }
            };
            edges.push((i, t.letter, target, priority(key, &record, pairs)));
        }
        i += 1;
    }

    let mut out = Dts::new(states.len(), dts.alphabet().clone(), 0)?;
    for (s, st) in states.iter().enumerate() {
        out.set_name(s, state_label(dts, st.base, st.record.order()));
    }
    let mut pr = Priorities::new();
    for (s, letter, t, p) in edges {
        out.add_transition(s, letter, t)?;
        pr.set(s, letter, p);
    }
    Ok(IarAutomaton {
        automaton: Automaton {
            dts: out,
            acceptance: Acceptance::Parity(pr),
        },
        states,
    })
}

/// [`iar`] from the identity permutation with default options.
pub fn iar_default(aut: &Automaton) -> Result<IarAutomaton> {
    let k = aut.rabin_pairs()?.len();
    iar(aut, &Permutation::identity(k), &IarOptions::default())
}

/// Streett to parity: read the pairs as a Rabin condition, which recognizes
/// the complement, translate, and complement the parity result. The input
/// must be complete.
pub fn streett_to_dpa(aut: &Automaton, optimized: bool, opts: &IarOptions) -> Result<Automaton> {
    let pairs = match &aut.acceptance {
        Acceptance::Streett(p) => p.clone(),
        other => return Err(Error::wrong_acceptance("Streett", other.kind())),
    };
    if !aut.dts.is_complete() {
        return Err(Error::Incomplete);
    }
    let rabin = Automaton {
        dts: aut.dts.clone(),
        acceptance: Acceptance::Rabin(pairs),
    };
    let complement = if optimized {
        crate::star::iar_star(&rabin, opts)?.automaton
    } else {
        iar(&rabin, &Permutation::identity(rabin.rabin_pairs()?.len()), opts)?.automaton
    };
    complement_parity(&complement)
}
