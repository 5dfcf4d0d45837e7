//! Generalized Rabin to Rabin by round-robin counters.
//!
//! Pair `i` with required sets `I_i^0, ..., I_i^{l-1}` gets a counter that
//! waits for `I_i^c` at value `c` and then advances by one. The new required
//! set holds the transitions on which the counter wraps around.

use std::collections::HashMap;

use crate::automaton::{Acceptance, Automaton, Dts, RabinPair, StateId};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Degeneralized {
    pub automaton: Automaton,
    /// Input state and counter values behind each output state.
    pub states: Vec<(StateId, Vec<usize>)>,
}

pub fn degeneralize(aut: &Automaton) -> Result<Degeneralized> {
    let pairs = match &aut.acceptance {
        Acceptance::GeneralizedRabin(p) => p,
        other => return Err(Error::wrong_acceptance("generalized Rabin", other.kind())),
    };
    let dts = &aut.dts;
    let start = (dts.initial(), vec![0; pairs.len()]);
    let mut index = HashMap::from([(start.clone(), 0)]);
    let mut states = vec![start];
    let mut edges = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let (q, counters) = states[i].clone();
        for t in dts.outgoing(q) {
            let mut next = counters.clone();
            let mut wraps = vec![false; pairs.len()];
            for (p, pair) in pairs.iter().enumerate() {
                let l = pair.infs.len();
                if l == 0 {
                    wraps[p] = true;
                } else if pair.infs[counters[p]].contains(q, t.letter) {
                    next[p] = (counters[p] + 1) % l;
                    wraps[p] = next[p] == 0;
                }
            }
            let key = (t.target, next);
            let target = *index.entry(key.clone()).or_insert_with(|| {
                states.push(key);
                states.len() - 1
            });
            edges.push((i, t.letter, target, wraps, t.key()));
        }
        i += 1;
    }

    let mut out = Dts::new(states.len(), dts.alphabet().clone(), 0)?;
    for (s, (q, counters)) in states.iter().enumerate() {
        let c: Vec<String> = counters.iter().map(|c| c.to_string()).collect();
        out.set_name(s, format!("{}[{}]", dts.display_name(*q), c.join(",")));
    }
    let mut new_pairs = vec![RabinPair::default(); pairs.len()];
    for (s, a, target, wraps, (q, _)) in edges {
        out.add_transition(s, a, target)?;
        for (p, pair) in pairs.iter().enumerate() {
            if pair.fin.contains(q, a) {
                new_pairs[p].fin.insert(s, a);
            }
            if wraps[p] {
                new_pairs[p].inf.insert(s, a);
            }
        }
    }
    Ok(Degeneralized {
        automaton: Automaton::new(out, Acceptance::Rabin(new_pairs))?,
        states,
    })
}

/// Reads a Rabin condition as generalized Rabin with one required set per pair.
pub fn generalize(aut: &Automaton) -> Result<Automaton> {
    let pairs = aut.rabin_pairs()?;
    Ok(Automaton {
        dts: aut.dts.clone(),
        acceptance: Acceptance::GeneralizedRabin(crate::automaton::rabin_as_generalized(pairs)),
    })
}
