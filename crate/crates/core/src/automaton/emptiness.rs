use std::collections::VecDeque;

use super::acceptance::{Acceptance, Automaton, GenRabinPair, LassoWord, TransitionSet};
use super::dts::{Dts, Letter, StateId, Transition};
use super::ops::rabin_as_generalized;
use super::scc::tarjan;
use crate::error::{Error, Result};

fn generalized_pairs(aut: &Automaton) -> Result<Vec<GenRabinPair>> {
    match &aut.acceptance {
        Acceptance::Rabin(p) => Ok(rabin_as_generalized(p)),
        Acceptance::GeneralizedRabin(p) => Ok(p.clone()),
        other => Err(Error::wrong_acceptance("Rabin or generalized Rabin", other.kind())),
    }
}

/// Whether a (generalized) Rabin automaton accepts no word.
pub fn gen_rabin_empty(aut: &Automaton) -> Result<bool> {
    Ok(accepting_lasso(aut)?.is_none())
}

/// Some accepted lasso word of a (generalized) Rabin automaton, or `None`
/// when its language is empty.
///
/// For every pair, the prohibited transitions are deleted and the remaining
/// graph is split into SCCs; a component with an internal cycle that meets
/// every required set certifies nonemptiness.
pub fn accepting_lasso(aut: &Automaton) -> Result<Option<LassoWord>> {
    let pairs = generalized_pairs(aut)?;
    let dts = &aut.dts;
    let reachable = dts.reachable();
    for pair in &pairs {
        let kept = |t: &Transition| !pair.fin.contains(t.source, t.letter);
        let dec = tarjan(dts.num_states(), &reachable, |q| {
            dts.outgoing(q).filter(kept).map(|t| t.target).collect::<Vec<_>>()
        });
        for (c, comp) in dec.sccs.iter().enumerate() {
            let internal: Vec<Transition> = comp
                .iter()
                .flat_map(|&q| dts.outgoing(q))
                .filter(|t| kept(t) && dec.scc_of[t.target] == Some(c))
                .collect();
            if internal.is_empty() {
                continue;
            }
            let witnesses: Option<Vec<Transition>> = if pair.infs.is_empty() {
                Some(vec![internal[0]])
            } else {
                pair.infs
                    .iter()
                    .map(|set: &TransitionSet| {
                        internal.iter().find(|t| set.contains(t.source, t.letter)).copied()
                    })
                    .collect()
            };
            if let Some(witnesses) = witnesses {
                let in_comp = |q: StateId| dec.scc_of[q] == Some(c);
                return Ok(Some(build_lasso(dts, &witnesses, in_comp, &kept)));
            }
        }
    }
    Ok(None)
}

fn build_lasso(
    dts: &Dts,
    witnesses: &[Transition],
    in_comp: impl Fn(StateId) -> bool,
    kept: &impl Fn(&Transition) -> bool,
) -> LassoWord {
    let anchor = witnesses[0].source;
    let prefix = shortest_path(dts, dts.initial(), anchor, |_| true).expect("anchor is reachable");
    let inside = |t: &Transition| kept(t) && in_comp(t.target);
    let mut cycle = Vec::new();
    let mut cur = anchor;
    for w in witnesses {
        cycle.extend(shortest_path(dts, cur, w.source, inside).expect("strongly connected"));
        cycle.push(w.letter);
        cur = w.target;
    }
    cycle.extend(shortest_path(dts, cur, anchor, inside).expect("strongly connected"));
    LassoWord::new(prefix, cycle).expect("cycle holds at least one witness")
}

/// Letters of a shortest path using only edges accepted by `allowed`.
pub(crate) fn shortest_path(
    dts: &Dts,
    from: StateId,
    to: StateId,
    allowed: impl Fn(&Transition) -> bool,
) -> Option<Vec<Letter>> {
    let mut parent: Vec<Option<(StateId, Letter)>> = vec![None; dts.num_states()];
    let mut seen = vec![false; dts.num_states()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(q) = queue.pop_front() {
        if q == to {
            let mut word = Vec::new();
            let mut cur = to;
            while cur != from {
                let (p, a) = parent[cur].expect("bfs tree");
                word.push(a);
                cur = p;
            }
            word.reverse();
            return Some(word);
        }
        for t in dts.outgoing(q).filter(&allowed) {
            if !seen[t.target] {
                seen[t.target] = true;
                parent[t.target] = Some((q, t.letter));
                queue.push_back(t.target);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{accepts_lasso, Alphabet, RabinPair};
    use crate::fixtures::{self, B};

    #[test]
    fn fig1_is_nonempty() {
        let fig1 = fixtures::fig1();
        let w = accepting_lasso(&fig1).unwrap().expect("nonempty");
        assert!(accepts_lasso(&fig1, &w));
        assert!(!gen_rabin_empty(&fig1).unwrap());
    }

    #[test]
    fn fig1_pair_one_witness_is_r_loop() {
        let mut fig1 = fixtures::fig1();
        if let Acceptance::Rabin(p) = &mut fig1.acceptance {
            p.truncate(1);
        }
        let w = accepting_lasso(&fig1).unwrap().unwrap();
        assert_eq!(w.cycle(), &[B]);
    }

    #[test]
    fn universal_pair_on_cycle() {
        let mut dts = Dts::new(2, Alphabet::default(), 0).unwrap();
        dts.add_transition(0, 0, 1).unwrap();
        dts.add_transition(1, 0, 0).unwrap();
        let all = TransitionSet::all(&dts);
        let aut = Automaton::new(dts, Acceptance::Rabin(vec![RabinPair::new(TransitionSet::new(), all)])).unwrap();
        assert!(!gen_rabin_empty(&aut).unwrap());
    }

    #[test]
    fn empty_required_set_contributes_nothing() {
        let fig1 = fixtures::fig1();
        let pairs = vec![
            GenRabinPair {
                fin: TransitionSet::new(),
                infs: vec![TransitionSet::all(&fig1.dts), TransitionSet::new()],
            };
            2
        ];
        let aut = Automaton::new(fig1.dts.clone(), Acceptance::GeneralizedRabin(pairs)).unwrap();
        assert!(gen_rabin_empty(&aut).unwrap());
        let no_pairs = Automaton::new(fig1.dts, Acceptance::Rabin(vec![])).unwrap();
        assert!(gen_rabin_empty(&no_pairs).unwrap());
    }

    #[test]
    fn wrong_kind_rejected() {
        let mut fig1 = fixtures::fig1();
        fig1.acceptance = Acceptance::Streett(vec![]);
        assert!(matches!(gen_rabin_empty(&fig1), Err(Error::WrongAcceptance { .. })));
    }
}
