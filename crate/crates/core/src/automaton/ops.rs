use std::collections::{BTreeSet, HashMap};

use super::acceptance::{Acceptance, Automaton, GenRabinPair, Priorities, RabinPair, TransitionSet};
use super::dts::{Dts, StateId};
use crate::error::{Error, Result};

/// `aut` restricted to a state set, see [`restrict`].
#[derive(Debug, Clone)]
pub struct Restriction {
    pub automaton: Automaton,
    /// Original id of each restricted state.
    pub states: Vec<StateId>,
    /// Original index of each surviving pair.
    pub pairs: Vec<usize>,
}

/// Sub-automaton on `set` entered at `entry`. Only transitions staying inside
/// `set` survive, and only the pairs whose required set meets them, each
/// intersected with the surviving transitions.
pub fn restrict(aut: &Automaton, set: &[StateId], entry: StateId) -> Result<Restriction> {
    let pairs = aut.rabin_pairs()?;
    let mut states: Vec<StateId> = set.to_vec();
    states.sort_unstable();
    states.dedup();
    let mut local = vec![None; aut.num_states()];
    for (i, &q) in states.iter().enumerate() {
        if q >= aut.num_states() {
            return Err(Error::StateNotInSet(q));
        }
        local[q] = Some(i);
    }
    let initial = local
        .get(entry)
        .copied()
        .flatten()
        .ok_or(Error::StateNotInSet(entry))?;

    let mut dts = Dts::new(states.len(), aut.dts.alphabet().clone(), initial)?;
    for (i, &q) in states.iter().enumerate() {
        if let Some(name) = aut.dts.name(q) {
            dts.set_name(i, name);
        }
        for t in aut.dts.outgoing(q) {
            if let Some(j) = local[t.target] {
                dts.add_transition(i, t.letter, j)?;
            }
        }
    }
    let lower = |set: &TransitionSet| -> TransitionSet {
        set.iter()
            .filter_map(|(q, a)| {
                let i = local[q]?;
                let target = aut.dts.succ(q, a)?;
                local[target].map(|_| (i, a))
            })
            .collect()
    };
    let mut kept = Vec::new();
    let mut new_pairs = Vec::new();
    for (idx, pair) in pairs.iter().enumerate() {
        let inf = lower(&pair.inf);
        if !inf.is_empty() {
            kept.push(idx);
            new_pairs.push(RabinPair::new(lower(&pair.fin), inf));
        }
    }
    Ok(Restriction {
        automaton: Automaton {
            dts,
            acceptance: Acceptance::Rabin(new_pairs),
        },
        states,
        pairs: kept,
    })
}

/// Synchronized product of two systems over the same alphabet.
#[derive(Debug, Clone)]
pub struct Product {
    pub dts: Dts,
    /// Component states of each product state.
    pub pairs: Vec<(StateId, StateId)>,
}

impl Product {
    pub fn left(&self, state: StateId) -> StateId {
        self.pairs[state].0
    }

    pub fn right(&self, state: StateId) -> StateId {
        self.pairs[state].1
    }

    /// Product transitions whose left projection lies in `set`.
    pub fn lift_left(&self, set: &TransitionSet) -> TransitionSet {
        self.lift(set, |s| self.left(s))
    }

    /// Product transitions whose right projection lies in `set`.
    pub fn lift_right(&self, set: &TransitionSet) -> TransitionSet {
        self.lift(set, |s| self.right(s))
    }

    fn lift(&self, set: &TransitionSet, project: impl Fn(StateId) -> StateId) -> TransitionSet {
        self.dts
            .transitions()
            .filter(|t| set.contains(project(t.source), t.letter))
            .map(|t| t.key())
            .collect()
    }
}

pub fn check_same_alphabet(a: &Dts, b: &Dts) -> Result<()> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch(format!(
            "{:?} vs {:?}",
            a.alphabet().aps(),
            b.alphabet().aps()
        )));
    }
    Ok(())
}

/// Reachable part of the synchronized product; a product transition exists
/// iff both components have one.
pub fn product(a: &Dts, b: &Dts) -> Result<Product> {
    check_same_alphabet(a, b)?;
    let start = (a.initial(), b.initial());
    let mut index = HashMap::from([(start, 0)]);
    let mut pairs = vec![start];
    let mut edges = Vec::new();
    let mut i = 0;
    while i < pairs.len() {
        let (x, y) = pairs[i];
        for letter in a.alphabet().letters() {
            if let (Some(x2), Some(y2)) = (a.succ(x, letter), b.succ(y, letter)) {
                let next = *index.entry((x2, y2)).or_insert_with(|| {
                    pairs.push((x2, y2));
                    pairs.len() - 1
                });
                edges.push((i, letter, next));
            }
        }
        i += 1;
    }
    let mut dts = Dts::new(pairs.len(), a.alphabet().clone(), 0)?;
    for (s, letter, t) in edges {
        dts.add_transition(s, letter, t)?;
    }
    Ok(Product { dts, pairs })
}

/// Complement of a parity automaton: every priority shifts up by one.
/// Exact for complete automata.
pub fn complement_parity(aut: &Automaton) -> Result<Automaton> {
    let pr = aut.priorities()?;
    Ok(Automaton {
        dts: aut.dts.clone(),
        acceptance: Acceptance::Parity(pr.map(|p| p + 1)),
    })
}

/// Adds a rejecting sink for every missing transition. Complete inputs are
/// returned unchanged.
pub fn complete(aut: &Automaton) -> Automaton {
    if aut.dts.is_complete() {
        return aut.clone();
    }
    let mut dts = aut.dts.clone();
    let sink = dts.add_state();
    dts.set_name(sink, "sink");
    let mut added = TransitionSet::new();
    for q in dts.states() {
        for a in dts.alphabet().letters() {
            if dts.succ(q, a).is_none() {
                dts.add_transition(q, a, sink).expect("slot is free");
                added.insert(q, a);
            }
        }
    }
    let sink_loops: TransitionSet = dts.outgoing(sink).map(|t| t.key()).collect();
    let acceptance = match &aut.acceptance {
        Acceptance::Parity(pr) => {
            let mut pr = pr.clone();
            for (q, a) in added.iter() {
                pr.set(q, a, 1);
            }
            Acceptance::Parity(pr)
        }
        Acceptance::Streett(pairs) => {
            // sink loops in I without F falsify the first conjunct
            let mut pairs = pairs.clone();
            match pairs.first_mut() {
                Some(p) => p.inf.union_with(&sink_loops),
                None => pairs.push(RabinPair::new(TransitionSet::new(), sink_loops)),
            }
            Acceptance::Streett(pairs)
        }
        Acceptance::GeneralizedRabin(pairs) => {
            // a pair without required sets would accept the sink
            let mut pairs = pairs.clone();
            for p in &mut pairs {
                p.fin.union_with(&sink_loops);
            }
            Acceptance::GeneralizedRabin(pairs)
        }
        Acceptance::Rabin(pairs) => Acceptance::Rabin(pairs.clone()),
    };
    Automaton { dts, acceptance }
}

/// Moves state-based acceptance marks onto transitions: every outgoing
/// transition of a marked state joins the state's sets. Returns one
/// transition set per acceptance set index.
pub fn to_transition_based(dts: &Dts, state_marks: &[BTreeSet<usize>], set_count: usize) -> Vec<TransitionSet> {
    let mut sets = vec![TransitionSet::new(); set_count];
    for (q, marks) in state_marks.iter().enumerate() {
        for t in dts.outgoing(q) {
            for &m in marks {
                sets[m].insert(t.source, t.letter);
            }
        }
    }
    sets
}

/// State-based parity automaton: states are split by the priority of the
/// transition entering them and each copy emits that priority on all of its
/// outgoing transitions. The initial copy carries the least priority in use.
pub fn to_state_based(aut: &Automaton) -> Result<Automaton> {
    let pr = aut.priorities()?;
    let init_priority = pr.min().unwrap_or(1);
    let start = (aut.dts.initial(), init_priority);
    let mut index = HashMap::from([(start, 0)]);
    let mut states = vec![start];
    let mut edges = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let (q, _) = states[i];
        for t in aut.dts.outgoing(q) {
            let p = pr.get(q, t.letter).expect("validated parity automaton");
            let next = *index.entry((t.target, p)).or_insert_with(|| {
                states.push((t.target, p));
                states.len() - 1
            });
            edges.push((i, t.letter, next));
        }
        i += 1;
    }
    let mut dts = Dts::new(states.len(), aut.dts.alphabet().clone(), 0)?;
    let mut out = Priorities::new();
    for (s, &(q, p)) in states.iter().enumerate() {
        dts.set_name(s, format!("{}#{p}", aut.dts.display_name(q)));
    }
    for (s, letter, t) in edges {
        dts.add_transition(s, letter, t)?;
        out.set(s, letter, states[s].1);
    }
    Ok(Automaton {
        dts,
        acceptance: Acceptance::Parity(out),
    })
}

/// Per-state priority when all outgoing transitions of each state agree.
pub fn uniform_state_priorities(aut: &Automaton) -> Option<Vec<Option<u32>>> {
    let pr = aut.priorities().ok()?;
    aut.dts
        .states()
        .map(|q| {
            let mut ps = aut.dts.outgoing(q).map(|t| pr.get(q, t.letter));
            match ps.next() {
                None => Some(None),
                Some(first) => ps.all(|p| p == first).then_some(first),
            }
        })
        .collect()
}

/// Generalized Rabin reading of a Rabin automaton (every pair has one
/// required set).
pub fn rabin_as_generalized(pairs: &[RabinPair]) -> Vec<GenRabinPair> {
    pairs
        .iter()
        .map(|p| GenRabinPair {
            fin: p.fin.clone(),
            infs: vec![p.inf.clone()],
        })
        .collect()
}
