//! SCC-wise index appearance record.
//!
//! Each SCC of the input is translated on its own, tracking only the pairs
//! whose required set meets the SCC. Transient SCCs and SCCs without such a
//! pair get a single copy of each state with priority 1. For the remaining
//! SCCs, the appearance record of the restricted automaton is explored and
//! pruned to its unique bottom SCC, which is exactly what starting from the
//! best initial permutation would construct. The per-SCC pieces are then
//! reconnected along the input's inter-SCC transitions.

use std::collections::{BTreeMap, HashMap};

use crate::automaton::{
    bottom_sccs, is_transient, restrict, scc_decompose, tarjan, Acceptance, Automaton, Dts, Letter,
    Priorities, StateId,
};
use crate::error::{Error, Result};
use crate::iar::{iar, state_label, IarAutomaton, IarOptions, IarState, Permutation};

/// State of the optimized output: input state, the index of its input SCC,
/// and the record over the pairs tracked in that SCC (original pair indices,
/// front first; empty for untracked SCCs).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StarState {
    pub base: StateId,
    pub scc: usize,
    pub record: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct StarAutomaton {
    pub automaton: Automaton,
    pub states: Vec<StarState>,
    /// Original indices of the pairs tracked per input SCC.
    pub tracked: Vec<Vec<usize>>,
}

fn is_strongly_connected(dts: &Dts) -> bool {
    let dec = scc_decompose(dts);
    dec.len() == 1 && dec.sccs[0].len() == dts.num_states()
}

/// Bottom SCCs of an appearance-record automaton, each as sorted state ids.
pub fn iar_bottom_sccs(out: &IarAutomaton) -> Vec<Vec<StateId>> {
    let dts = &out.automaton.dts;
    let succ = |q: usize| dts.outgoing(q).map(|t| t.target).collect::<Vec<_>>();
    let dec = tarjan(dts.num_states(), &[dts.initial()], succ);
    bottom_sccs(&dec, succ)
        .into_iter()
        .map(|c| dec.sccs[c].clone())
        .collect()
}

/// The bottom SCC of `iar(aut, initial)` for a strongly connected `aut`.
pub fn compute_bscc(aut: &Automaton, initial: &Permutation) -> Result<Vec<IarState>> {
    aut.rabin_pairs()?;
    if !is_strongly_connected(&aut.dts) {
        return Err(Error::NotStronglyConnected);
    }
    let out = iar(aut, initial, &IarOptions::default())?;
    let bottoms = iar_bottom_sccs(&out);
    let mut states: Vec<IarState> = bottoms[0].iter().map(|&s| out.states[s].clone()).collect();
    states.sort();
    Ok(states)
}

/// A permutation `pi` such that `(entry, pi)` lies in the bottom SCC; the
/// lexicographically least one.
pub fn pick_perm(entry: StateId, aut: &Automaton) -> Result<Permutation> {
    let k = aut.rabin_pairs()?.len();
    compute_bscc(aut, &Permutation::identity(k))?
        .into_iter()
        .filter(|s| s.base == entry)
        .map(|s| s.record)
        .min()
        .ok_or(Error::StateNotInSet(entry))
}

/// Optimized translation of a Rabin automaton into a parity automaton.
pub fn iar_star(aut: &Automaton, opts: &IarOptions) -> Result<StarAutomaton> {
    aut.rabin_pairs()?;
    let dts = &aut.dts;
    let dec = scc_decompose(dts);
    let bfs = dts.reachable();
    let mut rank = vec![usize::MAX; dts.num_states()];
    for (i, &q) in bfs.iter().enumerate() {
        rank[q] = i;
    }

    let mut states: Vec<StarState> = Vec::new();
    let mut index: HashMap<StarState, StateId> = HashMap::new();
    // (source, letter, target, priority) over `states`
    let mut edges: Vec<(StateId, Letter, StateId, u32)> = Vec::new();
    let mut tracked = vec![Vec::new(); dec.len()];

    let mut add = |st: StarState, states: &mut Vec<StarState>| -> Result<StateId> {
        if let Some(&s) = index.get(&st) {
            return Ok(s);
        }
        if states.len() >= opts.state_budget {
            return Err(Error::BudgetExceeded(opts.state_budget));
        }
        states.push(st.clone());
        index.insert(st, states.len() - 1);
        Ok(states.len() - 1)
    };

    for (c, comp) in dec.sccs.iter().enumerate() {
        let entry = *comp.iter().min_by_key(|&&q| rank[q]).expect("nonempty SCC");
        let restricted = restrict(aut, comp, entry)?;
        if is_transient(comp, dts) || restricted.pairs.is_empty() {
            for &q in comp {
                add(StarState { base: q, scc: c, record: Vec::new() }, &mut states)?;
            }
            for &q in comp {
                let from = add(StarState { base: q, scc: c, record: Vec::new() }, &mut states)?;
                for t in dts.outgoing(q).filter(|t| dec.scc_of[t.target] == Some(c)) {
                    let to = add(StarState { base: t.target, scc: c, record: Vec::new() }, &mut states)?;
                    edges.push((from, t.letter, to, 1));
                }
            }
            continue;
        }

        let local_budget = IarOptions {
            state_budget: opts.state_budget.saturating_sub(states.len()).max(1),
            ..opts.clone()
        };
        let k = restricted.pairs.len();
        let explored = iar(&restricted.automaton, &Permutation::identity(k), &local_budget)?;
        let bottom = iar_bottom_sccs(&explored)
            .into_iter()
            .next()
            .expect("a finite graph has a bottom SCC");
        let lift = |s: StateId| StarState {
            base: restricted.states[explored.states[s].base],
            scc: c,
            record: explored.states[s]
                .record
                .order()
                .iter()
                .map(|&i| restricted.pairs[i])
                .collect(),
        };
        let mut ids = BTreeMap::new();
        for &s in &bottom {
            ids.insert(s, add(lift(s), &mut states)?);
        }
        let local = &explored.automaton;
        let pr = local.priorities()?;
        for &s in &bottom {
            for t in local.dts.outgoing(s) {
                let p = pr.get(s, t.letter).expect("total priorities");
                edges.push((ids[&s], t.letter, ids[&t.target], p));
            }
        }
        tracked[c] = restricted.pairs.clone();
    }

    // entry record per input state: least record constructed for it
    let mut entry_of: Vec<Option<StateId>> = vec![None; dts.num_states()];
    for (s, st) in states.iter().enumerate() {
        let better = match entry_of[st.base] {
            None => true,
            Some(cur) => st.record < states[cur].record,
        };
        if better {
            entry_of[st.base] = Some(s);
        }
    }
    for (s, st) in states.iter().enumerate() {
        for t in dts.outgoing(st.base) {
            if !dec.same(st.base, t.target) {
                let to = entry_of[t.target].expect("every reachable state is constructed");
                edges.push((s, t.letter, to, 1));
            }
        }
    }

    // keep the part reachable from the initial state
    let mut succ: Vec<Vec<(Letter, StateId, u32)>> = vec![Vec::new(); states.len()];
    for &(s, a, t, p) in &edges {
        succ[s].push((a, t, p));
    }
    for list in &mut succ {
        list.sort_unstable();
    }
    let start = entry_of[dts.initial()].expect("initial state is constructed");
    let mut renum = vec![usize::MAX; states.len()];
    let mut order = vec![start];
    renum[start] = 0;
    let mut i = 0;
    while i < order.len() {
        for &(_, t, _) in &succ[order[i]] {
            if renum[t] == usize::MAX {
                renum[t] = order.len();
                order.push(t);
            }
        }
        i += 1;
    }

    let mut out = Dts::new(order.len(), dts.alphabet().clone(), 0)?;
    let mut pr = Priorities::new();
    for (new, &old) in order.iter().enumerate() {
        out.set_name(new, state_label(dts, states[old].base, &states[old].record));
        for &(a, t, p) in &succ[old] {
            out.add_transition(new, a, renum[t])?;
            pr.set(new, a, p);
        }
    }
    let kept_states = order.iter().map(|&s| states[s].clone()).collect();
    Ok(StarAutomaton {
        automaton: Automaton {
            dts: out,
            acceptance: Acceptance::Parity(pr),
        },
        states: kept_states,
        tracked,
    })
}
