use std::collections::BTreeSet;

use super::acceptance::{Automaton, LassoWord};
use super::dts::{Dts, Letter, StateId, Transition};

/// The run of a deterministic system on a lasso word, split into the finite
/// part and the loop it eventually repeats forever.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LassoRun {
    pub stem: Vec<Transition>,
    pub looped: Vec<Transition>,
}

impl LassoRun {
    /// Transitions taken infinitely often.
    pub fn inf_set(&self) -> BTreeSet<(StateId, Letter)> {
        self.looped.iter().map(Transition::key).collect()
    }
}

fn step(dts: &Dts, q: StateId, a: Letter, out: &mut Vec<Transition>) -> Option<StateId> {
    let target = dts.succ(q, a)?;
    out.push(Transition {
        source: q,
        letter: a,
        target,
    });
    Some(target)
}

/// Simulates `prefix · cycle^ω`; `None` if the run blocks.
pub fn lasso_run(dts: &Dts, word: &LassoWord) -> Option<LassoRun> {
    let mut stem = Vec::new();
    let mut q = dts.initial();
    for &a in word.prefix() {
        q = step(dts, q, a, &mut stem)?;
    }
    // iteration start state -> index into `starts`
    let mut starts: Vec<(StateId, usize)> = Vec::new();
    let mut trace = Vec::new();
    loop {
        if let Some(&(_, at)) = starts.iter().find(|(s, _)| *s == q) {
            let looped = trace.split_off(at);
            stem.extend(trace);
            return Some(LassoRun { stem, looped });
        }
        starts.push((q, trace.len()));
        for &a in word.cycle() {
            q = step(dts, q, a, &mut trace)?;
        }
    }
}

/// Whether the automaton accepts the lasso word; a missing transition rejects.
pub fn accepts_lasso(aut: &Automaton, word: &LassoWord) -> bool {
    lasso_run(&aut.dts, word).is_some_and(|run| aut.acceptance.satisfied_by(&run.inf_set()))
}
