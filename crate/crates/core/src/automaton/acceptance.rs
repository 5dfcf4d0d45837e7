use std::collections::{BTreeMap, BTreeSet};

use super::dts::{Dts, Letter, StateId};
use crate::error::{AcceptanceKind, Error, Result};

/// A set of transitions, each identified by its `(source, letter)` key.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransitionSet(BTreeSet<(StateId, Letter)>);

impl TransitionSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, source: StateId, letter: Letter) -> bool {
        self.0.insert((source, letter))
    }

    pub fn contains(&self, source: StateId, letter: Letter) -> bool {
        self.0.contains(&(source, letter))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (StateId, Letter)> + '_ {
        self.0.iter().copied()
    }

    /// Whether some member is in `keys`.
    pub fn intersects(&self, keys: &BTreeSet<(StateId, Letter)>) -> bool {
        if self.0.len() < keys.len() {
            self.0.iter().any(|k| keys.contains(k))
        } else {
            keys.iter().any(|k| self.0.contains(k))
        }
    }

    pub fn union_with(&mut self, other: &TransitionSet) {
        self.0.extend(other.0.iter().copied());
    }

    /// Members kept by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(StateId, Letter) -> bool) -> TransitionSet {
        TransitionSet(self.0.iter().copied().filter(|&(q, a)| keep(q, a)).collect())
    }

    /// Every transition of `dts`.
    pub fn all(dts: &Dts) -> TransitionSet {
        dts.transitions().map(|t| t.key()).collect()
    }
}

impl FromIterator<(StateId, Letter)> for TransitionSet {
    fn from_iter<I: IntoIterator<Item = (StateId, Letter)>>(iter: I) -> Self {
        TransitionSet(iter.into_iter().collect())
    }
}

/// Rabin pair `<F, I>`: accept when `F` is visited finitely often and `I`
/// infinitely often.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RabinPair {
    pub fin: TransitionSet,
    pub inf: TransitionSet,
}

impl RabinPair {
    pub fn new(fin: TransitionSet, inf: TransitionSet) -> Self {
        RabinPair { fin, inf }
    }
}

/// Generalized Rabin pair `<F, {I^1, ..., I^l}>`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GenRabinPair {
    pub fin: TransitionSet,
    pub infs: Vec<TransitionSet>,
}

/// Priority of every transition, read with max-even semantics.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Priorities(BTreeMap<(StateId, Letter), u32>);

impl Priorities {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, source: StateId, letter: Letter, priority: u32) {
        self.0.insert((source, letter), priority);
    }

    pub fn get(&self, source: StateId, letter: Letter) -> Option<u32> {
        self.0.get(&(source, letter)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((StateId, Letter), u32)> + '_ {
        self.0.iter().map(|(&k, &p)| (k, p))
    }

    pub fn max(&self) -> Option<u32> {
        self.0.values().copied().max()
    }

    pub fn min(&self) -> Option<u32> {
        self.0.values().copied().min()
    }

    /// Distinct priorities in use, ascending.
    pub fn used(&self) -> BTreeSet<u32> {
        self.0.values().copied().collect()
    }

    pub fn map(&self, f: impl Fn(u32) -> u32) -> Priorities {
        Priorities(self.0.iter().map(|(&k, &p)| (k, f(p))).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Acceptance {
    /// `OR_i (Fin(F_i) & Inf(I_i))`
    Rabin(Vec<RabinPair>),
    /// `OR_i (Fin(F_i) & AND_j Inf(I_i^j))`
    GeneralizedRabin(Vec<GenRabinPair>),
    /// `AND_i (Inf(F_i) | Fin(I_i))`, the negation of the Rabin reading of the same pairs.
    Streett(Vec<RabinPair>),
    /// Maximal infinitely visited priority is even.
    Parity(Priorities),
}

impl Acceptance {
    pub fn kind(&self) -> AcceptanceKind {
        match self {
            Acceptance::Rabin(_) => AcceptanceKind::Rabin,
            Acceptance::GeneralizedRabin(_) => AcceptanceKind::GeneralizedRabin,
            Acceptance::Streett(_) => AcceptanceKind::Streett,
            Acceptance::Parity(_) => AcceptanceKind::Parity,
        }
    }

    /// Evaluates the condition on the set of infinitely visited transitions.
    pub fn satisfied_by(&self, inf: &BTreeSet<(StateId, Letter)>) -> bool {
        match self {
            Acceptance::Rabin(pairs) => pairs
                .iter()
                .any(|p| !p.fin.intersects(inf) && p.inf.intersects(inf)),
            Acceptance::GeneralizedRabin(pairs) => pairs
                .iter()
                .any(|p| !p.fin.intersects(inf) && p.infs.iter().all(|i| i.intersects(inf))),
            Acceptance::Streett(pairs) => pairs
                .iter()
                .all(|p| p.fin.intersects(inf) || !p.inf.intersects(inf)),
            Acceptance::Parity(pr) => inf
                .iter()
                .filter_map(|&(q, a)| pr.get(q, a))
                .max()
                .is_some_and(|m| m % 2 == 0),
        }
    }

    /// Number of acceptance sets this condition uses in HOA form.
    pub fn set_count(&self) -> usize {
        match self {
            Acceptance::Rabin(p) | Acceptance::Streett(p) => 2 * p.len(),
            Acceptance::GeneralizedRabin(p) => p.iter().map(|g| 1 + g.infs.len()).sum(),
            Acceptance::Parity(pr) => pr.max().map_or(0, |m| m as usize + 1),
        }
    }

    fn sets(&self) -> Vec<&TransitionSet> {
        match self {
            Acceptance::Rabin(p) | Acceptance::Streett(p) => {
                p.iter().flat_map(|p| [&p.fin, &p.inf]).collect()
            }
            Acceptance::GeneralizedRabin(p) => p
                .iter()
                .flat_map(|g| std::iter::once(&g.fin).chain(g.infs.iter()))
                .collect(),
            Acceptance::Parity(_) => Vec::new(),
        }
    }
}

/// A deterministic omega-automaton.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automaton {
    pub dts: Dts,
    pub acceptance: Acceptance,
}

impl Automaton {
    pub fn new(dts: Dts, acceptance: Acceptance) -> Result<Self> {
        let aut = Automaton { dts, acceptance };
        aut.validate()?;
        Ok(aut)
    }

    pub fn num_states(&self) -> usize {
        self.dts.num_states()
    }

    /// Number of acceptance sets (for HOA output).
    pub fn acceptance_set_count(&self) -> usize {
        self.acceptance.set_count()
    }

    /// Checks that every acceptance set refers to existing transitions and
    /// that parity priorities are total.
    pub fn validate(&self) -> Result<()> {
        for set in self.acceptance.sets() {
            if let Some((q, a)) = set.iter().find(|&(q, a)| !self.dts.has_transition(q, a)) {
                return Err(Error::Invalid(format!(
                    "acceptance set refers to missing transition ({q}, {a})"
                )));
            }
        }
        if let Acceptance::Parity(pr) = &self.acceptance {
            for t in self.dts.transitions() {
                if pr.get(t.source, t.letter).is_none() {
                    return Err(Error::Invalid(format!(
                        "transition ({}, {}) has no priority",
                        t.source, t.letter
                    )));
                }
            }
            if pr.len() != self.dts.num_transitions() {
                return Err(Error::Invalid("priority for missing transition".into()));
            }
        }
        Ok(())
    }

    pub fn rabin_pairs(&self) -> Result<&[RabinPair]> {
        match &self.acceptance {
            Acceptance::Rabin(p) => Ok(p),
            other => Err(Error::wrong_acceptance("Rabin", other.kind())),
        }
    }

    pub fn priorities(&self) -> Result<&Priorities> {
        match &self.acceptance {
            Acceptance::Parity(p) => Ok(p),
            other => Err(Error::wrong_acceptance("parity", other.kind())),
        }
    }

    /// Largest priority for parity automata, acceptance set count otherwise.
    pub fn max_priority(&self) -> usize {
        match &self.acceptance {
            Acceptance::Parity(p) => p.max().unwrap_or(0) as usize,
            _ => self.acceptance_set_count(),
        }
    }
}

/// Ultimately periodic word `prefix · cycle^ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LassoWord {
    prefix: Vec<Letter>,
    cycle: Vec<Letter>,
}

impl LassoWord {
    pub fn new(prefix: Vec<Letter>, cycle: Vec<Letter>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::Invalid("lasso cycle must be nonempty".into()));
        }
        Ok(LassoWord { prefix, cycle })
    }

    pub fn prefix(&self) -> &[Letter] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[Letter] {
        &self.cycle
    }

    pub fn len(&self) -> usize {
        self.prefix.len() + self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Renders as `prefix;cycle` with comma-separated letter names.
    pub fn display(&self, alphabet: &super::Alphabet) -> String {
        let join = |w: &[Letter]| {
            w.iter()
                .map(|&a| alphabet.letter_name(a))
                .collect::<Vec<_>>()
                .join(",")
        };
        format!("{};{}", join(&self.prefix), join(&self.cycle))
    }
}
