use std::fmt;

use crate::error::{Error, Result};

pub type StateId = usize;

/// Letters are valuations of the atomic propositions: bit `i` of a letter is
/// set iff proposition `i` holds.
pub type Letter = usize;

/// Largest number of atomic propositions accepted; letters are enumerated
/// explicitly so the alphabet has `2^|AP|` members.
pub const MAX_APS: usize = 12;

/// One edge `source -letter-> target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub source: StateId,
    pub letter: Letter,
    pub target: StateId,
}

impl Transition {
    /// The `(source, letter)` key identifying this transition.
    pub fn key(&self) -> (StateId, Letter) {
        (self.source, self.letter)
    }
}

/// The alphabet `2^AP` over a list of named atomic propositions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Alphabet {
    aps: Vec<String>,
}

impl Alphabet {
    pub fn new(aps: Vec<String>) -> Result<Self> {
        if aps.len() > MAX_APS {
            return Err(Error::Unsupported(format!(
                "{} atomic propositions (at most {MAX_APS})",
                aps.len()
            )));
        }
        Ok(Alphabet { aps })
    }

    /// Alphabet over `count` propositions named `p0, p1, ...`.
    pub fn with_aps(count: usize) -> Result<Self> {
        Alphabet::new((0..count).map(|i| format!("p{i}")).collect())
    }

    pub fn aps(&self) -> &[String] {
        &self.aps
    }

    pub fn size(&self) -> usize {
        1 << self.aps.len()
    }

    pub fn letters(&self) -> std::ops::Range<Letter> {
        0..self.size()
    }

    /// Full conjunction over AP indices, as written in HOA labels (`0&!1`).
    pub fn letter_cube(&self, letter: Letter) -> String {
        self.cube(letter, |i| i.to_string())
    }

    /// Full conjunction over AP names (`a&!b`).
    pub fn letter_name(&self, letter: Letter) -> String {
        self.cube(letter, |i| self.aps[i].clone())
    }

    fn cube(&self, letter: Letter, name: impl Fn(usize) -> String) -> String {
        if self.aps.is_empty() {
            return "t".to_string();
        }
        (0..self.aps.len())
            .map(|i| {
                if letter >> i & 1 == 1 {
                    name(i)
                } else {
                    format!("!{}", name(i))
                }
            })
            .collect::<Vec<_>>()
            .join("&")
    }
}

/// A deterministic transition system with a possibly partial transition
/// function. States are `0..num_states()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dts {
    alphabet: Alphabet,
    delta: Vec<Option<StateId>>,
    names: Vec<Option<String>>,
    initial: StateId,
}

impl Dts {
    /// A system with `num_states` states and no transitions.
    pub fn new(num_states: usize, alphabet: Alphabet, initial: StateId) -> Result<Self> {
        if initial >= num_states {
            return Err(Error::Invalid(format!(
                "initial state {initial} out of range ({num_states} states)"
            )));
        }
        Ok(Dts {
            delta: vec![None; num_states * alphabet.size()],
            names: vec![None; num_states],
            alphabet,
            initial,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_letters(&self) -> usize {
        self.alphabet.size()
    }

    pub fn num_states(&self) -> usize {
        self.names.len()
    }

    pub fn states(&self) -> std::ops::Range<StateId> {
        0..self.num_states()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn set_initial(&mut self, state: StateId) -> Result<()> {
        self.check_state(state)?;
        self.initial = state;
        Ok(())
    }

    /// Appends a fresh state and returns its id.
    pub fn add_state(&mut self) -> StateId {
        self.delta.extend(std::iter::repeat(None).take(self.num_letters()));
        self.names.push(None);
        self.names.len() - 1
    }

    pub fn name(&self, state: StateId) -> Option<&str> {
        self.names[state].as_deref()
    }

    /// The state's name, or its number when unnamed.
    pub fn display_name(&self, state: StateId) -> String {
        match &self.names[state] {
            Some(n) => n.clone(),
            None => state.to_string(),
        }
    }

    pub fn set_name(&mut self, state: StateId, name: impl Into<String>) {
        self.names[state] = Some(name.into());
    }

    pub fn clear_names(&mut self) {
        self.names.iter_mut().for_each(|n| *n = None);
    }

    pub fn succ(&self, state: StateId, letter: Letter) -> Option<StateId> {
        self.delta[state * self.num_letters() + letter]
    }

    /// Defines `delta(source, letter) = target`. Redefining an existing
    /// transition with a different target is a determinism violation.
    pub fn add_transition(&mut self, source: StateId, letter: Letter, target: StateId) -> Result<()> {
        self.check_state(source)?;
        self.check_state(target)?;
        if letter >= self.num_letters() {
            return Err(Error::Invalid(format!("letter {letter} out of range")));
        }
        let slot = &mut self.delta[source * self.alphabet.size() + letter];
        match *slot {
            Some(t) if t != target => Err(Error::Nondeterministic {
                state: source,
                letter,
            }),
            _ => {
                *slot = Some(target);
                Ok(())
            }
        }
    }

    pub fn remove_transition(&mut self, source: StateId, letter: Letter) {
        let n = self.num_letters();
        self.delta[source * n + letter] = None;
    }

    pub fn has_transition(&self, source: StateId, letter: Letter) -> bool {
        source < self.num_states() && letter < self.num_letters() && self.succ(source, letter).is_some()
    }

    /// Outgoing transitions of `state`, by ascending letter.
    pub fn outgoing(&self, state: StateId) -> impl Iterator<Item = Transition> + '_ {
        self.alphabet.letters().filter_map(move |letter| {
            self.succ(state, letter).map(|target| Transition {
                source: state,
                letter,
                target,
            })
        })
    }

    /// All transitions, ordered by source then letter.
    pub fn transitions(&self) -> impl Iterator<Item = Transition> + '_ {
        self.states().flat_map(move |q| self.outgoing(q))
    }

    pub fn num_transitions(&self) -> usize {
        self.delta.iter().filter(|t| t.is_some()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.delta.iter().all(Option::is_some)
    }

    /// States reachable from the initial state, in breadth-first order.
    pub fn reachable(&self) -> Vec<StateId> {
        let mut seen = vec![false; self.num_states()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            i += 1;
            for t in self.outgoing(q) {
                if !seen[t.target] {
                    seen[t.target] = true;
                    order.push(t.target);
                }
            }
        }
        order
    }

    /// Runs the system on a finite word from `from`; `None` if it blocks.
    pub fn run_from(&self, from: StateId, word: &[Letter]) -> Option<StateId> {
        word.iter().try_fold(from, |q, &a| self.succ(q, a))
    }

    fn check_state(&self, state: StateId) -> Result<()> {
        if state < self.num_states() {
            Ok(())
        } else {
            Err(Error::Invalid(format!("state {state} out of range")))
        }
    }
}

impl fmt::Display for Dts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in self.transitions() {
            writeln!(
                f,
                "{} -{}-> {}",
                self.display_name(t.source),
                self.alphabet.letter_name(t.letter),
                self.display_name(t.target)
            )?;
        }
        Ok(())
    }
}
