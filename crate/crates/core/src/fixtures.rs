//! The three worked examples used throughout the unit tests. One atomic
//! proposition; letter `A` is its negation and `B` its assertion.

use crate::automaton::{Acceptance, Alphabet, Automaton, Dts, Letter, RabinPair, TransitionSet};

pub const A: Letter = 0;
pub const B: Letter = 1;

fn build(edges: &[(usize, Letter, usize)], pairs: &[(&[(usize, Letter)], &[(usize, Letter)])]) -> Automaton {
    let alphabet = Alphabet::new(vec!["b".into()]).unwrap();
    let mut dts = Dts::new(3, alphabet, 0).unwrap();
    for (i, name) in ["p", "q", "r"].into_iter().enumerate() {
        dts.set_name(i, name);
    }
    for &(q, a, t) in edges {
        dts.add_transition(q, a, t).unwrap();
    }
    let pairs = pairs
        .iter()
        .map(|(f, i)| {
            RabinPair::new(
                f.iter().copied().collect::<TransitionSet>(),
                i.iter().copied().collect::<TransitionSet>(),
            )
        })
        .collect();
    Automaton::new(dts, Acceptance::Rabin(pairs)).unwrap()
}

/// p -a-> p (F1, I2), p -b-> q (F1), q -a-> p (F2), q -b-> r (F2),
/// r -a-> q, r -b-> r (I1).
pub fn fig1() -> Automaton {
    build(
        &[(0, A, 0), (0, B, 1), (1, A, 0), (1, B, 2), (2, A, 1), (2, B, 2)],
        &[(&[(0, A), (0, B)], &[(2, B)]), (&[(1, A), (1, B)], &[(0, A)])],
    )
}

/// p -a-> q (F2), p -b-> p (I1), q -a-> q (I2), q -b-> r (F1),
/// r -a,b-> p (F3).
pub fn fig2() -> Automaton {
    build(
        &[(0, A, 1), (0, B, 0), (1, A, 1), (1, B, 2), (2, A, 0), (2, B, 0)],
        &[
            (&[(1, B)], &[(0, B)]),
            (&[(0, A)], &[(1, A)]),
            (&[(2, A), (2, B)], &[]),
        ],
    )
}

/// p -a-> p (I1, F2), p -b-> q, q -a-> r (F2), q -b-> q (I2),
/// r -a-> r (F1), r -b-> q (F1, I2).
pub fn fig3() -> Automaton {
    build(
        &[(0, A, 0), (0, B, 1), (1, A, 2), (1, B, 1), (2, A, 2), (2, B, 1)],
        &[
            (&[(2, A), (2, B)], &[(0, A)]),
            (&[(0, A), (1, A)], &[(1, B), (2, B)]),
        ],
    )
}
