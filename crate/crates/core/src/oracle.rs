//! Language equivalence of deterministic automata.
//!
//! [`counterexample`] decides `L(a) = L(b)` exactly. Every acceptance
//! condition and its negation are written as a disjunction of clauses
//! `Fin(F) & Inf(I^1) & ... & Inf(I^l)`. A word in `L(a) \ L(b)` is then an
//! accepted word of the product read as a generalized Rabin automaton whose
//! pairs are the conjunctions of a clause of `a` with a clause of `not b`.
//!
//! [`lasso_counterexample`] is an independent check that compares verdicts on
//! all ultimately periodic words up to a length bound.

use std::collections::{HashSet, VecDeque};

use crate::automaton::{
    accepting_lasso, accepts_lasso, check_same_alphabet, complete, product, Acceptance, Automaton,
    Dts, GenRabinPair, LassoWord, Letter, Priorities, RabinPair, StateId, TransitionSet,
};
use crate::error::{Error, Result};

/// Largest number of pairs whose negation is expanded.
pub const MAX_NEGATED_PAIRS: usize = 10;
/// Largest number of generalized Rabin pairs built on a product.
pub const MAX_PRODUCT_CLAUSES: usize = 1 << 16;
/// Largest number of lasso words [`lasso_counterexample`] may try.
pub const MAX_LASSO_CHECKS: u64 = 20_000_000;

#[derive(Debug, Clone, Default)]
struct Clause {
    fin: TransitionSet,
    infs: Vec<TransitionSet>,
}

fn parity_clauses(dts: &Dts, pr: &Priorities, want_even: bool) -> Vec<Clause> {
    pr.used()
        .into_iter()
        .filter(|p| (p % 2 == 0) == want_even)
        .map(|p| Clause {
            fin: by_priority(dts, pr, |x| x > p),
            infs: vec![by_priority(dts, pr, |x| x == p)],
        })
        .collect()
}

fn by_priority(dts: &Dts, pr: &Priorities, keep: impl Fn(u32) -> bool) -> TransitionSet {
    dts.transitions()
        .filter(|t| pr.get(t.source, t.letter).is_some_and(&keep))
        .map(|t| t.key())
        .collect()
}

/// `AND_i (Inf(F_i) | Fin(I_i))` as a disjunction of `2^k` clauses.
fn streett_clauses(pairs: &[RabinPair]) -> Result<Vec<Clause>> {
    guard_pairs(pairs.len())?;
    let mut out = vec![Clause::default()];
    for p in pairs {
        let mut next = Vec::with_capacity(out.len() * 2);
        for c in &out {
            let mut inf = c.clone();
            inf.infs.push(p.fin.clone());
            next.push(inf);
            let mut fin = c.clone();
            fin.fin.union_with(&p.inf);
            next.push(fin);
        }
        out = next;
    }
    Ok(out)
}

/// Negation of a generalized Rabin condition:
/// `AND_i (Inf(F_i) | OR_j Fin(I_i^j))`.
fn negated_gen_rabin_clauses(pairs: &[GenRabinPair]) -> Result<Vec<Clause>> {
    guard_pairs(pairs.len())?;
    let mut out = vec![Clause::default()];
    for p in pairs {
        let mut next = Vec::new();
        for c in &out {
            let mut inf = c.clone();
            inf.infs.push(p.fin.clone());
            next.push(inf);
            for i in &p.infs {
                let mut fin = c.clone();
                fin.fin.union_with(i);
                next.push(fin);
            }
        }
        if next.len() > MAX_PRODUCT_CLAUSES {
            return Err(Error::OracleTooLarge(format!("{} clauses", next.len())));
        }
        out = next;
    }
    Ok(out)
}

fn guard_pairs(k: usize) -> Result<()> {
    if k > MAX_NEGATED_PAIRS {
        return Err(Error::OracleTooLarge(format!(
            "{k} pairs, at most {MAX_NEGATED_PAIRS} supported"
        )));
    }
    Ok(())
}

fn rabin_clause(p: &RabinPair) -> Clause {
    Clause {
        fin: p.fin.clone(),
        infs: vec![p.inf.clone()],
    }
}

fn clauses(aut: &Automaton) -> Result<Vec<Clause>> {
    Ok(match &aut.acceptance {
        Acceptance::Rabin(p) => p.iter().map(rabin_clause).collect(),
        Acceptance::GeneralizedRabin(p) => p
            .iter()
            .map(|g| Clause {
                fin: g.fin.clone(),
                infs: g.infs.clone(),
            })
            .collect(),
        Acceptance::Streett(p) => streett_clauses(p)?,
        Acceptance::Parity(pr) => parity_clauses(&aut.dts, pr, true),
    })
}

fn negated_clauses(aut: &Automaton) -> Result<Vec<Clause>> {
    Ok(match &aut.acceptance {
        Acceptance::Rabin(p) => streett_clauses(p)?,
        Acceptance::GeneralizedRabin(p) => negated_gen_rabin_clauses(p)?,
        Acceptance::Streett(p) => p.iter().map(rabin_clause).collect(),
        Acceptance::Parity(pr) => parity_clauses(&aut.dts, pr, false),
    })
}

/// Rabin chain pairs of a max-even parity condition: for every even
/// priority `p` in use, `<{> p}, {= p}>`.
pub fn parity_to_rabin_chain(aut: &Automaton) -> Result<Vec<RabinPair>> {
    let pr = aut.priorities()?;
    Ok(parity_clauses(&aut.dts, pr, true)
        .into_iter()
        .map(|c| RabinPair::new(c.fin, c.infs.into_iter().next().expect("one set")))
        .collect())
}

fn conjoin(a: &Automaton, ca: &[Clause], b: &Automaton, cb: &[Clause]) -> Result<Automaton> {
    if ca.len().saturating_mul(cb.len()) > MAX_PRODUCT_CLAUSES {
        return Err(Error::OracleTooLarge(format!(
            "{} x {} clauses",
            ca.len(),
            cb.len()
        )));
    }
    let prod = product(&a.dts, &b.dts)?;
    let lift_a: Vec<Clause> = ca
        .iter()
        .map(|c| Clause {
            fin: prod.lift_left(&c.fin),
            infs: c.infs.iter().map(|s| prod.lift_left(s)).collect(),
        })
        .collect();
    let lift_b: Vec<Clause> = cb
        .iter()
        .map(|c| Clause {
            fin: prod.lift_right(&c.fin),
            infs: c.infs.iter().map(|s| prod.lift_right(s)).collect(),
        })
        .collect();
    let mut pairs = Vec::with_capacity(lift_a.len() * lift_b.len());
    for x in &lift_a {
        for y in &lift_b {
            let mut fin = x.fin.clone();
            fin.union_with(&y.fin);
            let infs = x.infs.iter().chain(y.infs.iter()).cloned().collect();
            pairs.push(GenRabinPair { fin, infs });
        }
    }
    Ok(Automaton {
        dts: prod.dts,
        acceptance: Acceptance::GeneralizedRabin(pairs),
    })
}

/// Product of a Rabin and a parity automaton accepting the intersection of
/// their languages, with pairs `<F_i | F'_j, {I_i, I'_j}>` over the parity
/// automaton's chain pairs.
pub fn conjoin_rabin_parity(a: &Automaton, b: &Automaton) -> Result<Automaton> {
    let ca: Vec<Clause> = a.rabin_pairs()?.iter().map(rabin_clause).collect();
    let cb: Vec<Clause> = parity_to_rabin_chain(b)?.iter().map(rabin_clause).collect();
    conjoin(a, &ca, b, &cb)
}

/// Some word in `L(a) \ L(b)`.
pub fn difference_witness(a: &Automaton, b: &Automaton) -> Result<Option<LassoWord>> {
    check_same_alphabet(&a.dts, &b.dts)?;
    let (a, b) = (complete(a), complete(b));
    let both = conjoin(&a, &clauses(&a)?, &b, &negated_clauses(&b)?)?;
    accepting_lasso(&both)
}

/// A word accepted by exactly one of `a` and `b`, or `None` if their
/// languages agree.
pub fn counterexample(a: &Automaton, b: &Automaton) -> Result<Option<LassoWord>> {
    if let Some(w) = difference_witness(a, b)? {
        return Ok(Some(w));
    }
    difference_witness(b, a)
}

pub fn equivalent(a: &Automaton, b: &Automaton) -> Result<bool> {
    Ok(counterexample(a, b)?.is_none())
}

/// Shortest prefix (as letters) to every state of the partial product, where
/// `None` stands for a blocked run. Pairs where both runs are blocked are
/// not explored.
fn product_prefixes(a: &Dts, b: &Dts) -> Vec<Vec<Letter>> {
    type Node = (Option<StateId>, Option<StateId>);
    let start: Node = (Some(a.initial()), Some(b.initial()));
    let mut seen: HashSet<Node> = HashSet::from([start]);
    let mut queue = VecDeque::from([(start, Vec::new())]);
    let mut out = Vec::new();
    while let Some(((x, y), word)) = queue.pop_front() {
        for letter in a.alphabet().letters() {
            let next = (x.and_then(|x| a.succ(x, letter)), y.and_then(|y| b.succ(y, letter)));
            if next == (None, None) || !seen.insert(next) {
                continue;
            }
            let mut w = word.clone();
            w.push(letter);
            queue.push_back((next, w));
        }
        out.push(word);
    }
    out
}

/// Compares `a` and `b` on every lasso word with prefix and cycle of length
/// at most `bound` (cycle at least 1). Returns the first disagreement in
/// order of total length, then prefix state discovery order, then
/// lexicographic cycle.
pub fn lasso_counterexample(a: &Automaton, b: &Automaton, bound: usize) -> Result<Option<LassoWord>> {
    check_same_alphabet(&a.dts, &b.dts)?;
    let sigma = a.dts.num_letters() as u64;
    let prefixes: Vec<Vec<Letter>> = product_prefixes(&a.dts, &b.dts)
        .into_iter()
        .filter(|p| p.len() <= bound)
        .collect();
    let cycles: u64 = (1..=bound as u32)
        .map(|l| sigma.saturating_pow(l))
        .fold(0u64, u64::saturating_add);
    if cycles.saturating_mul(prefixes.len() as u64) > MAX_LASSO_CHECKS {
        return Err(Error::OracleTooLarge(format!(
            "{} prefixes x {cycles} cycles",
            prefixes.len()
        )));
    }
    for total in 1..=2 * bound {
        for prefix in prefixes.iter().filter(|p| p.len() < total) {
            let len = total - prefix.len();
            if len > bound {
                continue;
            }
            let mut cycle = vec![0; len];
            loop {
                let w = LassoWord::new(prefix.clone(), cycle.clone())?;
                if accepts_lasso(a, &w) != accepts_lasso(b, &w) {
                    return Ok(Some(w));
                }
                if !next_word(&mut cycle, sigma as usize) {
                    break;
                }
            }
        }
    }
    Ok(None)
}

pub fn lasso_equivalence(a: &Automaton, b: &Automaton, bound: usize) -> Result<bool> {
    Ok(lasso_counterexample(a, b, bound)?.is_none())
}

fn next_word(w: &mut [Letter], sigma: usize) -> bool {
    for i in (0..w.len()).rev() {
        w[i] += 1;
        if w[i] < sigma {
            return true;
        }
        w[i] = 0;
    }
    false
}
