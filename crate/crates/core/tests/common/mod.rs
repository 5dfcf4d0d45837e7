//! Helpers shared by the integration tests. The acceptance evaluation and
//! the HOA validator here are written against the definitions directly and
//! do not call into the library's own evaluation code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use iar::automaton::{Acceptance, Automaton, Letter, StateId};
use iar::bench::GenParams;
use iar::hoa::parse_hoa;
use iar::iar::{IarAutomaton, Permutation};
use rand::seq::SliceRandom;
use rand::Rng;

pub const A: Letter = 0;
pub const B: Letter = 1;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn load(name: &str) -> Automaton {
    let text = std::fs::read_to_string(data(name)).expect("test data");
    parse_hoa(&text).expect("valid test data")
}

pub fn perm(one_based: &[usize]) -> Permutation {
    Permutation::from_one_based(one_based).unwrap()
}

pub fn random_perm(rng: &mut impl Rng, k: usize) -> Permutation {
    let mut order: Vec<usize> = (0..k).collect();
    order.shuffle(rng);
    Permutation::from_order(order).unwrap()
}

/// Random lasso word with prefix length below `max_prefix` and cycle length
/// in `1..=max_cycle`.
pub fn random_lasso(rng: &mut impl Rng, letters: usize, max_prefix: usize, max_cycle: usize) -> (Vec<Letter>, Vec<Letter>) {
    let p = rng.gen_range(0..max_prefix);
    let c = rng.gen_range(1..=max_cycle);
    let prefix = (0..p).map(|_| rng.gen_range(0..letters)).collect();
    let cycle = (0..c).map(|_| rng.gen_range(0..letters)).collect();
    (prefix, cycle)
}

/// Run of `aut` on `prefix cycle^w`, split into the transitions before the
/// periodic part and those repeated forever. `None` if the run blocks.
///
/// After `n` iterations of the cycle the state at the start of an iteration
/// has entered its period (at most `n` long), so the next `n` iterations
/// cover exactly the infinitely repeated transitions.
pub fn ref_run(
    aut: &Automaton,
    prefix: &[Letter],
    cycle: &[Letter],
) -> Option<(StateId, BTreeSet<(StateId, Letter)>, Vec<(StateId, Letter, StateId)>)> {
    let n = aut.num_states();
    let mut q = aut.dts.initial();
    for &a in prefix {
        q = aut.dts.succ(q, a)?;
    }
    for _ in 0..n {
        for &a in cycle {
            q = aut.dts.succ(q, a)?;
        }
    }
    let anchor = q;
    let mut inf = BTreeSet::new();
    let mut path = Vec::new();
    // one full period of the iteration start states
    loop {
        for &a in cycle {
            let next = aut.dts.succ(q, a)?;
            inf.insert((q, a));
            path.push((q, a, next));
            q = next;
        }
        if q == anchor {
            break;
        }
    }
    Some((anchor, inf, path))
}

/// Acceptance read directly from the definitions.
pub fn ref_accepts(aut: &Automaton, prefix: &[Letter], cycle: &[Letter]) -> bool {
    let Some((_, inf, _)) = ref_run(aut, prefix, cycle) else {
        return false;
    };
    let hits = |set: &iar::automaton::TransitionSet| inf.iter().any(|&(q, a)| set.contains(q, a));
    match &aut.acceptance {
        Acceptance::Rabin(pairs) => pairs.iter().any(|p| !hits(&p.fin) && hits(&p.inf)),
        Acceptance::GeneralizedRabin(pairs) => pairs
            .iter()
            .any(|p| !hits(&p.fin) && p.infs.iter().all(|i| hits(i))),
        Acceptance::Streett(pairs) => pairs.iter().all(|p| hits(&p.fin) || !hits(&p.inf)),
        Acceptance::Parity(pr) => {
            let top = inf.iter().map(|&(q, a)| pr.get(q, a).unwrap()).max();
            top.is_some_and(|m| m % 2 == 0)
        }
    }
}

/// Labeled edge list `(source label, letter, target label, priority)`.
pub fn edges(aut: &Automaton) -> Vec<(String, Letter, String, u32)> {
    let pr = aut.priorities().unwrap();
    let mut out: Vec<_> = aut
        .dts
        .transitions()
        .map(|t| {
            (
                aut.dts.display_name(t.source),
                t.letter,
                aut.dts.display_name(t.target),
                pr.get(t.source, t.letter).unwrap(),
            )
        })
        .collect();
    out.sort();
    out
}

/// Corpus for the translation suites: `n in 3..=10`, `k in 1..=3`, two APs.
pub fn corpus_params(count: usize, seed: u64) -> GenParams {
    GenParams {
        states: 3..=10,
        pairs: 1..=3,
        aps: 2,
        density: 0.3,
        acc_probability: 0.3,
        seed,
        count,
    }
}

/// Checks the stabilization properties of the appearance record along the
/// periodic part of a run: indices whose prohibited set is not visited keep
/// their position, visited ones sit in front of all others, and a
/// transition in `F` of the pair at position `i` implies every pair at
/// positions up to `i` is visited. Returns a description of the first
/// violation.
pub fn check_stabilization(
    input: &Automaton,
    out: &IarAutomaton,
    prefix: &[Letter],
    cycle: &[Letter],
) -> Result<(), String> {
    let pairs = input.rabin_pairs().unwrap();
    let Some((_, _, path)) = ref_run(&out.automaton, prefix, cycle) else {
        return Ok(());
    };
    let visited: BTreeSet<usize> = path
        .iter()
        .flat_map(|&(s, a, _)| {
            let q = out.states[s].base;
            (0..pairs.len()).filter(move |&i| pairs[i].fin.contains(q, a))
        })
        .collect();
    let mut positions: BTreeMap<usize, usize> = BTreeMap::new();
    for &(s, a, _) in &path {
        let pi = &out.states[s].record;
        for i in 0..pairs.len() {
            let pos = pi.position_of(i);
            if visited.contains(&i) {
                if let Some(j) = (0..pairs.len()).find(|j| !visited.contains(j) && pi.position_of(*j) < pos) {
                    return Err(format!("visited {i} behind unvisited {j} in {pi}"));
                }
            } else if *positions.entry(i).or_insert(pos) != pos {
                return Err(format!("unvisited {i} moved in {pi}"));
            }
        }
        let q = out.states[s].base;
        for pos in 0..pairs.len() {
            if pairs[pi.at(pos)].fin.contains(q, a) {
                if let Some(j) = (0..=pos).map(|p| pi.at(p)).find(|j| !visited.contains(j)) {
                    return Err(format!("F of position {} hit but pair {j} unvisited", pos + 1));
                }
            }
        }
    }
    Ok(())
}

/// Groups pair indices whose prohibited sets coincide; each index maps to
/// the least index of its group. Empty prohibited sets form one group.
pub fn fin_groups(aut: &Automaton) -> Vec<usize> {
    let pairs = aut.rabin_pairs().unwrap();
    (0..pairs.len())
        .map(|i| (0..=i).find(|&j| pairs[j].fin == pairs[i].fin).unwrap())
        .collect()
}

/// Priority of a bottom-SCC edge with the order inside a group forgotten.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CanonPriority {
    Odd(u32),
    /// Even priority of the group at the decisive position.
    Even(usize),
}

/// Canonical form of an appearance-record BSCC: records become sequences of
/// groups (see [`fin_groups`]) and even priorities name the group at the
/// decisive position instead of the position itself.
pub fn canonical_bscc(
    out: &IarAutomaton,
    bscc: &[StateId],
    groups: &[usize],
) -> BTreeSet<((StateId, Vec<usize>), Letter, (StateId, Vec<usize>), CanonPriority)> {
    let key = |s: StateId| {
        let st = &out.states[s];
        let rec: Vec<usize> = st.record.order().iter().map(|&i| groups[i]).collect();
        (st.base, rec)
    };
    let pr = out.automaton.priorities().unwrap();
    let members: BTreeSet<StateId> = bscc.iter().copied().collect();
    let mut set = BTreeSet::new();
    for &s in bscc {
        for t in out.automaton.dts.outgoing(s) {
            assert!(members.contains(&t.target), "bottom SCC is closed");
            let p = pr.get(s, t.letter).unwrap();
            let p = if p % 2 == 0 {
                CanonPriority::Even(groups[out.states[s].record.at(p as usize / 2 - 1)])
            } else {
                CanonPriority::Odd(p)
            };
            set.insert((key(s), t.letter, key(t.target), p));
        }
    }
    set
}

/// Independent syntax check of an HOA document as produced by the emitter:
/// header items, body with `State:` lines, explicit labels, marks in range.
pub fn validate_hoa(doc: &str) -> Result<(), String> {
    let mut lines = doc.lines().map(str::trim).filter(|l| !l.is_empty());
    if lines.next() != Some("HOA: v1") {
        return Err("first line must be 'HOA: v1'".into());
    }
    let mut states = None;
    let mut aps = None;
    let mut sets = None;
    let mut seen_start = false;
    let mut body = false;
    for line in lines.by_ref() {
        if line == "--BODY--" {
            body = true;
            break;
        }
        let (key, value) = line.split_once(':').ok_or(format!("bad header line {line:?}"))?;
        let value = value.trim();
        match key {
            "States" => states = Some(value.parse::<usize>().map_err(|e| e.to_string())?),
            "Start" => {
                if seen_start {
                    return Err("duplicate Start".into());
                }
                seen_start = true;
                value.parse::<usize>().map_err(|e| e.to_string())?;
            }
            "AP" => {
                let n: usize = value.split_whitespace().next().ok_or("AP count")?.parse().map_err(|_| "AP count")?;
                if value.matches('"').count() != 2 * n {
                    return Err(format!("AP line declares {n} names: {value:?}"));
                }
                aps = Some(n);
            }
            "Acceptance" => {
                let (n, formula) = value.split_once(' ').ok_or("Acceptance needs a formula")?;
                let n: usize = n.parse().map_err(|_| "set count")?;
                check_formula(formula, n)?;
                sets = Some(n);
            }
            "acc-name" | "properties" | "name" | "tool" => {}
            other => return Err(format!("unexpected header {other:?}")),
        }
    }
    if !body {
        return Err("missing --BODY--".into());
    }
    let states = states.ok_or("missing States")?;
    let aps = aps.ok_or("missing AP")?;
    let sets = sets.ok_or("missing Acceptance")?;
    if !seen_start {
        return Err("missing Start".into());
    }
    let mut ended = false;
    let mut declared = BTreeSet::new();
    for line in lines {
        if line == "--END--" {
            ended = true;
            break;
        }
        if let Some(rest) = line.strip_prefix("State:") {
            let rest = rest.trim();
            let id: usize = rest.split_whitespace().next().ok_or("state id")?.parse().map_err(|_| "state id")?;
            if id >= states || !declared.insert(id) {
                return Err(format!("bad state id {id}"));
            }
            check_marks(rest, sets)?;
            continue;
        }
        let rest = line.strip_prefix('[').ok_or(format!("edge without label: {line:?}"))?;
        let (label, rest) = rest.split_once(']').ok_or("unclosed label")?;
        for atom in label.split('&') {
            let atom = atom.trim().trim_start_matches('!');
            if atom != "t" {
                let i: usize = atom.parse().map_err(|_| format!("bad label atom {atom:?}"))?;
                if i >= aps {
                    return Err(format!("AP {i} out of range"));
                }
            }
        }
        let target: usize = rest.split_whitespace().next().ok_or("edge target")?.parse().map_err(|_| "edge target")?;
        if target >= states {
            return Err(format!("target {target} out of range"));
        }
        check_marks(rest, sets)?;
    }
    if !ended {
        return Err("missing --END--".into());
    }
    Ok(())
}

fn check_marks(s: &str, sets: usize) -> Result<(), String> {
    if let Some(i) = s.find('{') {
        let j = s.find('}').ok_or("unclosed marks")?;
        for m in s[i + 1..j].split_whitespace() {
            let m: usize = m.parse().map_err(|_| "bad mark")?;
            if m >= sets {
                return Err(format!("mark {m} out of range"));
            }
        }
    }
    Ok(())
}

fn check_formula(f: &str, sets: usize) -> Result<(), String> {
    let f = f.trim();
    if f == "t" || f == "f" {
        return Ok(());
    }
    let mut depth = 0i32;
    for c in f.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err("unbalanced parentheses".into());
        }
    }
    if depth != 0 {
        return Err("unbalanced parentheses".into());
    }
    for part in f.split(|c: char| "&|() ".contains(c)).filter(|p| !p.is_empty()) {
        if part != "Fin" && part != "Inf" {
            let n: usize = part.parse().map_err(|_| format!("bad token {part:?}"))?;
            if n >= sets {
                return Err(format!("set {n} out of range"));
            }
        }
    }
    Ok(())
}
