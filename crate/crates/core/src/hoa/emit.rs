use std::fmt::Write;

use crate::automaton::{uniform_state_priorities, Acceptance, Automaton, StateId, TransitionSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default)]
pub struct EmitOptions {
    /// Value of the `name:` header.
    pub name: Option<String>,
    /// Put parity marks on states. Every state must emit one priority on all
    /// of its outgoing transitions, as produced by
    /// [`crate::automaton::to_state_based`].
    pub state_based: bool,
}

pub fn to_hoa(aut: &Automaton) -> String {
    to_hoa_with(aut, &EmitOptions::default()).expect("transition-based output cannot fail")
}

fn quote(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn join<T>(items: impl Iterator<Item = T>, sep: &str, f: impl Fn(T) -> String) -> String {
    items.map(f).collect::<Vec<_>>().join(sep)
}

/// `Inf(c-1) | (Fin(c-2) & (... Inf(0)))` for max-even parity over `c` colours.
fn parity_formula(colors: usize) -> String {
    if colors == 0 {
        return "f".into();
    }
    let mut f = "Inf(0)".to_string();
    for c in 1..colors {
        let (op, atom) = if c % 2 == 0 { ("|", "Inf") } else { ("&", "Fin") };
        f = if c == 1 {
            format!("{atom}({c}) {op} {f}")
        } else {
            format!("{atom}({c}) {op} ({f})")
        };
    }
    f
}

/// HOA document for `aut`.
pub fn to_hoa_with(aut: &Automaton, opts: &EmitOptions) -> Result<String> {
    let dts = &aut.dts;
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "HOA: v1").unwrap();
    if let Some(name) = &opts.name {
        writeln!(w, "name: {}", quote(name)).unwrap();
    }
    writeln!(w, "States: {}", dts.num_states()).unwrap();
    writeln!(w, "Start: {}", dts.initial()).unwrap();
    let aps = dts.alphabet().aps();
    writeln!(w, "AP: {}{}", aps.len(), join(aps.iter(), "", |a| format!(" {}", quote(a)))).unwrap();

    // acceptance sets per transition
    let mut sets: Vec<&TransitionSet> = Vec::new();
    let (acc_name, formula, count) = match &aut.acceptance {
        Acceptance::Rabin(pairs) => {
            sets.extend(pairs.iter().flat_map(|p| [&p.fin, &p.inf]));
            let f = if pairs.is_empty() {
                "f".into()
            } else {
                join(0..pairs.len(), " | ", |i| format!("(Fin({}) & Inf({}))", 2 * i, 2 * i + 1))
            };
            (format!("Rabin {}", pairs.len()), f, 2 * pairs.len())
        }
        Acceptance::Streett(pairs) => {
            sets.extend(pairs.iter().flat_map(|p| [&p.inf, &p.fin]));
            let f = if pairs.is_empty() {
                "t".into()
            } else {
                join(0..pairs.len(), " & ", |i| format!("(Fin({}) | Inf({}))", 2 * i, 2 * i + 1))
            };
            (format!("Streett {}", pairs.len()), f, 2 * pairs.len())
        }
        Acceptance::GeneralizedRabin(pairs) => {
            let mut next = 0;
            let mut clauses = Vec::new();
            for p in pairs {
                sets.push(&p.fin);
                let mut atoms = vec![format!("Fin({next})")];
                next += 1;
                for i in &p.infs {
                    sets.push(i);
                    atoms.push(format!("Inf({next})"));
                    next += 1;
                }
                clauses.push(format!("({})", atoms.join(" & ")));
            }
            let f = if clauses.is_empty() { "f".into() } else { clauses.join(" | ") };
            let name = format!(
                "generalized-Rabin {}{}",
                pairs.len(),
                join(pairs.iter(), "", |p| format!(" {}", p.infs.len()))
            );
            (name, f, next)
        }
        Acceptance::Parity(pr) => {
            let colors = pr.max().map_or(0, |m| m as usize + 1);
            (format!("parity max even {colors}"), parity_formula(colors), colors)
        }
    };
    writeln!(w, "acc-name: {acc_name}").unwrap();
    writeln!(w, "Acceptance: {count} {formula}").unwrap();

    let state_marks = if opts.state_based {
        let per_state = uniform_state_priorities(aut).ok_or_else(|| {
            Error::Unsupported("state-based output needs one priority per state".into())
        })?;
        Some(per_state)
    } else {
        None
    };
    let mut props = vec!["trans-labels", "explicit-labels"];
    props.push(if state_marks.is_some() { "state-acc" } else { "trans-acc" });
    props.push("deterministic");
    if dts.is_complete() {
        props.push("complete");
    }
    writeln!(w, "properties: {}", props.join(" ")).unwrap();
    writeln!(w, "--BODY--").unwrap();

    let marks = |q: StateId, a| -> Vec<usize> {
        match &aut.acceptance {
            Acceptance::Parity(pr) => pr.get(q, a).map(|p| p as usize).into_iter().collect(),
            _ => (0..sets.len()).filter(|&i| sets[i].contains(q, a)).collect(),
        }
    };
    let fmt_marks = |m: &[usize]| {
        if m.is_empty() {
            String::new()
        } else {
            format!(" {{{}}}", join(m.iter(), " ", |x| x.to_string()))
        }
    };
    for q in dts.states() {
        write!(w, "State: {q}").unwrap();
        if let Some(name) = dts.name(q) {
            write!(w, " {}", quote(name)).unwrap();
        }
        if let Some(per_state) = &state_marks {
            if let Some(p) = per_state[q] {
                write!(w, "{}", fmt_marks(&[p as usize])).unwrap();
            }
        }
        writeln!(w).unwrap();
        for t in dts.outgoing(q) {
            let m = if state_marks.is_some() { Vec::new() } else { marks(q, t.letter) };
            writeln!(w, "[{}] {}{}", dts.alphabet().letter_cube(t.letter), t.target, fmt_marks(&m)).unwrap();
        }
    }
    writeln!(w, "--END--").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_formulas() {
        assert_eq!(parity_formula(0), "f");
        assert_eq!(parity_formula(1), "Inf(0)");
        assert_eq!(parity_formula(2), "Fin(1) & Inf(0)");
        assert_eq!(
            parity_formula(5),
            "Inf(4) | (Fin(3) & (Inf(2) | (Fin(1) & Inf(0))))"
        );
    }

    #[test]
    fn quoting() {
        assert_eq!(quote("a\"b\\"), "\"a\\\"b\\\\\"");
    }
}
